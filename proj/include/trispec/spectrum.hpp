#pragma once

#include <string>
#include <vector>

#include "trispec/closed_forms.hpp"
#include "trispec/triangle_group.hpp"

namespace trispec {

enum class Exactness { Exact, AtLeast };

// One value of the length spectrum together with its multiplicity, counted as
// the number of conjugacy classes of hyperbolic elements translating by it
// (an element and its inverse count separately unless they are conjugate).
struct SpectrumEntry {
    double length = 0.0;
    int multiplicity = 0;
    Exactness exactness = Exactness::AtLeast;
    std::vector<std::string> representatives;
};

struct SpectrumHead {
    Signature sig;
    std::vector<SpectrumEntry> entries;  // sorted by length
    bool complete = false;
    std::string note;
};

// The initial segment of the spectrum according to the classification by
// signature family, with closed-form values and established multiplicities.
SpectrumHead predicted_head(const Signature& sig);

struct BruteForceOptions {
    double cutoff = 0.0;  // keep classes of translation length <= cutoff
    int max_word = 12;
    int conj_depth = 10;
    bool prune = true;  // displacement pruning, available for finite q
    int word_cap = 16;
};

// Enumerates group elements as words in the vertex rotations, keeps the
// hyperbolic ones below the cutoff and partitions them into conjugacy
// classes by sweeping a conjugator ball.
SpectrumHead brute_force_head(const TriangleRealization& tr,
                              const BruteForceOptions& opt);

struct ValidationReport {
    bool ok = true;
    std::vector<std::string> lines;
};

// Positionally aligns the predicted head (restricted to values <= cutoff)
// against an observed head: values must agree to tol, exact multiplicities
// must match and lower bounds must be met.
ValidationReport cross_validate(const SpectrumHead& predicted,
                                const SpectrumHead& observed, double cutoff,
                                double tol = 1e-9);

}  // namespace trispec
