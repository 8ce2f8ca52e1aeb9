#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trispec/closed_forms.hpp"
#include "trispec/geometry.hpp"

// Concrete realization of the rotation triangle group in the upper half-plane,
// plus word-ball enumeration and conjugacy search used by the brute-force
// spectrum oracle.

namespace trispec {

// Thrown when a requested enumeration exceeds the configured caps; the CLI
// maps this to its resource exit code.
struct ResourceCap : std::runtime_error {
    explicit ResourceCap(const std::string& what) : std::runtime_error(what) {}
};

struct TriangleRealization {
    Signature sig;
    CosTriple cosines;

    UhpPoint v_r{0.0, 1.0};          // order-r vertex, placed at i
    UhpPoint v_p{0.0, 1.0};          // order-p vertex, up the imaginary axis
    UhpPoint v_q{0.0, 1.0};          // order-q vertex (interior when q finite)
    BoundaryPoint v_q_ideal;         // ideal vertex when q = inf
    bool q_ideal = false;

    Geodesic side_a;                 // [v_r, v_p], the imaginary axis
    Geodesic side_b;                 // [v_p, v_q]
    Geodesic side_c;                 // [v_q, v_r]

    UhpPoint incenter;
    double inradius = 0.0;
    UhpPoint contact_qstar;          // on side a
    UhpPoint contact_pstar;          // on side c
    UhpPoint contact_rstar;          // on side b

    // Rotations by 2*pi/n about the matching vertex (parabolic for q = inf),
    // satisfying gen_q * gen_p * gen_r = identity.
    Motion gen_r, gen_p, gen_q;

    double d_r = 0.0, d_p = 0.0;     // vertex-to-contact distances
};

TriangleRealization realize(const Signature& sig);

// Generator letters: 'R','P','Q' for the rotations, 'r','p','q' for inverses.
Motion generator(const TriangleRealization& tr, char letter);
Motion word_motion(const TriangleRealization& tr, const std::string& word);

struct GroupElement {
    Motion m;              // normalized, canonical sign
    std::string word;      // first (shortest) word found for this element
};

struct BallOptions {
    int max_word = 8;
    // When set, elements whose displacement of `base` exceeds this bound are
    // kept but not expanded further; the search is exhaustive for every
    // element displacing the base point by at most the bound.
    std::optional<double> prune_displacement;
    static constexpr int word_cap = 16;
};

struct BallResult {
    std::vector<GroupElement> elements;  // identity first, then by word length
    bool frontier_exhausted = false;     // expansion stopped before max_word
    int depth_reached = 0;
};

// All distinct motions representable as words of length <= max_word over the
// six generator letters. Throws ResourceCap beyond BallOptions::word_cap.
BallResult enumerate_ball(const TriangleRealization& tr, const BallOptions& opts);

// Invariant axis of a hyperbolic element.
Geodesic axis(const GroupElement& g);

struct ConjugacyResult {
    bool yes = false;
    std::string witness;  // word w with w g w^-1 = +-h when yes
};

// Search for a conjugating word of length <= depth, comparing matrices up to
// overall sign at tolerance 1e-8.
ConjugacyResult is_conjugate(const TriangleRealization& tr, const Motion& g,
                             const Motion& h, int depth);

// True iff some orbit image (under words of length <= search_radius) of an
// even-order vertex lies on the axis of g within 1e-8.
bool axis_through_even_vertex(const TriangleRealization& tr, const GroupElement& g,
                              int search_radius);

bool motions_equal(const Motion& a, const Motion& b, double tol = 1e-8);

}  // namespace trispec
