#pragma once

#include <array>
#include <functional>
#include <string>
#include <vector>

#include "trispec/interval.hpp"
#include "trispec/poly3.hpp"

namespace trispec {

// Axis-aligned box in the cosine parameters (X, Y, Z), to be intersected
// with the constraint region 1/2 <= X <= Y <= Z <= 1.
struct Box {
    Interval X{0.5, 1.0};
    Interval Y{0.5, 1.0};
    Interval Z{0.5, 1.0};
};

// Declared zero locus removed from a positivity claim via an
// eps-neighborhood: a single point, an axis plane, or a variable equality.
struct Exclusion {
    enum class Kind { Point, PlaneX, PlaneY, PlaneZ, EqXY, EqYZ, EqXZ };
    Kind kind = Kind::Point;
    double x = 0.0, y = 0.0, z = 0.0;  // point coordinates or plane value in x

    static Exclusion point(double px, double py, double pz) {
        return {Kind::Point, px, py, pz};
    }
    static Exclusion plane_x(double v) { return {Kind::PlaneX, v, 0, 0}; }
    static Exclusion plane_y(double v) { return {Kind::PlaneY, v, 0, 0}; }
    static Exclusion plane_z(double v) { return {Kind::PlaneZ, v, 0, 0}; }
    static Exclusion eq_xy() { return {Kind::EqXY, 0, 0, 0}; }
    static Exclusion eq_yz() { return {Kind::EqYZ, 0, 0, 0}; }
    static Exclusion eq_xz() { return {Kind::EqXZ, 0, 0, 0}; }
};

// An expression evaluated over a box: either a polynomial or a registered
// geometric construction. Throws std::domain_error when the box is too wide
// to evaluate (division straddling zero); the search then subdivides.
using BoxFn = std::function<Interval(const Box&)>;

BoxFn poly_expr(const Poly3& p);

// Product of two separately enclosed factors. For claims that factor (the
// ordering differences), this keeps each linear factor's enclosure exact
// instead of paying the dependency width of the expanded polynomial.
BoxFn product_expr(const BoxFn& a, const BoxFn& b);

struct CertVerdict {
    enum class Kind { Positive, FailsAt, Inconclusive };
    Kind kind = Kind::Inconclusive;
    double x = 0.0, y = 0.0, z = 0.0;  // counterexample when FailsAt
    int depth = 0;                     // depth reached when Inconclusive
    long leaves = 0;                   // certified leaf boxes

    bool positive() const { return kind == Kind::Positive; }
    std::string to_string() const;
};

struct CertOptions {
    double eps = 1e-3;
    int max_depth = 40;
    bool clip_ordered = true;  // restrict to the constraint region
};

// Deterministic branch and bound: bisects until every surviving leaf has a
// positive interval lower bound, a midpoint evaluates to a certainly
// negative value, or the depth limit is hit.
CertVerdict certify_positive(const BoxFn& expr, const Box& box,
                             const std::vector<Exclusion>& exclusions,
                             const CertOptions& opt = {});

// One row of the reduction table for length-5 walk types: the pair actually
// certified and the pair it settles by symmetry (empty when palindromic).
struct TypeCase {
    std::array<std::string, 2> studied;
    std::array<std::string, 2> associated;
};

// The nine rows: 18 studied types plus 12 settled by reversal, covering the
// 30 mixed quintuples; the two single-letter types never leave the base
// circles and are removed by the sphere trimming rule.
std::vector<TypeCase> type_case_list();

// Realizability domain of a walk type: a run of k consecutive steps on an
// order-n circle is distance-minimizing only when n >= 2k, which bounds the
// cosines from below. Z is capped at 1 - eps.
Box rho5_type_domain(const std::string& type, const Box& region, double eps);

// Interval expression for one walk type: the minimum over admissible turn
// directions of cosh d(base, endpoint) minus the collar bound
// (cosh c*)^2 (2 L3^2 - 2) + 1.
BoxFn rho5_type_expr(const std::string& type);

struct TypeVerdict {
    std::string type;
    CertVerdict verdict;
};

struct CertReport {
    std::vector<TypeVerdict> types;
    bool all_positive = false;
    double eps = 1e-3;
    int max_depth = 40;
};

// Runs the type-by-type certificate that every sphere-5 contact vertex lies
// beyond the collar bound for the canonical l0, over the region minus
// eps-neighborhoods of the three exceptional signature points (and of the
// degenerate corner for the fully alternating types, whose domain touches it).
CertReport rho5_certificate(const Box& region, double eps = 1e-3,
                            int max_depth = 40, int jobs = 1);

}  // namespace trispec
