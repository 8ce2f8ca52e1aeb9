#pragma once

#include <array>
#include <stdexcept>
#include <string>

// Closed-form quantities attached to a hyperbolic triangle reflection group
// with vertex orders (r, p, q), q possibly infinite. Everything here is a
// function of the parameter triple
//
//   X = cos(pi/r),  Y = cos(pi/p),  Z = cos(pi/q)   (Z = 1 when q = inf)
//
// and of the angles k*pi/n used by the two-rotation trace formulas.

namespace trispec {

struct Signature {
    int r = 2;
    int p = 3;
    int q = 7;

    static constexpr int inf = -1;  // spelled "inf" at the CLI

    bool finite_q() const { return q != inf; }
};

// Throws std::invalid_argument unless 2 <= r <= p <= q (q possibly inf) and
// 1/r + 1/p + 1/q < 1.
void require_admissible(const Signature& sig);
bool is_admissible(const Signature& sig);

struct CosTriple {
    double X = 0.0, Y = 0.0, Z = 0.0;
};

CosTriple cos_params(const Signature& sig);

// Delta = X^2 + Y^2 + Z^2 + 2XYZ - 1; positive on admissible signatures,
// vanishing only in the Euclidean limit.
double big_delta(const CosTriple& t);

// cosh of the side lengths of the fundamental triangle; side a joins the r-
// and p-vertices and stays finite when q = inf, the other two become infinite.
struct SideCoshes {
    double cosh_a = 1.0;
    double cosh_b = 1.0;  // +inf when q = inf
    double cosh_c = 1.0;  // +inf when q = inf
};

SideCoshes side_coshes(const Signature& sig);

// Incircle contact data: squared sinh of the distances from each vertex to the
// two contact points on its adjacent sides, and cosh of the pairwise contact
// distances. cosh_cstar is the largest of the three.
struct ContactData {
    double sinh2_dr = 0.0;
    double sinh2_dp = 0.0;
    double sinh2_dq = 0.0;  // +inf when q = inf
    double cosh_pq = 1.0;
    double cosh_rp = 1.0;
    double cosh_qr = 1.0;
    double cosh_cstar = 1.0;
};

ContactData contact_data(const Signature& sig);

// Half-trace of the product of rotations by 2*k1*pi/p and 2*k2*pi/r about the
// two endpoints of side a:
//   delta(k1,k2) = sin(k1 pi/p) sin(k2 pi/r) cosh(a) - cos(k1 pi/p) cos(k2 pi/r)
// Requires 1 <= k1 <= p and 1 <= k2 <= r; satisfies
// delta(p-k1, r-k2) = delta(k1, k2).
double delta_fn(const Signature& sig, int k1, int k2);
// Same over side b (orders p and q) and side c (orders q and r).
double delta_prime(const Signature& sig, int k1, int k2);
double delta_second(const Signature& sig, int k1, int k2);

// The fourteen short-length half-trace polynomials in X, Y, Z.
struct LTable {
    static constexpr int size = 14;
    std::array<double, 14> L{};

    double operator[](int i) const { return L.at(static_cast<size_t>(i)); }
};

LTable l_table(const CosTriple& t);

// The three candidate head lengths l_i = 2 arcosh(L_i).
struct HeadFormulas {
    double L1 = 1.0, L2 = 1.0, L3 = 1.0;
    double l1 = 0.0, l2 = 0.0, l3 = 0.0;
};

HeadFormulas head_formulas(const Signature& sig);

// Reference length l0 = l3 used by the collar bound.
double canonical_l0(const Signature& sig);

// cosh C*(l0) = (cosh c*)^2 (cosh l0 - 1) + 1: any hyperbolic element whose
// axis misses every contact point by at least c* and that translates some
// contact point at combinatorial level >= 5 is longer than l0 whenever the
// level-5 graph radius beats this bound.
double c_star_bound(const Signature& sig, double l0);

// Same bound with l0 = l3, expanded as an explicit rational expression in
// X, Y, Z (used to pin the algebra; equals 37 at X = Y = Z = 1).
double c_star_bound_expanded(const CosTriple& t);

// Second head length of the (3,3,q) groups for q = 5, 6: 2 arcosh(2Z^2+Z-1/2).
double l2prime_33(const Signature& sig);

// Level-5 graph radius of the (3,3,q) family, as cosh: 16Z^5+8Z^4-12Z^3-2Z^2+3Z+1/2.
double rho5_poly_33(double Z);

// ---- r = 2 layer ----------------------------------------------------------
//
// For (2,p,q) the half-turn vertex collapses and lengths come from a polygon
// side parameter c with cosh c = cos(pi/p)/sin(pi/q).

// One-rotation family: l1(k) = 2 arcosh( sin(k pi/q) cos(pi/p) / sin(pi/q) ).
double r2_l1(const Signature& sig, int k);
// Two-rotation family:
// l2(k,k') = 2 arcosh| sin(k' pi/q) sin(k pi/q) cosh(2c) - cos(k pi/q) cos(k' pi/q) |.
double r2_l2(const Signature& sig, int k, int kp);

// Polynomial forms of the specific values used by the spectrum heads; these
// stay valid at q = inf (Z = 1).
double r2_l1_2_value(const CosTriple& t);   // 2YZ
double r2_l1_3_value(const CosTriple& t);   // Y(4Z^2-1)
double r2_l2_1_qm1_value(const CosTriple& t);  // 2Y^2+2Z^2-1
double r2_l2_12_value(const CosTriple& t);  // Z(4Y^2-1)

struct R2Quantities {
    double cosh_c = 1.0;       // +inf when q = inf
    double cosh_rho3 = 1.0;    // closest third-neighbor radius of the polygon graph, as cosh
    double cosh_C_l2_1_qm1 = 1.0;  // collar bound at l2(1,q-1), as cosh
    double cosh_C_l2_12 = 1.0;     // collar bound at l2(1,2), as cosh
    // Cleared numerators (multiplied by 1 - Z^2), finite at q = inf.
    double cleared_rho3 = 0.0;
    double cleared_C_l2_12 = 0.0;
    double gap_at_infinity = 0.0;  // cleared rho3 - cleared C(l2(1,2)) at Z = 1; equals 2Y^2
};

// Throws std::domain_error when a raw rational form is requested at q = inf;
// the cleared fields remain valid there.
R2Quantities r2_quantities(const Signature& sig);

}  // namespace trispec
