#include "trispec/closed_forms.hpp"

#include <cmath>
#include <limits>

namespace trispec {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;
constexpr double kInf = std::numeric_limits<double>::infinity();

double sqr(double v) { return v * v; }

// Integer-coefficient terms c * u^i * v^j with u = Y^2 and v = Z^2; keeping the
// cleared numerators in expanded form lets the q = inf gap come out as an exact
// polynomial identity instead of a float coincidence.
struct Term {
    long long c;
    int i, j;
};

// (1-Z^2) * cosh rho(3) = 16 Y^2 (Y^2+Z^2-1)(2Y^2-1) + 2Y^2 + Z^2 - 1
constexpr Term kClearedRho3[] = {
    {32, 3, 0}, {32, 2, 1}, {-48, 2, 0}, {-16, 1, 1}, {18, 1, 0}, {1, 0, 1}, {-1, 0, 0}};
// (1-Z^2) * cosh C(l2(1,2)) = 2 Y^2 (4ZY^2-Z-1)(4ZY^2-Z+1) + 1 - Z^2
constexpr Term kClearedC12[] = {
    {32, 3, 1}, {-16, 2, 1}, {2, 1, 1}, {-2, 1, 0}, {1, 0, 0}, {-1, 0, 1}};
// (1-Z^2) * cosh C(l2(1,q-1)) = 8 Y^2 (Y^2+Z^2-1)(Z^2+Y^2) + 1 - Z^2
constexpr Term kClearedC1qm1[] = {
    {8, 3, 0}, {16, 2, 1}, {8, 1, 2}, {-8, 2, 0}, {-8, 1, 1}, {1, 0, 0}, {-1, 0, 1}};

template <size_t N>
double eval_terms(const Term (&terms)[N], double u, double v) {
    double s = 0.0;
    for (const Term& t : terms) s += static_cast<double>(t.c) * std::pow(u, t.i) * std::pow(v, t.j);
    return s;
}
}  // namespace

bool is_admissible(const Signature& sig) {
    const long long r = sig.r, p = sig.p;
    if (r < 2 || p < r) return false;
    if (!sig.finite_q()) return p + r < r * p;
    const long long q = sig.q;
    if (q < p) return false;
    return p * q + r * q + r * p < r * p * q;
}

void require_admissible(const Signature& sig) {
    if (!is_admissible(sig))
        throw std::invalid_argument(
            "signature must satisfy 2 <= r <= p <= q and 1/r + 1/p + 1/q < 1");
}

CosTriple cos_params(const Signature& sig) {
    require_admissible(sig);
    CosTriple t;
    t.X = std::cos(kPi / sig.r);
    t.Y = std::cos(kPi / sig.p);
    t.Z = sig.finite_q() ? std::cos(kPi / sig.q) : 1.0;
    return t;
}

double big_delta(const CosTriple& t) {
    return sqr(t.X) + sqr(t.Y) + sqr(t.Z) + 2.0 * t.X * t.Y * t.Z - 1.0;
}

SideCoshes side_coshes(const Signature& sig) {
    const CosTriple t = cos_params(sig);
    const double sr = std::sin(kPi / sig.r);
    const double sp = std::sin(kPi / sig.p);
    SideCoshes s;
    s.cosh_a = (t.Z + t.Y * t.X) / (sp * sr);
    if (sig.finite_q()) {
        const double sq = std::sin(kPi / sig.q);
        s.cosh_b = (t.X + t.Y * t.Z) / (sp * sq);
        s.cosh_c = (t.Y + t.Z * t.X) / (sq * sr);
    } else {
        s.cosh_b = kInf;
        s.cosh_c = kInf;
    }
    return s;
}

ContactData contact_data(const Signature& sig) {
    const CosTriple t = cos_params(sig);
    const double D = big_delta(t);
    ContactData c;
    c.sinh2_dr = D / (2.0 * (1.0 - t.X) * (1.0 + t.Y) * (1.0 + t.Z));
    c.sinh2_dp = D / (2.0 * (1.0 - t.Y) * (1.0 + t.Z) * (1.0 + t.X));
    c.sinh2_dq = sig.finite_q()
                     ? D / (2.0 * (1.0 - t.Z) * (1.0 + t.X) * (1.0 + t.Y))
                     : kInf;
    c.cosh_pq = D / (2.0 * (1.0 + t.Y) * (1.0 + t.Z)) + 1.0;
    c.cosh_rp = D / (2.0 * (1.0 + t.X) * (1.0 + t.Y)) + 1.0;
    c.cosh_qr = D / (2.0 * (1.0 + t.Z) * (1.0 + t.X)) + 1.0;
    c.cosh_cstar = std::max(c.cosh_pq, std::max(c.cosh_rp, c.cosh_qr));
    return c;
}

double delta_fn(const Signature& sig, int k1, int k2) {
    if (k1 < 1 || k1 > sig.p || k2 < 1 || k2 > sig.r)
        throw std::out_of_range("delta indices must satisfy 1 <= k1 <= p, 1 <= k2 <= r");
    const double ca = side_coshes(sig).cosh_a;
    return std::sin(k1 * kPi / sig.p) * std::sin(k2 * kPi / sig.r) * ca -
           std::cos(k1 * kPi / sig.p) * std::cos(k2 * kPi / sig.r);
}

double delta_prime(const Signature& sig, int k1, int k2) {
    if (!sig.finite_q())
        throw std::domain_error("delta' needs finite q; use the cleared forms at q = inf");
    if (k1 < 1 || k1 > sig.p || k2 < 1 || k2 > sig.q)
        throw std::out_of_range("delta' indices must satisfy 1 <= k1 <= p, 1 <= k2 <= q");
    const double cb = side_coshes(sig).cosh_b;
    return std::sin(k1 * kPi / sig.p) * std::sin(k2 * kPi / sig.q) * cb -
           std::cos(k1 * kPi / sig.p) * std::cos(k2 * kPi / sig.q);
}

double delta_second(const Signature& sig, int k1, int k2) {
    if (!sig.finite_q())
        throw std::domain_error("delta'' needs finite q; use the cleared forms at q = inf");
    if (k1 < 1 || k1 > sig.q || k2 < 1 || k2 > sig.r)
        throw std::out_of_range("delta'' indices must satisfy 1 <= k1 <= q, 1 <= k2 <= r");
    const double cc = side_coshes(sig).cosh_c;
    return std::sin(k1 * kPi / sig.q) * std::sin(k2 * kPi / sig.r) * cc -
           std::cos(k1 * kPi / sig.q) * std::cos(k2 * kPi / sig.r);
}

LTable l_table(const CosTriple& t) {
    const double X = t.X, Y = t.Y, Z = t.Z;
    LTable lt;
    lt.L[0] = 4 * X * X * Y + 2 * X * Z - Y;
    lt.L[1] = 2 * X * Y + Z;
    lt.L[2] = 2 * X * Z + Y;
    lt.L[3] = 2 * Y * Z + X;
    lt.L[4] = 4 * Y * Y * X + 2 * Y * Z - X;
    lt.L[5] = 4 * X * X * Z + 2 * X * Y - Z;
    lt.L[6] = 8 * X * X * X * Y + 4 * X * X * Z - 4 * X * Y - Z;
    lt.L[7] = 4 * Y * Y * Z + 2 * X * Y - Z;
    lt.L[8] = 8 * Y * Y * Y * X + 4 * Y * Y * Z - 4 * X * Y - Z;
    lt.L[9] = 8 * X * X * Y * Y + 4 * X * Y * Z - 2 * X * X - 2 * Y * Y + 1;
    lt.L[10] = 4 * X * Y * Z + 2 * Z * Z + 2 * Y * Y - 1;
    lt.L[11] = 4 * X * Y * Z + 2 * X * X + 2 * Y * Y + 2 * Z * Z - 1;
    lt.L[12] = 4 * X * Y * Z + 2 * X * X + 2 * Z * Z - 1;
    lt.L[13] = 4 * X * Y * Z + 2 * X * X + 2 * Y * Y - 1;
    return lt;
}

HeadFormulas head_formulas(const Signature& sig) {
    require_admissible(sig);
    if (sig.r < 3)
        throw std::invalid_argument("head formulas apply to r >= 3; use the r = 2 layer");
    const LTable lt = l_table(cos_params(sig));
    HeadFormulas h;
    h.L1 = lt[1];
    h.L2 = lt[2];
    h.L3 = lt[3];
    h.l1 = 2.0 * std::acosh(h.L1);
    h.l2 = 2.0 * std::acosh(h.L2);
    h.l3 = 2.0 * std::acosh(h.L3);
    return h;
}

double canonical_l0(const Signature& sig) { return head_formulas(sig).l3; }

double c_star_bound(const Signature& sig, double l0) {
    const ContactData c = contact_data(sig);
    return sqr(c.cosh_cstar) * (std::cosh(l0) - 1.0) + 1.0;
}

double c_star_bound_expanded(const CosTriple& t) {
    const double D = big_delta(t);
    const double num = sqr(D + 2.0 * (1.0 + t.X) * (1.0 + t.Y)) *
                       (2.0 * sqr(2.0 * t.Y * t.Z + t.X) - 2.0);
    return num / (4.0 * sqr(1.0 + t.X) * sqr(1.0 + t.Y)) + 1.0;
}

double l2prime_33(const Signature& sig) {
    if (sig.r != 3 || sig.p != 3 || (sig.q != 5 && sig.q != 6))
        throw std::invalid_argument("second head length formula applies to (3,3,5) and (3,3,6)");
    const double Z = cos_params(sig).Z;
    return 2.0 * std::acosh(2.0 * Z * Z + Z - 0.5);
}

double rho5_poly_33(double Z) {
    return 16.0 * std::pow(Z, 5) + 8.0 * std::pow(Z, 4) - 12.0 * std::pow(Z, 3) -
           2.0 * Z * Z + 3.0 * Z + 0.5;
}

namespace {
void require_r2(const Signature& sig) {
    require_admissible(sig);
    if (sig.r != 2) throw std::invalid_argument("this family is the r = 2 layer");
}
}  // namespace

double r2_l1(const Signature& sig, int k) {
    require_r2(sig);
    if (!sig.finite_q())
        throw std::domain_error("indexed lengths need finite q; use the cleared forms");
    if (k < 1 || k >= sig.q) throw std::out_of_range("need 1 <= k <= q-1");
    const double val =
        std::sin(k * kPi / sig.q) * std::cos(kPi / sig.p) / std::sin(kPi / sig.q);
    if (val <= 1.0) throw std::domain_error("element is not hyperbolic for this k");
    return 2.0 * std::acosh(val);
}

double r2_l2(const Signature& sig, int k, int kp) {
    require_r2(sig);
    if (!sig.finite_q())
        throw std::domain_error("indexed lengths need finite q; use the cleared forms");
    if (k < 1 || k >= sig.q || kp < 1 || kp >= sig.q)
        throw std::out_of_range("need 1 <= k, k' <= q-1");
    const double ch_c = std::cos(kPi / sig.p) / std::sin(kPi / sig.q);
    const double ch_2c = 2.0 * ch_c * ch_c - 1.0;
    const double val = std::fabs(std::sin(kp * kPi / sig.q) * std::sin(k * kPi / sig.q) * ch_2c -
                                 std::cos(k * kPi / sig.q) * std::cos(kp * kPi / sig.q));
    if (val <= 1.0) throw std::domain_error("element is not hyperbolic for this (k,k')");
    return 2.0 * std::acosh(val);
}

double r2_l1_2_value(const CosTriple& t) { return 2.0 * t.Y * t.Z; }
double r2_l1_3_value(const CosTriple& t) { return t.Y * (4.0 * t.Z * t.Z - 1.0); }
double r2_l2_1_qm1_value(const CosTriple& t) {
    return 2.0 * t.Y * t.Y + 2.0 * t.Z * t.Z - 1.0;
}
double r2_l2_12_value(const CosTriple& t) { return t.Z * (4.0 * t.Y * t.Y - 1.0); }

R2Quantities r2_quantities(const Signature& sig) {
    require_r2(sig);
    const CosTriple t = cos_params(sig);
    const double u = t.Y * t.Y;
    const double v = t.Z * t.Z;
    R2Quantities r;
    r.cleared_rho3 = eval_terms(kClearedRho3, u, v);
    r.cleared_C_l2_12 = eval_terms(kClearedC12, u, v);
    // Exact coefficient subtraction at v = 1: every power of u cancels except 2u.
    {
        long long coeff[4][4] = {};
        for (const Term& term : kClearedRho3) coeff[term.i][0] += term.c;  // v = 1
        for (const Term& term : kClearedC12) coeff[term.i][0] -= term.c;
        double gap = 0.0;
        for (int i = 0; i < 4; ++i)
            gap += static_cast<double>(coeff[i][0]) * std::pow(u, i);
        r.gap_at_infinity = gap;
    }
    if (sig.finite_q()) {
        const double one_minus_v = 1.0 - v;
        r.cosh_c = t.Y / std::sin(kPi / sig.q);
        r.cosh_rho3 = r.cleared_rho3 / one_minus_v;
        r.cosh_C_l2_12 = r.cleared_C_l2_12 / one_minus_v;
        r.cosh_C_l2_1_qm1 = eval_terms(kClearedC1qm1, u, v) / one_minus_v;
    } else {
        r.cosh_c = kInf;
        r.cosh_rho3 = kInf;
        r.cosh_C_l2_12 = kInf;
        r.cosh_C_l2_1_qm1 = kInf;
    }
    return r;
}

}  // namespace trispec
