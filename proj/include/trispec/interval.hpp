#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace trispec {

// Closed interval with outward rounding. Every arithmetic step rounds to
// nearest and then widens each endpoint by one ulp, so the result encloses
// the exact value; widths grow slowly enough for branch-and-bound use.
struct Interval {
    double lo = 0.0;
    double hi = 0.0;

    Interval() = default;
    Interval(double x) : lo(x), hi(x) {}
    Interval(double l, double h) : lo(l), hi(h) {
        if (!(l <= h)) throw std::invalid_argument("inverted interval endpoints");
    }

    double mid() const { return 0.5 * (lo + hi); }
    double width() const { return hi - lo; }
    bool contains(double x) const { return lo <= x && x <= hi; }
    bool contains_zero() const { return lo <= 0.0 && 0.0 <= hi; }
};

namespace detail {
inline double down(double x) {
    return std::nextafter(x, -std::numeric_limits<double>::infinity());
}
inline double up(double x) {
    return std::nextafter(x, std::numeric_limits<double>::infinity());
}
}  // namespace detail

inline Interval operator-(const Interval& a) { return {-a.hi, -a.lo}; }

inline Interval operator+(const Interval& a, const Interval& b) {
    return {detail::down(a.lo + b.lo), detail::up(a.hi + b.hi)};
}

inline Interval operator-(const Interval& a, const Interval& b) {
    return {detail::down(a.lo - b.hi), detail::up(a.hi - b.lo)};
}

inline Interval operator*(const Interval& a, const Interval& b) {
    const double p1 = a.lo * b.lo, p2 = a.lo * b.hi, p3 = a.hi * b.lo,
                 p4 = a.hi * b.hi;
    return {detail::down(std::min({p1, p2, p3, p4})),
            detail::up(std::max({p1, p2, p3, p4}))};
}

inline Interval operator/(const Interval& a, const Interval& b) {
    if (b.contains_zero())
        throw std::domain_error("interval division by a zero-containing interval");
    const double q1 = a.lo / b.lo, q2 = a.lo / b.hi, q3 = a.hi / b.lo,
                 q4 = a.hi / b.hi;
    return {detail::down(std::min({q1, q2, q3, q4})),
            detail::up(std::max({q1, q2, q3, q4}))};
}

inline Interval square(const Interval& a) {
    const double m = std::max(std::fabs(a.lo), std::fabs(a.hi));
    const double lo = a.contains_zero() ? 0.0
                                        : std::min(std::fabs(a.lo), std::fabs(a.hi));
    // x^2 >= 0 always, so a zero lower endpoint needs no outward step.
    return {lo == 0.0 ? 0.0 : detail::down(lo * lo), detail::up(m * m)};
}

// Enclosure of sqrt on the nonnegative part of the interval; a slightly
// negative lower endpoint (roundoff around a true zero) clamps to 0.
inline Interval sqrt(const Interval& a) {
    if (a.hi < 0.0) throw std::domain_error("interval sqrt of a negative interval");
    const double lo = a.lo <= 0.0 ? 0.0 : detail::down(std::sqrt(a.lo));
    return {lo, detail::up(std::sqrt(a.hi))};
}

inline Interval min(const Interval& a, const Interval& b) {
    return {std::min(a.lo, b.lo), std::min(a.hi, b.hi)};
}

inline Interval max(const Interval& a, const Interval& b) {
    return {std::max(a.lo, b.lo), std::max(a.hi, b.hi)};
}

inline Interval intersect(const Interval& a, const Interval& b) {
    const double lo = std::max(a.lo, b.lo), hi = std::min(a.hi, b.hi);
    if (lo > hi) throw std::domain_error("empty interval intersection");
    return {lo, hi};
}

// Enclosures of cos(k pi / n) and sin(k pi / n) computed in extended
// precision and padded to a guaranteed 1e-15 margin.
inline Interval cos_pi_frac(int k, int n) {
    const long double pi_l = 3.14159265358979323846264338327950288L;
    const double v = static_cast<double>(std::cos(pi_l * k / n));
    return {detail::down(v - 1e-15), detail::up(v + 1e-15)};
}

inline Interval sin_pi_frac(int k, int n) {
    const long double pi_l = 3.14159265358979323846264338327950288L;
    const double v = static_cast<double>(std::sin(pi_l * k / n));
    return {detail::down(v - 1e-15), detail::up(v + 1e-15)};
}

}  // namespace trispec
