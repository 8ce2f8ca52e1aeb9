#pragma once

#include <algorithm>
#include <tuple>
#include <vector>

#include "trispec/interval.hpp"

namespace trispec {

// Sparse polynomial in the three cosine parameters (X, Y, Z). Coefficients
// are dyadic rationals, which doubles represent exactly, so polynomial
// identities can be checked coefficient by coefficient.
class Poly3 {
  public:
    struct Term {
        double c;
        int i, j, k;  // X^i Y^j Z^k
    };

    Poly3() = default;
    explicit Poly3(double constant) {
        if (constant != 0.0) terms_.push_back({constant, 0, 0, 0});
    }

    static Poly3 monomial(double c, int i, int j, int k) {
        Poly3 p;
        if (c != 0.0) p.terms_.push_back({c, i, j, k});
        return p;
    }
    static Poly3 x() { return monomial(1.0, 1, 0, 0); }
    static Poly3 y() { return monomial(1.0, 0, 1, 0); }
    static Poly3 z() { return monomial(1.0, 0, 0, 1); }

    const std::vector<Term>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Poly3 operator+(const Poly3& o) const {
        Poly3 out;
        out.terms_ = terms_;
        out.terms_.insert(out.terms_.end(), o.terms_.begin(), o.terms_.end());
        out.normalize();
        return out;
    }
    Poly3 operator-(const Poly3& o) const { return *this + o * -1.0; }
    Poly3 operator*(const Poly3& o) const {
        Poly3 out;
        for (const Term& s : terms_)
            for (const Term& t : o.terms_)
                out.terms_.push_back({s.c * t.c, s.i + t.i, s.j + t.j, s.k + t.k});
        out.normalize();
        return out;
    }
    Poly3 operator*(double s) const {
        Poly3 out = *this;
        for (Term& t : out.terms_) t.c *= s;
        out.normalize();
        return out;
    }

    bool operator==(const Poly3& o) const { return (*this - o).is_zero(); }

    double eval(double x, double y, double z) const {
        double acc = 0.0;
        for (const Term& t : terms_)
            acc += t.c * ipow(x, t.i) * ipow(y, t.j) * ipow(z, t.k);
        return acc;
    }

    Interval eval(const Interval& x, const Interval& y, const Interval& z) const {
        int dx = 0, dy = 0, dz = 0;
        for (const Term& t : terms_) {
            dx = std::max(dx, t.i);
            dy = std::max(dy, t.j);
            dz = std::max(dz, t.k);
        }
        const auto powers = [](const Interval& v, int d) {
            std::vector<Interval> p(static_cast<size_t>(d) + 1, Interval(1.0));
            for (int e = 1; e <= d; ++e)
                p[static_cast<size_t>(e)] = (e % 2 == 0)
                                                ? square(p[static_cast<size_t>(e / 2)])
                                                : p[static_cast<size_t>(e - 1)] * v;
            return p;
        };
        const auto px = powers(x, dx), py = powers(y, dy), pz = powers(z, dz);
        Interval acc(0.0);
        for (const Term& t : terms_)
            acc = acc + Interval(t.c) * px[static_cast<size_t>(t.i)] *
                            py[static_cast<size_t>(t.j)] * pz[static_cast<size_t>(t.k)];
        return acc;
    }

  private:
    static double ipow(double v, int e) {
        double acc = 1.0;
        for (int i = 0; i < e; ++i) acc *= v;
        return acc;
    }

    void normalize() {
        std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
            return std::tie(a.i, a.j, a.k) < std::tie(b.i, b.j, b.k);
        });
        std::vector<Term> merged;
        for (const Term& t : terms_) {
            if (!merged.empty() && merged.back().i == t.i && merged.back().j == t.j &&
                merged.back().k == t.k)
                merged.back().c += t.c;
            else
                merged.push_back(t);
        }
        merged.erase(std::remove_if(merged.begin(), merged.end(),
                                    [](const Term& t) { return t.c == 0.0; }),
                     merged.end());
        terms_ = std::move(merged);
    }

    std::vector<Term> terms_;
};

inline Poly3 operator*(double s, const Poly3& p) { return p * s; }

}  // namespace trispec
