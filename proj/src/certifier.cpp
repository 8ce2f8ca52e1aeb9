#include "trispec/certifier.hpp"

#include <cmath>
#include <future>
#include <sstream>
#include <stdexcept>

namespace trispec {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

// Propagates the ordering chain X <= Y <= Z through the box. Returns false
// when nothing of the constraint region survives.
bool clip_box(Box& b) {
    try {
        b.Z = intersect(b.Z, {0.5, 1.0});
        b.Y = intersect(b.Y, {0.5, b.Z.hi});
        b.X = intersect(b.X, {0.5, b.Y.hi});
        b.Y = intersect(b.Y, {b.X.lo, b.Y.hi});
        b.Z = intersect(b.Z, {b.Y.lo, b.Z.hi});
    } catch (const std::domain_error&) {
        return false;
    }
    return true;
}

bool box_inside(const Exclusion& e, const Box& b, double eps) {
    const auto in = [eps](const Interval& v, double c) {
        return v.lo >= c - eps && v.hi <= c + eps;
    };
    switch (e.kind) {
        case Exclusion::Kind::Point:
            return in(b.X, e.x) && in(b.Y, e.y) && in(b.Z, e.z);
        case Exclusion::Kind::PlaneX:
            return in(b.X, e.x);
        case Exclusion::Kind::PlaneY:
            return in(b.Y, e.x);
        case Exclusion::Kind::PlaneZ:
            return in(b.Z, e.x);
        case Exclusion::Kind::EqXY:
            return b.X.hi - b.Y.lo <= eps && b.Y.hi - b.X.lo <= eps;
        case Exclusion::Kind::EqYZ:
            return b.Y.hi - b.Z.lo <= eps && b.Z.hi - b.Y.lo <= eps;
        case Exclusion::Kind::EqXZ:
            return b.X.hi - b.Z.lo <= eps && b.Z.hi - b.X.lo <= eps;
    }
    return false;
}

bool point_inside(const std::vector<Exclusion>& excl, double x, double y, double z,
                  double eps) {
    const Box pt{Interval(x), Interval(y), Interval(z)};
    for (const Exclusion& e : excl)
        if (box_inside(e, pt, eps)) return true;
    return false;
}
}  // namespace

std::string CertVerdict::to_string() const {
    std::ostringstream os;
    os.precision(12);
    switch (kind) {
        case Kind::Positive:
            os << "positive (" << leaves << " leaves)";
            break;
        case Kind::FailsAt:
            os << "fails at (" << x << ", " << y << ", " << z << ")";
            break;
        case Kind::Inconclusive:
            os << "inconclusive at depth " << depth;
            break;
    }
    return os.str();
}

BoxFn poly_expr(const Poly3& p) {
    return [p](const Box& b) { return p.eval(b.X, b.Y, b.Z); };
}

BoxFn product_expr(const BoxFn& a, const BoxFn& b) {
    return [a, b](const Box& box) { return a(box) * b(box); };
}

CertVerdict certify_positive(const BoxFn& expr, const Box& box,
                             const std::vector<Exclusion>& exclusions,
                             const CertOptions& opt) {
    struct Work {
        Box box;
        int depth;
    };
    std::vector<Work> stack{{box, 0}};
    CertVerdict out;
    out.kind = CertVerdict::Kind::Positive;

    while (!stack.empty()) {
        Work w = stack.back();
        stack.pop_back();
        if (opt.clip_ordered && !clip_box(w.box)) continue;

        bool skip = false;
        for (const Exclusion& e : exclusions)
            if (box_inside(e, w.box, opt.eps)) {
                skip = true;
                break;
            }
        if (skip) continue;

        bool wide = false;
        Interval v;
        try {
            v = expr(w.box);
        } catch (const std::domain_error&) {
            wide = true;  // box too coarse to evaluate; subdivide
        }
        if (!wide && v.lo > 0.0) {
            ++out.leaves;
            continue;
        }

        const double mx = w.box.X.mid();
        const double my = std::max(mx, w.box.Y.mid());
        const double mz = std::max(my, w.box.Z.mid());
        if (!point_inside(exclusions, mx, my, mz, opt.eps)) {
            try {
                const Interval pv =
                    expr(Box{Interval(mx), Interval(my), Interval(mz)});
                if (pv.hi < 0.0) {
                    out.kind = CertVerdict::Kind::FailsAt;
                    out.x = mx;
                    out.y = my;
                    out.z = mz;
                    return out;
                }
            } catch (const std::domain_error&) {
            }
        }

        if (w.depth >= opt.max_depth) {
            out.kind = CertVerdict::Kind::Inconclusive;
            out.depth = w.depth;
            return out;
        }

        const double wx = w.box.X.width(), wy = w.box.Y.width(), wz = w.box.Z.width();
        Work lo = w, hi = w;
        ++lo.depth;
        ++hi.depth;
        if (wx >= wy && wx >= wz) {
            lo.box.X = {w.box.X.lo, mx};
            hi.box.X = {mx, w.box.X.hi};
        } else if (wy >= wz) {
            const double m = w.box.Y.mid();
            lo.box.Y = {w.box.Y.lo, m};
            hi.box.Y = {m, w.box.Y.hi};
        } else {
            const double m = w.box.Z.mid();
            lo.box.Z = {w.box.Z.lo, m};
            hi.box.Z = {m, w.box.Z.hi};
        }
        stack.push_back(hi);
        stack.push_back(lo);
    }
    return out;
}

std::vector<TypeCase> type_case_list() {
    return {
        {{"rrrrp", "ppppr"}, {"prrrr", "rpppp"}},
        {{"rrrpp", "ppprr"}, {"pprrr", "rrppp"}},
        {{"rpppr", "prrrp"}, {"", ""}},
        {{"rpprr", "prrpp"}, {"rrppr", "pprrp"}},
        {{"rrrpr", "ppprp"}, {"rprrr", "prppp"}},
        {{"rrprr", "pprpp"}, {"", ""}},
        {{"rprrp", "prppr"}, {"prrpr", "rpprp"}},
        {{"rrprp", "pprpr"}, {"prprr", "rprpp"}},
        {{"rprpr", "prprp"}, {"", ""}},
    };
}

namespace {

void check_type(const std::string& type) {
    if (type.size() != 5) throw std::invalid_argument("walk type must have length 5");
    for (char c : type)
        if (c != 'r' && c != 'p')
            throw std::invalid_argument("walk type must be over the letters r and p");
}

int max_run(const std::string& type, char which) {
    int best = 0, cur = 0;
    for (char c : type) {
        cur = (c == which) ? cur + 1 : 0;
        best = std::max(best, cur);
    }
    return best;
}

// The walk is evaluated in the hyperboloid model.  Every step turns about
// one of the two circle centers adjacent to the current contact point, and
// carrying the frame along telescopes the composite into a product of four
// fixed matrices: the turns about the two original centers, one per letter
// and direction.  Both centers lie on the geodesic through the base contact
// point, taken as the x-axis with the base point at (0, 0, 1), so each turn
// is a conjugate T(t) Rot(theta) T(-t) of a rotation about the origin by a
// boost of signed length t along that axis.
//
// Written with c = cos(theta) and u = (1 - c) sinh^2 t, the entries are
//
//     [ c - u          -sin cosh t      (1-c) sinh t cosh t ]
//     [ sin cosh t      c               -sin sinh t         ]
//     [ -(1-c) sinh t cosh t  -sin sinh t      1 + u        ]
//
// and every entry stays bounded when t diverges: with D the orbifold
// discriminant X^2 + Y^2 + Z^2 + 2XYZ - 1, the turn about the r-center has
// u = (1+X) D / ((1+Y)(1+Z)), so the blowup of sinh^2 t near X = 1 cancels
// against 1 - c analytically instead of inflating the enclosures.  No
// interval division with a wide denominator occurs anywhere in the chain.
struct IVec3 {
    Interval x, y, z;
};

struct TurnMat {
    Interval e11, e12, e13, e21, e22, e23, e31, e32, e33;
};

IVec3 tapply(const TurnMat& m, const IVec3& v) {
    return {m.e11 * v.x + m.e12 * v.y + m.e13 * v.z,
            m.e21 * v.x + m.e22 * v.y + m.e23 * v.z,
            m.e31 * v.x + m.e32 * v.y + m.e33 * v.z};
}

struct LetterPack {
    Interval c;    // cos of the turn angle 2 pi / n, n the vertex order
    Interval u;    // (1 - c) sinh^2 t
    Interval sch;  // sin * cosh t, nonnegative
    Interval ssh;  // |sin * sinh t|
    Interval e13;  // |(1 - c) sinh t cosh t|
    double sigma;  // sign of the center displacement t
};

// C is the vertex cosine of the turning circle, oa and ob are 1 + cosine at
// the two other vertices.  The grouped magnitudes come from
// sin^2 = (1-c)(1+c), cosh^2 t = 1 + sinh^2 t and 1 + c = 2 C^2.
LetterPack letter_pack(const Interval& C, const Interval& oa, const Interval& ob,
                       const Interval& delta, double sigma) {
    const Interval one(1.0), two(2.0);
    LetterPack l;
    const Interval omc = two * (one - C) * (one + C);
    l.c = one - omc;
    l.u = (one + C) * delta / (oa * ob);
    l.sch = sqrt(two * square(C) * (omc + l.u));
    l.ssh = sqrt(two * square(C) * l.u);
    l.e13 = sqrt(l.u * (l.u + omc));
    l.sigma = sigma;
    return l;
}

TurnMat turn_mat(const LetterPack& l, double dir) {
    const Interval eps(dir), sg(l.sigma), es(dir * l.sigma);
    return {l.c - l.u,   -eps * l.sch, sg * l.e13,  eps * l.sch, l.c,
            -es * l.ssh, -sg * l.e13,  -es * l.ssh, Interval(1.0) + l.u};
}

Interval walk_min_cosh(const std::string& type, const Box& b) {
    const Interval one(1.0), two(2.0);
    const Interval X = b.X, Y = b.Y, Z = b.Z;
    const Interval delta = square(X) + square(Y) + square(Z) + two * X * Y * Z - one;
    const LetterPack pack_r = letter_pack(X, one + Y, one + Z, delta, -1.0);
    const LetterPack pack_p = letter_pack(Y, one + X, one + Z, delta, 1.0);

    std::vector<std::pair<char, int>> runs;
    for (char c : type) {
        if (!runs.empty() && runs.back().first == c)
            ++runs.back().second;
        else
            runs.emplace_back(c, 1);
    }

    // The base configuration is symmetric under reflection in the side
    // holding the base contact point, which flips every turn direction, so
    // the first run may be taken counterclockwise.
    bool have = false;
    Interval best(0.0);
    const int patterns = 1 << (runs.size() - 1);
    for (int bits = 0; bits < patterns; ++bits) {
        // Endpoint = M_1 ... M_5 applied to (0, 0, 1) with M_i the turn of
        // step i, so apply the steps to the vector from the right.  Since
        // the base point is the time axis, cosh of the walk distance is the
        // z-component of the result.
        IVec3 v{Interval(0.0), Interval(0.0), Interval(1.0)};
        for (size_t ri = runs.size(); ri-- > 0;) {
            const double dir =
                (ri == 0 || ((bits >> (ri - 1)) & 1) == 0) ? 1.0 : -1.0;
            const TurnMat m =
                turn_mat(runs[ri].first == 'r' ? pack_r : pack_p, dir);
            for (int k = 0; k < runs[ri].second; ++k) v = tapply(m, v);
        }
        best = have ? min(best, v.z) : v.z;
        have = true;
    }
    return best;
}

Interval collar_bound(const Box& b) {
    const Interval one(1.0), two(2.0);
    const Interval X = b.X, Y = b.Y, Z = b.Z;
    const Interval delta = square(X) + square(Y) + square(Z) + two * X * Y * Z - one;
    const Interval cosh_cstar = delta / (two * (one + X) * (one + Y)) + one;
    const Interval l3_half = two * Y * Z + X;  // L3; cosh l0 = 2 L3^2 - 1
    return square(cosh_cstar) * (two * square(l3_half) - two) + one;
}

}  // namespace

Box rho5_type_domain(const std::string& type, const Box& region, double eps) {
    check_type(type);
    const int kr = max_run(type, 'r');
    const int kp = max_run(type, 'p');
    const double xlo = std::max(0.5, std::cos(kPi / (2.0 * kr)));
    const double ylo = std::max(0.5, std::cos(kPi / (2.0 * kp)));
    Box dom;
    dom.X = intersect(region.X, {xlo, 1.0});
    dom.Y = intersect(region.Y, {ylo, 1.0});
    dom.Z = intersect(region.Z, {0.5, 1.0 - eps});
    return dom;
}

BoxFn rho5_type_expr(const std::string& type) {
    check_type(type);
    return [type](const Box& b) {
        return walk_min_cosh(type, b) - collar_bound(b);
    };
}

CertReport rho5_certificate(const Box& region, double eps, int max_depth,
                            int jobs) {
    CertReport rep;
    rep.eps = eps;
    rep.max_depth = max_depth;

    std::vector<std::string> studied;
    for (const TypeCase& row : type_case_list())
        for (const std::string& t : row.studied) studied.push_back(t);

    const double c4 = std::cos(kPi / 4.0), c5 = std::cos(kPi / 5.0);
    const std::vector<Exclusion> base_excl = {
        Exclusion::point(0.5, c4, c4),  // (3,4,4)
        Exclusion::point(c4, c4, c4),   // (4,4,4)
        Exclusion::point(c5, c5, c5),   // (5,5,5)
    };

    const auto run_one = [&](const std::string& type) -> CertVerdict {
        std::vector<Exclusion> excl = base_excl;
        if (max_run(type, 'r') == 1 && max_run(type, 'p') == 1) {
            // Only the fully alternating walks are realizable down to the
            // degenerate corner, where tile and bound vanish together.
            excl.push_back(Exclusion::point(0.5, 0.5, 0.5));
        }
        Box dom;
        try {
            dom = rho5_type_domain(type, region, eps);
        } catch (const std::domain_error&) {
            CertVerdict v;  // region misses the type's domain: nothing to show
            v.kind = CertVerdict::Kind::Positive;
            return v;
        }
        CertOptions opt;
        opt.eps = eps;
        opt.max_depth = max_depth;
        return certify_positive(rho5_type_expr(type), dom, excl, opt);
    };

    if (jobs <= 1) {
        for (const std::string& t : studied)
            rep.types.push_back(TypeVerdict{t, run_one(t)});
    } else {
        std::vector<std::future<CertVerdict>> futures;
        futures.reserve(studied.size());
        for (const std::string& t : studied)
            futures.push_back(
                std::async(std::launch::async, [&run_one, t] { return run_one(t); }));
        for (size_t i = 0; i < studied.size(); ++i)
            rep.types.push_back(TypeVerdict{studied[i], futures[i].get()});
    }

    rep.all_positive = true;
    for (const TypeVerdict& tv : rep.types)
        if (!tv.verdict.positive()) rep.all_positive = false;
    return rep;
}

}  // namespace trispec
