#include "trispec/geometry.hpp"

#include <cmath>

namespace trispec {

namespace {
constexpr double kSignEps = 1e-12;

double sqr(double v) { return v * v; }
}  // namespace

Geodesic Geodesic::half_circle(double center, double radius) {
    if (!(radius > 0.0)) throw std::invalid_argument("geodesic radius must be positive");
    Geodesic g;
    g.c = center;
    g.rho = radius;
    return g;
}

Geodesic Geodesic::through(const BoundaryPoint& a, const BoundaryPoint& b) {
    if (a.at_infinity && b.at_infinity)
        throw std::invalid_argument("boundary points must be distinct");
    if (a.at_infinity) return vertical_line(b.x);
    if (b.at_infinity) return vertical_line(a.x);
    if (a.x == b.x) throw std::invalid_argument("boundary points must be distinct");
    return half_circle(0.5 * (a.x + b.x), 0.5 * std::fabs(a.x - b.x));
}

Geodesic Geodesic::through(const UhpPoint& a, const UhpPoint& b) {
    const double dx = b.x - a.x;
    if (std::fabs(dx) < 1e-13 * (1.0 + std::fabs(a.x))) return vertical_line(a.x);
    // Center from equal Euclidean distance to both points along the real axis.
    const double c = (sqr(b.x) + sqr(b.y) - sqr(a.x) - sqr(a.y)) / (2.0 * dx);
    return half_circle(c, std::hypot(a.x - c, a.y));
}

bool Geodesic::contains(const UhpPoint& p, double tol) const {
    if (vertical) return std::fabs(p.x - v) <= tol;
    return std::fabs(std::hypot(p.x - c, p.y) - rho) <= tol;
}

Motion Motion::normalized() const {
    const double dt = det();
    const double s = std::sqrt(std::fabs(dt));
    if (!(s > 0.0)) throw std::invalid_argument("singular matrix is not a motion");
    Motion m{a / s, b / s, c / s, d / s, reversing};
    const double entries[4] = {m.a, m.b, m.c, m.d};
    for (double e : entries) {
        if (std::fabs(e) > kSignEps) {
            if (e < 0.0) {
                m.a = -m.a;
                m.b = -m.b;
                m.c = -m.c;
                m.d = -m.d;
            }
            break;
        }
    }
    return m;
}

Motion Motion::inverse() const {
    const double dt = det();
    // (a b; c d)^-1 = (d -b; -c a)/det; for |det| = 1 the sign is absorbed by
    // normalization.
    Motion m{d / dt, -b / dt, -c / dt, a / dt, reversing};
    return m.normalized();
}

Motion Motion::operator*(const Motion& rhs) const {
    // Reversing motions conjugate what follows: acting on z by (this o rhs)
    // means rhs first. Matrix entries stay real either way, only the flag
    // composes by xor.
    Motion m;
    m.a = a * rhs.a + b * rhs.c;
    m.b = a * rhs.b + b * rhs.d;
    m.c = c * rhs.a + d * rhs.c;
    m.d = c * rhs.b + d * rhs.d;
    m.reversing = (reversing != rhs.reversing);
    return m.normalized();
}

UhpPoint apply(const Motion& m, const UhpPoint& p) {
    const double xx = p.x;
    const double yy = m.reversing ? -p.y : p.y;
    const double den = sqr(m.c * xx + m.d) + sqr(m.c * yy);
    if (!(den > 0.0)) throw std::domain_error("motion sends point to the boundary");
    UhpPoint q;
    q.x = ((m.a * xx + m.b) * (m.c * xx + m.d) + m.a * m.c * sqr(yy)) / den;
    q.y = m.det() * yy / den;
    return q;
}

BoundaryPoint apply(const Motion& m, const BoundaryPoint& p) {
    if (p.at_infinity) {
        if (std::fabs(m.c) < kSignEps) return BoundaryPoint::infinity();
        return BoundaryPoint{m.a / m.c, false};
    }
    const double den = m.c * p.x + m.d;
    if (std::fabs(den) < kSignEps) return BoundaryPoint::infinity();
    return BoundaryPoint{(m.a * p.x + m.b) / den, false};
}

Geodesic apply(const Motion& m, const Geodesic& g) {
    BoundaryPoint e1, e2;
    if (g.vertical) {
        e1 = BoundaryPoint{g.v, false};
        e2 = BoundaryPoint::infinity();
    } else {
        e1 = BoundaryPoint{g.c - g.rho, false};
        e2 = BoundaryPoint{g.c + g.rho, false};
    }
    return Geodesic::through(apply(m, e1), apply(m, e2));
}

double cosh_dist(const UhpPoint& p, const UhpPoint& q) {
    return 1.0 + (sqr(p.x - q.x) + sqr(p.y - q.y)) / (2.0 * p.y * q.y);
}

double dist(const UhpPoint& p, const UhpPoint& q) {
    return std::acosh(std::max(1.0, cosh_dist(p, q)));
}

double dist_to_geodesic(const UhpPoint& p, const Geodesic& g) {
    double s;
    if (g.vertical) {
        s = std::fabs(p.x - g.v) / p.y;
    } else {
        s = std::fabs(sqr(p.x - g.c) + sqr(p.y) - sqr(g.rho)) / (2.0 * g.rho * p.y);
    }
    return std::asinh(s);
}

MotionClass classify(const Motion& m, double tol) {
    if (m.reversing)
        throw std::invalid_argument("classification is defined for direct motions only");
    const Motion n = m.normalized();
    if (n.det() < 0.0)
        throw std::invalid_argument("classification is defined for direct motions only");
    const double tr = std::fabs(n.a + n.d);
    MotionClass mc;
    if (tr < 2.0 - tol) {
        mc.kind = MotionKind::Elliptic;
        mc.angle = 2.0 * std::acos(std::min(1.0, tr / 2.0));
        return mc;
    }
    if (tr <= 2.0 + tol) {
        const bool ident = std::fabs(n.b) <= tol && std::fabs(n.c) <= tol &&
                           std::fabs(n.a - n.d) <= tol;
        mc.kind = ident ? MotionKind::Identity : MotionKind::Parabolic;
        return mc;
    }
    mc.kind = MotionKind::Hyperbolic;
    mc.length = 2.0 * std::acosh(tr / 2.0);
    return mc;
}

Motion reflect(const Geodesic& g) {
    Motion m;
    m.reversing = true;
    if (g.vertical) {
        // z -> 2v - conj(z)
        m.a = -1.0;
        m.b = 2.0 * g.v;
        m.c = 0.0;
        m.d = 1.0;
    } else {
        // Circle inversion z -> c + rho^2/(conj(z) - c)
        m.a = g.c;
        m.b = g.rho * g.rho - g.c * g.c;
        m.c = 1.0;
        m.d = -g.c;
    }
    return m.normalized();
}

Motion rotation_about(const UhpPoint& center, double angle) {
    const double s = std::sqrt(center.y);
    Motion t{s, center.x / s, 0.0, 1.0 / s, false};      // i -> center
    Motion r;                                            // rotation about i
    r.a = std::cos(angle / 2.0);
    r.b = std::sin(angle / 2.0);
    r.c = -r.b;
    r.d = r.a;
    return (t * r * t.inverse()).normalized();
}

Motion translation_along(const Geodesic& g, double t) {
    const double e = std::exp(t / 2.0);
    Motion d{e, 0.0, 0.0, 1.0 / e, false};  // translation along the imaginary axis
    Motion s;
    if (g.vertical) {
        s = Motion{1.0, g.v, 0.0, 1.0, false};
    } else {
        // 0 -> c - rho, infinity -> c + rho
        s = Motion{g.c + g.rho, g.c - g.rho, 1.0, 1.0, false}.normalized();
    }
    return (s * d * s.inverse()).normalized();
}

double delta_config(double theta1, double theta2, double t) {
    return std::fabs(std::sin(theta1) * std::sin(theta2) * std::cosh(t) -
                     std::cos(theta1) * std::cos(theta2));
}

double geodesic_cosh_distance(const Geodesic& a, const Geodesic& b) {
    if (a.vertical && b.vertical) return 1.0;  // meet at infinity
    if (a.vertical != b.vertical) {
        const Geodesic& line = a.vertical ? a : b;
        const Geodesic& circ = a.vertical ? b : a;
        return std::fabs(circ.c - line.v) / circ.rho;
    }
    return std::fabs(sqr(a.c - b.c) - sqr(a.rho) - sqr(b.rho)) / (2.0 * a.rho * b.rho);
}

CommonPerpendicular common_perpendicular(const Geodesic& a, const Geodesic& b) {
    const double delta = geodesic_cosh_distance(a, b);
    if (delta <= 1.0 + 1e-12)
        throw std::domain_error("geodesics intersect or are asymptotic; no common perpendicular");
    CommonPerpendicular cp;
    cp.distance = std::acosh(delta);
    if (a.vertical || b.vertical) {
        const Geodesic& line = a.vertical ? a : b;
        const Geodesic& circ = a.vertical ? b : a;
        // Orthogonal to the vertical line means centered at its foot.
        const double s2 = sqr(line.v - circ.c) - sqr(circ.rho);
        cp.axis = Geodesic::half_circle(line.v, std::sqrt(s2));
        return cp;
    }
    if (std::fabs(a.c - b.c) < 1e-13 * (1.0 + std::fabs(a.c))) {
        cp.axis = Geodesic::vertical_line(a.c);  // concentric half-circles
        return cp;
    }
    // Center m of a circle orthogonal to both: (m-c)^2 = s^2 + rho^2 for each.
    const double m =
        (sqr(a.c) - sqr(b.c) - sqr(a.rho) + sqr(b.rho)) / (2.0 * (a.c - b.c));
    const double s2 = sqr(m - a.c) - sqr(a.rho);
    cp.axis = Geodesic::half_circle(m, std::sqrt(s2));
    return cp;
}

Geodesic axis_of(const Motion& m) {
    const MotionClass mc = classify(m);
    if (mc.kind != MotionKind::Hyperbolic)
        throw std::domain_error("axis is defined for hyperbolic motions only");
    const Motion n = m.normalized();
    if (std::fabs(n.c) < kSignEps) {
        // Fixed points are infinity and b/(d-a).
        return Geodesic::vertical_line(n.b / (n.d - n.a));
    }
    const double disc = sqr(n.d - n.a) + 4.0 * n.b * n.c;
    const double root = std::sqrt(std::max(0.0, disc));
    const double z1 = ((n.a - n.d) - root) / (2.0 * n.c);
    const double z2 = ((n.a - n.d) + root) / (2.0 * n.c);
    return Geodesic::through(BoundaryPoint{z1, false}, BoundaryPoint{z2, false});
}

namespace {
UhpPoint walk(const Geodesic& g, const UhpPoint& from, double signed_t) {
    return apply(translation_along(g, signed_t), from);
}
}  // namespace

UhpPoint point_towards(const UhpPoint& from, const UhpPoint& towards, double t) {
    const Geodesic g = Geodesic::through(from, towards);
    double sign;
    if (g.vertical)
        sign = (towards.y > from.y) ? 1.0 : -1.0;
    else
        sign = (towards.x > from.x) ? 1.0 : -1.0;
    return walk(g, from, sign * t);
}

UhpPoint point_towards(const UhpPoint& from, const BoundaryPoint& towards, double t) {
    Geodesic g;
    double sign;
    if (towards.at_infinity) {
        g = Geodesic::vertical_line(from.x);
        sign = 1.0;
    } else if (std::fabs(towards.x - from.x) < 1e-13 * (1.0 + std::fabs(from.x))) {
        g = Geodesic::vertical_line(from.x);
        sign = -1.0;  // straight down to the foot
    } else {
        // Half-circle through `from` with one endpoint at towards.x: the center
        // is equidistant from towards.x and from `from`.
        const double c = (sqr(from.x) + sqr(from.y) - sqr(towards.x)) /
                         (2.0 * (from.x - towards.x));
        g = Geodesic::half_circle(c, std::fabs(towards.x - c));
        sign = (towards.x > from.x) ? 1.0 : -1.0;
    }
    return walk(g, from, sign * t);
}

}  // namespace trispec
