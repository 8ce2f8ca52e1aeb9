#pragma once

#include <optional>
#include <stdexcept>
#include <string>

// Upper half-plane model. Points are z = x + iy with y > 0, the boundary is
// the real line plus the point at infinity, and geodesics are half-circles
// centered on the real axis or vertical rays.
//
// Isometries are stored as real 2x2 matrices with determinant normalized to
// +1 (orientation-preserving, acting by z -> (az+b)/(cz+d)) or -1
// (orientation-reversing, acting on the conjugate). Matrices are kept in a
// canonical sign so that M and -M, which act identically, compare and hash
// identically.

namespace trispec {

struct UhpPoint {
    double x = 0.0;
    double y = 1.0;
};

struct BoundaryPoint {
    double x = 0.0;
    bool at_infinity = false;

    static BoundaryPoint infinity() { return BoundaryPoint{0.0, true}; }
};

// Geodesic through two distinct boundary points. Vertical rays have
// `vertical = true` and foot `v`; half-circles carry center c and radius rho.
struct Geodesic {
    bool vertical = false;
    double v = 0.0;    // foot of a vertical ray
    double c = 0.0;    // Euclidean center of a half-circle
    double rho = 1.0;  // Euclidean radius, > 0

    static Geodesic vertical_line(double foot) {
        Geodesic g;
        g.vertical = true;
        g.v = foot;
        return g;
    }
    static Geodesic half_circle(double center, double radius);
    // Unique geodesic through two boundary points.
    static Geodesic through(const BoundaryPoint& a, const BoundaryPoint& b);
    // Unique geodesic through two interior points.
    static Geodesic through(const UhpPoint& a, const UhpPoint& b);

    bool contains(const UhpPoint& p, double tol = 1e-9) const;
};

enum class MotionKind { Identity, Elliptic, Parabolic, Hyperbolic };

struct MotionClass {
    MotionKind kind = MotionKind::Identity;
    // Unsigned rotation amount in (0, pi] for elliptics; matrices are stored up
    // to overall sign, which folds the angle alpha with 2*pi - alpha.
    double angle = 0.0;
    // Translation length 2*arcosh(|tr|/2) for hyperbolics.
    double length = 0.0;
};

struct Motion {
    // Row-major entries a, b, c, d.
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
    bool reversing = false;

    static Motion identity() { return Motion{}; }

    double det() const { return a * d - b * c; }
    bool is_direct() const { return !reversing; }

    // Scale to |det| = 1 and fix the overall sign: the first entry of (a,b,c,d)
    // with magnitude above 1e-12 is made positive.
    Motion normalized() const;

    Motion inverse() const;

    // Composition (this applied after rhs).
    Motion operator*(const Motion& rhs) const;
};

UhpPoint apply(const Motion& m, const UhpPoint& p);
BoundaryPoint apply(const Motion& m, const BoundaryPoint& p);
Geodesic apply(const Motion& m, const Geodesic& g);

double dist(const UhpPoint& p, const UhpPoint& q);
// cosh of the distance, cheaper and exact for comparisons.
double cosh_dist(const UhpPoint& p, const UhpPoint& q);

// Distance from a point to a geodesic (length of the perpendicular).
double dist_to_geodesic(const UhpPoint& p, const Geodesic& g);

// Classify a direct motion by |trace| with tolerance 1e-10 at the parabolic
// boundary. Throws std::invalid_argument for reversing motions.
MotionClass classify(const Motion& m, double tol = 1e-10);

// Reflection across a geodesic (orientation-reversing involution).
Motion reflect(const Geodesic& g);

// Rotation by `angle` about an interior point, counterclockwise positive.
Motion rotation_about(const UhpPoint& center, double angle);

// Translation by signed hyperbolic distance t along a geodesic; positive t
// moves toward the endpoint with larger boundary coordinate (toward +infinity
// for vertical rays).
Motion translation_along(const Geodesic& g, double t);

// Configuration invariant for two geodesics crossing a common transversal at
// angles theta1, theta2, with transversal segment of length t between the
// intersection points:
//
//   |sin(theta1) sin(theta2) cosh(t) - cos(theta1) cos(theta2)|
//
// The geodesics are disjoint iff this exceeds 1, and then it equals the cosh
// of the distance between them.
double delta_config(double theta1, double theta2, double t);

// cosh of the distance between two disjoint geodesics; values < 1 mean the
// geodesics intersect, exactly 1 means asymptotic.
double geodesic_cosh_distance(const Geodesic& a, const Geodesic& b);

struct CommonPerpendicular {
    Geodesic axis;       // the perpendicular geodesic itself
    double distance;     // distance between the two geodesics along it
};

// Throws std::domain_error when the geodesics intersect or are asymptotic.
CommonPerpendicular common_perpendicular(const Geodesic& a, const Geodesic& b);

// Axis of a hyperbolic direct motion (the invariant geodesic).
// Throws std::domain_error unless classify(m) is hyperbolic.
Geodesic axis_of(const Motion& m);

// Point at signed arc length t from `from` along the geodesic through `from`
// and `towards` (positive direction toward `towards`).
UhpPoint point_towards(const UhpPoint& from, const UhpPoint& towards, double t);
// Same, but aiming at a boundary point.
UhpPoint point_towards(const UhpPoint& from, const BoundaryPoint& towards, double t);

}  // namespace trispec
