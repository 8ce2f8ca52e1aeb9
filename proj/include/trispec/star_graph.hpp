#pragma once

#include <string>
#include <vector>

#include "trispec/triangle_group.hpp"

// Combinatorial graph on the incircle contact points of the triangle tiling.
// Each node lies on one circle of contact points around an r-vertex and one
// around a p-vertex; its neighbors are the adjacent contact points on those
// two circles, so every node has degree four (before merges at small orders).

namespace trispec {

struct StarNode {
    UhpPoint pos;
    UhpPoint r_center;               // r-vertex whose circle carries this node
    UhpPoint p_center;               // p-vertex likewise
    int dist = 0;                    // combinatorial distance from the base
    std::vector<std::string> type_paths;  // types of all minimal paths, e.g. "rrp"
};

struct StarEdge {
    int from = 0, to = 0;
    char type = 'r';  // which circle the edge runs along
};

struct StarBall {
    Signature sig;
    int radius = 0;
    std::vector<StarNode> nodes;  // index 0 is the base node
    std::vector<StarEdge> edges;

    static constexpr int radius_cap = 6;

    std::vector<int> sphere(int n) const;  // node indices at distance n
};

// Breadth-first ball of given radius around the base contact point (the one on
// the side joining the r- and p-vertices). Throws ResourceCap beyond the cap.
StarBall build_star_ball(const TriangleRealization& tr, int radius);

// Combinatorial distance of a position to the base, or -1 if the position is
// not a node of the ball (tolerance 1e-9 on coordinates).
int d_star(const StarBall& ball, const UhpPoint& pos);

struct RhoStar {
    double value = 0.0;       // hyperbolic radius of the trimmed sphere
    double cosh_value = 1.0;
    int node = -1;            // a node realizing it
    std::vector<std::string> types;  // its minimal path types
};

// Minimal hyperbolic distance from the base over the distance-n sphere, after
// removing the nodes all of whose minimal paths stay on one of the two base
// circles. Throws std::domain_error when the trimmed sphere is empty.
RhoStar rho_star(const StarBall& ball, int n);

struct LambdaStar {
    int value = 0;
    bool exact_within_ball = false;  // true when no node outside could do better
    int witness_node = -1;
};

// Level of a group element: minimum of D*(x, g x) over ball nodes whose image
// is still inside the ball.
LambdaStar lambda_star(const StarBall& ball, const Motion& g);

struct LevelEntry {
    int level = 0;
    std::string node_type;     // type tuple of the translated path, e.g. "rrp"
    std::string form;          // which closed form gives the length
    double invariant = 0.0;    // the arcosh argument (half-trace)
    bool hyperbolic = false;   // invariant > 1
    double length = 0.0;       // 2 arcosh(invariant) when hyperbolic
};

// Closed-form catalog of the candidate lengths contributed by elements of
// level 1 to 4 (level 1 contributes none).
std::vector<LevelEntry> level_catalog(const Signature& sig, int level);

// Polygon-graph radii for the r = 2 layer: length of a shortest nontrivial
// n-step return path bound, n <= 3. q = inf supports only the cleared n = 3
// numerator (see r2_quantities); n = 1, 2 refuse there.
double p_graph_rho(const Signature& sig, int n);

// Simple SVG rendering of a star ball (debugging aid for the CLI).
std::string star_ball_svg(const StarBall& ball);

}  // namespace trispec
