#include "trispec/star_graph.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <unordered_map>

namespace trispec {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

struct PosKey {
    double x, y;
    bool operator==(const PosKey& o) const { return x == o.x && y == o.y; }
};

PosKey key_of(const UhpPoint& p) {
    return PosKey{std::nearbyint(p.x * 1e9) + 0.0, std::nearbyint(p.y * 1e9) + 0.0};
}

struct PosKeyHash {
    size_t operator()(const PosKey& k) const {
        uint64_t bx, by;
        std::memcpy(&bx, &k.x, sizeof bx);
        std::memcpy(&by, &k.y, sizeof by);
        return bx * 0x9e3779b97f4a7c15ull ^ (by + 0x7f4a7c15ull + (bx << 6));
    }
};

bool pure(const std::string& s) {
    return s.find_first_not_of('r') == std::string::npos ||
           s.find_first_not_of('p') == std::string::npos;
}
}  // namespace

std::vector<int> StarBall::sphere(int n) const {
    std::vector<int> out;
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].dist == n) out.push_back(static_cast<int>(i));
    return out;
}

StarBall build_star_ball(const TriangleRealization& tr, int radius) {
    if (radius < 0) throw std::invalid_argument("radius must be >= 0");
    if (radius > StarBall::radius_cap) {
        const double est = 1.0 + 4.0 * (std::pow(3.0, radius) - 1.0) / 2.0;
        throw ResourceCap("contact ball of radius " + std::to_string(radius) +
                          " exceeds the cap of " + std::to_string(StarBall::radius_cap) +
                          " (up to ~" + std::to_string(est) + " nodes)");
    }

    StarBall ball;
    ball.sig = tr.sig;
    ball.radius = radius;

    std::unordered_map<PosKey, int, PosKeyHash> index;
    std::vector<std::set<std::string>> paths;
    std::set<std::tuple<int, int, char>> edge_seen;

    StarNode base;
    base.pos = tr.contact_qstar;
    base.r_center = tr.v_r;
    base.p_center = tr.v_p;
    base.dist = 0;
    ball.nodes.push_back(base);
    paths.emplace_back();
    paths.back().insert("");
    index.emplace(key_of(base.pos), 0);

    const double ang_r = 2.0 * kPi / tr.sig.r;
    const double ang_p = 2.0 * kPi / tr.sig.p;

    std::vector<int> layer{0};
    for (int d = 0; d < radius && !layer.empty(); ++d) {
        std::vector<int> next;
        for (int idx : layer) {
            for (char type : {'r', 'p'}) {
                for (double s : {1.0, -1.0}) {
                    const StarNode cur = ball.nodes[static_cast<size_t>(idx)];
                    const UhpPoint center = (type == 'r') ? cur.r_center : cur.p_center;
                    const Motion rot =
                        rotation_about(center, s * (type == 'r' ? ang_r : ang_p));
                    StarNode nb;
                    nb.pos = apply(rot, cur.pos);
                    if (type == 'r') {
                        nb.r_center = cur.r_center;
                        nb.p_center = apply(rot, cur.p_center);
                    } else {
                        nb.p_center = cur.p_center;
                        nb.r_center = apply(rot, cur.r_center);
                    }
                    nb.dist = cur.dist + 1;

                    const PosKey pk = key_of(nb.pos);
                    auto it = index.find(pk);
                    int nb_idx;
                    if (it == index.end()) {
                        nb_idx = static_cast<int>(ball.nodes.size());
                        index.emplace(pk, nb_idx);
                        ball.nodes.push_back(nb);
                        paths.emplace_back();
                        for (const std::string& tp : paths[static_cast<size_t>(idx)])
                            paths.back().insert(tp + type);
                        next.push_back(nb_idx);
                    } else {
                        nb_idx = it->second;
                        if (ball.nodes[static_cast<size_t>(nb_idx)].dist == cur.dist + 1) {
                            // Another minimal path into an already-discovered node.
                            for (const std::string& tp : paths[static_cast<size_t>(idx)])
                                paths[static_cast<size_t>(nb_idx)].insert(tp + type);
                        }
                    }
                    const auto ekey = std::make_tuple(std::min(idx, nb_idx),
                                                      std::max(idx, nb_idx), type);
                    if (idx != nb_idx && edge_seen.insert(ekey).second)
                        ball.edges.push_back(StarEdge{idx, nb_idx, type});
                }
            }
        }
        layer.swap(next);
    }

    for (size_t i = 0; i < ball.nodes.size(); ++i)
        ball.nodes[i].type_paths.assign(paths[i].begin(), paths[i].end());
    return ball;
}

int d_star(const StarBall& ball, const UhpPoint& pos) {
    const PosKey pk = key_of(pos);
    for (size_t i = 0; i < ball.nodes.size(); ++i)
        if (key_of(ball.nodes[i].pos) == pk) return ball.nodes[i].dist;
    return -1;
}

RhoStar rho_star(const StarBall& ball, int n) {
    if (n < 1 || n > ball.radius)
        throw std::invalid_argument("sphere index must satisfy 1 <= n <= radius");
    const UhpPoint base = ball.nodes[0].pos;
    RhoStar best;
    best.cosh_value = std::numeric_limits<double>::infinity();
    for (int idx : ball.sphere(n)) {
        const StarNode& node = ball.nodes[static_cast<size_t>(idx)];
        bool all_pure = true;
        for (const std::string& tp : node.type_paths)
            if (!pure(tp)) {
                all_pure = false;
                break;
            }
        if (all_pure) continue;
        const double cd = cosh_dist(base, node.pos);
        if (cd < best.cosh_value) {
            best.cosh_value = cd;
            best.node = idx;
        }
    }
    if (best.node < 0) throw std::domain_error("trimmed sphere is empty");
    best.value = std::acosh(best.cosh_value);
    best.types = ball.nodes[static_cast<size_t>(best.node)].type_paths;
    return best;
}

LambdaStar lambda_star(const StarBall& ball, const Motion& g) {
    const MotionClass mc = classify(g);
    if (mc.kind == MotionKind::Identity) return LambdaStar{0, true, 0};

    std::unordered_map<PosKey, int, PosKeyHash> index;
    for (size_t i = 0; i < ball.nodes.size(); ++i)
        index.emplace(key_of(ball.nodes[i].pos), static_cast<int>(i));

    std::vector<std::vector<int>> adj(ball.nodes.size());
    for (const StarEdge& e : ball.edges) {
        adj[static_cast<size_t>(e.from)].push_back(e.to);
        adj[static_cast<size_t>(e.to)].push_back(e.from);
    }

    auto graph_dist = [&](int from, int to) {
        if (from == to) return 0;
        std::vector<int> dist(ball.nodes.size(), -1);
        std::deque<int> queue{from};
        dist[static_cast<size_t>(from)] = 0;
        while (!queue.empty()) {
            const int cur = queue.front();
            queue.pop_front();
            for (int nb : adj[static_cast<size_t>(cur)]) {
                if (dist[static_cast<size_t>(nb)] >= 0) continue;
                dist[static_cast<size_t>(nb)] = dist[static_cast<size_t>(cur)] + 1;
                if (nb == to) return dist[static_cast<size_t>(nb)];
                queue.push_back(nb);
            }
        }
        return -1;
    };

    LambdaStar out;
    int best = -1;
    for (size_t i = 0; i < ball.nodes.size(); ++i) {
        const auto it = index.find(key_of(apply(g, ball.nodes[i].pos)));
        if (it == index.end()) continue;
        const int d = graph_dist(static_cast<int>(i), it->second);
        if (d >= 0 && (best < 0 || d < best)) {
            best = d;
            out.witness_node = static_cast<int>(i);
        }
    }
    if (best < 0)
        throw std::domain_error("no ball node has its image inside the ball; enlarge it");
    out.value = best;

    // A sound level lower bound: one edge step moves a point by at most the
    // larger circle chord, and any x moves by at least the translation length.
    const StarNode& b0 = ball.nodes[0];
    const double sinh2_r = std::pow(std::sinh(dist(b0.pos, b0.r_center)), 2);
    const double sinh2_p = std::pow(std::sinh(dist(b0.pos, b0.p_center)), 2);
    const double chord_r =
        std::acosh(1.0 + (1.0 - std::cos(2.0 * kPi / ball.sig.r)) * sinh2_r);
    const double chord_p =
        std::acosh(1.0 + (1.0 - std::cos(2.0 * kPi / ball.sig.p)) * sinh2_p);
    const double maxstep = std::max(chord_r, chord_p);
    int lower = 1;  // elliptics fix only tiling vertices, parabolics nothing
    if (mc.kind == MotionKind::Hyperbolic)
        lower = std::max(1, static_cast<int>(std::ceil(mc.length / maxstep - 1e-9)));
    out.exact_within_ball = (out.value <= lower);
    return out;
}

namespace {
double ext_delta(const Signature& sig, int k1, int k2) {
    // Catalog-internal variant without the public range guard; indices 0 or n
    // simply evaluate the trig polynomial (never hyperbolic there).
    const double ca = side_coshes(sig).cosh_a;
    return std::sin(k1 * kPi / sig.p) * std::sin(k2 * kPi / sig.r) * ca -
           std::cos(k1 * kPi / sig.p) * std::cos(k2 * kPi / sig.r);
}

void push_delta(std::vector<LevelEntry>& out, const Signature& sig, int level,
                const std::string& type, int k1, int k2) {
    LevelEntry e;
    e.level = level;
    e.node_type = type;
    e.form = "delta(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
    e.invariant = ext_delta(sig, k1, k2);
    e.hyperbolic = e.invariant > 1.0 + 1e-12;
    e.length = e.hyperbolic ? 2.0 * std::acosh(e.invariant) : 0.0;
    out.push_back(e);
}

void push_value(std::vector<LevelEntry>& out, int level, const std::string& type,
                const std::string& form, double invariant, double length_factor) {
    LevelEntry e;
    e.level = level;
    e.node_type = type;
    e.form = form;
    e.invariant = invariant;
    e.hyperbolic = invariant > 1.0 + 1e-12;
    e.length = e.hyperbolic ? length_factor * std::acosh(invariant) : 0.0;
    out.push_back(e);
}
}  // namespace

std::vector<LevelEntry> level_catalog(const Signature& sig, int level) {
    require_admissible(sig);
    const int r = sig.r, p = sig.p;
    std::vector<LevelEntry> out;
    switch (level) {
        case 1:
            // Level-1 elements turn on a single circle: rotations, never
            // hyperbolic.
            return out;
        case 2:
            push_delta(out, sig, 2, "rp", p - 1, 1);
            push_delta(out, sig, 2, "rp", 1, r - 1);
            return out;
        case 3:
            push_delta(out, sig, 3, "rpr", 1, r - 2);
            push_delta(out, sig, 3, "rpr", p - 1, r - 2);
            push_delta(out, sig, 3, "prp", 2, r - 1);
            push_delta(out, sig, 3, "prp", 2, 1);
            push_delta(out, sig, 3, "rrp", 1, 2);
            push_delta(out, sig, 3, "rrp", p - 1, 2);
            push_delta(out, sig, 3, "ppr", 2, 1);
            push_delta(out, sig, 3, "ppr", p - 2, 1);
            return out;
        case 4: {
            push_delta(out, sig, 4, "rrrp", 1, 3);
            push_delta(out, sig, 4, "rrrp", p - 1, 3);
            push_delta(out, sig, 4, "pppr", p - 3, 1);
            push_delta(out, sig, 4, "pppr", p - 3, r - 1);
            push_delta(out, sig, 4, "rrpr", p - 1, r - 3);
            push_delta(out, sig, 4, "rrpr", 1, r - 3);
            push_delta(out, sig, 4, "rrpr", 1, r - 1);
            push_delta(out, sig, 4, "pprp", 3, 1);
            push_delta(out, sig, 4, "pprp", 3, r - 1);
            push_delta(out, sig, 4, "pprp", 1, r - 1);
            const LTable lt = l_table(cos_params(sig));
            push_value(out, 4, "rprp", "L10", lt[10], 2.0);
            push_value(out, 4, "rprp", "L11", lt[11], 2.0);
            push_value(out, 4, "rprp", "L12", lt[12], 2.0);
            push_value(out, 4, "rprp", "4arcosh delta(1," + std::to_string(r - 1) + ")",
                       ext_delta(sig, 1, r - 1), 4.0);
            push_delta(out, sig, 4, "rrpp", 2, 2);
            push_delta(out, sig, 4, "rrpp", p - 2, 2);
            push_delta(out, sig, 4, "rppr", p - 2, r - 2);
            push_delta(out, sig, 4, "rppr", p - 2, 2);
            return out;
        }
        default:
            throw std::invalid_argument("catalog levels run from 1 to 4");
    }
}

double p_graph_rho(const Signature& sig, int n) {
    require_admissible(sig);
    if (sig.r != 2) throw std::invalid_argument("polygon graph radii apply to r = 2");
    if (n < 1 || n > 3)
        throw std::invalid_argument("closed forms are available for n <= 3 only");
    const R2Quantities r2 = r2_quantities(sig);
    if (!sig.finite_q()) {
        if (n == 3) return r2.cleared_rho3;  // cleared numerator at Z = 1
        throw std::domain_error("polygon edges degenerate at q = inf; use cleared forms");
    }
    if (n == 1) return 2.0 * std::acosh(r2.cosh_c);
    if (n == 2) {
        const double c2 = 2.0 * r2.cosh_c * r2.cosh_c - 1.0;  // cosh 2c
        const double s2sq = c2 * c2 - 1.0;
        return std::acosh(c2 * c2 - s2sq * std::cos(2.0 * kPi / sig.q));
    }
    return std::acosh(r2.cosh_rho3);
}

std::string star_ball_svg(const StarBall& ball) {
    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const StarNode& n : ball.nodes) {
        x0 = std::min(x0, n.pos.x);
        x1 = std::max(x1, n.pos.x);
        y0 = std::min(y0, n.pos.y);
        y1 = std::max(y1, n.pos.y);
    }
    const double w = 800.0, h = 600.0, margin = 30.0;
    const double sx = (w - 2 * margin) / std::max(1e-9, x1 - x0);
    const double sy = (h - 2 * margin) / std::max(1e-9, y1 - y0);
    const double s = std::min(sx, sy);
    auto px = [&](const UhpPoint& p) { return margin + (p.x - x0) * s; };
    auto py = [&](const UhpPoint& p) { return h - margin - (p.y - y0) * s; };

    std::ostringstream svg;
    svg << "<svg xmlns='http://www.w3.org/2000/svg' width='" << w << "' height='" << h
        << "'>\n";
    for (const StarEdge& e : ball.edges) {
        const UhpPoint& a = ball.nodes[static_cast<size_t>(e.from)].pos;
        const UhpPoint& b = ball.nodes[static_cast<size_t>(e.to)].pos;
        svg << "<line x1='" << px(a) << "' y1='" << py(a) << "' x2='" << px(b)
            << "' y2='" << py(b) << "' stroke='"
            << (e.type == 'r' ? "#1f77b4" : "#d62728") << "' stroke-width='1'/>\n";
    }
    for (size_t i = 0; i < ball.nodes.size(); ++i) {
        const StarNode& n = ball.nodes[i];
        svg << "<circle cx='" << px(n.pos) << "' cy='" << py(n.pos) << "' r='"
            << (i == 0 ? 5 : 3) << "' fill='" << (i == 0 ? "#2ca02c" : "#444")
            << "'><title>d=" << n.dist << "</title></circle>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

}  // namespace trispec
