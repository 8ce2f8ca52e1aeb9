#include "trispec/triangle_group.hpp"

#include <cmath>
#include <cstring>
#include <deque>
#include <unordered_map>

namespace trispec {

namespace {
constexpr double kPi = 3.14159265358979323846264338327950288;

// Hash key for a canonical motion: entries snapped to the 1e-9 grid. Very
// large entries fall back to their exact double value once the grid spacing
// drops below one ulp, which only ever splits true duplicates (harmless for
// the consumers here).
struct MotionKey {
    double k[4];
    bool rev;

    bool operator==(const MotionKey& o) const {
        return rev == o.rev && k[0] == o.k[0] && k[1] == o.k[1] && k[2] == o.k[2] &&
               k[3] == o.k[3];
    }
};

MotionKey key_of(const Motion& m) {
    MotionKey key{};
    const double e[4] = {m.a, m.b, m.c, m.d};
    for (int i = 0; i < 4; ++i) key.k[i] = std::nearbyint(e[i] * 1e9) + 0.0;
    key.rev = m.reversing;
    return key;
}

struct MotionKeyHash {
    size_t operator()(const MotionKey& key) const {
        size_t h = key.rev ? 0x9e3779b97f4a7c15ull : 0;
        for (double v : key.k) {
            uint64_t bits;
            std::memcpy(&bits, &v, sizeof bits);
            h ^= bits + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return h;
    }
};
}  // namespace

TriangleRealization realize(const Signature& sig) {
    require_admissible(sig);
    TriangleRealization tr;
    tr.sig = sig;
    tr.cosines = cos_params(sig);

    const SideCoshes sides = side_coshes(sig);
    const ContactData contacts = contact_data(sig);

    const double len_a = std::acosh(sides.cosh_a);
    tr.v_r = UhpPoint{0.0, 1.0};
    tr.v_p = UhpPoint{0.0, std::exp(len_a)};
    tr.side_a = Geodesic::vertical_line(0.0);

    // Side c leaves v_r at interior angle pi/r from side a, into x > 0; with
    // the counterclockwise-positive convention that is a rotation by -pi/r of
    // the upward ray.
    const Motion swing = rotation_about(tr.v_r, -kPi / sig.r);
    tr.q_ideal = !sig.finite_q();
    if (tr.q_ideal) {
        tr.v_q_ideal = apply(swing, BoundaryPoint::infinity());
        tr.side_c = apply(swing, Geodesic::vertical_line(0.0));
        // Side b runs from the interior vertex v_p to the ideal vertex: a
        // half-circle whose center is equidistant from v_p and the ideal foot.
        {
            const UhpPoint f = tr.v_p;
            const double tx = tr.v_q_ideal.x;
            const double c = (f.x * f.x + f.y * f.y - tx * tx) / (2.0 * (f.x - tx));
            tr.side_b = Geodesic::half_circle(c, std::fabs(tx - c));
        }
    } else {
        const double len_c = std::acosh(sides.cosh_c);
        tr.v_q = apply(swing, UhpPoint{0.0, std::exp(len_c)});
        tr.side_c = Geodesic::through(tr.v_r, tr.v_q);
        tr.side_b = Geodesic::through(tr.v_p, tr.v_q);
    }

    tr.d_r = std::asinh(std::sqrt(contacts.sinh2_dr));
    tr.d_p = std::asinh(std::sqrt(contacts.sinh2_dp));
    tr.contact_qstar = UhpPoint{0.0, std::exp(tr.d_r)};
    if (tr.q_ideal) {
        tr.contact_pstar = point_towards(tr.v_r, tr.v_q_ideal, tr.d_r);
        tr.contact_rstar = point_towards(tr.v_p, tr.v_q_ideal, tr.d_p);
    } else {
        tr.contact_pstar = point_towards(tr.v_r, tr.v_q, tr.d_r);
        tr.contact_rstar = point_towards(tr.v_p, tr.v_q, tr.d_p);
    }

    // Incenter: walk the inradius along the perpendicular to side a at the
    // contact point, into the triangle. On the half-circle |z| = e^{d_r} the
    // point at arc length s from the top is (R tanh s, R sech s).
    tr.inradius = std::atanh(std::tan(kPi / (2.0 * sig.r)) * std::sinh(tr.d_r));
    const double ec = std::exp(tr.d_r);
    tr.incenter = UhpPoint{ec * std::tanh(tr.inradius), ec / std::cosh(tr.inradius)};

    // Rotations as double reflections: with sides oriented as above each
    // product is the counterclockwise rotation by twice the interior angle,
    // and gen_q * gen_p * gen_r telescopes to the identity.
    const Motion sa = reflect(tr.side_a);
    const Motion sb = reflect(tr.side_b);
    const Motion sc = reflect(tr.side_c);
    tr.gen_r = (sa * sc).normalized();
    tr.gen_p = (sb * sa).normalized();
    tr.gen_q = (sc * sb).normalized();
    return tr;
}

Motion generator(const TriangleRealization& tr, char letter) {
    switch (letter) {
        case 'R': return tr.gen_r;
        case 'P': return tr.gen_p;
        case 'Q': return tr.gen_q;
        case 'r': return tr.gen_r.inverse();
        case 'p': return tr.gen_p.inverse();
        case 'q': return tr.gen_q.inverse();
        default: throw std::invalid_argument("generator letter must be one of RPQrpq");
    }
}

Motion word_motion(const TriangleRealization& tr, const std::string& word) {
    Motion m = Motion::identity();
    for (char c : word) m = m * generator(tr, c);
    return m.normalized();
}

BallResult enumerate_ball(const TriangleRealization& tr, const BallOptions& opts) {
    if (opts.max_word < 0) throw std::invalid_argument("max_word must be >= 0");
    if (opts.max_word > BallOptions::word_cap) {
        const double est = std::pow(6.0, opts.max_word);
        throw ResourceCap("word ball of radius " + std::to_string(opts.max_word) +
                          " exceeds the cap of " + std::to_string(BallOptions::word_cap) +
                          " (up to ~" + std::to_string(est) + " words)");
    }

    const char letters[6] = {'R', 'P', 'Q', 'r', 'p', 'q'};
    Motion gens[6];
    for (int i = 0; i < 6; ++i) gens[i] = generator(tr, letters[i]);

    const UhpPoint base = tr.incenter;
    const double cosh_prune = opts.prune_displacement
                                  ? std::cosh(*opts.prune_displacement)
                                  : 0.0;

    BallResult out;
    std::unordered_map<MotionKey, size_t, MotionKeyHash> seen;
    std::deque<size_t> frontier;

    const Motion id = Motion::identity();
    seen.emplace(key_of(id), 0);
    out.elements.push_back(GroupElement{id, ""});
    frontier.push_back(0);

    for (int depth = 0; depth < opts.max_word; ++depth) {
        std::deque<size_t> next;
        for (size_t idx : frontier) {
            const GroupElement cur = out.elements[idx];  // copy: vector grows below
            for (int i = 0; i < 6; ++i) {
                const Motion m = cur.m * gens[i];
                const MotionKey key = key_of(m);
                if (seen.find(key) != seen.end()) continue;
                const size_t new_idx = out.elements.size();
                seen.emplace(key, new_idx);
                out.elements.push_back(GroupElement{m, cur.word + letters[i]});
                const bool expand =
                    !opts.prune_displacement ||
                    cosh_dist(base, apply(m, base)) <= cosh_prune;
                if (expand) next.push_back(new_idx);
            }
        }
        frontier.swap(next);
        out.depth_reached = depth + 1;
        if (frontier.empty()) {
            out.frontier_exhausted = true;
            break;
        }
    }
    return out;
}

Geodesic axis(const GroupElement& g) { return axis_of(g.m); }

bool motions_equal(const Motion& a, const Motion& b, double tol) {
    if (a.reversing != b.reversing) return false;
    const Motion na = a.normalized();
    const Motion nb = b.normalized();
    const double dplus = std::max(std::max(std::fabs(na.a - nb.a), std::fabs(na.b - nb.b)),
                                  std::max(std::fabs(na.c - nb.c), std::fabs(na.d - nb.d)));
    if (dplus <= tol) return true;
    const double dminus = std::max(std::max(std::fabs(na.a + nb.a), std::fabs(na.b + nb.b)),
                                   std::max(std::fabs(na.c + nb.c), std::fabs(na.d + nb.d)));
    return dminus <= tol;
}

ConjugacyResult is_conjugate(const TriangleRealization& tr, const Motion& g,
                             const Motion& h, int depth) {
    BallOptions opts;
    opts.max_word = depth;
    const BallResult ball = enumerate_ball(tr, opts);
    for (const GroupElement& w : ball.elements) {
        const Motion conj = w.m * g * w.m.inverse();
        if (motions_equal(conj, h)) return ConjugacyResult{true, w.word};
    }
    return ConjugacyResult{};
}

bool axis_through_even_vertex(const TriangleRealization& tr, const GroupElement& g,
                              int search_radius) {
    const Geodesic ax = axis(g);
    std::vector<UhpPoint> vertices;
    if (tr.sig.r % 2 == 0) vertices.push_back(tr.v_r);
    if (tr.sig.p % 2 == 0) vertices.push_back(tr.v_p);
    if (tr.sig.finite_q() && tr.sig.q % 2 == 0) vertices.push_back(tr.v_q);
    if (vertices.empty()) return false;

    BallOptions opts;
    opts.max_word = search_radius;
    const BallResult ball = enumerate_ball(tr, opts);
    for (const GroupElement& w : ball.elements)
        for (const UhpPoint& v : vertices)
            if (dist_to_geodesic(apply(w.m, v), ax) <= 1e-8) return true;
    return false;
}

}  // namespace trispec
