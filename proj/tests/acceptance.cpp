// Acceptance gate: ten end-to-end checks against frozen constants and the
// enumeration oracle. Prints exactly one PASS/FAIL line per criterion on
// stdout (supplementary tables go to stderr) and exits with the number of
// failures.

#include <algorithm>
#include <array>
#include <cctype>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <thread>
#include <unordered_map>
#include <vector>

#include "trispec/report.hpp"
#include "trispec/star_graph.hpp"

using namespace trispec;

namespace {

constexpr double kPi = 3.14159265358979323846;

struct Outcome {
    bool pass = false;
    std::string detail;
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
        .count();
}

std::vector<Signature> ordered_grid(int rlo, int hi) {
    std::vector<Signature> out;
    for (int r = rlo; r <= hi; ++r)
        for (int p = r; p <= hi; ++p)
            for (int q = p; q <= hi; ++q)
                if (is_admissible(Signature{r, p, q}))
                    out.push_back(Signature{r, p, q});
    return out;
}

int job_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 4 : static_cast<int>(hw);
}

template <typename T, typename F>
std::vector<T> parallel_map(const std::vector<Signature>& sigs, F&& fn) {
    std::vector<std::future<T>> futures;
    futures.reserve(sigs.size());
    for (const Signature& sig : sigs)
        futures.push_back(std::async(std::launch::async, fn, sig));
    std::vector<T> out;
    out.reserve(sigs.size());
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

std::string fmt(double v, const char* spec = "%.10g") {
    char buf[64];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

// ---------------------------------------------------------------- criterion 1

Outcome identity_suite() {
    const auto t0 = std::chrono::steady_clock::now();
    double worst = 0.0;
    int count = 0;
    for (const Signature& sig : ordered_grid(3, 12)) {
        ++count;
        const CosTriple c = cos_params(sig);
        const LTable t = l_table(c);
        for (int k1 = 1; k1 < sig.p; ++k1)
            for (int k2 = 1; k2 < sig.r; ++k2)
                worst = std::max(worst,
                                 std::fabs(delta_fn(sig, sig.p - k1, sig.r - k2) -
                                           delta_fn(sig, k1, k2)));
        worst = std::max(worst, std::fabs(delta_fn(sig, sig.p - 1, 1) - t[1]));
        worst = std::max(worst, std::fabs(delta_fn(sig, 1, 2) - t[2]));
        worst = std::max(worst, std::fabs(delta_fn(sig, 2, 1) - t[3]));
        worst = std::max(worst, std::fabs((t[1] - t[2]) -
                                          (2 * c.X - 1) * (c.Y - c.Z)));
        worst = std::max(worst, std::fabs((t[2] - t[3]) -
                                          (2 * c.Z - 1) * (c.X - c.Y)));
    }
    const double dt = seconds_since(t0);
    Outcome out;
    out.pass = worst <= 1e-12 && dt < 1.0;
    out.detail = std::to_string(count) + " signatures, max deviation " +
                 fmt(worst, "%.2e") + ", tol 1e-12, " + fmt(dt, "%.3f") + " s";
    return out;
}

// ---------------------------------------------------------------- criterion 2

Outcome limit_37() {
    const double v = c_star_bound_expanded(CosTriple{1.0, 1.0, 1.0});
    Outcome out;
    out.pass = v == 37.0;
    out.detail = "expanded collar bound at X=Y=Z=1 evaluates to " +
                 fmt(v, "%.17g") + " (exact equality required)";
    return out;
}

// ---------------------------------------------------------------- criterion 3

Outcome cstar_table() {
    const double ref5 = (833.0 + 365.0 * std::sqrt(5.0)) / 324.0;
    const double ref6 = 61.0 / 18.0 + 785.0 * std::sqrt(3.0) / 324.0;
    const double got5 =
        c_star_bound(Signature{3, 3, 5}, l2prime_33(Signature{3, 3, 5}));
    const double got6 =
        c_star_bound(Signature{3, 3, 6}, l2prime_33(Signature{3, 3, 6}));
    const double e5 = std::fabs(got5 - ref5), e6 = std::fabs(got6 - ref6);
    Outcome out;
    out.pass = e5 <= 1e-12 && e6 <= 1e-12;
    out.detail = "(3,3,5): " + fmt(got5) + " vs (833+365*sqrt5)/324, err " +
                 fmt(e5, "%.2e") + "; (3,3,6): " + fmt(got6) +
                 " vs 61/18+785*sqrt3/324, err " + fmt(e6, "%.2e") +
                 ", tol 1e-12";
    return out;
}

// ---------------------------------------------------------------- criterion 4

Outcome oracle_grid() {
    const auto t0 = std::chrono::steady_clock::now();
    const std::vector<Signature> sigs = ordered_grid(3, 8);

    struct SigResult {
        Signature sig;
        bool ok = false;
        std::string first_problem;
    };
    const auto run_one = [](const Signature& sig) {
        SigResult res;
        res.sig = sig;
        try {
            const TriangleRealization tr = realize(sig);
            BruteForceOptions opt;
            opt.cutoff = canonical_l0(sig) + 1e-6;
            opt.max_word = 12;
            opt.conj_depth = 10;
            const SpectrumHead obs = brute_force_head(tr, opt);
            const ValidationReport vr =
                cross_validate(predicted_head(sig), obs, opt.cutoff, 1e-9);
            res.ok = vr.ok;
            if (!vr.ok)
                for (const std::string& line : vr.lines)
                    if (line.find("MISMATCH") != std::string::npos) {
                        res.first_problem = line;
                        break;
                    }
        } catch (const std::exception& e) {
            res.ok = false;
            res.first_problem = e.what();
        }
        return res;
    };
    const std::vector<SigResult> results =
        parallel_map<SigResult>(sigs, run_one);

    int bad = 0;
    std::string first;
    for (const SigResult& r : results)
        if (!r.ok) {
            ++bad;
            if (first.empty())
                first = format_sig(r.sig) + ": " + r.first_problem;
            std::cerr << "  [criterion 4] " << format_sig(r.sig) << " "
                      << r.first_problem << "\n";
        }
    const double dt = seconds_since(t0);
    Outcome out;
    out.pass = bad == 0 && dt < 600.0;
    out.detail = std::to_string(sigs.size()) + " signatures, cutoff l3+1e-6, "
                 "max word 12, conjugator depth 10, tol 1e-9, " +
                 std::to_string(bad) + " mismatches, " + fmt(dt, "%.1f") + " s";
    if (!first.empty()) out.detail += "; first: " + first;
    return out;
}

// ---------------------------------------------------------------- criterion 5

Outcome rho_monotone_gap() {
    const std::vector<Signature> sigs = ordered_grid(3, 8);
    const std::set<std::string> exceptional{"(3,4,4)", "(4,4,4)", "(5,5,5)"};

    struct SigRho {
        Signature sig;
        bool mono = false;
        double cosh5 = 0.0, bound = 0.0;
        std::string err;
    };
    const auto run_one = [](const Signature& sig) {
        SigRho res;
        res.sig = sig;
        try {
            const StarBall ball = build_star_ball(realize(sig), 5);
            double prev = -1.0;
            res.mono = true;
            for (int n = 2; n <= 5; ++n) {
                const RhoStar rho = rho_star(ball, n);
                if (rho.value < prev - 1e-12) res.mono = false;
                prev = rho.value;
                if (n == 5) res.cosh5 = rho.cosh_value;
            }
            res.bound = c_star_bound(sig, canonical_l0(sig));
        } catch (const std::exception& e) {
            res.err = e.what();
        }
        return res;
    };
    const std::vector<SigRho> rows = parallel_map<SigRho>(sigs, run_one);

    int bad = 0;
    std::string first;
    for (const SigRho& r : rows) {
        const bool is_exc = exceptional.count(format_sig(r.sig)) > 0;
        std::string problem;
        if (!r.err.empty())
            problem = r.err;
        else if (!r.mono)
            problem = "radii not monotone";
        else if (!is_exc && !(r.cosh5 > r.bound))
            problem = "cosh rho*(5) " + fmt(r.cosh5) + " <= bound " +
                      fmt(r.bound);
        std::cerr << "  [criterion 5] " << format_sig(r.sig) << " cosh rho*(5) "
                  << fmt(r.cosh5) << (r.cosh5 > r.bound ? " > " : " <= ")
                  << fmt(r.bound) << (is_exc ? " (exceptional)" : "")
                  << (problem.empty() ? "" : "  <-- " + problem) << "\n";
        if (!problem.empty()) {
            ++bad;
            if (first.empty()) first = format_sig(r.sig) + ": " + problem;
        }
    }

    // The (3,3,q) family radius matches the closed polynomial in Z.
    double worst_poly = 0.0;
    for (int q = 6; q <= 12; ++q) {
        const Signature sig{3, 3, q};
        const StarBall ball = build_star_ball(realize(sig), 5);
        const double graph5 = rho_star(ball, 5).cosh_value;
        const double z = std::cos(kPi / q);
        const double poly = ((((16 * z + 8) * z - 12) * z - 2) * z + 3) * z + 0.5;
        worst_poly = std::max(worst_poly, std::fabs(graph5 - poly));
        worst_poly = std::max(worst_poly, std::fabs(rho5_poly_33(z) - poly));
    }

    Outcome out;
    out.pass = bad == 0 && worst_poly <= 1e-9;
    out.detail = std::to_string(sigs.size()) +
                 " signatures monotone and above the collar bound (3 "
                 "exceptions reported), (3,3,q) q=6..12 polynomial err " +
                 fmt(worst_poly, "%.2e") + ", tol 1e-9";
    if (!first.empty()) out.detail += "; first: " + first;
    return out;
}

// ---------------------------------------------------------------- criterion 6

Outcome discrepancy_report() {
    const Signature sig{3, 3, 6};
    const double z = std::cos(kPi / 6);
    const double cosh5_poly = rho5_poly_33(z);
    const double cosh5_graph = rho_star(build_star_ball(realize(sig), 5), 5).cosh_value;
    const double bound = c_star_bound(sig, l2prime_33(sig));

    const double e_five = std::fabs(cosh5_poly - 6.0980762113533159);
    const double e_graph = std::fabs(cosh5_graph - cosh5_poly);
    const double e_bound = std::fabs(bound - 7.5853700121653354);

    const auto note = second_length_note(sig);
    const bool noted = note && note->status == "note" &&
                       note->details.find("does not clear") != std::string::npos;
    if (note)
        std::cerr << "  [criterion 6] " << format_sig(sig) << " "
                  << note->details << "\n";

    // The second value itself still survives the enumeration oracle.
    bool second_ok = true;
    std::string second_detail;
    for (int q : {5, 6}) {
        const Signature s{3, 3, q};
        const double l2p = l2prime_33(s);
        BruteForceOptions opt;
        opt.cutoff = l2p + 1e-6;
        opt.max_word = 12;
        opt.conj_depth = 10;
        const SpectrumHead obs = brute_force_head(realize(s), opt);
        if (obs.entries.size() < 2 ||
            std::fabs(obs.entries[1].length - l2p) > 1e-9) {
            second_ok = false;
            second_detail += " " + format_sig(s) + " second value missing";
        }
    }

    Outcome out;
    out.pass = e_five <= 1e-9 && e_graph <= 1e-9 && e_bound <= 1e-9 && noted &&
               second_ok;
    out.detail = "cosh rho*(5) = " + fmt(cosh5_poly) +
                 " (graph agrees to " + fmt(e_graph, "%.1e") +
                 "), seeded bound = " + fmt(bound) +
                 ", inequality fails and is reported deterministically; "
                 "second values confirmed by enumeration at cutoff l2'+1e-6, "
                 "tol 1e-9" + second_detail;
    return out;
}

// ---------------------------------------------------------------- criterion 7

Outcome right_angled_suite() {
    Outcome out;
    out.pass = true;
    std::string problems;

    // Cleared-polynomial gap at q = inf equals 2 cos^2(pi/p) bit for bit.
    for (int p = 6; p <= 10; ++p) {
        const Signature sig{2, p, Signature::inf};
        const double gap = r2_quantities(sig).gap_at_infinity;
        const double y = std::cos(kPi / p);
        if (gap != 2.0 * (y * y)) {
            out.pass = false;
            problems += " gap(p=" + std::to_string(p) + ") " +
                        fmt(gap, "%.17g") + " != " + fmt(2.0 * (y * y), "%.17g");
        }
    }

    const R2Quantities big = r2_quantities(Signature{2, 10, 10});
    if (!(big.cosh_rho3 > big.cosh_C_l2_1_qm1)) {
        out.pass = false;
        problems += " (2,10,10) rho3 bound violated";
    }

    const std::vector<Signature> sigs{Signature{2, 4, 5}, Signature{2, 4, 6},
                                      Signature{2, 5, 5}, Signature{2, 3, 7},
                                      Signature{2, 3, 8}};
    for (const Signature& sig : sigs) {
        const SpectrumHead pred = predicted_head(sig);
        const size_t idx = pred.entries.size() >= 2 ? 1 : 0;
        BruteForceOptions opt;
        opt.cutoff = pred.entries[idx].length + 1e-6;
        opt.max_word = 12;
        opt.conj_depth = 10;
        const TriangleRealization tr = realize(sig);
        const SpectrumHead obs = brute_force_head(tr, opt);
        const ValidationReport vr = cross_validate(pred, obs, opt.cutoff, 1e-9);
        for (const std::string& line : vr.lines)
            std::cerr << "  [criterion 7] " << format_sig(sig) << " " << line
                      << "\n";
        if (!vr.ok) {
            out.pass = false;
            problems += " " + format_sig(sig) + " head mismatch";
            // When the observed first class merges with its inverse, name the
            // conjugating word so the discrepancy is reproducible by hand.
            if (!obs.entries.empty() &&
                !obs.entries.front().representatives.empty()) {
                const Motion g = word_motion(
                    tr, obs.entries.front().representatives.front());
                const ConjugacyResult ic =
                    is_conjugate(tr, g, g.inverse().normalized(), opt.conj_depth);
                if (ic.yes)
                    problems += " (" + obs.entries.front().representatives.front() +
                                " is conjugate to its inverse via " + ic.witness +
                                ")";
            }
        }
    }

    out.detail = "cleared gap exact for p=6..10, (2,10,10) inequality holds, "
                 "five enumerated heads match at cutoff second value + 1e-6, "
                 "tol 1e-9";
    if (!problems.empty()) out.detail += ";" + problems;
    return out;
}

// ---------------------------------------------------------------- criterion 8

struct MKey {
    std::array<long long, 4> k{};
    bool operator==(const MKey& o) const { return k == o.k; }
};
struct MKeyHash {
    size_t operator()(const MKey& m) const {
        size_t h = 1469598103934665603ull;
        for (long long v : m.k) {
            h ^= static_cast<size_t>(v);
            h *= 1099511628211ull;
        }
        return h;
    }
};

MKey key_of(const Motion& m, double scale) {
    const Motion n = m.normalized();
    return MKey{{std::llround(n.a * scale), std::llround(n.b * scale),
                 std::llround(n.c * scale), std::llround(n.d * scale)}};
}

Outcome index_two_embedding() {
    struct Pair {
        Signature child, parent;
    };
    const std::vector<Pair> pairs{{Signature{3, 4, 4}, Signature{2, 4, 6}},
                                  {Signature{4, 4, 4}, Signature{2, 4, 8}},
                                  {Signature{5, 5, 5}, Signature{2, 5, 10}},
                                  {Signature{3, 5, 5}, Signature{2, 5, 6}}};
    Outcome out;
    out.pass = true;
    std::string detail;

    for (const Pair& pr : pairs) {
        const TriangleRealization par = realize(pr.parent);

        // Child generators inside the parent frame: the doubled triangle has
        // its order-r vertex at the parent 2r-vertex and its two order-p
        // vertices mirror-imaged across the parent side joining the 2r- and
        // 2-vertices.
        const Motion gen_a = (par.gen_q * par.gen_q).normalized();
        const Motion gen_b = par.gen_p.normalized();
        const Motion mirror = reflect(par.side_c);
        const Motion gen_c = (mirror * par.gen_p * mirror).normalized();

        // Express the mirrored rotation as a short parent word.
        const std::string letters = "RPQrpq";
        std::string gen_c_word;
        for (char u : letters) {
            for (char v : letters) {
                const std::string w{u, v};
                if (motions_equal(word_motion(par, w), gen_c, 1e-10)) {
                    gen_c_word = w;
                    break;
                }
            }
            if (!gen_c_word.empty()) break;
        }
        if (gen_c_word.empty()) {
            out.pass = false;
            detail += " " + format_sig(pr.child) +
                      ": mirrored generator not a length-2 parent word;";
            continue;
        }
        const auto flip = [](char ch) {
            const unsigned char u = static_cast<unsigned char>(ch);
            return static_cast<char>(std::isupper(u) ? std::tolower(u)
                                                     : std::toupper(u));
        };
        std::map<char, std::string> to_parent;
        to_parent['R'] = "QQ";
        to_parent['r'] = "qq";
        to_parent['P'] = "P";
        to_parent['p'] = "p";
        to_parent['Q'] = gen_c_word;
        to_parent['q'] = std::string{flip(gen_c_word[1]), flip(gen_c_word[0])};

        // Breadth-first child ball on words of length <= 8.
        struct Node {
            Motion m;
            std::string word;
        };
        const std::array<std::pair<char, Motion>, 6> gens{
            {{'R', gen_a},
             {'P', gen_b},
             {'Q', gen_c},
             {'r', gen_a.inverse().normalized()},
             {'p', gen_b.inverse().normalized()},
             {'q', gen_c.inverse().normalized()}}};
        std::unordered_map<MKey, int, MKeyHash> seen;
        std::vector<Node> elements{{Motion::identity(), ""}};
        seen.emplace(key_of(Motion::identity(), 1e9), 0);
        size_t begin = 0;
        for (int len = 1; len <= 8; ++len) {
            const size_t end = elements.size();
            for (size_t i = begin; i < end; ++i)
                for (const auto& [letter, gm] : gens) {
                    const Motion next = (elements[i].m * gm).normalized();
                    const MKey k = key_of(next, 1e9);
                    if (seen.count(k)) continue;
                    seen.emplace(k, static_cast<int>(elements.size()));
                    elements.push_back(Node{next, elements[i].word + letter});
                }
            begin = end;
        }

        size_t matched = 0;
        for (const Node& el : elements) {
            std::string parent_word;
            for (char ch : el.word) parent_word += to_parent[ch];
            // Entries grow like cosh of the translation length, so the
            // tolerance is taken relative to the largest entry.
            const Motion a = word_motion(par, parent_word).normalized();
            const Motion& b = el.m;
            const double same =
                std::max({std::fabs(a.a - b.a), std::fabs(a.b - b.b),
                          std::fabs(a.c - b.c), std::fabs(a.d - b.d)});
            const double flipped =
                std::max({std::fabs(a.a + b.a), std::fabs(a.b + b.b),
                          std::fabs(a.c + b.c), std::fabs(a.d + b.d)});
            const double scale =
                1.0 + std::max({std::fabs(b.a), std::fabs(b.b), std::fabs(b.c),
                                std::fabs(b.d)});
            if (std::min(same, flipped) <= 1e-8 * scale) ++matched;
        }
        if (matched != elements.size()) out.pass = false;
        detail += " " + format_sig(pr.child) + "->" + format_sig(pr.parent) +
                  " " + std::to_string(matched) + "/" +
                  std::to_string(elements.size()) + " matched;";
    }

    out.detail = "child words <= 8 rewritten as parent words, matrix match "
                 "tol 1e-8 at entry scale:" + detail;
    return out;
}

// ---------------------------------------------------------------- criterion 9

// Depth-10 conjugacy via two half-depth orbit sets: w g w^-1 = h for some
// |w| <= 10 iff the length-5 orbit of g meets the length-5 co-orbit of h.
bool conjugate_within_10(const BallResult& half_ball, const Motion& g,
                         const Motion& h) {
    std::unordered_map<MKey, int, MKeyHash> orbit;
    std::vector<Motion> motions;
    for (const GroupElement& w : half_ball.elements) {
        const Motion conj = (w.m * g * w.m.inverse()).normalized();
        const MKey k = key_of(conj, 1e6);
        if (!orbit.count(k)) {
            orbit.emplace(k, static_cast<int>(motions.size()));
            motions.push_back(conj);
        }
    }
    for (const GroupElement& w : half_ball.elements) {
        const Motion target = (w.m.inverse() * h * w.m).normalized();
        const MKey base = key_of(target, 1e6);
        for (int da = -1; da <= 1; ++da)
            for (int db = -1; db <= 1; ++db)
                for (int dc = -1; dc <= 1; ++dc)
                    for (int dd = -1; dd <= 1; ++dd) {
                        MKey k = base;
                        k.k[0] += da;
                        k.k[1] += db;
                        k.k[2] += dc;
                        k.k[3] += dd;
                        const auto it = orbit.find(k);
                        if (it != orbit.end() &&
                            motions_equal(motions[static_cast<size_t>(
                                              it->second)],
                                          target, 1e-6))
                            return true;
                    }
    }
    return false;
}

Outcome parity_lemma() {
    Outcome out;
    out.pass = true;
    std::string detail;

    // Odd orders: nothing in the head window is conjugate to its inverse.
    {
        const Signature sig{3, 5, 7};
        const TriangleRealization tr = realize(sig);
        BruteForceOptions opt;
        opt.cutoff = canonical_l0(sig) + 1e-6;
        opt.max_word = 12;
        opt.conj_depth = 10;
        const SpectrumHead obs = brute_force_head(tr, opt);
        BallOptions half;
        half.max_word = 5;
        const BallResult half_ball = enumerate_ball(tr, half);
        int classes = 0, conj_inverse = 0;
        for (const SpectrumEntry& e : obs.entries)
            for (const std::string& w : e.representatives) {
                ++classes;
                const Motion g = word_motion(tr, w);
                if (conjugate_within_10(half_ball, g, g.inverse().normalized()))
                    ++conj_inverse;
            }
        if (classes == 0 || conj_inverse != 0) out.pass = false;
        detail += " (3,5,7): " + std::to_string(classes) +
                  " classes <= l3, none conjugate to its inverse;";
    }

    // Even order: the l2(1,5) class meets its inverse and an even vertex.
    {
        const Signature sig{2, 4, 6};
        const TriangleRealization tr = realize(sig);
        const double target = r2_l2(sig, 1, 5);
        BruteForceOptions opt;
        opt.cutoff = target + 1e-6;
        opt.max_word = 12;
        opt.conj_depth = 10;
        const SpectrumHead obs = brute_force_head(tr, opt);
        std::string word;
        for (const SpectrumEntry& e : obs.entries)
            if (std::fabs(e.length - target) <= 1e-9 &&
                !e.representatives.empty())
                word = e.representatives.front();
        if (word.empty()) {
            out.pass = false;
            detail += " (2,4,6): l2(1,5) class not found;";
        } else {
            const GroupElement g{word_motion(tr, word), word};
            BallOptions half;
            half.max_word = 5;
            const BallResult half_ball = enumerate_ball(tr, half);
            const bool self_inv =
                conjugate_within_10(half_ball, g.m, g.m.inverse().normalized());
            const bool through_even = axis_through_even_vertex(tr, g, 6);
            if (!self_inv || !through_even) out.pass = false;
            detail += " (2,4,6): l2(1,5) conjugate to inverse " +
                      std::string(self_inv ? "yes" : "NO") +
                      ", axis through even vertex " +
                      std::string(through_even ? "yes" : "NO") + ";";
        }
    }

    out.detail = "conjugator depth 10 (split 5+5):" + detail;
    return out;
}

// --------------------------------------------------------------- criterion 10

bool excluded_near(const std::string& type, double x, double y, double z,
                   double eps) {
    std::vector<std::array<double, 3>> pts{
        {0.5, std::sqrt(0.5), std::sqrt(0.5)},
        {std::sqrt(0.5), std::sqrt(0.5), std::sqrt(0.5)},
        {std::cos(kPi / 5), std::cos(kPi / 5), std::cos(kPi / 5)}};
    int run = 1, max_run = 1;
    for (size_t i = 1; i < type.size(); ++i) {
        run = type[i] == type[i - 1] ? run + 1 : 1;
        max_run = std::max(max_run, run);
    }
    if (max_run == 1) pts.push_back({0.5, 0.5, 0.5});
    for (const auto& p : pts)
        if (std::fabs(x - p[0]) <= eps && std::fabs(y - p[1]) <= eps &&
            std::fabs(z - p[2]) <= eps)
            return true;
    return false;
}

Outcome certifier_suite() {
    Outcome out;
    out.pass = true;
    std::string detail;

    // Two factored ordering claims with their declared zero sets.
    const auto t0 = std::chrono::steady_clock::now();
    const Poly3 x = Poly3::x(), y = Poly3::y(), z = Poly3::z();
    const Poly3 one(1.0);
    CertOptions copt;
    copt.eps = 1e-3;
    copt.max_depth = 40;
    const CertVerdict va = certify_positive(
        product_expr(poly_expr(2.0 * y - one), poly_expr(z - x)), Box{},
        {Exclusion::plane_y(0.5), Exclusion::eq_xz()}, copt);
    const CertVerdict vb = certify_positive(
        product_expr(poly_expr(2.0 * z - one), poly_expr(y - x)), Box{},
        {Exclusion::plane_z(0.5), Exclusion::eq_xy()}, copt);
    const double poly_dt = seconds_since(t0);
    if (!va.positive() || !vb.positive() || poly_dt >= 10.0) out.pass = false;
    detail += " ordering factorizations " +
              std::string(va.positive() && vb.positive() ? "positive" : "NOT positive") +
              " in " + fmt(poly_dt, "%.2f") + " s (eps 1e-3, limit 10 s);";

    // Full level-5 certificate across the eighteen studied walk types.
    const auto t1 = std::chrono::steady_clock::now();
    const CertReport rep = rho5_certificate(Box{}, 1e-3, 40, job_count());
    const double cert_dt = seconds_since(t1);
    int positive = 0;
    for (const TypeVerdict& tv : rep.types) {
        if (tv.verdict.positive()) ++positive;
        std::cerr << "  [criterion 10] type " << tv.type << ": "
                  << tv.verdict.to_string() << "\n";
    }
    if (!rep.all_positive) out.pass = false;
    detail += " level-5 certificate " + std::to_string(positive) + "/" +
              std::to_string(rep.types.size()) + " types positive in " +
              fmt(cert_dt, "%.1f") + " s;";

    // The alternating type must refuse near each exceptional point.
    const std::vector<std::array<double, 3>> exc{
        {0.5, std::sqrt(0.5), std::sqrt(0.5)},
        {std::sqrt(0.5), std::sqrt(0.5), std::sqrt(0.5)},
        {std::cos(kPi / 5), std::cos(kPi / 5), std::cos(kPi / 5)}};
    int refused = 0;
    for (const auto& p : exc) {
        Box tiny;
        tiny.X = Interval{p[0] - 1e-3, p[0] + 1e-3};
        tiny.Y = Interval{p[1] - 1e-3, p[1] + 1e-3};
        tiny.Z = Interval{p[2] - 1e-3, p[2] + 1e-3};
        CertOptions shallow;
        shallow.eps = 1e-5;
        shallow.max_depth = 12;
        if (!certify_positive(rho5_type_expr("rprpr"), tiny, {}, shallow)
                 .positive())
            ++refused;
    }
    if (refused != 3) out.pass = false;
    detail += " alternating type non-positive at " + std::to_string(refused) +
              "/3 exceptional boxes;";

    // Soundness sampling: certified regions never dip to zero.
    std::vector<std::string> positive_types;
    for (const TypeVerdict& tv : rep.types)
        if (tv.verdict.positive()) positive_types.push_back(tv.type);
    std::mt19937 rng(12345u);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    long tested = 0, violations = 0;
    const long goal = 100000;
    while (tested < goal && !positive_types.empty()) {
        const double px = 0.5 + 0.5 * u(rng);
        const double py = px + (1.0 - px) * u(rng);
        const double pz = py + (0.999 - py) * u(rng);
        if (pz <= py) continue;
        std::vector<const std::string*> eligible;
        for (const std::string& t : positive_types) {
            const Box dom = rho5_type_domain(t, Box{}, 1e-3);
            if (dom.X.contains(px) && dom.Y.contains(py) && dom.Z.contains(pz) &&
                !excluded_near(t, px, py, pz, 1.05e-3))
                eligible.push_back(&t);
        }
        if (eligible.empty()) continue;
        const std::string& type =
            *eligible[static_cast<size_t>(tested) % eligible.size()];
        Box pt;
        pt.X = Interval{px, px};
        pt.Y = Interval{py, py};
        pt.Z = Interval{pz, pz};
        try {
            if (rho5_type_expr(type)(pt).lo <= 0.0) ++violations;
            ++tested;
        } catch (const std::domain_error&) {
            // A refusing evaluation is not a bound violation.
            ++tested;
        }
    }
    if (violations != 0) out.pass = false;
    detail += " sampling " + std::to_string(tested) + " points, " +
              std::to_string(violations) + " below a certified bound";

    out.detail = detail;
    return out;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Outcome()> fn;
    };
    const std::vector<Criterion> criteria{
        {"closed-form identity suite", identity_suite},
        {"expanded collar bound limit 37", limit_37},
        {"second-value collar bound table", cstar_table},
        {"enumeration oracle vs predicted heads", oracle_grid},
        {"graph radii monotone and above collar bound", rho_monotone_gap},
        {"(3,3,6) bound discrepancy report", discrepancy_report},
        {"right-angled layer suite", right_angled_suite},
        {"index-2 embedding", index_two_embedding},
        {"inverse-conjugacy parity", parity_lemma},
        {"interval certifier suite", certifier_suite},
    };

    int failures = 0;
    for (size_t i = 0; i < criteria.size(); ++i) {
        Outcome out;
        try {
            out = criteria[i].fn();
        } catch (const std::exception& e) {
            out.pass = false;
            out.detail = std::string("exception: ") + e.what();
        }
        if (!out.pass) ++failures;
        std::printf("criterion %02zu %s: %s (%s)\n", i + 1, criteria[i].name,
                    out.pass ? "PASS" : "FAIL", out.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("acceptance: %zu/%zu criteria passed\n",
                criteria.size() - static_cast<size_t>(failures),
                criteria.size());
    return failures;
}
