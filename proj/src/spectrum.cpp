#include "trispec/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <cstring>
#include <optional>
#include <sstream>
#include <unordered_map>

namespace trispec {

namespace {

SpectrumEntry make_entry(double len, int mult, Exactness ex,
                         std::vector<std::string> reps) {
    SpectrumEntry e;
    e.length = len;
    e.multiplicity = mult;
    e.exactness = ex;
    e.representatives = std::move(reps);
    return e;
}

void r2_head(const Signature& sig, SpectrumHead& out) {
    const int p = sig.p, q = sig.q;
    const bool fin = sig.finite_q();
    const CosTriple t = cos_params(sig);
    // At q = inf the indexed forms degenerate; the polynomial values stay
    // valid there for the entries the head actually uses.
    auto l1k = [&](int k) {
        if (fin) return r2_l1(sig, k);
        if (k == 2) return 2.0 * std::acosh(r2_l1_2_value(t));
        if (k == 3) return 2.0 * std::acosh(r2_l1_3_value(t));
        throw std::domain_error("l1(k) at q = inf is only tabulated for k = 2, 3");
    };
    auto l2kk = [&](int k1, int k2) { return r2_l2(sig, k1, k2); };
    auto l2_12 = [&]() {
        if (fin) return r2_l2(sig, 1, 2);
        return 2.0 * std::acosh(r2_l2_12_value(t));
    };

    if (p == 3) {
        if (!fin)
            throw std::domain_error(
                "the (2,3,q) head is only established for finite q >= 7");
        // Smallest length comes from the level-2 family; the head is open
        // beyond the listed values.
        out.entries.push_back(
            make_entry(l2kk(1, q - 1), 1, Exactness::Exact, {"l2(1,q-1)"}));
        if (fin && q >= 8)
            out.entries.push_back(make_entry(l1k(4), 1, Exactness::AtLeast, {"l1(4)"}));
        out.note = (fin && q >= 8) ? "head through the second listed value"
                                   : "only the smallest value is established";
        return;
    }

    out.entries.push_back(make_entry(l1k(2), 2, Exactness::Exact, {"l1(2)"}));
    if (p == 4) {
        if (fin && (q == 6 || q == 7))
            out.entries.push_back(make_entry(l1k(3), 1, Exactness::AtLeast, {"l1(3)"}));
        if (fin)
            out.entries.push_back(
                make_entry(l2kk(1, q - 1), 1, Exactness::Exact, {"l2(1,q-1)"}));
        out.note = "head through l2(1,q-1)";
        return;
    }
    if (p == 5) {
        if (fin && q == 5) {
            out.entries.push_back(
                make_entry(l2kk(1, 4), 1, Exactness::Exact, {"l2(1,4)"}));
            out.note = "head through l2(1,4)";
        } else {
            out.entries.push_back(
                make_entry(l2_12(), 1, Exactness::AtLeast, {"l2(1,2)"}));
            out.note = "second value established";
        }
        return;
    }
    if (p <= 10) {
        if (!fin || (p == 10 && q == 10)) {
            out.entries.push_back(
                make_entry(l2_12(), 1, Exactness::AtLeast, {"l2(1,2)"}));
            out.note = "second value established";
        } else {
            out.note = "only the smallest value is established";
        }
        return;
    }
    out.entries.push_back(make_entry(l2_12(), 1, Exactness::AtLeast, {"l2(1,2)"}));
    out.note = "second value established";
}

}  // namespace

SpectrumHead predicted_head(const Signature& sig) {
    require_admissible(sig);
    SpectrumHead out;
    out.sig = sig;
    out.complete = false;

    if (sig.r == 2) {
        r2_head(sig, out);
        return out;
    }

    const HeadFormulas hf = head_formulas(sig);
    if (sig.r == 3 && sig.p == 3) {
        out.entries.push_back(make_entry(hf.l1, 2, Exactness::AtLeast, {"l1"}));
        if (sig.finite_q() && (sig.q == 5 || sig.q == 6)) {
            out.entries.push_back(
                make_entry(l2prime_33(sig), 2, Exactness::AtLeast, {"l2'"}));
            out.note = "second value established";
        } else {
            out.note = "only the smallest value is established";
        }
        return out;
    }
    if (sig.r == 3 && sig.p == 4 && sig.q == 4) {
        out.entries.push_back(make_entry(hf.l1, 2, Exactness::AtLeast, {"l1"}));
        out.entries.push_back(make_entry(hf.l3, 1, Exactness::AtLeast, {"l3"}));
        out.note = "nothing lies strictly between the two values";
        return out;
    }
    if (sig.r == 3) {
        out.entries.push_back(make_entry(hf.l1, 2, Exactness::Exact, {"l1"}));
        out.entries.push_back(make_entry(hf.l3, 1, Exactness::AtLeast, {"l3"}));
        out.note = "head through l3";
        return out;
    }

    const bool rp = (sig.r == sig.p);
    const bool pq = sig.finite_q() && (sig.p == sig.q);
    if (rp && pq) {
        out.entries.push_back(
            make_entry(hf.l1, 5, Exactness::AtLeast, {"l1=l2=l3"}));
        out.note = "all three closed forms coincide";
    } else if (rp) {
        out.entries.push_back(make_entry(hf.l1, 2, Exactness::Exact, {"l1"}));
        out.entries.push_back(make_entry(hf.l2, 3, Exactness::AtLeast, {"l2=l3"}));
        out.note = "head through l2=l3";
    } else if (pq) {
        out.entries.push_back(make_entry(hf.l1, 4, Exactness::Exact, {"l1=l2"}));
        out.entries.push_back(make_entry(hf.l3, 1, Exactness::AtLeast, {"l3"}));
        out.note = "head through l3";
    } else {
        out.entries.push_back(make_entry(hf.l1, 2, Exactness::Exact, {"l1"}));
        out.entries.push_back(make_entry(hf.l2, 2, Exactness::Exact, {"l2"}));
        out.entries.push_back(make_entry(hf.l3, 1, Exactness::AtLeast, {"l3"}));
        out.note = "head through l3";
    }
    return out;
}

namespace {

struct OrbKey {
    int64_t k[4];
    bool rev;
    bool operator==(const OrbKey& o) const {
        return rev == o.rev && std::memcmp(k, o.k, sizeof k) == 0;
    }
};

struct OrbKeyHash {
    size_t operator()(const OrbKey& key) const {
        uint64_t h = key.rev ? 0x9e3779b97f4a7c15ull : 0x2545f4914f6cdd1dull;
        for (int64_t v : key.k) {
            h ^= static_cast<uint64_t>(v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
        }
        return static_cast<size_t>(h);
    }
};

// Rounds matrix entries to a 1e-6 grid. Entries too large to round safely
// belong to conjugates whose axes are far away; those can never match a
// candidate, so they are dropped.
std::optional<OrbKey> orb_key(const Motion& m) {
    const double e[4] = {m.a, m.b, m.c, m.d};
    OrbKey key;
    key.rev = m.reversing;
    for (int i = 0; i < 4; ++i) {
        if (std::fabs(e[i]) > 1e6) return std::nullopt;
        key.k[i] = llround(e[i] * 1e6);
    }
    return key;
}

struct ConjClass {
    std::string word;
    double length = 0.0;
    std::unordered_map<OrbKey, Motion, OrbKeyHash> orbit;
};

void insert_orbit(ConjClass& cls, const Motion& m) {
    const Motion n = m.normalized();
    if (auto key = orb_key(n)) cls.orbit.emplace(*key, n);
    const Motion neg{-n.a, -n.b, -n.c, -n.d, n.reversing};
    if (auto key = orb_key(neg)) cls.orbit.emplace(*key, neg);
}

bool orbit_contains(const ConjClass& cls, const Motion& m) {
    const Motion n = m.normalized();
    const auto base = orb_key(n);
    if (!base) return false;
    OrbKey probe = *base;
    for (int d0 = -1; d0 <= 1; ++d0)
        for (int d1 = -1; d1 <= 1; ++d1)
            for (int d2 = -1; d2 <= 1; ++d2)
                for (int d3 = -1; d3 <= 1; ++d3) {
                    probe.k[0] = base->k[0] + d0;
                    probe.k[1] = base->k[1] + d1;
                    probe.k[2] = base->k[2] + d2;
                    probe.k[3] = base->k[3] + d3;
                    const auto it = cls.orbit.find(probe);
                    if (it != cls.orbit.end() && motions_equal(it->second, n, 1e-6))
                        return true;
                }
    return false;
}

}  // namespace

SpectrumHead brute_force_head(const TriangleRealization& tr,
                              const BruteForceOptions& opt) {
    if (opt.cutoff <= 0.0) throw std::invalid_argument("cutoff must be positive");
    if (opt.max_word > opt.word_cap || opt.conj_depth > opt.word_cap)
        throw ResourceCap("word length " +
                          std::to_string(std::max(opt.max_word, opt.conj_depth)) +
                          " exceeds the cap of " + std::to_string(opt.word_cap));
    SpectrumHead out;
    out.sig = tr.sig;

    std::ostringstream note;
    note << "words up to " << opt.max_word << ", conjugator depth "
         << opt.conj_depth;

    BallOptions bopt;
    bopt.max_word = opt.max_word;
    double displacement_bound = 0.0;
    if (opt.prune && tr.sig.finite_q()) {
        // Any hyperbolic motion translating by at most the cutoff has a
        // conjugate whose axis passes within c_T of the incenter, where c_T
        // is the circumscribing radius of the tile. At distance rho from the
        // axis a point moves by cosh d = 1 + cosh^2(rho)(cosh l - 1).
        const double c_t = std::max(
            {dist(tr.incenter, tr.v_r), dist(tr.incenter, tr.v_p),
             dist(tr.incenter, tr.v_q)});
        const double ch = std::cosh(c_t);
        displacement_bound =
            std::acosh(ch * ch * (std::cosh(opt.cutoff) - 1.0) + 1.0) + 1e-6;
        bopt.prune_displacement = displacement_bound;
        note << ", displacement bound " << displacement_bound;
    } else {
        note << ", no displacement pruning";
    }

    const BallResult ball = enumerate_ball(tr, bopt);
    out.complete = ball.frontier_exhausted;
    out.note = note.str();

    struct Cand {
        Motion m;
        std::string word;
        double length;
    };
    std::vector<Cand> cands;
    for (const GroupElement& ge : ball.elements) {
        const MotionClass mc = classify(ge.m);
        if (mc.kind != MotionKind::Hyperbolic) continue;
        if (mc.length > opt.cutoff + 1e-9) continue;
        cands.push_back(Cand{ge.m, ge.word, mc.length});
    }
    std::sort(cands.begin(), cands.end(), [](const Cand& a, const Cand& b) {
        if (a.length != b.length) return a.length < b.length;
        if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
        return a.word < b.word;
    });
    if (cands.empty()) return out;

    BallOptions copt;
    copt.max_word = opt.conj_depth;
    if (displacement_bound > 0.0) {
        // A conjugator can always be slid along the candidate axes, so ones
        // moving the incenter much further than the candidates do are
        // redundant. The slack keeps the bound generous.
        copt.prune_displacement = displacement_bound + opt.cutoff + 2.0;
    }
    const BallResult conj = enumerate_ball(tr, copt);

    size_t i = 0;
    while (i < cands.size()) {
        size_t j = i;
        while (j < cands.size() && cands[j].length - cands[i].length <= 1e-8) ++j;

        std::vector<ConjClass> classes;
        for (size_t k = i; k < j; ++k) {
            bool placed = false;
            for (const ConjClass& cls : classes)
                if (orbit_contains(cls, cands[k].m)) {
                    placed = true;
                    break;
                }
            if (placed) continue;
            ConjClass cls;
            cls.word = cands[k].word;
            cls.length = cands[k].length;
            for (const GroupElement& w : conj.elements)
                insert_orbit(cls, (w.m * cands[k].m) * w.m.inverse());
            classes.push_back(std::move(cls));
        }

        SpectrumEntry e;
        e.length = cands[i].length;
        e.multiplicity = static_cast<int>(classes.size());
        e.exactness = Exactness::Exact;  // exact count of what was observed
        for (const ConjClass& cls : classes) {
            if (e.representatives.size() >= 6) break;
            e.representatives.push_back(cls.word);
        }
        out.entries.push_back(std::move(e));
        i = j;
    }
    return out;
}

ValidationReport cross_validate(const SpectrumHead& predicted,
                                const SpectrumHead& observed, double cutoff,
                                double tol) {
    ValidationReport rep;
    std::ostringstream line;
    size_t pos = 0;
    for (const SpectrumEntry& pe : predicted.entries) {
        if (pe.length > cutoff) break;
        line.str("");
        line.precision(12);
        if (pos >= observed.entries.size()) {
            line << "missing observed value near " << pe.length << " ("
                 << (pe.representatives.empty() ? "?" : pe.representatives[0])
                 << ") [MISMATCH]";
            rep.ok = false;
            rep.lines.push_back(line.str());
            ++pos;
            continue;
        }
        const SpectrumEntry& oe = observed.entries[pos];
        const bool value_ok = std::fabs(oe.length - pe.length) <= tol;
        const bool mult_ok = (pe.exactness == Exactness::Exact)
                                 ? oe.multiplicity == pe.multiplicity
                                 : oe.multiplicity >= pe.multiplicity;
        line << "value " << pos << ": expected " << pe.length
             << (pe.exactness == Exactness::Exact ? " x" : " x>=")
             << pe.multiplicity << ", observed " << oe.length << " x"
             << oe.multiplicity << (value_ok && mult_ok ? " [ok]" : " [MISMATCH]");
        if (!(value_ok && mult_ok)) rep.ok = false;
        rep.lines.push_back(line.str());
        ++pos;
    }
    return rep;
}

}  // namespace trispec
