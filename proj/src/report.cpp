#include "trispec/report.hpp"

#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace trispec {

namespace {

using nlohmann::json;

// Stable 12-significant-digit representation: round through text so that
// identical configurations always serialize byte for byte.
double round12(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return std::strtod(buf, nullptr);
}

std::string fmt(double v, const char* spec) {
    char buf[48];
    std::snprintf(buf, sizeof buf, spec, v);
    return buf;
}

std::string fmt7(double v) { return fmt(v, "%.7g"); }
std::string fmt8(double v) { return fmt(v, "%.8g"); }
std::string fmt9(double v) { return fmt(v, "%.9g"); }

const char* exactness_str(Exactness e) {
    return e == Exactness::Exact ? "exact" : "at_least";
}

json sig_json(const Signature& sig) {
    json j;
    j["r"] = sig.r;
    j["p"] = sig.p;
    if (sig.finite_q())
        j["q"] = sig.q;
    else
        j["q"] = "inf";
    return j;
}

json head_json(const SpectrumHead& head) {
    json entries = json::array();
    for (const SpectrumEntry& e : head.entries) {
        json je;
        je["length"] = round12(e.length);
        je["multiplicity"] = e.multiplicity;
        je["exactness"] = exactness_str(e.exactness);
        je["source"] = e.representatives.empty() ? "" : e.representatives[0];
        entries.push_back(je);
    }
    return entries;
}

const char* format_str(OutputFormat f) {
    switch (f) {
        case OutputFormat::Text: return "text";
        case OutputFormat::Json: return "json";
        case OutputFormat::Csv: return "csv";
    }
    return "text";
}

json config_json(const RunConfig& c) {
    json j;
    j["cutoff"] = round12(c.cutoff);
    j["max_word"] = c.max_word;
    j["conj_depth"] = c.conj_depth;
    j["ball_radius"] = c.ball_radius;
    j["eps"] = round12(c.eps);
    j["depth"] = c.depth;
    j["jobs"] = c.jobs;
    j["seed"] = c.seed;
    j["format"] = format_str(c.format);
    return j;
}

struct FormsRow {
    std::string name;
    double value;
};

std::vector<FormsRow> forms_rows(const Signature& sig) {
    const CosTriple t = cos_params(sig);
    std::vector<FormsRow> rows = {{"X", t.X}, {"Y", t.Y}, {"Z", t.Z},
                                  {"Delta", big_delta(t)}};
    const SideCoshes sc = side_coshes(sig);
    rows.push_back({"cosh_a", sc.cosh_a});
    rows.push_back({"cosh_b", sc.cosh_b});
    rows.push_back({"cosh_c", sc.cosh_c});
    const ContactData cd = contact_data(sig);
    rows.push_back({"sinh2_dr", cd.sinh2_dr});
    rows.push_back({"sinh2_dp", cd.sinh2_dp});
    rows.push_back({"sinh2_dq", cd.sinh2_dq});
    rows.push_back({"cosh_pq", cd.cosh_pq});
    rows.push_back({"cosh_rp", cd.cosh_rp});
    rows.push_back({"cosh_qr", cd.cosh_qr});
    rows.push_back({"cosh_cstar", cd.cosh_cstar});
    const LTable lt = l_table(t);
    for (int i = 0; i < LTable::size; ++i)
        rows.push_back({"L" + std::to_string(i), lt[i]});
    return rows;
}

}  // namespace

std::string version() { return "0.1.0"; }

std::string q_string(const Signature& sig) {
    return sig.finite_q() ? std::to_string(sig.q) : std::string("inf");
}

std::string format_sig(const Signature& sig) {
    return "(" + std::to_string(sig.r) + "," + std::to_string(sig.p) + "," +
           q_string(sig) + ")";
}

std::string render_head_text(const HeadReport& rep) {
    std::ostringstream os;
    os << "signature " << format_sig(rep.sig) << "\n";
    os << "predicted head (" << rep.predicted.note << "):\n";
    for (const SpectrumEntry& e : rep.predicted.entries) {
        os << "  " << fmt7(e.length) << "  x"
           << (e.exactness == Exactness::AtLeast ? ">=" : "") << e.multiplicity;
        if (!e.representatives.empty()) os << "  [" << e.representatives[0] << "]";
        os << "\n";
    }
    if (rep.observed) {
        os << "observed head (" << rep.observed->note << "):\n";
        for (const SpectrumEntry& e : rep.observed->entries) {
            os << "  " << fmt7(e.length) << "  x" << e.multiplicity;
            if (!e.representatives.empty()) os << "  [" << e.representatives[0] << "]";
            os << "\n";
        }
    }
    for (const Check& c : rep.checks)
        os << c.name << ": " << c.status << " (" << c.details << ")\n";
    return os.str();
}

std::string render_head_json(const HeadReport& rep) {
    json j;
    j["signature"] = sig_json(rep.sig);
    j["head"] = head_json(rep.predicted);
    if (rep.observed) j["observed"] = head_json(*rep.observed);
    json checks = json::array();
    for (const Check& c : rep.checks) {
        json jc;
        jc["name"] = c.name;
        jc["status"] = c.status;
        jc["details"] = c.details;
        checks.push_back(jc);
    }
    j["checks"] = checks;
    j["meta"]["version"] = version();
    j["meta"]["config"] = config_json(rep.config);
    return j.dump(2) + "\n";
}

std::string render_forms_text(const Signature& sig) {
    std::ostringstream os;
    os << "signature " << format_sig(sig) << "\n";
    for (const auto& row : forms_rows(sig))
        os << "  " << row.name << " = " << fmt7(row.value) << "\n";
    return os.str();
}

std::string render_forms_csv(const Signature& sig) {
    std::ostringstream os;
    os << "name,value\n";
    for (const auto& row : forms_rows(sig))
        os << row.name << "," << fmt9(row.value) << "\n";
    return os.str();
}

std::string render_forms_json(const Signature& sig) {
    json j;
    j["signature"] = sig_json(sig);
    json vals;
    for (const auto& row : forms_rows(sig)) vals[row.name] = round12(row.value);
    j["forms"] = vals;
    j["meta"]["version"] = version();
    return j.dump(2) + "\n";
}

std::string render_cert_text(const CertReport& rep) {
    std::ostringstream os;
    os << "level-5 certificate, eps " << fmt7(rep.eps) << ", depth "
       << rep.max_depth << "\n";
    for (const TypeVerdict& tv : rep.types)
        os << "  " << tv.type << ": " << tv.verdict.to_string() << "\n";
    os << (rep.all_positive ? "all types positive" : "NOT all types positive")
       << "\n";
    return os.str();
}

std::string render_cert_json(const CertReport& rep) {
    json j;
    j["eps"] = round12(rep.eps);
    j["max_depth"] = rep.max_depth;
    json types = json::array();
    for (const TypeVerdict& tv : rep.types) {
        json jt;
        jt["type"] = tv.type;
        switch (tv.verdict.kind) {
            case CertVerdict::Kind::Positive:
                jt["verdict"] = "positive";
                jt["leaves"] = tv.verdict.leaves;
                break;
            case CertVerdict::Kind::FailsAt:
                jt["verdict"] = "fails_at";
                jt["point"] = {round12(tv.verdict.x), round12(tv.verdict.y),
                               round12(tv.verdict.z)};
                break;
            case CertVerdict::Kind::Inconclusive:
                jt["verdict"] = "inconclusive";
                jt["depth"] = tv.verdict.depth;
                break;
        }
        types.push_back(jt);
    }
    j["types"] = types;
    j["all_positive"] = rep.all_positive;
    j["meta"]["version"] = version();
    return j.dump(2) + "\n";
}

std::optional<Check> second_length_note(const Signature& sig) {
    if (sig.r != 3 || sig.p != 3 || (sig.q != 5 && sig.q != 6)) return {};
    const CosTriple c = cos_params(sig);
    const double cosh_rho5 = rho5_poly_33(c.Z);
    const double bound = c_star_bound(sig, l2prime_33(sig));
    Check note;
    note.name = "second_length_bound";
    std::ostringstream os;
    if (cosh_rho5 > bound) {
        note.status = "ok";
        os << "cosh rho*(5) = " << fmt8(cosh_rho5)
           << " clears the collar bound " << fmt8(bound)
           << " seeded with the second value";
    } else {
        note.status = "note";
        os << "cosh rho*(5) = " << fmt8(cosh_rho5)
           << " does not clear the collar bound " << fmt8(bound)
           << " seeded with the second value; the second value rests on the"
              " enumeration check instead";
    }
    note.details = os.str();
    return note;
}

}  // namespace trispec
