#include <fstream>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "trispec/report.hpp"
#include "trispec/star_graph.hpp"

using namespace trispec;

namespace {

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int parse_int(const std::string& s) {
    size_t pos = 0;
    int v = 0;
    try {
        v = std::stoi(s, &pos);
    } catch (const std::exception&) {
        throw UsageError("not an integer: " + s);
    }
    if (pos != s.size()) throw UsageError("not an integer: " + s);
    return v;
}

// Accepts "R P Q" with Q possibly spelled inf; an optional leading mode word
// (e.g. "table", "rho-star") has already been stripped by the caller.
Signature parse_sig(const std::vector<std::string>& args) {
    if (args.size() != 3)
        throw UsageError("expected a signature: R P Q (Q may be inf)");
    Signature sig;
    sig.r = parse_int(args[0]);
    sig.p = parse_int(args[1]);
    sig.q = (args[2] == "inf") ? Signature::inf : parse_int(args[2]);
    require_admissible(sig);
    return sig;
}

std::vector<std::string> strip_mode(std::vector<std::string> args,
                                    const std::string& mode) {
    if (!args.empty() && args.front() == mode) args.erase(args.begin());
    return args;
}

OutputFormat parse_format(const std::string& f) {
    if (f == "text") return OutputFormat::Text;
    if (f == "json") return OutputFormat::Json;
    if (f == "csv") return OutputFormat::Csv;
    throw UsageError("unknown format: " + f);
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot write " + out_path);
    f << text;
}

std::string fmt8(double v) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.8g", v);
    return buf;
}

double default_cutoff(const SpectrumHead& pred) {
    return pred.entries.empty() ? 1.0 : pred.entries.back().length + 1e-6;
}

HeadReport build_head_report(const Signature& sig, const RunConfig& cfg,
                             bool brute) {
    HeadReport rep;
    rep.sig = sig;
    rep.config = cfg;
    rep.predicted = predicted_head(sig);
    const double cutoff =
        cfg.cutoff > 0.0 ? cfg.cutoff : default_cutoff(rep.predicted);
    if (brute) {
        const TriangleRealization tr = realize(sig);
        BruteForceOptions bo;
        bo.cutoff = cutoff;
        bo.max_word = cfg.max_word;
        bo.conj_depth = cfg.conj_depth;
        rep.observed = brute_force_head(tr, bo);
        const ValidationReport vr =
            cross_validate(rep.predicted, *rep.observed, cutoff);
        for (const std::string& line : vr.lines)
            rep.checks.push_back(Check{
                "cross_validate",
                line.find("MISMATCH") == std::string::npos ? "ok" : "mismatch",
                line});
    }
    if (auto note = second_length_note(sig)) rep.checks.push_back(*note);
    return rep;
}

bool report_has_mismatch(const HeadReport& rep) {
    for (const Check& c : rep.checks)
        if (c.status == "mismatch") return true;
    return false;
}

int cmd_head(const std::vector<std::string>& args, RunConfig cfg, bool brute,
             const std::string& out) {
    const Signature sig = parse_sig(args);
    const HeadReport rep = build_head_report(sig, cfg, brute);
    if (cfg.format == OutputFormat::Csv)
        throw UsageError("head supports text and json output");
    emit(cfg.format == OutputFormat::Json ? render_head_json(rep)
                                          : render_head_text(rep),
         out);
    return 0;
}

int cmd_validate(const std::vector<std::string>& args, RunConfig cfg,
                 int rmin, int rmax, int pmax, int qmax,
                 const std::string& out) {
    std::vector<Signature> sigs;
    if (!args.empty()) {
        sigs.push_back(parse_sig(args));
    } else {
        if (rmin < 2 || rmax < rmin || qmax < rmax)
            throw UsageError("malformed range: need 2 <= rmin <= rmax <= qmax");
        if (pmax <= 0) pmax = qmax;
        for (int r = rmin; r <= rmax; ++r)
            for (int p = r; p <= pmax; ++p)
                for (int q = p; q <= qmax; ++q) {
                    const Signature sig{r, p, q};
                    if (is_admissible(sig)) sigs.push_back(sig);
                }
    }

    const auto run_one = [&cfg](const Signature& sig) {
        return build_head_report(sig, cfg, true);
    };
    std::vector<HeadReport> reports;
    if (cfg.jobs > 1) {
        std::vector<std::future<HeadReport>> futures;
        futures.reserve(sigs.size());
        for (const Signature& sig : sigs)
            futures.push_back(std::async(std::launch::async, run_one, sig));
        for (auto& f : futures) reports.push_back(f.get());
    } else {
        for (const Signature& sig : sigs) reports.push_back(run_one(sig));
    }

    bool mismatch = false;
    std::ostringstream os;
    for (const HeadReport& rep : reports) {
        const bool bad = report_has_mismatch(rep);
        mismatch = mismatch || bad;
        if (cfg.format == OutputFormat::Json) {
            os << render_head_json(rep);
            continue;
        }
        os << format_sig(rep.sig) << ": " << (bad ? "MISMATCH" : "ok") << "\n";
        for (const Check& c : rep.checks)
            os << "  " << c.name << " " << c.status << ": " << c.details << "\n";
    }
    emit(os.str(), out);
    return mismatch ? 4 : 0;
}

int cmd_forms(const std::vector<std::string>& argv, const RunConfig& cfg,
              const std::string& out) {
    const Signature sig = parse_sig(strip_mode(argv, "table"));
    std::string text;
    switch (cfg.format) {
        case OutputFormat::Csv: text = render_forms_csv(sig); break;
        case OutputFormat::Json: text = render_forms_json(sig); break;
        case OutputFormat::Text: text = render_forms_text(sig); break;
    }
    emit(text, out);
    return 0;
}

int cmd_graph(const std::vector<std::string>& argv, int radius,
              const std::string& svg_path, const std::string& out) {
    const Signature sig = parse_sig(strip_mode(argv, "rho-star"));
    const TriangleRealization tr = realize(sig);
    const StarBall ball = build_star_ball(tr, radius);
    std::ostringstream os;
    os << "signature " << format_sig(sig) << ", contact ball radius "
       << ball.radius << "\n";
    os << "sphere sizes:";
    for (int n = 0; n <= ball.radius; ++n) os << " " << ball.sphere(n).size();
    os << "\n";
    for (int n = 2; n <= ball.radius; ++n) {
        try {
            const RhoStar rho = rho_star(ball, n);
            os << "cosh rho*(" << n << ") = " << fmt8(rho.cosh_value)
               << "  (rho*(" << n << ") = " << fmt8(rho.value) << ")\n";
        } catch (const std::domain_error&) {
            os << "rho*(" << n << "): trimmed sphere empty\n";
        }
    }
    emit(os.str(), out);
    if (!svg_path.empty()) {
        std::ofstream f(svg_path);
        if (!f) throw std::runtime_error("cannot write " + svg_path);
        f << star_ball_svg(ball);
    }
    return 0;
}

int cmd_certify(const std::vector<std::string>& argv, const RunConfig& cfg,
                const std::string& out) {
    if (argv.empty()) throw UsageError("expected a mode: rho5 or ordering");
    const std::string mode = argv.front();
    if (mode == "rho5") {
        const CertReport rep =
            rho5_certificate(Box{}, cfg.eps, cfg.depth, cfg.jobs);
        emit(cfg.format == OutputFormat::Json ? render_cert_json(rep)
                                              : render_cert_text(rep),
             out);
        return rep.all_positive ? 0 : 4;
    }
    if (mode == "ordering") {
        // The two factored orderings of the head values: L3 - L1 and
        // L3 - L2, positive away from their declared zero loci.
        const Poly3 x = Poly3::x(), y = Poly3::y(), z = Poly3::z();
        const Poly3 one(1.0);
        const BoxFn a = product_expr(poly_expr(2.0 * y - one), poly_expr(z - x));
        const BoxFn b = product_expr(poly_expr(2.0 * z - one), poly_expr(y - x));
        CertOptions opt;
        opt.eps = cfg.eps;
        opt.max_depth = cfg.depth;
        const CertVerdict va = certify_positive(
            a, Box{}, {Exclusion::plane_y(0.5), Exclusion::eq_xz()}, opt);
        const CertVerdict vb = certify_positive(
            b, Box{}, {Exclusion::plane_z(0.5), Exclusion::eq_xy()}, opt);
        std::ostringstream os;
        os << "(2Y-1)(Z-X): " << va.to_string() << "\n";
        os << "(2Z-1)(Y-X): " << vb.to_string() << "\n";
        emit(os.str(), out);
        return va.positive() && vb.positive() ? 0 : 4;
    }
    throw UsageError("unknown certify mode: " + mode);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"length spectrum toolkit for hyperbolic triangle groups"};
    app.set_config("--config", "", "read defaults from a key-value file");
    app.require_subcommand(1);

    RunConfig cfg;
    std::string format = "text", out_path, svg_path;
    bool brute = false;
    int rmin = 3, rmax = 8, pmax = 0, qmax = 8, radius = 5;
    std::vector<std::string> pos;

    const auto add_common = [&](CLI::App* sub) {
        sub->add_option("--format", format, "text, json or csv");
        sub->add_option("--out", out_path, "write the report to a file");
        sub->add_option("--seed", cfg.seed, "seed recorded for sampled checks");
        sub->add_option("--jobs", cfg.jobs, "parallelism degree");
        sub->add_option("args", pos, "positional arguments");
    };

    CLI::App* head = app.add_subcommand("head", "predicted spectrum head");
    add_common(head);
    head->add_flag("--brute", brute, "also run the enumeration oracle");
    head->add_option("--cutoff", cfg.cutoff, "length cutoff for the oracle");
    head->add_option("--max-word", cfg.max_word, "word length limit");
    head->add_option("--conj-depth", cfg.conj_depth, "conjugator ball depth");

    CLI::App* validate =
        app.add_subcommand("validate", "predicted vs enumerated heads");
    add_common(validate);
    validate->add_option("--cutoff", cfg.cutoff, "length cutoff");
    validate->add_option("--max-word", cfg.max_word, "word length limit");
    validate->add_option("--conj-depth", cfg.conj_depth, "conjugator ball depth");
    validate->add_option("--rmin", rmin, "grid lower bound for r");
    validate->add_option("--rmax", rmax, "grid upper bound for r");
    validate->add_option("--pmax", pmax, "grid upper bound for p (default qmax)");
    validate->add_option("--qmax", qmax, "grid upper bound for q");

    CLI::App* forms = app.add_subcommand("forms", "closed-form value table");
    add_common(forms);

    CLI::App* graph = app.add_subcommand("graph", "contact graph radii");
    add_common(graph);
    graph->add_option("--ball,--n", radius, "contact ball radius");
    graph->add_option("--svg", svg_path, "write an SVG of the ball");

    CLI::App* certify = app.add_subcommand("certify", "positivity certificates");
    add_common(certify);
    certify->add_option("--eps", cfg.eps, "zero-locus neighborhood size");
    certify->add_option("--depth", cfg.depth, "bisection depth limit");

    try {
        app.parse(argc, argv);
        cfg.format = parse_format(format);
        cfg.ball_radius = radius;
        if (head->parsed()) return cmd_head(pos, cfg, brute, out_path);
        if (validate->parsed())
            return cmd_validate(pos, cfg, rmin, rmax, pmax, qmax, out_path);
        if (forms->parsed()) return cmd_forms(pos, cfg, out_path);
        if (graph->parsed()) return cmd_graph(pos, radius, svg_path, out_path);
        if (certify->parsed()) return cmd_certify(pos, cfg, out_path);
        return 2;
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const ResourceCap& e) {
        std::cerr << "resource cap: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid input: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
