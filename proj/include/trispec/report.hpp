#pragma once

#include <optional>
#include <string>
#include <vector>

#include "trispec/certifier.hpp"
#include "trispec/closed_forms.hpp"
#include "trispec/spectrum.hpp"

namespace trispec {

enum class OutputFormat { Text, Json, Csv };

// Everything that influences an artifact run; serialized into reports so a
// run can be reproduced from its own output.
struct RunConfig {
    double cutoff = 0.0;  // 0 means the per-signature default (l3 + 1e-6)
    int max_word = 12;
    int conj_depth = 10;
    int ball_radius = 5;
    double eps = 1e-3;
    int depth = 40;
    int jobs = 1;
    unsigned seed = 0;
    OutputFormat format = OutputFormat::Text;
};

struct Check {
    std::string name;
    std::string status;  // "ok", "mismatch" or "note"
    std::string details;
};

struct HeadReport {
    Signature sig;
    SpectrumHead predicted;
    std::optional<SpectrumHead> observed;
    std::vector<Check> checks;
    RunConfig config;
};

std::string version();

std::string format_sig(const Signature& sig);  // "(r,p,q)", q spelled inf
std::string q_string(const Signature& sig);

std::string render_head_text(const HeadReport& rep);
std::string render_head_json(const HeadReport& rep);

std::string render_forms_text(const Signature& sig);
std::string render_forms_csv(const Signature& sig);
std::string render_forms_json(const Signature& sig);

std::string render_cert_text(const CertReport& rep);
std::string render_cert_json(const CertReport& rep);

// For the two signatures whose spectrum head carries a second value, checks
// whether the level-5 contact radius clears the collar bound seeded with that
// value. Returns a deterministic note either way; nullopt for other inputs.
std::optional<Check> second_length_note(const Signature& sig);

}  // namespace trispec
