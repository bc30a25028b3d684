#pragma once

#include "socarg/analysis.hpp"
#include "socarg/enumeration.hpp"
#include "socarg/framework.hpp"
#include "socarg/semantics.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <variant>
#include <vector>

namespace socarg {

struct FrameworkDigest {
    std::size_t arguments = 0;
    std::size_t attacks = 0;

    static FrameworkDigest of(const SocialFramework& fw) { return {fw.size(), fw.attack_count()}; }
};

struct RunParameters {
    double epsilon = 0.1;
    double tolerance = 1e-12;
    int max_iterations = 10000;
    double damping = 0.5;
    double dedup_distance = 1e-6;
    int random_starts = 256;
    std::uint64_t seed = 0;
    bool normalized = false;
};

struct SolverMetadata {
    int iterations = 0;
    int starts = 0;
    int nonconverged = 0;
    bool exhaustive = false;
};

struct ModelRow {
    std::vector<double> values;
    double residual = 0.0;
    std::string ranking;
};

/// Rows of per-argument values. `value_kind` is "valuation" for models of
/// the semantics and "score" for rescaled normalized values.
struct ModelsPayload {
    std::vector<ArgumentId> arguments;
    std::vector<ModelRow> rows;
    std::string value_kind = "valuation";
};

struct CertificatePayload {
    UniquenessCertificate certificate;
};

struct IndependencePayload {
    IndependenceReport report;
    SolvingMode mode = SolvingMode::raw;
};

struct ThreeCliquePayload {
    std::array<double, 3> supports{};
    std::array<double, 3> solution{};
    double residual = 0.0;
};

struct AxiomsPayload {
    WellBehavednessReport report;
    int samples = 0;
};

using Payload = std::variant<ModelsPayload, CertificatePayload, IndependencePayload, ThreeCliquePayload, AxiomsPayload>;

struct ResultEnvelope {
    std::string command;
    FrameworkDigest framework;
    RunParameters parameters;
    Payload payload;
    SolverMetadata metadata;
};

enum class OutputFormat { json, table };

/// Builds the models payload, ranking each row with default_tie_epsilon.
ModelsPayload models_payload(const SocialFramework& fw, const ModelSet& ms);

/// JSON keys come out in a fixed order and doubles in shortest round-trip
/// form, so identical runs produce identical bytes. Table cells use 12
/// significant digits.
std::string emit_result(const ResultEnvelope& env, OutputFormat format);

} // namespace socarg
