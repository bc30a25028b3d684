#include "socarg/result_output.hpp"

#include "json.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace socarg {

using ordered_json = nlohmann::ordered_json;

ModelsPayload models_payload(const SocialFramework& fw, const ModelSet& ms) {
    ModelsPayload payload;
    payload.arguments.assign(fw.arguments().begin(), fw.arguments().end());
    const auto rankings = rankings_of(fw, ms);
    for (std::size_t i = 0; i < ms.models.size(); ++i) {
        const auto values = ms.models[i].model.values();
        payload.rows.push_back({{values.begin(), values.end()}, ms.models[i].residual, rankings[i].to_string()});
    }
    return payload;
}

namespace {

const char* mode_name(SolvingMode mode) {
    return mode == SolvingMode::normalized ? "normalized" : "raw";
}

std::string number(double v) {
    std::ostringstream out;
    out << std::setprecision(12) << v;
    return out.str();
}

ordered_json payload_json(const ModelsPayload& p) {
    ordered_json names = ordered_json::array();
    for (const auto& id : p.arguments) {
        names.push_back(id.str());
    }
    ordered_json rows = ordered_json::array();
    for (const auto& row : p.rows) {
        ordered_json values = ordered_json::object();
        for (std::size_t i = 0; i < p.arguments.size(); ++i) {
            values[p.arguments[i].str()] = row.values[i];
        }
        rows.push_back(ordered_json{{"values", values}, {"residual", row.residual}, {"ranking", row.ranking}});
    }
    return ordered_json{{"kind", "models"}, {"value_kind", p.value_kind}, {"arguments", names}, {"models", rows}};
}

ordered_json payload_json(const CertificatePayload& p) {
    ordered_json margins = ordered_json::object();
    for (const auto& [id, margin] : p.certificate.margins) {
        margins[id.str()] = margin;
    }
    ordered_json witness = p.certificate.witness ? ordered_json(p.certificate.witness->str()) : ordered_json();
    return ordered_json{
        {"kind", "certificate"}, {"holds", p.certificate.holds}, {"witness", witness}, {"margins", margins}};
}

ordered_json payload_json(const IndependencePayload& p) {
    const auto& r = p.report;
    return ordered_json{
        {"kind", "independence"},
        {"mode", mode_name(p.mode)},
        {"focus", {r.focus.first.str(), r.focus.second.str()}},
        {"arguments_before", r.arguments_before},
        {"arguments_after", r.arguments_after},
        {"values_before", {r.values_before[0], r.values_before[1]}},
        {"values_after", {r.values_after[0], r.values_after[1]}},
        {"order_before", to_string(r.before)},
        {"order_after", to_string(r.after)},
        {"violated", r.violated},
    };
}

ordered_json payload_json(const ThreeCliquePayload& p) {
    return ordered_json{
        {"kind", "three_clique"},
        {"supports", {p.supports[0], p.supports[1], p.supports[2]}},
        {"solution", {p.solution[0], p.solution[1], p.solution[2]}},
        {"residual", p.residual},
    };
}

ordered_json payload_json(const AxiomsPayload& p) {
    ordered_json axioms = ordered_json::array();
    for (const auto& a : p.report.axioms) {
        ordered_json entry{{"axiom", a.name}, {"status", to_string(a.status)}};
        if (a.status == AxiomStatus::failed) {
            entry["witness"] = a.witness;
        }
        axioms.push_back(std::move(entry));
    }
    return ordered_json{{"kind", "axioms"},
                        {"samples", p.samples},
                        {"all_checkable_passed", p.report.all_checkable_passed()},
                        {"axioms", axioms}};
}

std::string emit_json(const ResultEnvelope& env) {
    const auto& prm = env.parameters;
    ordered_json doc{
        {"command", env.command},
        {"framework", {{"arguments", env.framework.arguments}, {"attacks", env.framework.attacks}}},
        {"semantics",
         {{"epsilon", prm.epsilon},
          {"tolerance", prm.tolerance},
          {"max_iterations", prm.max_iterations},
          {"damping", prm.damping},
          {"dedup_distance", prm.dedup_distance},
          {"random_starts", prm.random_starts},
          {"seed", prm.seed},
          {"normalized", prm.normalized}}},
        {"payload", std::visit([](const auto& p) { return payload_json(p); }, env.payload)},
        {"metadata",
         {{"iterations", env.metadata.iterations},
          {"starts", env.metadata.starts},
          {"nonconverged", env.metadata.nonconverged},
          {"exhaustive", env.metadata.exhaustive}}},
    };
    return doc.dump(2) + "\n";
}

// Left-aligned columns separated by two spaces. The last column is not
// padded, so multi-byte text there does not upset the alignment.
class TextTable {
public:
    void row(std::vector<std::string> cells) { rows_.push_back(std::move(cells)); }

    std::string str() const {
        std::vector<std::size_t> width;
        for (const auto& r : rows_) {
            width.resize(std::max(width.size(), r.size()), 0);
            for (std::size_t i = 0; i < r.size(); ++i) {
                width[i] = std::max(width[i], r[i].size());
            }
        }
        std::ostringstream out;
        for (const auto& r : rows_) {
            for (std::size_t i = 0; i < r.size(); ++i) {
                if (i + 1 < r.size()) {
                    out << std::left << std::setw(static_cast<int>(width[i] + 2)) << r[i];
                } else {
                    out << r[i];
                }
            }
            out << "\n";
        }
        return out.str();
    }

private:
    std::vector<std::vector<std::string>> rows_;
};

std::string payload_table(const ModelsPayload& p) {
    TextTable t;
    std::vector<std::string> header{"model"};
    for (const auto& id : p.arguments) {
        header.push_back(id.str());
    }
    header.push_back("residual");
    header.push_back("ranking");
    t.row(std::move(header));
    for (std::size_t r = 0; r < p.rows.size(); ++r) {
        std::vector<std::string> cells{std::to_string(r + 1)};
        for (double v : p.rows[r].values) {
            cells.push_back(number(v));
        }
        cells.push_back(number(p.rows[r].residual));
        cells.push_back(p.rows[r].ranking);
        t.row(std::move(cells));
    }
    return t.str();
}

std::string payload_table(const CertificatePayload& p) {
    TextTable t;
    t.row({"argument", "margin"});
    for (const auto& [id, margin] : p.certificate.margins) {
        t.row({id.str(), number(margin)});
    }
    std::string out = t.str();
    out += "holds: ";
    out += p.certificate.holds ? "true" : "false";
    if (p.certificate.witness) {
        out += " (witness " + p.certificate.witness->str() + ")";
    }
    return out + "\n";
}

std::string payload_table(const IndependencePayload& p) {
    const auto& r = p.report;
    TextTable t;
    t.row({"", "arguments", r.focus.first.str(), r.focus.second.str(), "order"});
    t.row({"before", std::to_string(r.arguments_before), number(r.values_before[0]), number(r.values_before[1]),
           to_string(r.before)});
    t.row({"after", std::to_string(r.arguments_after), number(r.values_after[0]), number(r.values_after[1]),
           to_string(r.after)});
    std::string out = "mode: ";
    out += mode_name(p.mode);
    out += "\n" + t.str() + "violated: " + (r.violated ? "true" : "false") + "\n";
    return out;
}

std::string payload_table(const ThreeCliquePayload& p) {
    TextTable t;
    t.row({"", "x1", "x2", "x3"});
    t.row({"support", number(p.supports[0]), number(p.supports[1]), number(p.supports[2])});
    t.row({"model", number(p.solution[0]), number(p.solution[1]), number(p.solution[2])});
    return t.str() + "residual: " + number(p.residual) + "\n";
}

std::string payload_table(const AxiomsPayload& p) {
    TextTable t;
    t.row({"axiom", "status", "witness"});
    for (const auto& a : p.report.axioms) {
        t.row({a.name, to_string(a.status), a.witness});
    }
    return t.str() + "samples: " + std::to_string(p.samples) +
           "\nall checkable axioms passed: " + (p.report.all_checkable_passed() ? "true" : "false") + "\n";
}

std::string emit_table(const ResultEnvelope& env) {
    std::string out = std::visit([](const auto& p) { return payload_table(p); }, env.payload);
    if (std::holds_alternative<ModelsPayload>(env.payload)) {
        std::ostringstream meta;
        meta << "# arguments=" << env.framework.arguments << " attacks=" << env.framework.attacks
             << " epsilon=" << number(env.parameters.epsilon) << " starts=" << env.metadata.starts
             << " nonconverged=" << env.metadata.nonconverged
             << " exhaustive=" << (env.metadata.exhaustive ? "true" : "false") << "\n";
        out += meta.str();
    }
    return out;
}

} // namespace

std::string emit_result(const ResultEnvelope& env, OutputFormat format) {
    return format == OutputFormat::json ? emit_json(env) : emit_table(env);
}

} // namespace socarg
