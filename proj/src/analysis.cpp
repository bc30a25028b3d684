#include "socarg/analysis.hpp"

#include "socarg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace socarg {

UniquenessCertificate certify_uniqueness(const SocialFramework& fw, const SemanticsConfig& cfg,
                                         const SupportOverride& tau_override) {
    const std::vector<double> s = supports(fw, cfg, tau_override);
    UniquenessCertificate cert;
    for (std::size_t a = 0; a < fw.size(); ++a) {
        const double margin = 1.0 - static_cast<double>(fw.attackers(a).size()) * s[a];
        cert.margins.emplace(fw.argument(a), margin);
        if (!(margin > 0.0) && cert.holds) {
            cert.holds = false;
            cert.witness = fw.argument(a);
        }
    }
    return cert;
}

std::array<double, 3> solve_three_clique(double a1, double a2, double a3, double tol) {
    const std::array<double, 3> input{a1, a2, a3};
    for (double a : input) {
        if (!(a > 0.0 && a < 1.0)) {
            throw DomainViolation("three-clique supports must lie in (0,1)");
        }
    }
    if (!(tol > 0.0)) {
        throw DomainViolation("tolerance must be positive");
    }

    std::array<std::size_t, 3> order{0, 1, 2};
    std::stable_sort(order.begin(), order.end(), [&](std::size_t i, std::size_t j) { return input[i] > input[j]; });
    const double top = input[order[0]];
    const std::array<double, 2> ratio{input[order[1]] / top, input[order[2]] / top};

    // sqrt(1/4 - ratio * x(1 - x)); the radicand is >= 0 because ratio <= 1.
    auto root_term = [&](double ratio_k, double x) {
        const double centred = 0.5 - x;
        return std::sqrt(std::max(0.0, 0.25 - ratio_k * (0.25 - centred * centred)));
    };
    auto f = [&](double x) { return top * (0.5 + root_term(ratio[0], x)) * (0.5 + root_term(ratio[1], x)); };

    double lo = 0.0, hi = 1.0;
    for (int i = 0; i < 200 && hi - lo > tol; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(mid) - mid > 0.0) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    const double r = 0.5 * (lo + hi);

    std::array<double, 3> out{};
    out[order[0]] = r;
    out[order[1]] = 0.5 - root_term(ratio[0], r);
    out[order[2]] = 0.5 - root_term(ratio[1], r);
    return out;
}

std::vector<double> normalized_supports(const SocialFramework& fw, const SemanticsConfig& cfg) {
    if (fw.empty()) {
        throw InvalidConfig("normalization needs at least one argument");
    }
    std::vector<double> scaled = supports(fw, cfg);
    for (double& t : scaled) {
        t /= static_cast<double>(fw.size());
    }
    return scaled;
}

NormalizedSolution normalized_solve(const SocialFramework& fw, const SemanticsConfig& cfg, const SolverConfig& scfg,
                                    const EnumerationConfig& ecfg) {
    const std::vector<double> scaled = normalized_supports(fw, cfg);
    const double n = static_cast<double>(fw.size());

    NormalizedSolution out;
    out.certificate = certify_uniqueness(fw, cfg, scaled);
    if (!out.certificate.holds) {
        throw std::logic_error("normalized supports violate the uniqueness condition at '" +
                               out.certificate.witness->str() + "'");
    }
    SolveOutcome solved = solve(fw, scaled, scfg, support_start(fw, scaled));
    out.model = std::move(solved.model);
    out.scores.assign(out.model.values().begin(), out.model.values().end());
    for (double& v : out.scores) {
        v *= n;
    }
    out.models = enumerate_models(fw, cfg, scfg, ecfg, scaled);
    return out;
}

const char* to_string(PairOrder order) {
    switch (order) {
    case PairOrder::first_preferred:
        return "first_preferred";
    case PairOrder::tied:
        return "tied";
    case PairOrder::second_preferred:
        return "second_preferred";
    }
    return "?";
}

PairOrder compare_pair(double first, double second, double tie_epsilon) {
    if (std::abs(first - second) <= tie_epsilon) {
        return PairOrder::tied;
    }
    return first > second ? PairOrder::first_preferred : PairOrder::second_preferred;
}

SocialFramework isolated_padding(const SocialFramework& fw, std::size_t count, const VoteRecord& votes) {
    std::vector<ArgumentId> names;
    std::map<ArgumentId, VoteRecord> vote_map;
    for (std::size_t k = 0; names.size() < count; ++k) {
        ArgumentId id("pad_" + std::to_string(k));
        if (!fw.contains(id)) {
            vote_map.emplace(id, votes);
            names.push_back(std::move(id));
        }
    }
    return build_framework(std::move(names), {}, vote_map);
}

namespace {

std::array<double, 2> focus_values(const SocialFramework& fw, const SemanticsConfig& cfg, const SolverConfig& scfg,
                                   const EnumerationConfig& ecfg, const std::pair<ArgumentId, ArgumentId>& focus,
                                   SolvingMode mode) {
    const std::size_t first = fw.index_of(focus.first);
    const std::size_t second = fw.index_of(focus.second);
    if (mode == SolvingMode::normalized) {
        NormalizedSolution sol = normalized_solve(fw, cfg, scfg, ecfg);
        return {sol.scores[first], sol.scores[second]};
    }
    const std::vector<double> s = supports(fw, cfg);
    SolveOutcome solved = solve(fw, s, scfg, support_start(fw, s));
    return {solved.model[first], solved.model[second]};
}

} // namespace

IndependenceReport independence_experiment(const SocialFramework& fw, const SemanticsConfig& cfg,
                                           const SolverConfig& scfg, const EnumerationConfig& ecfg,
                                           const std::pair<ArgumentId, ArgumentId>& focus,
                                           std::size_t padding_count, const VoteRecord& padding_votes,
                                           SolvingMode mode, double tie_epsilon) {
    fw.index_of(focus.first);
    fw.index_of(focus.second);
    const SocialFramework padded = disjoint_union(fw, isolated_padding(fw, padding_count, padding_votes));

    IndependenceReport report{.focus = focus};
    report.arguments_before = fw.size();
    report.arguments_after = padded.size();
    report.values_before = focus_values(fw, cfg, scfg, ecfg, focus, mode);
    report.values_after = focus_values(padded, cfg, scfg, ecfg, focus, mode);
    report.before = compare_pair(report.values_before[0], report.values_before[1], tie_epsilon);
    report.after = compare_pair(report.values_after[0], report.values_after[1], tie_epsilon);
    report.violated = report.before != report.after;
    return report;
}

} // namespace socarg
