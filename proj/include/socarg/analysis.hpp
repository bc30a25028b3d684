#pragma once

#include "socarg/enumeration.hpp"
#include "socarg/framework.hpp"
#include "socarg/semantics.hpp"
#include "socarg/solver.hpp"

#include <array>
#include <map>
#include <optional>
#include <utility>

namespace socarg {

/// The sufficient condition |Att(a)| * tau(a) < 1 for every argument.
struct UniquenessCertificate {
    bool holds = true;
    /// First argument, in canonical order, with a non-positive margin.
    std::optional<ArgumentId> witness;
    /// 1 - |Att(a)| * tau(a)
    std::map<ArgumentId, double> margins;
};

UniquenessCertificate certify_uniqueness(const SocialFramework& fw, const SemanticsConfig& cfg,
                                         const SupportOverride& tau_override = std::nullopt);

/// Unique model of the full three-clique x_i = a_i * prod_{j != i} (1 - x_j).
///
/// The largest support's coordinate r solves r = f(r), where f eliminates
/// the other two coordinates through the branch below 1/2 of
/// x(1 - x) / a = const. g(r) = f(r) - r changes sign on [0,1]
/// (g(0) = a_max > 0, g(1) = a_max - 1 < 0), so bisection brackets it.
/// Outputs are returned in the caller's coordinate order.
///
/// Throws DomainViolation unless every support lies in (0,1) and tol > 0.
std::array<double, 3> solve_three_clique(double a1, double a2, double a3, double tol = 1e-15);

struct NormalizedSolution {
    /// Model computed with tau(a) / |A| as supports.
    Valuation model;
    /// model * |A|; may exceed 1 and is meant only for ranking.
    std::vector<double> scores;
    ModelSet models;
    UniquenessCertificate certificate;
};

/// tau(a) / |A| for every argument.
std::vector<double> normalized_supports(const SocialFramework& fw, const SemanticsConfig& cfg);

/// Divides every support by |A|, which makes the uniqueness condition hold,
/// solves from the scaled tau vector and rescales by |A|.
NormalizedSolution normalized_solve(const SocialFramework& fw, const SemanticsConfig& cfg, const SolverConfig& scfg,
                                    const EnumerationConfig& ecfg);

enum class SolvingMode { raw, normalized };

/// Relation of the first focus argument to the second.
enum class PairOrder { first_preferred, tied, second_preferred };

const char* to_string(PairOrder order);

struct IndependenceReport {
    std::pair<ArgumentId, ArgumentId> focus;
    PairOrder before = PairOrder::tied;
    PairOrder after = PairOrder::tied;
    std::array<double, 2> values_before{};
    std::array<double, 2> values_after{};
    std::size_t arguments_before = 0;
    std::size_t arguments_after = 0;
    bool violated = false;
};

PairOrder compare_pair(double first, double second, double tie_epsilon = default_tie_epsilon);

/// Names "pad_0", "pad_1", ... skipping any already taken by `fw`.
SocialFramework isolated_padding(const SocialFramework& fw, std::size_t count, const VoteRecord& votes);

/// Values of the focus pair before and after a disjoint union with
/// `padding_count` isolated arguments. Raw mode solves from the tau vector;
/// normalized mode uses the rescaled scores of normalized_solve.
IndependenceReport independence_experiment(const SocialFramework& fw, const SemanticsConfig& cfg,
                                           const SolverConfig& scfg, const EnumerationConfig& ecfg,
                                           const std::pair<ArgumentId, ArgumentId>& focus,
                                           std::size_t padding_count, const VoteRecord& padding_votes,
                                           SolvingMode mode, double tie_epsilon = default_tie_epsilon);

} // namespace socarg
