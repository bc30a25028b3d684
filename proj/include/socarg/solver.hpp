#pragma once

#include "socarg/framework.hpp"
#include "socarg/semantics.hpp"

#include <Eigen/Dense>

#include <optional>
#include <span>
#include <vector>

namespace socarg {

struct SolverConfig {
    double tolerance = 1e-12;
    int max_iterations = 10000;
    double damping = 0.5;
    double newton_switch_residual = 1e-3;
    /// Components larger than this are solved by Picard iteration only.
    std::size_t max_dense_block = 2000;

    /// Throws InvalidConfig.
    void validate() const;
};

enum class SolvePhase { picard, newton };

const char* to_string(SolvePhase phase);

struct SolveOutcome {
    Valuation model;
    double residual = 0.0;
    int iterations = 0;
    /// One tag per contiguous run of steps of the same kind.
    std::vector<SolvePhase> method_trace;
};

/// (1 - damping) * m + damping * evaluate_rhs(m), clamped to [0,1].
Valuation picard_step(const SocialFramework& fw, std::span<const double> supports, const Valuation& m,
                      double damping);
Valuation picard_step(const SocialFramework& fw, const SemanticsConfig& cfg, const Valuation& m, double damping);

/// d RHS_a / d x_b, indexed in canonical argument order.
Eigen::MatrixXd jacobian(const SocialFramework& fw, std::span<const double> supports, const Valuation& m);
Eigen::MatrixXd jacobian(const SocialFramework& fw, const SemanticsConfig& cfg, const Valuation& m,
                         const SupportOverride& tau_override = std::nullopt);

/// Damped Picard until the residual drops below newton_switch_residual,
/// then Newton on F(x) = x - RHS(x). Newton solves one dense LU per
/// weakly connected component. A failed Newton step hands control back
/// to Picard for a while.
///
/// Throws NonConvergence (or SingularJacobian when the last Newton attempt
/// hit a singular block) once max_iterations is spent.
SolveOutcome solve(const SocialFramework& fw, const SemanticsConfig& cfg, const SolverConfig& scfg,
                   const Valuation& start, const SupportOverride& tau_override = std::nullopt);
SolveOutcome solve(const SocialFramework& fw, std::span<const double> supports, const SolverConfig& scfg,
                   const Valuation& start);

/// Pure Newton from `start` with no Picard phase, so it stays in the
/// basin of the root nearest to the start even when that root repels
/// Picard iteration. Returns nullopt if it fails to reach tolerance.
std::optional<SolveOutcome> newton_polish(const SocialFramework& fw, std::span<const double> supports,
                                          const SolverConfig& scfg, const Valuation& start,
                                          int max_steps = 100);

/// The tau vector as a valuation; the default starting point.
Valuation support_start(const SocialFramework& fw, std::span<const double> supports);

} // namespace socarg
