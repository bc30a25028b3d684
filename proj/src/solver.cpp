#include "socarg/solver.hpp"

#include "socarg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace socarg {

void SolverConfig::validate() const {
    if (!(tolerance > 0.0)) {
        throw InvalidConfig("tolerance must be positive");
    }
    if (!(newton_switch_residual > tolerance)) {
        throw InvalidConfig("newton switch residual must exceed the tolerance");
    }
    if (max_iterations < 1) {
        throw InvalidConfig("max iterations must be positive");
    }
    if (!(damping > 0.0 && damping <= 1.0)) {
        throw InvalidConfig("damping must lie in (0,1]");
    }
}

const char* to_string(SolvePhase phase) {
    return phase == SolvePhase::picard ? "picard" : "newton";
}

Valuation picard_step(const SocialFramework& fw, std::span<const double> supports, const Valuation& m,
                      double damping) {
    Valuation next = evaluate_rhs(fw, supports, m);
    for (std::size_t i = 0; i < next.size(); ++i) {
        next[i] = std::clamp((1.0 - damping) * m[i] + damping * next[i], 0.0, 1.0);
    }
    return next;
}

Valuation picard_step(const SocialFramework& fw, const SemanticsConfig& cfg, const Valuation& m, double damping) {
    return picard_step(fw, supports(fw, cfg), m, damping);
}

namespace {

// -tau(a) * prod over the other attackers c of (1 - m(c)).
double partial(const SocialFramework& fw, std::span<const double> supports, const Valuation& m, std::size_t a,
               std::size_t b) {
    double product = supports[a];
    for (std::size_t c : fw.attackers(a)) {
        if (c != b) {
            product *= 1.0 - m[c];
        }
    }
    return -product;
}

} // namespace

Eigen::MatrixXd jacobian(const SocialFramework& fw, std::span<const double> supports, const Valuation& m) {
    const auto n = static_cast<Eigen::Index>(fw.size());
    Eigen::MatrixXd jac = Eigen::MatrixXd::Zero(n, n);
    for (std::size_t a = 0; a < fw.size(); ++a) {
        for (std::size_t b : fw.attackers(a)) {
            jac(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b)) = partial(fw, supports, m, a, b);
        }
    }
    return jac;
}

Eigen::MatrixXd jacobian(const SocialFramework& fw, const SemanticsConfig& cfg, const Valuation& m,
                         const SupportOverride& tau_override) {
    return jacobian(fw, supports(fw, cfg, tau_override), m);
}

Valuation support_start(const SocialFramework& fw, std::span<const double> supports) {
    if (supports.size() != fw.size()) {
        throw InvalidConfig("support vector does not match the framework");
    }
    return Valuation(std::vector<double>(supports.begin(), supports.end()));
}

namespace {

constexpr double singular_rcond = 1e-14;

enum class NewtonStatus { improved, singular, stalled };

struct NewtonResult {
    NewtonStatus status;
    Valuation next;
    double residual;
};

// One Newton step on F(x) = x - RHS(x), solved component by component.
// Backtracks on the step length until the max-norm residual decreases.
NewtonResult newton_step(const SocialFramework& fw, std::span<const double> supports, const Valuation& x,
                         double current_residual) {
    const Valuation image = evaluate_rhs(fw, supports, x);
    std::vector<double> step(fw.size(), 0.0);
    std::vector<std::size_t> local(fw.size(), 0);

    for (const auto& block : fw.components()) {
        const auto k = static_cast<Eigen::Index>(block.size());
        for (Eigen::Index i = 0; i < k; ++i) {
            local[block[static_cast<std::size_t>(i)]] = static_cast<std::size_t>(i);
        }
        Eigen::MatrixXd jf = Eigen::MatrixXd::Identity(k, k);
        Eigen::VectorXd rhs(k);
        for (Eigen::Index i = 0; i < k; ++i) {
            const std::size_t a = block[static_cast<std::size_t>(i)];
            rhs(i) = -(x[a] - image[a]);
            for (std::size_t b : fw.attackers(a)) {
                jf(i, static_cast<Eigen::Index>(local[b])) -= partial(fw, supports, x, a, b);
            }
        }
        if (k == 1) {
            if (std::abs(jf(0, 0)) < singular_rcond) {
                return {NewtonStatus::singular, x, current_residual};
            }
            step[block[0]] = rhs(0) / jf(0, 0);
            continue;
        }
        Eigen::PartialPivLU<Eigen::MatrixXd> lu(jf);
        if (!(lu.rcond() > singular_rcond)) {
            return {NewtonStatus::singular, x, current_residual};
        }
        Eigen::VectorXd delta = lu.solve(rhs);
        for (Eigen::Index i = 0; i < k; ++i) {
            step[block[static_cast<std::size_t>(i)]] = delta(i);
        }
    }

    double length = 1.0;
    for (int attempt = 0; attempt < 8; ++attempt, length *= 0.5) {
        Valuation trial = x;
        for (std::size_t i = 0; i < trial.size(); ++i) {
            trial[i] = std::clamp(x[i] + length * step[i], 0.0, 1.0);
        }
        const double r = residual(fw, supports, trial);
        if (r < current_residual) {
            return {NewtonStatus::improved, std::move(trial), r};
        }
    }
    return {NewtonStatus::stalled, x, current_residual};
}

bool newton_allowed(const SocialFramework& fw, const SolverConfig& scfg) {
    return std::all_of(fw.components().begin(), fw.components().end(),
                       [&](const auto& block) { return block.size() <= scfg.max_dense_block; });
}

Valuation clamped_start(const SocialFramework& fw, const Valuation& start) {
    if (start.size() != fw.size()) {
        throw InvalidConfig("start valuation has " + std::to_string(start.size()) + " entries for " +
                            std::to_string(fw.size()) + " arguments");
    }
    Valuation x = start;
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!std::isfinite(x[i])) {
            throw DomainError("start valuation contains a non-finite value");
        }
        x[i] = std::clamp(x[i], 0.0, 1.0);
    }
    return x;
}

void mark(std::vector<SolvePhase>& trace, SolvePhase phase) {
    if (trace.empty() || trace.back() != phase) {
        trace.push_back(phase);
    }
}

// Steps of Picard forced after a failed Newton step before Newton may retry.
constexpr int newton_cooldown = 25;

} // namespace

SolveOutcome solve(const SocialFramework& fw, std::span<const double> supports, const SolverConfig& scfg,
                   const Valuation& start) {
    scfg.validate();
    SolveOutcome out;
    Valuation x = clamped_start(fw, start);
    double r = residual(fw, supports, x);

    Valuation best = x;
    double best_residual = r;
    const bool dense_ok = newton_allowed(fw, scfg);
    bool last_failure_singular = false;
    int blocked_until = 0;
    SolvePhase phase = SolvePhase::picard;

    while (r > scfg.tolerance) {
        if (out.iterations >= scfg.max_iterations) {
            const std::string what = "no social model within " + std::to_string(scfg.max_iterations) +
                                     " iterations (best residual " + std::to_string(best_residual) + ")";
            std::vector<double> best_values(best.values().begin(), best.values().end());
            if (last_failure_singular) {
                throw SingularJacobian(what + "; Newton hit a singular Jacobian", std::move(best_values),
                                       best_residual);
            }
            throw NonConvergence(what, std::move(best_values), best_residual);
        }
        ++out.iterations;

        if (phase == SolvePhase::newton) {
            mark(out.method_trace, SolvePhase::newton);
            NewtonResult step = newton_step(fw, supports, x, r);
            if (step.status == NewtonStatus::improved) {
                x = std::move(step.next);
                r = step.residual;
            } else {
                last_failure_singular = step.status == NewtonStatus::singular;
                blocked_until = out.iterations + newton_cooldown;
                phase = SolvePhase::picard;
            }
        } else {
            mark(out.method_trace, SolvePhase::picard);
            x = picard_step(fw, supports, x, scfg.damping);
            r = residual(fw, supports, x);
            if (dense_ok && r < scfg.newton_switch_residual && out.iterations >= blocked_until) {
                phase = SolvePhase::newton;
            }
        }
        if (r < best_residual) {
            best = x;
            best_residual = r;
        }
    }

    out.model = std::move(x);
    out.residual = r;
    return out;
}

SolveOutcome solve(const SocialFramework& fw, const SemanticsConfig& cfg, const SolverConfig& scfg,
                   const Valuation& start, const SupportOverride& tau_override) {
    return solve(fw, supports(fw, cfg, tau_override), scfg, start);
}

std::optional<SolveOutcome> newton_polish(const SocialFramework& fw, std::span<const double> supports,
                                          const SolverConfig& scfg, const Valuation& start, int max_steps) {
    SolveOutcome out;
    Valuation x = clamped_start(fw, start);
    double r = residual(fw, supports, x);
    while (r > scfg.tolerance) {
        if (out.iterations >= max_steps) {
            return std::nullopt;
        }
        ++out.iterations;
        mark(out.method_trace, SolvePhase::newton);
        NewtonResult step = newton_step(fw, supports, x, r);
        if (step.status != NewtonStatus::improved) {
            return std::nullopt;
        }
        x = std::move(step.next);
        r = step.residual;
    }
    out.model = std::move(x);
    out.residual = r;
    return out;
}

} // namespace socarg
