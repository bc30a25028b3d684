#pragma once

#include "socarg/framework.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace socarg {

/// Parameters of the simple product semantics on L = [0,1].
struct SemanticsConfig {
    static constexpr double bottom = 0.0;
    static constexpr double top = 1.0;

    double epsilon = 0.1;

    /// Throws InvalidConfig unless epsilon > 0.
    void validate() const;
};

/// Inputs may stray this far outside [0,1] from round-off before an
/// operator rejects them.
inline constexpr double domain_tolerance = 1e-12;

/// A value per argument, indexed by the framework's canonical order.
class Valuation {
public:
    Valuation() = default;
    explicit Valuation(std::vector<double> values) : values_(std::move(values)) {}
    Valuation(std::size_t size, double fill) : values_(size, fill) {}

    std::size_t size() const noexcept { return values_.size(); }
    double operator[](std::size_t i) const { return values_[i]; }
    double& operator[](std::size_t i) { return values_[i]; }

    std::span<const double> values() const noexcept { return values_; }
    std::vector<double>& mutable_values() noexcept { return values_; }

    /// Value of a named argument of `fw`.
    double at(const SocialFramework& fw, const ArgumentId& id) const { return values_.at(fw.index_of(id)); }

    friend bool operator==(const Valuation&, const Valuation&) = default;

private:
    std::vector<double> values_;
};

/// Per-argument social supports, replacing tau when the caller rescales them.
using SupportOverride = std::optional<std::vector<double>>;

double tau(const SemanticsConfig& cfg, const VoteRecord& votes);

double tnorm(double x, double y);
double tconorm(double x, double y);
double negation(double x);

/// Probabilistic sum of all attacker values; the empty list yields bottom.
/// Computed as 1 - prod(1 - v).
double aggregate_attackers(std::span<const double> values);

/// The tau vector of `fw`, or the override after checking its shape and range.
std::vector<double> supports(const SocialFramework& fw, const SemanticsConfig& cfg,
                             const SupportOverride& tau_override = std::nullopt);

/// One application of the social model operator:
/// tau(a) * prod over attackers b of (1 - m(b)).
Valuation evaluate_rhs(const SocialFramework& fw, std::span<const double> supports, const Valuation& m);
Valuation evaluate_rhs(const SocialFramework& fw, const SemanticsConfig& cfg, const Valuation& m,
                       const SupportOverride& tau_override = std::nullopt);

/// Max-norm of m - evaluate_rhs(m).
double residual(const SocialFramework& fw, std::span<const double> supports, const Valuation& m);
double residual(const SocialFramework& fw, const SemanticsConfig& cfg, const Valuation& m,
                const SupportOverride& tau_override = std::nullopt);

/// The operator tuple under test in check_well_behaved. Defaults to the
/// simple product semantics; replace members to probe a mutated tuple.
struct OperatorTuple {
    std::function<double(double, double)> tnorm;
    std::function<double(double, double)> tconorm;
    std::function<double(double)> negation;
    std::function<double(const VoteRecord&)> support;

    static OperatorTuple product(const SemanticsConfig& cfg);
};

enum class AxiomStatus { passed, failed, not_checkable };

struct AxiomResult {
    std::string name;
    AxiomStatus status = AxiomStatus::passed;
    std::string witness;
};

struct WellBehavednessReport {
    std::vector<AxiomResult> axioms;

    bool all_checkable_passed() const;
    const AxiomResult* find(const std::string& name) const;
};

const char* to_string(AxiomStatus status);

/// Samples the well-behavedness axioms on seeded uniform points of [0,1]
/// and on the vote grid {0..10}^2. Continuity is listed as not checkable.
WellBehavednessReport check_well_behaved(const SemanticsConfig& cfg, int samples, std::uint64_t seed);
WellBehavednessReport check_well_behaved(const OperatorTuple& ops, int samples, std::uint64_t seed);

} // namespace socarg
