#pragma once

#include "socarg/framework.hpp"
#include "socarg/semantics.hpp"
#include "socarg/solver.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace socarg {

struct EnumerationConfig {
    int random_starts = 256;
    std::uint64_t seed = 0;
    double dedup_distance = 1e-6;
    double corner_low = 0.05;
    double corner_high = 0.95;
    /// Corner seeding runs only when 2^|A| is at most this.
    std::uint64_t corner_limit = 4096;

    /// Throws InvalidConfig; dedup_distance must exceed the solver tolerance.
    void validate(const SolverConfig& scfg) const;
};

struct FoundModel {
    Valuation model;
    double residual = 0.0;
};

struct ModelSet {
    /// Sorted lexicographically by value vector.
    std::vector<FoundModel> models;
    int starts_used = 0;
    int nonconverged = 0;
    /// Set only by the grid oracle.
    bool exhaustive = false;
};

/// Multi-start search for every social model: the tau vector, the
/// low/high corner points when there are few enough of them, then
/// `random_starts` seeded uniform points. Start k depends only on the
/// seed and k, so a larger start budget extends a smaller one.
ModelSet enumerate_models(const SocialFramework& fw, const SemanticsConfig& cfg, const SolverConfig& scfg,
                          const EnumerationConfig& ecfg, const SupportOverride& tau_override = std::nullopt);

inline constexpr std::size_t grid_oracle_max_arguments = 4;

/// Scans {0, 1/r, ..., 1}^|A| for cells whose residual is a local minimum
/// below the grid's Lipschitz bound, polishes each with pure Newton and
/// deduplicates. Throws TooLarge beyond four arguments.
ModelSet grid_oracle(const SocialFramework& fw, const SemanticsConfig& cfg, int resolution,
                     const SolverConfig& scfg = {}, double dedup_distance = 1e-6);

/// Merges models closer than `distance` in max-norm, keeping the one with
/// the smallest residual; output is sorted lexicographically.
std::vector<FoundModel> deduplicate(std::vector<FoundModel> found, double distance);

double max_distance(const Valuation& a, const Valuation& b);

/// A total preorder: tiers in descending value, names ascending within a tier.
struct Ranking {
    std::vector<std::vector<ArgumentId>> tiers;

    /// "b ≃ d ≻ a ≃ c"
    std::string to_string() const;

    friend bool operator==(const Ranking&, const Ranking&) = default;
};

inline constexpr double default_tie_epsilon = 1e-9;

/// Values within tie_epsilon of a tier's highest value join that tier.
Ranking rank_values(std::span<const ArgumentId> names, std::span<const double> values,
                    double tie_epsilon = default_tie_epsilon);

std::vector<Ranking> rankings_of(const SocialFramework& fw, const ModelSet& ms,
                                 double tie_epsilon = default_tie_epsilon);

} // namespace socarg
