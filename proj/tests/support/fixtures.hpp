#pragma once

#include "socarg/framework.hpp"

#include <cstddef>
#include <random>
#include <string>
#include <vector>

namespace socarg::testing {

std::string data_path(const std::string& file);

ArgumentId id(const char* name);

/// The four-argument mutual-attack cycle a-b-c-d-a, all votes (1,0).
SocialFramework four_cycle();

/// Triangle a,b,c in mutual attack; d -> f, e -> f; votes (1,0) except f (5,0).
SocialFramework ordinal_independence_example();

/// n arguments x0..x{n-1} attacking each other (no self-attacks), no votes.
/// Use a support override to set the supports.
SocialFramework clique(std::size_t n);

/// a <-> b with the given votes.
SocialFramework two_cycle(VoteRecord a, VoteRecord b);

/// Arguments n0..n{size-1}; every ordered pair (self-attacks included) is an
/// attack with probability `density`; votes uniform in {0..max_votes}^2.
SocialFramework random_framework(std::mt19937_64& rng, std::size_t size, double density, std::uint64_t max_votes);

} // namespace socarg::testing
