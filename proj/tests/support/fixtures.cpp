#include "fixtures.hpp"

#include <map>

namespace socarg::testing {

std::string data_path(const std::string& file) {
    return std::string(SOCARG_DATA_DIR) + "/" + file;
}

ArgumentId id(const char* name) {
    return ArgumentId(name);
}

namespace {

std::vector<Attack> mutual(std::initializer_list<std::pair<const char*, const char*>> edges) {
    std::vector<Attack> out;
    for (const auto& [x, y] : edges) {
        out.push_back({id(x), id(y)});
        out.push_back({id(y), id(x)});
    }
    return out;
}

} // namespace

SocialFramework four_cycle() {
    std::map<ArgumentId, VoteRecord> votes;
    for (const char* name : {"a", "b", "c", "d"}) {
        votes.emplace(id(name), VoteRecord{1, 0});
    }
    return build_framework({id("a"), id("b"), id("c"), id("d")},
                           mutual({{"a", "b"}, {"b", "c"}, {"c", "d"}, {"d", "a"}}), votes);
}

SocialFramework ordinal_independence_example() {
    std::map<ArgumentId, VoteRecord> votes;
    for (const char* name : {"a", "b", "c", "d", "e"}) {
        votes.emplace(id(name), VoteRecord{1, 0});
    }
    votes.emplace(id("f"), VoteRecord{5, 0});
    auto attacks = mutual({{"a", "b"}, {"b", "c"}, {"a", "c"}});
    attacks.push_back({id("d"), id("f")});
    attacks.push_back({id("e"), id("f")});
    return build_framework({id("a"), id("b"), id("c"), id("d"), id("e"), id("f")}, attacks, votes);
}

SocialFramework clique(std::size_t n) {
    std::vector<ArgumentId> args;
    for (std::size_t i = 0; i < n; ++i) {
        args.emplace_back("x" + std::to_string(i));
    }
    std::vector<Attack> attacks;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (i != j) {
                attacks.push_back({args[i], args[j]});
            }
        }
    }
    return build_framework(args, attacks);
}

SocialFramework two_cycle(VoteRecord a, VoteRecord b) {
    return build_framework({id("a"), id("b")}, mutual({{"a", "b"}}), {{id("a"), a}, {id("b"), b}});
}

SocialFramework random_framework(std::mt19937_64& rng, std::size_t size, double density, std::uint64_t max_votes) {
    std::vector<ArgumentId> args;
    for (std::size_t i = 0; i < size; ++i) {
        args.emplace_back("n" + std::to_string(i));
    }
    std::bernoulli_distribution edge(density);
    std::uniform_int_distribution<std::uint64_t> vote(0, max_votes);
    std::vector<Attack> attacks;
    for (const auto& x : args) {
        for (const auto& y : args) {
            if (edge(rng)) {
                attacks.push_back({x, y});
            }
        }
    }
    std::map<ArgumentId, VoteRecord> votes;
    for (const auto& x : args) {
        const std::uint64_t pro = vote(rng);
        const std::uint64_t con = vote(rng);
        votes.emplace(x, VoteRecord{pro, con});
    }
    return build_framework(args, attacks, votes);
}

} // namespace socarg::testing
