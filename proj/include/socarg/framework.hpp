#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace socarg {

/// Name of an argument. Non-empty, made of ASCII letters, digits and '_'.
/// Ordering is plain lexicographic on the bytes and is the canonical
/// iteration order everywhere in the library.
class ArgumentId {
public:
    explicit ArgumentId(std::string name);

    static bool is_valid(std::string_view name) noexcept;

    const std::string& str() const noexcept { return name_; }

    friend bool operator==(const ArgumentId&, const ArgumentId&) = default;
    friend std::strong_ordering operator<=>(const ArgumentId& a, const ArgumentId& b) noexcept {
        return a.name_ <=> b.name_;
    }

private:
    std::string name_;
};

struct VoteRecord {
    std::uint64_t pro = 0;
    std::uint64_t con = 0;

    friend bool operator==(const VoteRecord&, const VoteRecord&) = default;
};

struct Attack {
    ArgumentId attacker;
    ArgumentId target;

    friend bool operator==(const Attack&, const Attack&) = default;
    friend auto operator<=>(const Attack&, const Attack&) = default;
};

/// Raw ingredients of a framework, in canonical order.
struct FrameworkParts {
    std::vector<ArgumentId> arguments;
    std::vector<Attack> attacks;
    std::map<ArgumentId, VoteRecord> votes;
};

/// An immutable social abstract argumentation framework <A, R, V>.
///
/// Arguments are stored sorted, so position i is the i-th argument in
/// canonical order; valuations and Jacobians are indexed the same way.
/// Attackers are stored per target as sorted position lists. Weakly
/// connected components are computed once at construction.
class SocialFramework {
public:
    SocialFramework() = default;

    std::size_t size() const noexcept { return arguments_.size(); }
    bool empty() const noexcept { return arguments_.empty(); }
    std::size_t attack_count() const noexcept { return attack_count_; }

    std::span<const ArgumentId> arguments() const noexcept { return arguments_; }
    const ArgumentId& argument(std::size_t index) const { return arguments_.at(index); }

    std::optional<std::size_t> find(const ArgumentId& id) const;
    /// Throws UnknownArgument.
    std::size_t index_of(const ArgumentId& id) const;
    bool contains(const ArgumentId& id) const { return find(id).has_value(); }

    std::span<const std::size_t> attackers(std::size_t index) const { return attackers_.at(index); }
    const VoteRecord& votes(std::size_t index) const { return votes_.at(index); }
    const VoteRecord& votes(const ArgumentId& id) const { return votes_[index_of(id)]; }

    std::vector<Attack> attacks() const;

    std::size_t component_of(std::size_t index) const { return component_.at(index); }
    /// Components as sorted position lists, ordered by their smallest member.
    const std::vector<std::vector<std::size_t>>& components() const noexcept { return components_; }

    friend bool operator==(const SocialFramework& a, const SocialFramework& b) {
        return a.arguments_ == b.arguments_ && a.attackers_ == b.attackers_ && a.votes_ == b.votes_;
    }

private:
    friend SocialFramework build_framework(std::vector<ArgumentId>, std::vector<Attack>,
                                           const std::map<ArgumentId, VoteRecord>&);

    std::vector<ArgumentId> arguments_;
    std::vector<std::vector<std::size_t>> attackers_;
    std::vector<VoteRecord> votes_;
    std::size_t attack_count_ = 0;
    std::vector<std::size_t> component_;
    std::vector<std::vector<std::size_t>> components_;
};

/// Validates and assembles a framework. Missing vote entries become (0,0)
/// and repeated attacks collapse. Self-attacks are kept.
///
/// Throws DuplicateArgument, UnknownEndpoint (attack on an undeclared
/// argument) or UnknownArgument (votes for an undeclared argument).
SocialFramework build_framework(std::vector<ArgumentId> arguments, std::vector<Attack> attacks,
                                const std::map<ArgumentId, VoteRecord>& votes = {});

FrameworkParts decompose(const SocialFramework& fw);

std::vector<ArgumentId> attackers_of(const SocialFramework& fw, const ArgumentId& id);

/// Throws NameCollision if the two frameworks share an argument name.
SocialFramework disjoint_union(const SocialFramework& first, const SocialFramework& second);

/// Weakly connected component (attack direction ignored).
std::set<ArgumentId> connected_component(const SocialFramework& fw, const ArgumentId& id);

} // namespace socarg
