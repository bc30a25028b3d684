#include "socarg/framework.hpp"

#include "socarg/errors.hpp"

#include <algorithm>
#include <numeric>

namespace socarg {

ArgumentId::ArgumentId(std::string name) : name_(std::move(name)) {
    if (!is_valid(name_)) {
        throw InvalidArgumentId("invalid argument name '" + name_ + "'");
    }
}

bool ArgumentId::is_valid(std::string_view name) noexcept {
    if (name.empty()) {
        return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
        return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '_';
    });
}

std::optional<std::size_t> SocialFramework::find(const ArgumentId& id) const {
    auto it = std::lower_bound(arguments_.begin(), arguments_.end(), id);
    if (it == arguments_.end() || *it != id) {
        return std::nullopt;
    }
    return static_cast<std::size_t>(it - arguments_.begin());
}

std::size_t SocialFramework::index_of(const ArgumentId& id) const {
    if (auto index = find(id)) {
        return *index;
    }
    throw UnknownArgument("unknown argument '" + id.str() + "'");
}

std::vector<Attack> SocialFramework::attacks() const {
    std::vector<Attack> out;
    out.reserve(attack_count_);
    for (std::size_t target = 0; target < size(); ++target) {
        for (std::size_t attacker : attackers_[target]) {
            out.push_back({arguments_[attacker], arguments_[target]});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t i) {
    while (parent[i] != i) {
        parent[i] = parent[parent[i]];
        i = parent[i];
    }
    return i;
}

} // namespace

SocialFramework build_framework(std::vector<ArgumentId> arguments, std::vector<Attack> attacks,
                                const std::map<ArgumentId, VoteRecord>& votes) {
    std::sort(arguments.begin(), arguments.end());
    if (auto dup = std::adjacent_find(arguments.begin(), arguments.end()); dup != arguments.end()) {
        throw DuplicateArgument("duplicate argument '" + dup->str() + "'");
    }

    SocialFramework fw;
    fw.arguments_ = std::move(arguments);
    const std::size_t n = fw.arguments_.size();
    fw.attackers_.assign(n, {});
    fw.votes_.assign(n, VoteRecord{});

    for (const auto& [id, record] : votes) {
        auto index = fw.find(id);
        if (!index) {
            throw UnknownArgument("votes given for undeclared argument '" + id.str() + "'");
        }
        fw.votes_[*index] = record;
    }

    std::vector<std::size_t> parent(n);
    std::iota(parent.begin(), parent.end(), std::size_t{0});

    for (const auto& attack : attacks) {
        auto from = fw.find(attack.attacker);
        auto to = fw.find(attack.target);
        if (!from || !to) {
            const auto& missing = from ? attack.target : attack.attacker;
            throw UnknownEndpoint("attack (" + attack.attacker.str() + "," + attack.target.str() +
                                  ") references undeclared argument '" + missing.str() + "'");
        }
        fw.attackers_[*to].push_back(*from);
        parent[find_root(parent, *from)] = find_root(parent, *to);
    }

    for (auto& list : fw.attackers_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        fw.attack_count_ += list.size();
    }

    // Components are labelled by their smallest member, which keeps the
    // labelling independent of the attack insertion order.
    fw.component_.assign(n, 0);
    std::vector<std::size_t> label_of_root(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t root = find_root(parent, i);
        if (label_of_root[root] == n) {
            label_of_root[root] = fw.components_.size();
            fw.components_.emplace_back();
        }
        fw.component_[i] = label_of_root[root];
        fw.components_[fw.component_[i]].push_back(i);
    }
    return fw;
}

FrameworkParts decompose(const SocialFramework& fw) {
    FrameworkParts parts;
    parts.arguments.assign(fw.arguments().begin(), fw.arguments().end());
    parts.attacks = fw.attacks();
    for (std::size_t i = 0; i < fw.size(); ++i) {
        parts.votes.emplace(fw.argument(i), fw.votes(i));
    }
    return parts;
}

std::vector<ArgumentId> attackers_of(const SocialFramework& fw, const ArgumentId& id) {
    std::vector<ArgumentId> out;
    for (std::size_t attacker : fw.attackers(fw.index_of(id))) {
        out.push_back(fw.argument(attacker));
    }
    return out;
}

SocialFramework disjoint_union(const SocialFramework& first, const SocialFramework& second) {
    FrameworkParts a = decompose(first);
    FrameworkParts b = decompose(second);
    for (const auto& id : b.arguments) {
        if (first.contains(id)) {
            throw NameCollision("argument '" + id.str() + "' exists in both frameworks");
        }
    }
    a.arguments.insert(a.arguments.end(), b.arguments.begin(), b.arguments.end());
    a.attacks.insert(a.attacks.end(), b.attacks.begin(), b.attacks.end());
    a.votes.merge(b.votes);
    return build_framework(std::move(a.arguments), std::move(a.attacks), a.votes);
}

std::set<ArgumentId> connected_component(const SocialFramework& fw, const ArgumentId& id) {
    std::set<ArgumentId> out;
    for (std::size_t member : fw.components()[fw.component_of(fw.index_of(id))]) {
        out.insert(fw.argument(member));
    }
    return out;
}

} // namespace socarg
