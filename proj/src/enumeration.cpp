#include "socarg/enumeration.hpp"

#include "socarg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace socarg {

void EnumerationConfig::validate(const SolverConfig& scfg) const {
    if (random_starts < 0) {
        throw InvalidConfig("random starts must be non-negative");
    }
    if (!(dedup_distance > scfg.tolerance)) {
        throw InvalidConfig("dedup distance must exceed the solver tolerance");
    }
    if (!(corner_low >= 0.0 && corner_low <= 1.0 && corner_high >= 0.0 && corner_high <= 1.0)) {
        throw InvalidConfig("corner levels must lie in [0,1]");
    }
}

double max_distance(const Valuation& a, const Valuation& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
        d = std::max(d, std::abs(a[i] - b[i]));
    }
    return d;
}

std::vector<FoundModel> deduplicate(std::vector<FoundModel> found, double distance) {
    std::sort(found.begin(), found.end(), [](const FoundModel& a, const FoundModel& b) {
        return std::lexicographical_compare(a.model.values().begin(), a.model.values().end(),
                                            b.model.values().begin(), b.model.values().end());
    });
    std::vector<FoundModel> kept;
    for (auto& candidate : found) {
        const auto near = std::find_if(kept.begin(), kept.end(), [&](const FoundModel& k) {
            return max_distance(k.model, candidate.model) <= distance;
        });
        if (near == kept.end()) {
            kept.push_back(std::move(candidate));
        } else if (candidate.residual < near->residual) {
            // Best-converged member represents the cluster.
            *near = std::move(candidate);
        }
    }
    std::sort(kept.begin(), kept.end(), [](const FoundModel& a, const FoundModel& b) {
        return std::lexicographical_compare(a.model.values().begin(), a.model.values().end(),
                                            b.model.values().begin(), b.model.values().end());
    });
    return kept;
}

ModelSet enumerate_models(const SocialFramework& fw, const SemanticsConfig& cfg, const SolverConfig& scfg,
                          const EnumerationConfig& ecfg, const SupportOverride& tau_override) {
    scfg.validate();
    ecfg.validate(scfg);
    const std::vector<double> s = supports(fw, cfg, tau_override);
    const std::size_t n = fw.size();

    ModelSet out;
    std::vector<FoundModel> found;
    auto attempt = [&](const Valuation& start) {
        ++out.starts_used;
        try {
            SolveOutcome outcome = solve(fw, s, scfg, start);
            found.push_back({std::move(outcome.model), outcome.residual});
        } catch (const NonConvergence&) {
            ++out.nonconverged;
        }
    };

    attempt(support_start(fw, s));

    if (n < 63 && (std::uint64_t{1} << n) <= ecfg.corner_limit) {
        const std::uint64_t corners = std::uint64_t{1} << n;
        for (std::uint64_t mask = 0; mask < corners; ++mask) {
            Valuation start(n, ecfg.corner_low);
            for (std::size_t i = 0; i < n; ++i) {
                if (mask & (std::uint64_t{1} << i)) {
                    start[i] = ecfg.corner_high;
                }
            }
            attempt(start);
        }
    }

    std::mt19937_64 rng(ecfg.seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int k = 0; k < ecfg.random_starts; ++k) {
        Valuation start(n, 0.0);
        for (std::size_t i = 0; i < n; ++i) {
            start[i] = unit(rng);
        }
        attempt(start);
    }

    out.models = deduplicate(std::move(found), ecfg.dedup_distance);
    return out;
}

namespace {

class GridScan {
public:
    GridScan(const SocialFramework& fw, std::vector<double> supports, int resolution)
        : fw_(fw), supports_(std::move(supports)), resolution_(resolution), step_(1.0 / resolution),
          index_(fw.size(), 0), point_(fw.size(), 0.0), closes_at_(fw.size()) {
        // |F_a(x) - F_a(y)| <= (1 + tau(a) |Att(a)|) |x - y|_inf, and every
        // root lies within step/2 of a grid point.
        double lipschitz = 1.0;
        for (std::size_t a = 0; a < fw.size(); ++a) {
            lipschitz = std::max(lipschitz, 1.0 + supports_[a] * static_cast<double>(fw.attackers(a).size()));
            std::size_t last = a;
            for (std::size_t b : fw.attackers(a)) {
                last = std::max(last, b);
            }
            closes_at_[last].push_back(a);
        }
        threshold_ = lipschitz * step_;
    }

    std::vector<std::vector<int>> candidates() {
        hits_.clear();
        if (fw_.empty()) {
            hits_.emplace_back();
        } else {
            descend(0);
        }
        std::vector<std::vector<int>> minima;
        for (const auto& hit : hits_) {
            if (is_local_minimum(hit)) {
                minima.push_back(hit);
            }
        }
        return minima;
    }

    Valuation point_of(const std::vector<int>& index) const {
        Valuation v(index.size(), 0.0);
        for (std::size_t i = 0; i < index.size(); ++i) {
            v[i] = index[i] * step_;
        }
        return v;
    }

private:
    double component_residual(std::size_t a, std::span<const double> x) const {
        double complement = 1.0;
        for (std::size_t b : fw_.attackers(a)) {
            complement *= 1.0 - x[b];
        }
        return std::abs(x[a] - supports_[a] * complement);
    }

    double full_residual(std::span<const double> x) const {
        double worst = 0.0;
        for (std::size_t a = 0; a < fw_.size(); ++a) {
            worst = std::max(worst, component_residual(a, x));
        }
        return worst;
    }

    // Coordinates are fixed in order; an argument whose own value and all
    // attacker values are fixed can prune the rest of the subtree.
    void descend(std::size_t depth) {
        for (int i = 0; i <= resolution_; ++i) {
            index_[depth] = i;
            point_[depth] = i * step_;
            bool alive = true;
            for (std::size_t a : closes_at_[depth]) {
                if (component_residual(a, point_) > threshold_) {
                    alive = false;
                    break;
                }
            }
            if (!alive) {
                continue;
            }
            if (depth + 1 == fw_.size()) {
                hits_.push_back(index_);
            } else {
                descend(depth + 1);
            }
        }
    }

    bool is_local_minimum(const std::vector<int>& centre) const {
        const std::size_t n = centre.size();
        std::vector<double> x(n);
        for (std::size_t i = 0; i < n; ++i) {
            x[i] = centre[i] * step_;
        }
        const double here = full_residual(x);

        std::size_t neighbours = 1;
        for (std::size_t i = 0; i < n; ++i) {
            neighbours *= 3;
        }
        for (std::size_t code = 0; code < neighbours; ++code) {
            std::size_t rest = code;
            bool inside = true;
            bool moved = false;
            for (std::size_t i = 0; i < n; ++i) {
                const int offset = static_cast<int>(rest % 3) - 1;
                rest /= 3;
                const int j = centre[i] + offset;
                if (j < 0 || j > resolution_) {
                    inside = false;
                    break;
                }
                moved = moved || offset != 0;
                x[i] = j * step_;
            }
            if (inside && moved && full_residual(x) < here) {
                return false;
            }
        }
        return true;
    }

    const SocialFramework& fw_;
    std::vector<double> supports_;
    int resolution_;
    double step_;
    double threshold_ = 0.0;
    std::vector<int> index_;
    std::vector<double> point_;
    std::vector<std::vector<std::size_t>> closes_at_;
    std::vector<std::vector<int>> hits_;
};

} // namespace

ModelSet grid_oracle(const SocialFramework& fw, const SemanticsConfig& cfg, int resolution,
                     const SolverConfig& scfg, double dedup_distance) {
    if (fw.size() > grid_oracle_max_arguments) {
        throw TooLarge("grid oracle supports at most " + std::to_string(grid_oracle_max_arguments) +
                       " arguments, framework has " + std::to_string(fw.size()));
    }
    if (resolution < 1) {
        throw InvalidConfig("grid resolution must be positive");
    }
    scfg.validate();
    const std::vector<double> s = supports(fw, cfg);

    GridScan scan(fw, s, resolution);
    ModelSet out;
    std::vector<FoundModel> found;
    for (const auto& cell : scan.candidates()) {
        ++out.starts_used;
        if (auto polished = newton_polish(fw, s, scfg, scan.point_of(cell))) {
            found.push_back({std::move(polished->model), polished->residual});
        } else {
            ++out.nonconverged;
        }
    }
    out.models = deduplicate(std::move(found), dedup_distance);
    out.exhaustive = true;
    return out;
}

std::string Ranking::to_string() const {
    std::string out;
    for (std::size_t t = 0; t < tiers.size(); ++t) {
        if (t > 0) {
            out += " ≻ ";
        }
        for (std::size_t i = 0; i < tiers[t].size(); ++i) {
            if (i > 0) {
                out += " ≃ ";
            }
            out += tiers[t][i].str();
        }
    }
    return out;
}

Ranking rank_values(std::span<const ArgumentId> names, std::span<const double> values, double tie_epsilon) {
    if (names.size() != values.size()) {
        throw InvalidConfig("ranking needs one value per argument");
    }
    std::vector<std::size_t> order(names.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] > values[b]; });

    Ranking ranking;
    double head = 0.0;
    for (std::size_t i : order) {
        if (ranking.tiers.empty() || head - values[i] > tie_epsilon) {
            ranking.tiers.emplace_back();
            head = values[i];
        }
        ranking.tiers.back().push_back(names[i]);
    }
    for (auto& tier : ranking.tiers) {
        std::sort(tier.begin(), tier.end());
    }
    return ranking;
}

std::vector<Ranking> rankings_of(const SocialFramework& fw, const ModelSet& ms, double tie_epsilon) {
    std::vector<Ranking> out;
    out.reserve(ms.models.size());
    for (const auto& found : ms.models) {
        out.push_back(rank_values(fw.arguments(), found.model.values(), tie_epsilon));
    }
    return out;
}

} // namespace socarg
