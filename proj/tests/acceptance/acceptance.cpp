// Acceptance suite: one PASS/FAIL line per criterion, non-zero exit on any failure.

#include "socarg/analysis.hpp"
#include "socarg/enumeration.hpp"
#include "socarg/semantics.hpp"
#include "socarg/solver.hpp"

#include "fixtures.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

using namespace socarg;
using socarg::testing::id;

namespace {

const SemanticsConfig sp{0.1};

struct Verdict {
    bool ok = true;
    std::string detail;

    void require(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

bool contains_model(const ModelSet& ms, const std::vector<double>& values, double tol) {
    const Valuation target(values);
    for (const auto& m : ms.models) {
        if (max_distance(m.model, target) <= tol) {
            return true;
        }
    }
    return false;
}

const std::vector<std::vector<double>> four_cycle_rows = {
    {0.36573, 0.36573, 0.36573, 0.36573},
    {0.01125, 0.88875, 0.01125, 0.88875},
    {0.88875, 0.01125, 0.88875, 0.01125},
};
const std::vector<std::string> four_cycle_rankings = {"a ≃ b ≃ c ≃ d", "b ≃ d ≻ a ≃ c", "a ≃ c ≻ b ≃ d"};

Verdict four_cycle_reproduction() {
    Verdict v;
    const SocialFramework fw = testing::four_cycle();
    const ModelSet ms = enumerate_models(fw, sp, SolverConfig{}, EnumerationConfig{});
    v.require(ms.models.size() == 3, "expected 3 models, got " + std::to_string(ms.models.size()));
    const auto rankings = rankings_of(fw, ms);
    for (std::size_t r = 0; r < four_cycle_rows.size(); ++r) {
        bool matched = false;
        for (std::size_t i = 0; i < ms.models.size(); ++i) {
            if (max_distance(ms.models[i].model, Valuation(four_cycle_rows[r])) <= 1e-4) {
                matched = true;
                v.require(rankings[i].to_string() == four_cycle_rankings[r],
                          "row " + std::to_string(r + 1) + " ranked " + rankings[i].to_string());
            }
        }
        v.require(matched, "row " + std::to_string(r + 1) + " not found");
    }
    return v;
}

Verdict grid_cross_check() {
    Verdict v;
    const SocialFramework fw = testing::four_cycle();
    const ModelSet grid = grid_oracle(fw, sp, 200);
    const ModelSet multi = enumerate_models(fw, sp, SolverConfig{}, EnumerationConfig{});
    v.require(grid.models.size() == 3, "grid found " + std::to_string(grid.models.size()) + " models");
    for (const auto& m : grid.models) {
        v.require(contains_model(multi, {m.model.values().begin(), m.model.values().end()}, 1e-6),
                  "grid model missing from multi-start set");
    }
    return v;
}

Verdict support_value() {
    Verdict v;
    const double t = tau(sp, {1, 0});
    v.require(std::abs(t - 1.0 / 1.1) <= 1e-12, "tau(1,0) = " + std::to_string(t));
    v.require(std::abs(t - 0.9090909090909) <= 1e-12, "tau(1,0) differs from 0.9090909090909");
    return v;
}

Verdict three_cliques() {
    Verdict v;
    std::mt19937_64 rng(20240601);
    std::uniform_real_distribution<double> support(0.01, 0.99);
    const SocialFramework k3 = testing::clique(3);
    EnumerationConfig ecfg;
    for (int trial = 0; trial < 1000 && v.ok; ++trial) {
        const double a1 = support(rng), a2 = support(rng), a3 = support(rng);
        const ModelSet ms = enumerate_models(k3, sp, SolverConfig{}, ecfg, std::vector<double>{a1, a2, a3});
        const auto x = solve_three_clique(a1, a2, a3);
        const double res = std::max({std::abs(x[0] - a1 * (1 - x[1]) * (1 - x[2])),
                                     std::abs(x[1] - a2 * (1 - x[0]) * (1 - x[2])),
                                     std::abs(x[2] - a3 * (1 - x[0]) * (1 - x[1]))});
        const std::string tag = "trial " + std::to_string(trial);
        v.require(ms.models.size() == 1, tag + ": " + std::to_string(ms.models.size()) + " models");
        v.require(res < 1e-9, tag + ": scalar residual " + std::to_string(res));
        if (ms.models.size() == 1) {
            v.require(max_distance(ms.models[0].model, Valuation(std::vector<double>{x[0], x[1], x[2]})) <= 1e-6,
                      tag + ": enumeration and scalar solution disagree");
        }
    }
    return v;
}

Verdict certificate_soundness() {
    Verdict v;
    std::mt19937_64 rng(1313);
    std::uniform_int_distribution<std::size_t> size(1, 12);
    std::uniform_real_distribution<double> density(0.02, 0.3);
    int certified = 0;
    for (int attempt = 0; attempt < 200000 && certified < 200 && v.ok; ++attempt) {
        const SocialFramework fw = testing::random_framework(rng, size(rng), density(rng), 10);
        if (!certify_uniqueness(fw, sp).holds) {
            continue;
        }
        ++certified;
        const ModelSet ms = enumerate_models(fw, sp, SolverConfig{}, EnumerationConfig{});
        v.require(ms.models.size() == 1, "certified framework with " + std::to_string(fw.size()) +
                                             " arguments has " + std::to_string(ms.models.size()) + " models");
    }
    v.require(certified == 200, "only " + std::to_string(certified) + " certified frameworks generated");
    return v;
}

Verdict ordinal_independence() {
    Verdict v;
    const SocialFramework six = testing::ordinal_independence_example();
    const NormalizedSolution small = normalized_solve(six, sp, SolverConfig{}, EnumerationConfig{});
    const double a0 = small.scores[six.index_of(id("a"))], f0 = small.scores[six.index_of(id("f"))];
    v.require(std::abs(a0 - 0.7074) <= 1e-3, "M(a) = " + std::to_string(a0));
    v.require(std::abs(f0 - 0.7058) <= 1e-3, "M(f) = " + std::to_string(f0));
    v.require(a0 > f0, "a not preferred to f before padding");

    const SocialFramework big = disjoint_union(six, isolated_padding(six, 1000, {1, 0}));
    const NormalizedSolution large = normalized_solve(big, sp, SolverConfig{}, EnumerationConfig{});
    const double a1 = large.scores[big.index_of(id("a"))], f1 = large.scores[big.index_of(id("f"))];
    v.require(std::abs(a1 - 0.9074) <= 1e-3, "padded M(a) = " + std::to_string(a1));
    v.require(std::abs(f1 - 0.97) <= 1e-2, "padded M(f) = " + std::to_string(f1));
    v.require(f1 > a1, "f not preferred to a after padding");

    const IndependenceReport r = independence_experiment(six, sp, SolverConfig{}, EnumerationConfig{},
                                                         {id("a"), id("f")}, 1000, {1, 0}, SolvingMode::normalized);
    v.require(r.violated, "independence_experiment did not report a violation");
    return v;
}

double jacobian_error(const SocialFramework& fw, const Valuation& m, double h) {
    const std::vector<double> s = supports(fw, sp);
    const Eigen::MatrixXd analytic = jacobian(fw, s, m);
    double worst = 0.0;
    for (std::size_t b = 0; b < fw.size(); ++b) {
        Valuation up = m, down = m;
        up[b] += h;
        down[b] -= h;
        const Valuation fu = evaluate_rhs(fw, s, up), fd = evaluate_rhs(fw, s, down);
        for (std::size_t a = 0; a < fw.size(); ++a) {
            const double fdiff = (fu[a] - fd[a]) / (2 * h);
            worst = std::max(worst, std::abs(fdiff - analytic(static_cast<Eigen::Index>(a), static_cast<Eigen::Index>(b))));
        }
    }
    return worst;
}

Verdict jacobian_check() {
    Verdict v;
    std::mt19937_64 rng(77);
    // Keep the perturbed points inside the unit cube.
    std::uniform_real_distribution<double> inner(1e-6, 1.0 - 1e-6);
    for (const auto& [name, fw] : {std::pair{"four-cycle", testing::four_cycle()},
                                   std::pair{"six-argument example", testing::ordinal_independence_example()}}) {
        for (int point = 0; point < 100; ++point) {
            Valuation m(fw.size(), 0.0);
            for (std::size_t i = 0; i < fw.size(); ++i) {
                m[i] = inner(rng);
            }
            const double err = jacobian_error(fw, m, 1e-7);
            v.require(err <= 1e-6, std::string(name) + ": max entry error " + std::to_string(err));
        }
    }
    return v;
}

Verdict axioms() {
    Verdict v;
    const WellBehavednessReport good = check_well_behaved(sp, 10000, 0);
    v.require(good.all_checkable_passed(), "product semantics failed a checkable axiom");

    OperatorTuple mutated = OperatorTuple::product(sp);
    mutated.negation = [](double x) { return 1.0 - x * x; };
    const WellBehavednessReport bad = check_well_behaved(mutated, 10000, 0);
    v.require(!bad.all_checkable_passed(), "mutated negation passed");
    const AxiomResult* inv = bad.find("negation.involutive");
    v.require(inv != nullptr && inv->status == AxiomStatus::failed && !inv->witness.empty(),
              "no witness for the involution failure");
    return v;
}

Verdict rotation_closure() {
    Verdict v;
    const SocialFramework fw = testing::four_cycle();
    const ModelSet ms = enumerate_models(fw, sp, SolverConfig{}, EnumerationConfig{});
    const EnumerationConfig ecfg;
    for (const auto& row : four_cycle_rows) {
        // a->b->c->d->a moves the value of a onto b, and so on.
        std::vector<double> rotated(4);
        for (std::size_t i = 0; i < 4; ++i) {
            rotated[(i + 1) % 4] = row[i];
        }
        // Table rows carry five digits, so compare them at that precision
        // and then require the exact model to be within dedup distance.
        const Valuation target(rotated);
        bool found = false;
        for (const auto& m : ms.models) {
            if (max_distance(m.model, target) <= 1e-4) {
                Valuation exact_rotated(4, 0.0);
                for (const auto& n : ms.models) {
                    if (max_distance(n.model, Valuation(row)) <= 1e-4) {
                        for (std::size_t i = 0; i < 4; ++i) {
                            exact_rotated[(i + 1) % 4] = n.model[i];
                        }
                    }
                }
                found = max_distance(m.model, exact_rotated) <= ecfg.dedup_distance;
            }
        }
        v.require(found, "rotated model not in the model set");
    }
    return v;
}

struct Criterion {
    const char* name;
    std::function<Verdict()> check;
    double time_limit; // seconds, 0 for none
};

} // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"1 four-cycle models and rankings", four_cycle_reproduction, 1.0},
        {"2 grid oracle at resolution 200", grid_cross_check, 30.0},
        {"3 social support of (1,0)", support_value, 0.0},
        {"4 random three-cliques", three_cliques, 60.0},
        {"5 certificate soundness", certificate_soundness, 120.0},
        {"6 ordinal independence under normalization", ordinal_independence, 10.0},
        {"7 Jacobian against finite differences", jacobian_check, 0.0},
        {"8 well-behavedness axioms", axioms, 0.0},
        {"9 rotation closure", rotation_closure, 0.0},
    };

    int failures = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = c.check();
        } catch (const std::exception& e) {
            v.ok = false;
            v.detail = std::string("exception: ") + e.what();
        }
        const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (v.ok && c.time_limit > 0 && seconds >= c.time_limit) {
            v.ok = false;
            v.detail = "took " + std::to_string(seconds) + " s";
        }
        std::printf("%s  criterion %s (%.3f s)%s%s\n", v.ok ? "PASS" : "FAIL", c.name, seconds,
                    v.ok ? "" : ": ", v.detail.c_str());
        failures += v.ok ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
