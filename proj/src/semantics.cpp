#include "socarg/semantics.hpp"

#include "socarg/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>

namespace socarg {

namespace {

double checked(double x, const char* op) {
    if (!(x >= -domain_tolerance && x <= 1.0 + domain_tolerance)) {
        std::ostringstream msg;
        msg.precision(17);
        msg << op << ": value " << x << " outside [0,1]";
        throw DomainError(msg.str());
    }
    return x;
}

} // namespace

void SemanticsConfig::validate() const {
    if (!(epsilon > 0.0) || !std::isfinite(epsilon)) {
        throw InvalidConfig("epsilon must be a finite positive number");
    }
}

double tau(const SemanticsConfig& cfg, const VoteRecord& votes) {
    if (votes.pro == 0 && votes.con == 0) {
        return 0.0;
    }
    const double pro = static_cast<double>(votes.pro);
    const double con = static_cast<double>(votes.con);
    return pro / (pro + con + cfg.epsilon);
}

double tnorm(double x, double y) {
    return checked(x, "tnorm") * checked(y, "tnorm");
}

double tconorm(double x, double y) {
    checked(x, "tconorm");
    checked(y, "tconorm");
    return x + y - x * y;
}

double negation(double x) {
    return 1.0 - checked(x, "negation");
}

double aggregate_attackers(std::span<const double> values) {
    double complement = 1.0;
    for (double v : values) {
        complement *= 1.0 - checked(v, "aggregate_attackers");
    }
    return 1.0 - complement;
}

std::vector<double> supports(const SocialFramework& fw, const SemanticsConfig& cfg,
                             const SupportOverride& tau_override) {
    cfg.validate();
    if (tau_override) {
        if (tau_override->size() != fw.size()) {
            throw InvalidConfig("support override has " + std::to_string(tau_override->size()) +
                                " entries for " + std::to_string(fw.size()) + " arguments");
        }
        for (double t : *tau_override) {
            checked(t, "support override");
        }
        return *tau_override;
    }
    std::vector<double> out(fw.size());
    for (std::size_t i = 0; i < fw.size(); ++i) {
        out[i] = tau(cfg, fw.votes(i));
    }
    return out;
}

Valuation evaluate_rhs(const SocialFramework& fw, std::span<const double> supports, const Valuation& m) {
    if (m.size() != fw.size() || supports.size() != fw.size()) {
        throw InvalidConfig("valuation size does not match the framework");
    }
    for (double v : m.values()) {
        checked(v, "evaluate_rhs");
    }
    Valuation out(fw.size(), 0.0);
    for (std::size_t a = 0; a < fw.size(); ++a) {
        double complement = 1.0;
        for (std::size_t b : fw.attackers(a)) {
            complement *= 1.0 - m[b];
        }
        out[a] = supports[a] * complement;
    }
    return out;
}

Valuation evaluate_rhs(const SocialFramework& fw, const SemanticsConfig& cfg, const Valuation& m,
                       const SupportOverride& tau_override) {
    return evaluate_rhs(fw, supports(fw, cfg, tau_override), m);
}

double residual(const SocialFramework& fw, std::span<const double> supports, const Valuation& m) {
    Valuation image = evaluate_rhs(fw, supports, m);
    double worst = 0.0;
    for (std::size_t i = 0; i < m.size(); ++i) {
        worst = std::max(worst, std::abs(m[i] - image[i]));
    }
    return worst;
}

double residual(const SocialFramework& fw, const SemanticsConfig& cfg, const Valuation& m,
                const SupportOverride& tau_override) {
    return residual(fw, supports(fw, cfg, tau_override), m);
}

OperatorTuple OperatorTuple::product(const SemanticsConfig& cfg) {
    cfg.validate();
    return OperatorTuple{
        [](double x, double y) { return socarg::tnorm(x, y); },
        [](double x, double y) { return socarg::tconorm(x, y); },
        [](double x) { return socarg::negation(x); },
        [cfg](const VoteRecord& v) { return tau(cfg, v); },
    };
}

bool WellBehavednessReport::all_checkable_passed() const {
    return std::none_of(axioms.begin(), axioms.end(),
                        [](const AxiomResult& r) { return r.status == AxiomStatus::failed; });
}

const AxiomResult* WellBehavednessReport::find(const std::string& name) const {
    auto it = std::find_if(axioms.begin(), axioms.end(), [&](const AxiomResult& r) { return r.name == name; });
    return it == axioms.end() ? nullptr : &*it;
}

const char* to_string(AxiomStatus status) {
    switch (status) {
    case AxiomStatus::passed:
        return "pass";
    case AxiomStatus::failed:
        return "FAIL";
    case AxiomStatus::not_checkable:
        return "not checkable numerically";
    }
    return "?";
}

namespace {

constexpr double axiom_tolerance = 1e-12;

class AxiomRecorder {
public:
    explicit AxiomRecorder(std::string name) { result_.name = std::move(name); }

    template <class... Parts>
    void expect(bool ok, const Parts&... parts) {
        if (ok || result_.status == AxiomStatus::failed) {
            return;
        }
        std::ostringstream w;
        w.precision(17);
        (w << ... << parts);
        result_.status = AxiomStatus::failed;
        result_.witness = w.str();
    }

    AxiomResult take() { return std::move(result_); }

private:
    AxiomResult result_;
};

AxiomResult not_checkable(std::string name) {
    return AxiomResult{std::move(name), AxiomStatus::not_checkable, {}};
}

void check_binary(WellBehavednessReport& report, const std::string& prefix,
                  const std::function<double(double, double)>& op, double identity, const char* identity_name,
                  std::span<const double> xs, std::span<const double> ys, std::span<const double> zs) {
    AxiomRecorder comm(prefix + ".commutative");
    AxiomRecorder assoc(prefix + ".associative");
    AxiomRecorder mono(prefix + ".monotone");
    AxiomRecorder ident(prefix + ".identity_" + identity_name);
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double x = xs[i], y = ys[i], z = zs[i];
        const double xy = op(x, y), yx = op(y, x);
        comm.expect(std::abs(xy - yx) <= axiom_tolerance, "x=", x, " y=", y, ": ", xy, " != ", yx);

        const double left = op(op(x, y), z), right = op(x, op(y, z));
        assoc.expect(std::abs(left - right) <= axiom_tolerance, "x=", x, " y=", y, " z=", z, ": ", left,
                     " != ", right);

        const double lo = std::min(x, z), hi = std::max(x, z);
        const double at_lo = op(lo, y), at_hi = op(hi, y);
        mono.expect(at_lo <= at_hi + axiom_tolerance, "x=", lo, " <= x'=", hi, " y=", y, ": ", at_lo, " > ",
                    at_hi);
        const double first_lo = op(y, lo), first_hi = op(y, hi);
        mono.expect(first_lo <= first_hi + axiom_tolerance, "y=", y, " x=", lo, " <= x'=", hi, ": ", first_lo,
                    " > ", first_hi);

        const double with_identity = op(x, identity);
        ident.expect(std::abs(with_identity - x) <= axiom_tolerance, "x=", x, ": op(x, ", identity, ") = ",
                     with_identity);
    }
    report.axioms.push_back(comm.take());
    report.axioms.push_back(assoc.take());
    report.axioms.push_back(mono.take());
    report.axioms.push_back(ident.take());
    report.axioms.push_back(not_checkable(prefix + ".continuous"));
}

} // namespace

WellBehavednessReport check_well_behaved(const SemanticsConfig& cfg, int samples, std::uint64_t seed) {
    return check_well_behaved(OperatorTuple::product(cfg), samples, seed);
}

WellBehavednessReport check_well_behaved(const OperatorTuple& ops, int samples, std::uint64_t seed) {
    if (samples < 1) {
        throw InvalidConfig("samples must be at least 1");
    }
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    std::vector<double> xs(samples), ys(samples), zs(samples);
    for (int i = 0; i < samples; ++i) {
        xs[i] = unit(rng);
        ys[i] = unit(rng);
        zs[i] = unit(rng);
    }
    // Endpoints are where identity and annihilator bugs hide.
    xs.front() = 0.0;
    if (samples > 1) {
        xs[1] = 1.0;
    }

    WellBehavednessReport report;
    check_binary(report, "tnorm", ops.tnorm, SemanticsConfig::top, "top", xs, ys, zs);
    check_binary(report, "tconorm", ops.tconorm, SemanticsConfig::bottom, "bottom", xs, ys, zs);

    AxiomRecorder anti("negation.antimonotone");
    AxiomRecorder involution("negation.involutive");
    for (int i = 0; i < samples; ++i) {
        const double lo = std::min(xs[i], ys[i]), hi = std::max(xs[i], ys[i]);
        const double n_lo = ops.negation(lo), n_hi = ops.negation(hi);
        anti.expect(n_lo + axiom_tolerance >= n_hi, "x=", lo, " <= x'=", hi, ": neg(x)=", n_lo, " < neg(x')=",
                    n_hi);
        const double twice = ops.negation(ops.negation(xs[i]));
        involution.expect(std::abs(twice - xs[i]) <= axiom_tolerance, "x=", xs[i], ": neg(neg(x))=", twice);
    }
    AxiomRecorder bottom("negation.bottom_to_top");
    const double n_bottom = ops.negation(SemanticsConfig::bottom);
    bottom.expect(std::abs(n_bottom - SemanticsConfig::top) <= axiom_tolerance, "neg(0)=", n_bottom);
    AxiomRecorder top("negation.top_to_bottom");
    const double n_top = ops.negation(SemanticsConfig::top);
    top.expect(std::abs(n_top - SemanticsConfig::bottom) <= axiom_tolerance, "neg(1)=", n_top);
    report.axioms.push_back(anti.take());
    report.axioms.push_back(bottom.take());
    report.axioms.push_back(top.take());
    report.axioms.push_back(involution.take());
    report.axioms.push_back(not_checkable("negation.continuous"));

    AxiomRecorder pro("support.monotone_pro");
    AxiomRecorder con("support.antimonotone_con");
    constexpr std::uint64_t grid = 10;
    for (std::uint64_t p = 0; p <= grid; ++p) {
        for (std::uint64_t c = 0; c <= grid; ++c) {
            const double here = ops.support({p, c});
            pro.expect(here >= SemanticsConfig::bottom && here <= SemanticsConfig::top, "votes (", p, ",", c,
                       "): support ", here, " outside [0,1]");
            if (p < grid) {
                const double more_pro = ops.support({p + 1, c});
                pro.expect(more_pro + axiom_tolerance >= here, "votes (", p, ",", c, ") -> (", p + 1, ",", c,
                           "): ", here, " > ", more_pro);
            }
            if (c < grid) {
                const double more_con = ops.support({p, c + 1});
                // With no votes at all tau is pinned to 0, so (0,0)->(0,1) is 0 -> 0.
                con.expect(more_con <= here + axiom_tolerance, "votes (", p, ",", c, ") -> (", p, ",", c + 1,
                           "): ", here, " < ", more_con);
            }
        }
    }
    report.axioms.push_back(pro.take());
    report.axioms.push_back(con.take());
    return report;
}

} // namespace socarg
