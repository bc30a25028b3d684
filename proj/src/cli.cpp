#include "socarg/cli.hpp"

#include "socarg/analysis.hpp"
#include "socarg/enumeration.hpp"
#include "socarg/errors.hpp"
#include "socarg/result_output.hpp"
#include "socarg/saf_format.hpp"
#include "socarg/semantics.hpp"
#include "socarg/solver.hpp"

#include "CLI11.hpp"

#include <cmath>
#include <iostream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace socarg {

namespace {

struct Options {
    double epsilon = 0.1;
    double tolerance = 1e-12;
    int max_iterations = 10000;
    double damping = 0.5;
    int starts = 256;
    std::uint64_t seed = 0;
    double dedup = 1e-6;
    std::string output = "table";
    bool normalize = false;

    std::string file;
    bool oracle = false;
    int resolution = 200;
    std::vector<double> clique;
    std::string focus;
    std::size_t pad = 0;
    std::string pad_votes = "1,0";
    bool normalized_mode = false;
    int samples = 10000;
    bool mutate_negation = false;

    SemanticsConfig semantics() const {
        SemanticsConfig cfg{epsilon};
        cfg.validate();
        return cfg;
    }

    SolverConfig solver() const {
        SolverConfig s;
        s.tolerance = tolerance;
        s.max_iterations = max_iterations;
        s.damping = damping;
        if (!(s.newton_switch_residual > tolerance)) {
            s.newton_switch_residual = tolerance * 10.0;
        }
        s.validate();
        return s;
    }

    EnumerationConfig enumeration() const {
        EnumerationConfig e;
        e.random_starts = starts;
        e.seed = seed;
        e.dedup_distance = dedup;
        return e;
    }

    RunParameters parameters() const {
        return {epsilon, tolerance, max_iterations, damping, dedup, starts, seed, normalize};
    }
};

// A bug rather than bad input: a model that does not satisfy the equations.
void require_converged(const ModelSet& ms, double tolerance) {
    for (const auto& m : ms.models) {
        if (!(m.residual <= tolerance)) {
            throw std::logic_error("reported model has residual " + std::to_string(m.residual));
        }
    }
}

std::pair<std::string, std::string> split_pair(const std::string& text, const char* what) {
    const auto comma = text.find(',');
    if (comma == std::string::npos || text.find(',', comma + 1) != std::string::npos) {
        throw InvalidConfig(std::string(what) + " must have the form X,Y");
    }
    return {text.substr(0, comma), text.substr(comma + 1)};
}

std::uint64_t parse_count(const std::string& text) {
    if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos) {
        throw InvalidConfig("vote count '" + text + "' is not a non-negative integer");
    }
    return std::stoull(text);
}

ResultEnvelope models_envelope(const std::string& command, const SocialFramework& fw, const Options& opt) {
    const SemanticsConfig cfg = opt.semantics();
    const SolverConfig scfg = opt.solver();
    ResultEnvelope env{command, FrameworkDigest::of(fw), opt.parameters(), ModelsPayload{}, {}};

    if (command == "solve") {
        if (opt.normalize) {
            NormalizedSolution sol = normalized_solve(fw, cfg, scfg, opt.enumeration());
            ModelsPayload payload;
            payload.arguments.assign(fw.arguments().begin(), fw.arguments().end());
            payload.value_kind = "score";
            payload.rows.push_back({sol.scores, residual(fw, normalized_supports(fw, cfg), sol.model),
                                    rank_values(fw.arguments(), sol.scores).to_string()});
            env.payload = std::move(payload);
            env.metadata.starts = sol.models.starts_used;
            return env;
        }
        const std::vector<double> s = supports(fw, cfg);
        SolveOutcome outcome = solve(fw, s, scfg, support_start(fw, s));
        ModelSet single;
        single.models.push_back({outcome.model, outcome.residual});
        single.starts_used = 1;
        require_converged(single, scfg.tolerance);
        env.payload = models_payload(fw, single);
        env.metadata.iterations = outcome.iterations;
        env.metadata.starts = 1;
        return env;
    }

    ModelSet ms;
    if (opt.oracle) {
        ms = grid_oracle(fw, cfg, opt.resolution, scfg, opt.dedup);
    } else if (opt.normalize) {
        ms = normalized_solve(fw, cfg, scfg, opt.enumeration()).models;
    } else {
        ms = enumerate_models(fw, cfg, scfg, opt.enumeration());
    }
    require_converged(ms, scfg.tolerance);
    env.payload = models_payload(fw, ms);
    env.metadata.starts = ms.starts_used;
    env.metadata.nonconverged = ms.nonconverged;
    env.metadata.exhaustive = ms.exhaustive;
    return env;
}

int run(const std::string& command, const Options& opt, std::ostream& out) {
    const OutputFormat format = opt.output == "json" ? OutputFormat::json : OutputFormat::table;

    if (command == "axioms") {
        const SemanticsConfig cfg = opt.semantics();
        OperatorTuple ops = OperatorTuple::product(cfg);
        if (opt.mutate_negation) {
            ops.negation = [](double x) { return 1.0 - x * x; };
        }
        ResultEnvelope env{command, {}, opt.parameters(),
                           AxiomsPayload{check_well_behaved(ops, opt.samples, opt.seed), opt.samples}, {}};
        out << emit_result(env, format);
        return std::get<AxiomsPayload>(env.payload).report.all_checkable_passed() ? exit_success
                                                                                  : exit_invariant_breach;
    }

    if (command == "three-clique") {
        const double a1 = opt.clique[0], a2 = opt.clique[1], a3 = opt.clique[2];
        const auto x = solve_three_clique(a1, a2, a3, opt.tolerance);
        const double r = std::max({std::abs(x[0] - a1 * (1 - x[1]) * (1 - x[2])),
                                   std::abs(x[1] - a2 * (1 - x[0]) * (1 - x[2])),
                                   std::abs(x[2] - a3 * (1 - x[0]) * (1 - x[1]))});
        ResultEnvelope env{command, {3, 6}, opt.parameters(), ThreeCliquePayload{{a1, a2, a3}, x, r}, {}};
        out << emit_result(env, format);
        return exit_success;
    }

    const SocialFramework fw = load_saf_file(opt.file);
    const SemanticsConfig cfg = opt.semantics();

    if (command == "certify") {
        SupportOverride scaled;
        if (opt.normalize && !fw.empty()) {
            scaled = normalized_supports(fw, cfg);
        }
        ResultEnvelope env{command, FrameworkDigest::of(fw), opt.parameters(),
                           CertificatePayload{certify_uniqueness(fw, cfg, scaled)}, {}};
        out << emit_result(env, format);
        return exit_success;
    }

    if (command == "independence") {
        const auto [first, second] = split_pair(opt.focus, "--focus");
        const auto [pro, con] = split_pair(opt.pad_votes, "--pad-votes");
        const SolvingMode mode = opt.normalized_mode || opt.normalize ? SolvingMode::normalized : SolvingMode::raw;
        IndependenceReport report = independence_experiment(
            fw, cfg, opt.solver(), opt.enumeration(), {ArgumentId(first), ArgumentId(second)}, opt.pad,
            VoteRecord{parse_count(pro), parse_count(con)}, mode);
        ResultEnvelope env{command, FrameworkDigest::of(fw), opt.parameters(), IndependencePayload{report, mode}, {}};
        out << emit_result(env, format);
        return exit_success;
    }

    out << emit_result(models_envelope(command, fw, opt), format);
    return exit_success;
}

void add_file(CLI::App* sub, Options& opt) {
    sub->add_option("FILE", opt.file, "Framework in .saf format")->required();
}

} // namespace

int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Options opt;
    CLI::App app{"Social abstract argumentation under the simple product semantics", "socarg"};
    app.fallthrough();
    app.require_subcommand(1);

    app.add_option("--epsilon", opt.epsilon, "Vote smoothing constant (> 0)")->capture_default_str();
    app.add_option("--tol", opt.tolerance, "Max-norm residual target")->capture_default_str();
    app.add_option("--max-iter", opt.max_iterations, "Iteration budget per solve")->capture_default_str();
    app.add_option("--damping", opt.damping, "Picard damping in (0,1]")->capture_default_str();
    app.add_option("--starts", opt.starts, "Random starts for enumeration")->capture_default_str();
    app.add_option("--seed", opt.seed, "Seed for random starts and samplers")->capture_default_str();
    app.add_option("--dedup", opt.dedup, "Max-norm distance below which models are merged")->capture_default_str();
    app.add_option("--output", opt.output, "Output format")
        ->check(CLI::IsMember({"json", "table"}))
        ->capture_default_str();
    app.add_flag("--normalize", opt.normalize, "Divide supports by |A| before solving and rescale after");

    auto* solve_cmd = app.add_subcommand("solve", "Compute one social model from the support vector");
    add_file(solve_cmd, opt);

    auto* enumerate_cmd = app.add_subcommand("enumerate", "Search for all social models");
    add_file(enumerate_cmd, opt);
    enumerate_cmd->add_flag("--oracle", opt.oracle, "Use the exhaustive grid scan (at most 4 arguments)");
    enumerate_cmd->add_option("--resolution", opt.resolution, "Grid resolution for --oracle")->capture_default_str();

    auto* certify_cmd = app.add_subcommand("certify", "Check the sufficient condition for a unique model");
    add_file(certify_cmd, opt);

    auto* rank_cmd = app.add_subcommand("rank", "Rank arguments in every model found");
    add_file(rank_cmd, opt);

    auto* clique_cmd = app.add_subcommand("three-clique", "Unique model of the full three-clique");
    clique_cmd->add_option("SUPPORTS", opt.clique, "Supports a1 a2 a3 in (0,1)")->required()->expected(3);

    auto* independence_cmd = app.add_subcommand("independence", "Ordinal independence under isolated padding");
    add_file(independence_cmd, opt);
    independence_cmd->add_option("--focus", opt.focus, "Focus pair X,Y")->required();
    independence_cmd->add_option("--pad", opt.pad, "Number of isolated arguments to add")->capture_default_str();
    independence_cmd->add_option("--pad-votes", opt.pad_votes, "Votes P,C of each padding argument")
        ->capture_default_str();
    independence_cmd->add_flag("--normalized", opt.normalized_mode, "Compare normalized scores");

    auto* axioms_cmd = app.add_subcommand("axioms", "Sample the well-behavedness axioms");
    axioms_cmd->add_option("--samples", opt.samples, "Sample count")->capture_default_str();
    axioms_cmd->add_flag("--mutate-negation", opt.mutate_negation, "Check x -> 1 - x^2 in place of negation");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? exit_success : exit_input_error;
    }

    const std::string command = app.get_subcommands().front()->get_name();
    try {
        return run(command, opt, out);
    } catch (const NonConvergence& e) {
        err << "error: " << e.what() << "\n";
        return exit_nonconvergence;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::out_of_range& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return exit_invariant_breach;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return exit_input_error;
    }
}

} // namespace socarg
