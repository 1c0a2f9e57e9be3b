// qwalk: command-line front end for the quantum-walk entanglement library.
//
// Every subcommand writes a CSV (plus an SVG rendering) into --out and is
// fully reproducible from --seed. Exit codes: 0 success, 2 configuration
// error, 1 runtime error.

#include <cstdint>
#include <cstdio>
#include <exception>
#include <filesystem>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qwalk/qwalk.hpp"

namespace {

struct CommonFlags {
    std::uint64_t seed = 42;
    std::string out_dir = "qwalk_out";
};

void add_common(CLI::App* cmd, CommonFlags& common) {
    cmd->add_option("--seed", common.seed, "Master random seed")->capture_default_str();
    cmd->add_option("--out", common.out_dir, "Output directory")->capture_default_str();
}

void report(const qwalk::ExperimentOutput& output) {
    for (const auto& path : output.files) std::printf("wrote %s\n", path.string().c_str());
}

qwalk::StateDistribution parse_distribution(const std::string& name) {
    if (name == "phi0") return qwalk::StateDistribution::fixed_phi_zero;
    if (name == "random") return qwalk::StateDistribution::fully_random;
    throw CLI::ValidationError("--dist", "must be 'phi0' or 'random'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Quantum walk hybrid-entanglement experiments"};
    app.require_subcommand(1);

    CommonFlags common;

    // eval-seq
    std::string seq_text;
    double theta = 0.0;
    int theta_grid = 101;
    double phi = 0.0;
    CLI::App* eval_cmd = app.add_subcommand("eval-seq", "Schmidt norm of one coin sequence");
    eval_cmd->add_option("--seq", seq_text, "Sequence, e.g. HFHFF or F,H^7,F,H^6")->required();
    CLI::Option* theta_opt = eval_cmd->add_option("--theta", theta, "Single theta value");
    CLI::Option* grid_opt =
        eval_cmd->add_option("--theta-grid", theta_grid, "Number of grid thetas on [0, pi]")
            ->capture_default_str();
    theta_opt->excludes(grid_opt);
    eval_cmd->add_option("--phi", phi, "Initial coin phase")->capture_default_str();
    add_common(eval_cmd, common);

    // universal
    std::vector<int> m_list{1, 2, 3, 4, 5};
    int universal_grid = 101;
    CLI::App* universal_cmd =
        app.add_subcommand("universal", "Universal sequence Schmidt norm vs theta");
    universal_cmd->add_option("--m-list", m_list, "Values of m (n = 2m+1)")
        ->delimiter(',')
        ->capture_default_str();
    universal_cmd->add_option("--theta-grid", universal_grid, "Grid thetas on [0, pi]")
        ->capture_default_str();
    add_common(universal_cmd, common);

    // converge
    int m_max = 30;
    int converge_samples = 1000;
    CLI::App* converge_cmd =
        app.add_subcommand("converge", "Universal sequence mean Schmidt norm vs n");
    converge_cmd->add_option("--m-max", m_max, "Largest m")->capture_default_str();
    converge_cmd->add_option("--samples", converge_samples, "Random thetas per point")
        ->capture_default_str();
    add_common(converge_cmd, common);

    // omega-sweep
    std::vector<int> omega_m_list{2, 3, 7};
    int omega_grid = 101;
    int omega_samples = 1000;
    CLI::App* omega_cmd =
        app.add_subcommand("omega-sweep", "Generalized Hadamard parameter sweep");
    omega_cmd->add_option("--m-list", omega_m_list, "Values of m (n = 2m+1)")
        ->delimiter(',')
        ->capture_default_str();
    omega_cmd->add_option("--grid", omega_grid, "Omega grid points on [0, pi/2]")
        ->capture_default_str();
    omega_cmd->add_option("--samples", omega_samples, "Random thetas per point")
        ->capture_default_str();
    add_common(omega_cmd, common);

    // asymptotic
    int asym_grid = 101;
    int quadrature = 512;
    CLI::App* asym_cmd =
        app.add_subcommand("asymptotic", "Long-time limit of the alternating H/F walk");
    asym_cmd->add_option("--grid", asym_grid, "Theta grid points on [0, pi]")
        ->capture_default_str();
    asym_cmd->add_option("--quadrature", quadrature, "Momentum quadrature nodes")
        ->capture_default_str();
    add_common(asym_cmd, common);

    // brute-force
    int bf_steps = 5;
    int bf_samples = 1000;
    std::string bf_dist = "phi0";
    CLI::App* bf_cmd = app.add_subcommand("brute-force", "Rank all 2^n coin sequences");
    bf_cmd->add_option("--steps", bf_steps, "Sequence length n")->capture_default_str();
    bf_cmd->add_option("--samples", bf_samples, "Random initial states")
        ->capture_default_str();
    bf_cmd->add_option("--dist", bf_dist, "Initial state distribution: phi0 or random")
        ->capture_default_str();
    add_common(bf_cmd, common);

    // train
    int train_steps = 5;
    int episodes = 0;
    int runs = 1;
    std::string train_dist = "phi0";
    double lr = 0.7;
    double eps_init = 0.9;
    double eps_fin = 0.01;
    int surface_grid = 101;
    CLI::App* train_cmd = app.add_subcommand("train", "Q-learning coin sequence search");
    train_cmd->add_option("--steps", train_steps, "Sequence length n")->capture_default_str();
    train_cmd->add_option("--episodes", episodes, "Training episodes per run (0 = default)")
        ->capture_default_str();
    train_cmd->add_option("--runs", runs, "Independently seeded training runs")
        ->capture_default_str();
    train_cmd->add_option("--dist", train_dist, "Initial state distribution: phi0 or random")
        ->capture_default_str();
    train_cmd->add_option("--lr", lr, "Learning rate")->capture_default_str();
    train_cmd->add_option("--eps-init", eps_init, "Initial exploration rate")
        ->capture_default_str();
    train_cmd->add_option("--eps-fin", eps_fin, "Final exploration rate")
        ->capture_default_str();
    train_cmd->add_option("--surface-grid", surface_grid, "Schmidt surface grid size")
        ->capture_default_str();
    add_common(train_cmd, common);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        const std::filesystem::path out_dir(common.out_dir);
        if (eval_cmd->parsed()) {
            qwalk::EvalSeqConfig config;
            config.sequence = qwalk::parse_sequence(seq_text);
            config.phi = phi;
            if (theta_opt->count() > 0)
                config.thetas = {theta};
            else
                config.thetas = qwalk::linspace(0.0, std::numbers::pi, theta_grid);
            const qwalk::EvalSeqResult result = qwalk::run_eval_seq(config, out_dir);
            std::printf("sequence %s: mean Schmidt %.17g, variance %.17g over %zu thetas\n",
                        qwalk::format_sequence(config.sequence).c_str(),
                        result.evaluation.mean, result.evaluation.variance,
                        result.evaluation.samples);
            report(result.output);
        } else if (universal_cmd->parsed()) {
            report(qwalk::run_fig_universal({m_list, universal_grid}, out_dir));
        } else if (converge_cmd->parsed()) {
            report(qwalk::run_fig_convergence({m_max, converge_samples, common.seed}, out_dir));
        } else if (omega_cmd->parsed()) {
            report(qwalk::run_fig_omega_sweep(
                {omega_m_list, omega_grid, omega_samples, common.seed}, out_dir));
        } else if (asym_cmd->parsed()) {
            report(qwalk::run_asymptotic_report({asym_grid, quadrature}, out_dir));
        } else if (bf_cmd->parsed()) {
            qwalk::BruteForceConfig config{bf_steps, bf_samples, parse_distribution(bf_dist),
                                           common.seed};
            const qwalk::BruteForceResult result = qwalk::run_brute_force(config, out_dir);
            std::printf("top sequence %s with mean Schmidt %.17g\n",
                        qwalk::format_sequence_plain(result.ranking.front().sequence).c_str(),
                        result.ranking.front().mean);
            report(result.output);
        } else if (train_cmd->parsed()) {
            qwalk::OptimizeConfig config;
            config.n_steps = train_steps;
            config.distribution = parse_distribution(train_dist);
            config.episodes = episodes;
            config.runs = runs;
            config.learning_rate = lr;
            config.eps_init = eps_init;
            config.eps_fin = eps_fin;
            config.seed = common.seed;
            config.surface_grid = surface_grid;
            const qwalk::OptimizeResult result = qwalk::run_optimize(config, out_dir);
            std::printf("modal greedy sequence: %s\n",
                        qwalk::format_sequence_plain(result.modal_sequence).c_str());
            for (const auto& [sequence, count] : result.sequence_counts)
                std::printf("  %s: %d run(s)\n", sequence.c_str(), count);
            report(result.output);
        }
    } catch (const CLI::ValidationError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const qwalk::SequenceParseError& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::invalid_argument& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::domain_error& e) {
        std::fprintf(stderr, "configuration error: %s\n", e.what());
        return 2;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "runtime error: %s\n", e.what());
        return 1;
    }
    return 0;
}
