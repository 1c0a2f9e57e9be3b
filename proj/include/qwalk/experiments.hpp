#pragma once

// Experiment runners behind the CLI: each one wires the library into a
// deterministic, seedable computation and emits a CSV (the authoritative
// output) plus an SVG rendering of the same data. Identical configuration
// and seed produce identical CSV bytes.

#include <algorithm>
#include <cstdint>
#include <filesystem>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "qwalk/asymptotics.hpp"
#include "qwalk/csv.hpp"
#include "qwalk/entanglement.hpp"
#include "qwalk/rl.hpp"
#include "qwalk/rng.hpp"
#include "qwalk/sequences.hpp"
#include "qwalk/svg_plot.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

namespace detail {

inline std::filesystem::path prepare_dir(const std::filesystem::path& dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec)
        throw std::runtime_error("cannot create output directory " + dir.string() + ": " +
                                 ec.message());
    return dir;
}

inline std::vector<double> random_thetas(int n, Rng& rng) {
    std::vector<double> v(static_cast<std::size_t>(n));
    for (double& x : v) x = rng.uniform(0.0, std::numbers::pi);
    return v;
}

}  // namespace detail

struct ExperimentOutput {
    std::vector<std::filesystem::path> files;
};

// Schmidt norm of the universal sequence against theta, one curve per m.
struct UniversalConfig {
    std::vector<int> m_list{1, 2, 3, 4, 5};
    int theta_grid = 101;
};

inline ExperimentOutput run_fig_universal(const UniversalConfig& config,
                                          const std::filesystem::path& out_dir) {
    if (config.m_list.empty())
        throw std::invalid_argument("run_fig_universal: empty m list");
    if (config.theta_grid < 1)
        throw std::invalid_argument("run_fig_universal: theta_grid must be positive");
    detail::prepare_dir(out_dir);
    const double sqrt2 = std::numbers::sqrt2;
    const double asym = asymptotic_schmidt_closed_form();
    const std::vector<double> thetas = linspace(0.0, std::numbers::pi, config.theta_grid);

    CsvWriter csv(out_dir / "universal.csv");
    csv.header({"m", "n", "theta", "schmidt", "sqrt2_ref", "asymptotic_ref"});
    std::vector<PlotSeries> series;
    for (int m : config.m_list) {
        const SequenceEvaluation eval = evaluate_sequence(universal_sequence(m), thetas, 0.0);
        PlotSeries s{"m=" + std::to_string(m), {}};
        for (const auto& [theta, schmidt] : eval.per_theta) {
            csv.row().col(m).col(2 * m + 1).col(theta).col(schmidt).col(sqrt2).col(asym);
            s.points.emplace_back(theta, schmidt);
        }
        series.push_back(std::move(s));
    }
    csv.close();
    write_line_plot(out_dir / "universal.svg", "Universal sequence Schmidt norm", "theta",
                    "Schmidt norm", series,
                    {{"sqrt(2)", sqrt2}, {"asymptotic", asym}});
    return {{out_dir / "universal.csv", out_dir / "universal.svg"}};
}

// Mean Schmidt norm of the universal sequence against its length n = 2m+1.
struct ConvergenceConfig {
    int m_max = 30;
    int samples = 1000;
    std::uint64_t seed = 42;
};

inline ExperimentOutput run_fig_convergence(const ConvergenceConfig& config,
                                            const std::filesystem::path& out_dir) {
    if (config.m_max < 1)
        throw std::invalid_argument("run_fig_convergence: m_max must be >= 1");
    if (config.samples < 1)
        throw std::invalid_argument("run_fig_convergence: samples must be >= 1");
    detail::prepare_dir(out_dir);
    Rng rng(config.seed);

    CsvWriter csv(out_dir / "convergence.csv");
    csv.header({"m", "n", "mean_schmidt", "variance"});
    PlotSeries s{"mean over random theta", {}};
    for (int m = 1; m <= config.m_max; ++m) {
        const std::vector<double> thetas = detail::random_thetas(config.samples, rng);
        const SequenceEvaluation eval = evaluate_sequence(universal_sequence(m), thetas, 0.0);
        csv.row().col(m).col(2 * m + 1).col(eval.mean).col(eval.variance);
        s.points.emplace_back(2 * m + 1, eval.mean);
    }
    csv.close();
    write_line_plot(out_dir / "convergence.svg", "Universal sequence convergence",
                    "steps n", "mean Schmidt norm", {s},
                    {{"sqrt(2)", std::numbers::sqrt2},
                     {"asymptotic", asymptotic_schmidt_closed_form()}});
    return {{out_dir / "convergence.csv", out_dir / "convergence.svg"}};
}

// Mean Schmidt norm of the generalized-Hadamard universal sequence over a
// grid of omega, one curve per m.
struct OmegaSweepConfig {
    std::vector<int> m_list{2, 3, 7};
    int grid = 101;
    int samples = 1000;
    std::uint64_t seed = 42;
};

inline ExperimentOutput run_fig_omega_sweep(const OmegaSweepConfig& config,
                                            const std::filesystem::path& out_dir) {
    if (config.m_list.empty())
        throw std::invalid_argument("run_fig_omega_sweep: empty m list");
    if (config.grid < 2)
        throw std::invalid_argument("run_fig_omega_sweep: grid must have at least 2 points");
    if (config.samples < 1)
        throw std::invalid_argument("run_fig_omega_sweep: samples must be >= 1");
    detail::prepare_dir(out_dir);
    // Common random thetas across every (m, omega) cell make the curves and
    // the comparison against omega = pi/4 free of sampling noise.
    Rng rng(config.seed);
    const std::vector<double> thetas = detail::random_thetas(config.samples, rng);
    const std::vector<double> omegas = linspace(0.0, 0.5 * std::numbers::pi, config.grid);

    CsvWriter csv(out_dir / "omega_sweep.csv");
    csv.header({"m", "n", "omega", "mean_schmidt", "variance"});
    std::vector<PlotSeries> series;
    for (int m : config.m_list) {
        PlotSeries s{"n=" + std::to_string(2 * m + 1), {}};
        for (double omega : omegas) {
            const SequenceEvaluation eval =
                evaluate_sequence(generalized_universal_sequence(m, omega), thetas, 0.0);
            csv.row().col(m).col(2 * m + 1).col(omega).col(eval.mean).col(eval.variance);
            s.points.emplace_back(omega, eval.mean);
        }
        series.push_back(std::move(s));
    }
    csv.close();
    write_line_plot(out_dir / "omega_sweep.svg", "Generalized Hadamard sweep", "omega",
                    "mean Schmidt norm", series, {{"sqrt(2)", std::numbers::sqrt2}});
    return {{out_dir / "omega_sweep.csv", out_dir / "omega_sweep.svg"}};
}

// Asymptotic reduced state per theta (phi = 0), with internal consistency
// checks: the limit state is planar and its Schmidt norm theta-independent.
struct AsymptoticConfig {
    int theta_grid = 101;
    int quadrature = 512;
};

inline ExperimentOutput run_asymptotic_report(const AsymptoticConfig& config,
                                              const std::filesystem::path& out_dir) {
    if (config.theta_grid < 1)
        throw std::invalid_argument("run_asymptotic_report: theta_grid must be positive");
    detail::prepare_dir(out_dir);
    const std::vector<double> thetas = linspace(0.0, std::numbers::pi, config.theta_grid);

    CsvWriter csv(out_dir / "asymptotic.csv");
    csv.header({"theta", "a0", "a1", "a2", "a3", "schmidt", "closed_form_schmidt"});
    PlotSeries s{"asymptotic Schmidt", {}};
    for (double theta : thetas) {
        const AsymptoticResult r =
            asymptotic_reduced_state(InitialStateParams(theta, 0.0), config.quadrature);
        if (std::abs(r.bloch.a3) > 1e-10)
            throw std::logic_error("run_asymptotic_report: limit state left the x-y plane");
        if (std::abs(r.schmidt - r.closed_form_schmidt) > 1e-8)
            throw std::logic_error("run_asymptotic_report: Schmidt norm depends on theta");
        csv.row()
            .col(theta)
            .col(r.bloch.a0)
            .col(r.bloch.a1)
            .col(r.bloch.a2)
            .col(r.bloch.a3)
            .col(r.schmidt)
            .col(r.closed_form_schmidt);
        s.points.emplace_back(theta, r.schmidt);
    }
    csv.close();
    write_line_plot(out_dir / "asymptotic.svg", "Asymptotic Schmidt norm", "theta",
                    "Schmidt norm", {s},
                    {{"closed form", asymptotic_schmidt_closed_form()}});
    return {{out_dir / "asymptotic.csv", out_dir / "asymptotic.svg"}};
}

// Final Schmidt norm of one sequence per theta.
struct EvalSeqConfig {
    CoinSequence sequence;
    std::vector<double> thetas;
    double phi = 0.0;
};

struct EvalSeqResult {
    ExperimentOutput output;
    SequenceEvaluation evaluation;
};

inline EvalSeqResult run_eval_seq(const EvalSeqConfig& config,
                                  const std::filesystem::path& out_dir) {
    detail::prepare_dir(out_dir);
    const SequenceEvaluation eval =
        evaluate_sequence(config.sequence, config.thetas, config.phi);

    CsvWriter csv(out_dir / "eval_seq.csv");
    csv.header({"theta", "phi", "schmidt"});
    PlotSeries s{format_sequence(config.sequence), {}};
    for (const auto& [theta, schmidt] : eval.per_theta) {
        csv.row().col(theta).col(config.phi).col(schmidt);
        s.points.emplace_back(theta, schmidt);
    }
    csv.close();
    write_line_plot(out_dir / "eval_seq.svg", "Sequence evaluation", "theta",
                    "Schmidt norm", {s}, {{"sqrt(2)", std::numbers::sqrt2}});
    return {{{out_dir / "eval_seq.csv", out_dir / "eval_seq.svg"}}, eval};
}

// Exhaustive sequence ranking.
struct BruteForceConfig {
    int steps = 5;
    int samples = 1000;
    StateDistribution distribution = StateDistribution::fixed_phi_zero;
    std::uint64_t seed = 42;
};

struct BruteForceResult {
    ExperimentOutput output;
    std::vector<BruteForceEntry> ranking;
};

inline BruteForceResult run_brute_force(const BruteForceConfig& config,
                                        const std::filesystem::path& out_dir) {
    detail::prepare_dir(out_dir);
    std::vector<BruteForceEntry> ranking =
        brute_force_search(config.steps, config.samples, config.distribution, config.seed);

    CsvWriter csv(out_dir / "brute_force.csv");
    csv.header({"rank", "sequence", "mean_schmidt", "variance"});
    PlotSeries s{"mean Schmidt by rank", {}};
    for (std::size_t i = 0; i < ranking.size(); ++i) {
        csv.row()
            .col(i + 1)
            .col(format_sequence_plain(ranking[i].sequence))
            .col(ranking[i].mean)
            .col(ranking[i].variance);
        s.points.emplace_back(static_cast<double>(i + 1), ranking[i].mean);
    }
    csv.close();
    write_line_plot(out_dir / "brute_force.svg", "Brute-force sequence ranking", "rank",
                    "mean Schmidt norm", {s}, {{"sqrt(2)", std::numbers::sqrt2}});
    return {{{out_dir / "brute_force.csv", out_dir / "brute_force.svg"}}, std::move(ranking)};
}

// Q-learning over `runs` independently seeded agents: learning curves, the
// modal greedy sequence, and that sequence's (theta, phi) Schmidt surface.
struct OptimizeConfig {
    int n_steps = 5;
    StateDistribution distribution = StateDistribution::fixed_phi_zero;
    int episodes = 0;  // 0 selects the default for the step count
    int runs = 1;
    double learning_rate = 0.7;
    double eps_init = 0.9;
    double eps_fin = 0.01;
    std::uint64_t seed = 42;
    int surface_grid = 101;
};

struct OptimizeResult {
    ExperimentOutput output;
    CoinSequence modal_sequence;
    std::map<std::string, int> sequence_counts;
};

inline int default_episode_count(int n_steps) { return n_steps <= 7 ? 20000 : 100000; }

inline OptimizeResult run_optimize(const OptimizeConfig& config,
                                   const std::filesystem::path& out_dir) {
    if (config.runs < 1)
        throw std::invalid_argument("run_optimize: runs must be >= 1");
    if (config.surface_grid < 2)
        throw std::invalid_argument("run_optimize: surface_grid must have at least 2 points");
    detail::prepare_dir(out_dir);
    const int episodes =
        config.episodes > 0 ? config.episodes : default_episode_count(config.n_steps);

    TrainConfig base;
    base.n_steps = config.n_steps;
    base.n_episodes = episodes;
    base.learning_rate = config.learning_rate;
    base.eps_init = config.eps_init;
    base.eps_fin = config.eps_fin;
    base.distribution = config.distribution;
    base.validate();

    std::vector<std::vector<double>> rewards;
    rewards.reserve(static_cast<std::size_t>(config.runs));
    std::map<std::string, int> counts;
    CsvWriter runs_csv(out_dir / "runs.csv");
    runs_csv.header({"run", "stream_seed", "greedy_sequence"});
    for (int run = 0; run < config.runs; ++run) {
        TrainConfig tc = base;
        tc.seed = derive_stream_seed(config.seed, static_cast<std::uint64_t>(run));
        TrainingRecord record = train(tc);
        const std::string greedy = format_sequence_plain(record.greedy_sequence);
        counts[greedy] += 1;
        runs_csv.row().col(run).col(std::to_string(tc.seed)).col(greedy);
        rewards.push_back(std::move(record.episode_rewards));
    }
    runs_csv.close();

    // Modal greedy sequence; count ties resolve to the lexicographically
    // smallest string so the output is deterministic.
    std::string modal;
    int best_count = -1;
    for (const auto& [sequence, count] : counts) {
        if (count > best_count) {
            modal = sequence;
            best_count = count;
        }
    }
    const CoinSequence modal_seq = parse_sequence(modal);

    CsvWriter curve_csv(out_dir / "learning_curve.csv");
    curve_csv.header({"episode", "mean_reward", "stderr"});
    PlotSeries curve{"mean episodic reward", {}};
    const int stride = std::max(1, episodes / 2000);
    for (int e = 0; e < episodes; ++e) {
        double mean = 0.0;
        for (const auto& r : rewards) mean += r[static_cast<std::size_t>(e)];
        mean /= static_cast<double>(config.runs);
        double se = 0.0;
        if (config.runs > 1) {
            double ss = 0.0;
            for (const auto& r : rewards) {
                const double d = r[static_cast<std::size_t>(e)] - mean;
                ss += d * d;
            }
            se = std::sqrt(ss / static_cast<double>(config.runs - 1)) /
                 std::sqrt(static_cast<double>(config.runs));
        }
        curve_csv.row().col(e).col(mean).col(se);
        if (e % stride == 0) curve.points.emplace_back(static_cast<double>(e), mean);
    }
    curve_csv.close();
    write_line_plot(out_dir / "learning_curve.svg", "Q-learning reward", "episode",
                    "mean episodic reward", {curve}, {{"sqrt(2)", std::numbers::sqrt2}});

    std::ofstream seq_file(out_dir / "best_sequence.txt", std::ios::binary | std::ios::trunc);
    seq_file << modal << '\n';
    seq_file.close();
    if (!seq_file)
        throw std::runtime_error("run_optimize: write failure on best_sequence.txt");

    // Schmidt surface of the modal sequence over the full (theta, phi) square.
    const std::vector<double> thetas = linspace(0.0, std::numbers::pi, config.surface_grid);
    const std::vector<double> phis =
        linspace(0.0, 2.0 * std::numbers::pi, config.surface_grid);
    CsvWriter surface_csv(out_dir / "schmidt_surface.csv");
    surface_csv.header({"theta", "phi", "schmidt"});
    std::vector<std::vector<double>> grid(phis.size());
    WalkerCoinState state(InitialStateParams(0.0, 0.0), config.n_steps);
    std::vector<CoinMatrix> coins;
    for (const CoinLabel& label : modal_seq) coins.push_back(label.resolve());
    for (std::size_t pi_idx = 0; pi_idx < phis.size(); ++pi_idx)
        grid[pi_idx].resize(thetas.size());
    for (std::size_t ti = 0; ti < thetas.size(); ++ti) {
        for (std::size_t pi_idx = 0; pi_idx < phis.size(); ++pi_idx) {
            state.reset(InitialStateParams(thetas[ti], phis[pi_idx]));
            for (const CoinMatrix& coin : coins) state.step(coin);
            const double s = schmidt_norm(state);
            grid[pi_idx][ti] = s;
            surface_csv.row().col(thetas[ti]).col(phis[pi_idx]).col(s);
        }
    }
    surface_csv.close();
    write_heatmap(out_dir / "schmidt_surface.svg", "Schmidt surface of " + modal, "theta",
                  "phi", thetas, phis, grid);

    return {{{out_dir / "runs.csv", out_dir / "learning_curve.csv",
              out_dir / "learning_curve.svg", out_dir / "best_sequence.txt",
              out_dir / "schmidt_surface.csv", out_dir / "schmidt_surface.svg"}},
            modal_seq,
            counts};
}

}  // namespace qwalk
