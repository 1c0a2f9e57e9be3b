#pragma once

// Tabular Q-learning over coin sequences.
//
// An episode is one n-step walk: the RL state is the string of coins chosen
// so far ("" at the root, e.g. "HF" after two steps), the actions are H and
// F, and the only reward is the final Schmidt norm, granted on the last
// transition. With undiscounted backups the optimal greedy policy maximizes
// the expected final Schmidt norm over the sampled initial coins.
//
// Everything stochastic draws from a single mt19937_64 stream per training
// run, so a (config, seed) pair reproduces rewards and Q-table bit for bit.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "qwalk/entanglement.hpp"
#include "qwalk/rng.hpp"
#include "qwalk/sequences.hpp"
#include "qwalk/walk.hpp"

namespace qwalk {

enum class CoinAction : int { hadamard = 0, fourier = 1 };

inline char action_letter(CoinAction a) {
    return a == CoinAction::hadamard ? 'H' : 'F';
}

inline CoinMatrix action_coin(CoinAction a) {
    return a == CoinAction::hadamard ? hadamard_coin() : fourier_coin();
}

// Q(s, a) keyed by the child history s + letter(a); every nonempty history
// names exactly one (state, action) pair, so the table needs no composite
// key. Missing entries read as 0 (the initialization value).
class QTable {
public:
    explicit QTable(int n_steps) : n_steps_(n_steps) {
        if (n_steps < 1) throw std::invalid_argument("QTable: n_steps must be >= 1");
    }

    int n_steps() const { return n_steps_; }

    double value(const std::string& history, CoinAction a) const {
        check_state(history);
        auto it = values_.find(history + action_letter(a));
        return it == values_.end() ? 0.0 : it->second;
    }

    void set_value(const std::string& history, CoinAction a, double q) {
        check_state(history);
        values_[history + action_letter(a)] = q;
    }

    double max_value(const std::string& history) const {
        return std::max(value(history, CoinAction::hadamard),
                        value(history, CoinAction::fourier));
    }

    CoinAction greedy_action(const std::string& history) const {
        // Ties resolve to H; training-time tie breaks are randomized in
        // select_action instead.
        return value(history, CoinAction::fourier) > value(history, CoinAction::hadamard)
                   ? CoinAction::fourier
                   : CoinAction::hadamard;
    }

    std::size_t entry_count() const { return values_.size(); }

    // Entries sorted by key, for serialization and comparison.
    std::vector<std::pair<std::string, double>> sorted_entries() const {
        std::vector<std::pair<std::string, double>> entries(values_.begin(), values_.end());
        std::sort(entries.begin(), entries.end());
        return entries;
    }

private:
    void check_state(const std::string& history) const {
        if (static_cast<int>(history.size()) >= n_steps_)
            throw std::invalid_argument("QTable: history is already terminal");
    }

    int n_steps_;
    std::unordered_map<std::string, double> values_;
};

// Epsilon-greedy: with probability eps a uniformly random action, otherwise
// the greedy action with uniformly random tie-breaking.
inline CoinAction select_action(const QTable& q, const std::string& history,
                                double eps, Rng& rng) {
    if (rng.bernoulli(eps))
        return rng.index(2) == 0 ? CoinAction::hadamard : CoinAction::fourier;
    const double qh = q.value(history, CoinAction::hadamard);
    const double qf = q.value(history, CoinAction::fourier);
    if (qh == qf)
        return rng.index(2) == 0 ? CoinAction::hadamard : CoinAction::fourier;
    return qf > qh ? CoinAction::fourier : CoinAction::hadamard;
}

// Undiscounted one-step backup:
//   Q(s, a) += lr * (reward + max_a' Q(s', a') - Q(s, a)),
// with max_a' Q(terminal, a') = 0. s' is terminal when it has n_steps coins.
inline void td_update(QTable& q, const std::string& history, CoinAction a,
                      double reward, const std::string& next_history, double lr) {
    const double bootstrap =
        static_cast<int>(next_history.size()) >= q.n_steps() ? 0.0
                                                             : q.max_value(next_history);
    const double old = q.value(history, a);
    q.set_value(history, a, old + lr * (reward + bootstrap - old));
}

enum class StateDistribution {
    fixed_phi_zero,  // theta ~ U[0, pi], phi = 0
    fully_random,    // theta ~ U[0, pi], phi ~ U[0, 2*pi]
};

struct TrainConfig {
    int n_steps = 5;
    int n_episodes = 20000;
    double learning_rate = 0.7;
    double eps_init = 0.9;
    double eps_fin = 0.01;
    StateDistribution distribution = StateDistribution::fixed_phi_zero;
    std::uint64_t seed = 0;

    void validate() const {
        if (n_steps < 1) throw std::invalid_argument("TrainConfig: n_steps must be >= 1");
        if (n_episodes < 1) throw std::invalid_argument("TrainConfig: n_episodes must be >= 1");
        if (!(learning_rate > 0.0 && learning_rate <= 1.0))
            throw std::invalid_argument("TrainConfig: learning_rate must lie in (0, 1]");
        if (!(eps_init >= 0.0 && eps_init <= 1.0 && eps_fin >= 0.0 && eps_fin <= 1.0))
            throw std::invalid_argument("TrainConfig: epsilon bounds must lie in [0, 1]");
        if (eps_init < eps_fin)
            throw std::invalid_argument("TrainConfig: eps_init must be >= eps_fin");
    }
};

// Exponential exploration decay over the training horizon:
//   eps(i) = (eps_init - eps_fin) * exp(-8 i / n_episodes) + eps_fin.
inline double epsilon_schedule(int episode, const TrainConfig& config) {
    return (config.eps_init - config.eps_fin) *
               std::exp(-8.0 * static_cast<double>(episode) /
                        static_cast<double>(config.n_episodes)) +
           config.eps_fin;
}

inline InitialStateParams sample_initial_state(StateDistribution dist, Rng& rng) {
    const double theta = rng.uniform(0.0, std::numbers::pi);
    const double phi =
        dist == StateDistribution::fully_random ? rng.uniform(0.0, 2.0 * std::numbers::pi) : 0.0;
    return InitialStateParams(theta, phi);
}

// Greedy coin sequence read off the table from the root, ties to H.
inline CoinSequence greedy_policy(const QTable& q) {
    CoinSequence seq;
    std::string history;
    for (int t = 0; t < q.n_steps(); ++t) {
        const CoinAction a = q.greedy_action(history);
        seq.push_back(a == CoinAction::hadamard ? CoinLabel::H() : CoinLabel::F());
        history += action_letter(a);
    }
    return seq;
}

struct TrainingRecord {
    std::vector<double> episode_rewards;
    QTable q_table{1};
    CoinSequence greedy_sequence;
};

// Runs tabular Q-learning for config.n_episodes episodes. Each episode
// samples an initial coin, rolls out one n-step walk choosing coins
// epsilon-greedily, computes the final Schmidt norm as the lone reward, and
// applies td_update online after each transition in step order.
inline TrainingRecord train(const TrainConfig& config) {
    config.validate();
    TrainingRecord record{.episode_rewards = {}, .q_table = QTable(config.n_steps), .greedy_sequence = {}};
    record.episode_rewards.reserve(static_cast<std::size_t>(config.n_episodes));
    Rng rng(config.seed);

    WalkerCoinState state(InitialStateParams(0.0, 0.0), config.n_steps);
    std::string history;
    std::vector<CoinAction> actions(static_cast<std::size_t>(config.n_steps));

    for (int episode = 0; episode < config.n_episodes; ++episode) {
        const double eps = epsilon_schedule(episode, config);
        state.reset(sample_initial_state(config.distribution, rng));
        history.clear();
        for (int t = 0; t < config.n_steps; ++t) {
            const CoinAction a = select_action(record.q_table, history, eps, rng);
            actions[static_cast<std::size_t>(t)] = a;
            state.step(action_coin(a));
            history += action_letter(a);
        }
        const double reward = schmidt_norm(state);
        record.episode_rewards.push_back(reward);

        // Intermediate transitions carry zero reward and bootstrap from the
        // successor; the final transition receives the Schmidt norm.
        history.clear();
        for (int t = 0; t < config.n_steps; ++t) {
            const CoinAction a = actions[static_cast<std::size_t>(t)];
            std::string next = history + action_letter(a);
            const bool last = t == config.n_steps - 1;
            td_update(record.q_table, history, a, last ? reward : 0.0, next,
                      config.learning_rate);
            history = std::move(next);
        }
    }
    record.greedy_sequence = greedy_policy(record.q_table);
    return record;
}

// Exhaustive scan of all 2^n_steps coin sequences, scored by the mean final
// Schmidt norm over a common set of sampled initial coins.
struct BruteForceEntry {
    CoinSequence sequence;
    double mean = 0.0;
    double variance = 0.0;
};

inline std::vector<BruteForceEntry> brute_force_search(int n_steps, int n_samples,
                                                       StateDistribution dist,
                                                       std::uint64_t seed) {
    if (n_steps < 1 || n_steps > 22)
        throw std::invalid_argument("brute_force_search: n_steps must lie in [1, 22]");
    if (n_samples < 1)
        throw std::invalid_argument("brute_force_search: n_samples must be >= 1");

    // Common random numbers: every sequence is scored on the same samples.
    Rng rng(seed);
    std::vector<InitialStateParams> samples;
    samples.reserve(static_cast<std::size_t>(n_samples));
    for (int i = 0; i < n_samples; ++i) samples.push_back(sample_initial_state(dist, rng));

    std::vector<BruteForceEntry> entries;
    entries.reserve(std::size_t{1} << n_steps);
    WalkerCoinState state(InitialStateParams(0.0, 0.0), n_steps);
    std::vector<double> schmidt(static_cast<std::size_t>(n_samples));

    const CoinMatrix h = hadamard_coin();
    const CoinMatrix f = fourier_coin();
    for (std::uint64_t code = 0; code < (std::uint64_t{1} << n_steps); ++code) {
        BruteForceEntry entry;
        // Bit t of code selects the coin of step t: 0 -> H, 1 -> F.
        for (int t = 0; t < n_steps; ++t) {
            entry.sequence.push_back((code >> t) & 1 ? CoinLabel::F() : CoinLabel::H());
        }
        for (int i = 0; i < n_samples; ++i) {
            state.reset(samples[static_cast<std::size_t>(i)]);
            for (int t = 0; t < n_steps; ++t) state.step((code >> t) & 1 ? f : h);
            schmidt[static_cast<std::size_t>(i)] = schmidt_norm(state);
        }
        double sum = 0.0;
        for (double s : schmidt) sum += s;
        entry.mean = sum / static_cast<double>(n_samples);
        double ss = 0.0;
        for (double s : schmidt) {
            const double d = s - entry.mean;
            ss += d * d;
        }
        entry.variance = ss / static_cast<double>(n_samples);
        entries.push_back(std::move(entry));
    }

    std::sort(entries.begin(), entries.end(),
              [](const BruteForceEntry& a, const BruteForceEntry& b) {
                  if (a.mean != b.mean) return a.mean > b.mean;
                  return format_sequence_plain(a.sequence) < format_sequence_plain(b.sequence);
              });
    return entries;
}

}  // namespace qwalk
