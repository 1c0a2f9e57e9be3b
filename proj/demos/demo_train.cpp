// Trains a small Q-learning agent to pick a 5-step coin sequence and checks
// the result against exhaustive enumeration.

#include <cstdio>

#include "qwalk/qwalk.hpp"

int main() {
    qwalk::TrainConfig config;
    config.n_steps = 5;
    config.n_episodes = 20000;
    config.seed = 7;

    const qwalk::TrainingRecord record = qwalk::train(config);
    std::printf("greedy sequence after %d episodes: %s\n", config.n_episodes,
                qwalk::format_sequence_plain(record.greedy_sequence).c_str());

    const auto ranking = qwalk::brute_force_search(
        config.n_steps, 1000, qwalk::StateDistribution::fixed_phi_zero, config.seed);
    std::printf("brute-force top 3 of %zu sequences:\n", ranking.size());
    for (int i = 0; i < 3; ++i) {
        std::printf("  %s  mean Schmidt %.9f\n",
                    qwalk::format_sequence_plain(ranking[i].sequence).c_str(),
                    ranking[i].mean);
    }
    return 0;
}
