// simulator.hpp — Monte Carlo play-through of threshold strategies on Mallows samples.
#pragma once
#include <cstdint>
#include <optional>
#include <string>

#include "secretary/strategy.hpp"
#include "secretary/theta.hpp"

namespace secretary {

struct Estimate {
    double mean = 0.0;
    double se = 0.0;

    friend bool operator==(const Estimate&, const Estimate&) = default;
};

struct SimReport {
    std::int64_t trials = 0;
    std::int64_t wins = 0;
    std::uint64_t seed = 0;
    std::string generator;
    Estimate win_rate;
    Estimate mean_selections;
    Estimate mean_stop_ratio;
    Estimate whole_list_rate;
    // Present only when at least one trial won.
    std::optional<Estimate> cond_mean_selections;
    std::optional<Estimate> cond_mean_stop_ratio;
    std::optional<Estimate> cond_whole_list_rate;

    friend bool operator==(const SimReport&, const SimReport&) = default;
};

inline constexpr std::int64_t kShardTrials = 65536;

// Trials are split into fixed shards of kShardTrials; shard i draws from
// mt19937_64 seeded with seed_seq{seed, i}. Shards run on up to `threads`
// workers and are reduced in shard order, so the report depends only on
// (n, theta, ks, model, trials, seed).
SimReport simulate(int n, Theta theta, const StrategyThresholds& ks, Model model, std::int64_t trials,
                   std::uint64_t seed, int threads = 1);

}  // namespace secretary
