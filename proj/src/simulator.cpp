// simulator.cpp
#include "secretary/simulator.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>
#include <vector>

#include "secretary/errors.hpp"
#include "secretary/mallows.hpp"

namespace secretary {

namespace {

// Integer sums only, so reduction order cannot change the result.
struct Tally {
    std::int64_t trials = 0, wins = 0, whole = 0, whole_win = 0;
    std::int64_t sel = 0, sel2 = 0, sel_win = 0, sel2_win = 0;
    std::int64_t stop = 0, stop_win = 0;
    std::int64_t stop2 = 0, stop2_win = 0;

    void add(const Tally& o) {
        trials += o.trials;
        wins += o.wins;
        whole += o.whole;
        whole_win += o.whole_win;
        sel += o.sel;
        sel2 += o.sel2;
        sel_win += o.sel_win;
        sel2_win += o.sel2_win;
        stop += o.stop;
        stop_win += o.stop_win;
        stop2 += o.stop2;
        stop2_win += o.stop2_win;
    }
};

Tally run_shard(int n, Theta theta, const StrategyThresholds& ks, Model model, std::int64_t count,
                std::uint64_t seed, std::uint64_t shard) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(shard), static_cast<std::uint32_t>(shard >> 32)};
    std::mt19937_64 engine(seq);
    MallowsSampler sampler(n, theta);
    std::vector<int> pi;
    Tally t;
    for (std::int64_t i = 0; i < count; ++i) {
        sampler.sample(engine, pi);
        const PlayOutcome o = play(pi, ks, model);
        const auto stop = static_cast<std::int64_t>(o.stop);
        ++t.trials;
        t.sel += o.selections;
        t.sel2 += o.selections * o.selections;
        t.stop += stop;
        t.stop2 += stop * stop;
        const bool whole = o.stop == n;
        t.whole += whole;
        if (o.win) {
            ++t.wins;
            t.whole_win += whole;
            t.sel_win += o.selections;
            t.sel2_win += o.selections * o.selections;
            t.stop_win += stop;
            t.stop2_win += stop * stop;
        }
    }
    return t;
}

Estimate mean_se(double sum, double sum2, double count, double scale = 1.0) {
    const double mean = sum / count;
    const double var = count > 1 ? std::max(0.0, (sum2 - sum * mean) / (count - 1)) : 0.0;
    return {mean * scale, std::sqrt(var / count) * scale};
}

Estimate proportion(double hits, double count) {
    const double p = hits / count;
    return {p, std::sqrt(p * (1 - p) / count)};
}

}  // namespace

SimReport simulate(int n, Theta theta, const StrategyThresholds& ks, Model model, std::int64_t trials,
                   std::uint64_t seed, int threads) {
    if (n < 1) throw domain_error("simulate: n must be positive");
    if (trials < 1) throw domain_error("simulate: trials must be positive");
    const std::int64_t shards = (trials + kShardTrials - 1) / kShardTrials;
    std::vector<Tally> parts(static_cast<std::size_t>(shards));
    std::atomic<std::int64_t> next{0};
    auto worker = [&] {
        for (std::int64_t i; (i = next.fetch_add(1)) < shards;) {
            const std::int64_t count = std::min(kShardTrials, trials - i * kShardTrials);
            parts[static_cast<std::size_t>(i)] = run_shard(n, theta, ks, model, count, seed, static_cast<std::uint64_t>(i));
        }
    };
    const int workers = static_cast<int>(std::clamp<std::int64_t>(threads, 1, shards));
    std::vector<std::thread> pool;
    for (int w = 1; w < workers; ++w) pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();

    Tally t;
    for (const auto& p : parts) t.add(p);

    SimReport r;
    r.trials = t.trials;
    r.wins = t.wins;
    r.seed = seed;
    r.generator = "mt19937_64/seed_seq(seed,shard)/shard=65536";
    const auto N = static_cast<double>(t.trials);
    r.win_rate = proportion(static_cast<double>(t.wins), N);
    r.mean_selections = mean_se(static_cast<double>(t.sel), static_cast<double>(t.sel2), N);
    r.mean_stop_ratio = mean_se(static_cast<double>(t.stop), static_cast<double>(t.stop2), N, 1.0 / n);
    r.whole_list_rate = proportion(static_cast<double>(t.whole), N);
    if (t.wins > 0) {
        const auto W = static_cast<double>(t.wins);
        r.cond_mean_selections = mean_se(static_cast<double>(t.sel_win), static_cast<double>(t.sel2_win), W);
        r.cond_mean_stop_ratio = mean_se(static_cast<double>(t.stop_win), static_cast<double>(t.stop2_win), W, 1.0 / n);
        r.cond_whole_list_rate = proportion(static_cast<double>(t.whole_win), W);
    }
    return r;
}

}  // namespace secretary
