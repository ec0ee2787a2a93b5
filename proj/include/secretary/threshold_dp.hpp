// threshold_dp.hpp — backward recurrence over (prefix length, queries left).
#pragma once
#include <algorithm>
#include <vector>

#include "secretary/strategy.hpp"
#include "secretary/theta.hpp"

namespace secretary {

inline constexpr int kDefaultProxyN = 1000;

// q(j, k): accept an eligible prefix of length k with j queries left and play
// on optimally; qo(j, k): reject it and play on optimally. 0 <= j < s, 1 <= k <= n.
class QTable {
public:
    QTable(int n, Theta theta, int s);

    int n() const { return n_; }
    int s() const { return s_; }
    Theta theta() const { return theta_; }

    double q(int j, int k) const { return q_[index(j, k)]; }
    double qo(int j, int k) const { return qo_[index(j, k)]; }
    double qbar(int j, int k) const { return std::max(q(j, k), qo(j, k)); }

    // Largest k with q < qo for the given number of queries left, 0 if none.
    int crossover(int j) const;
    // True when, for every j, the accept-minus-reject sign flips at most once.
    bool single_crossover() const { return single_crossover_; }

private:
    std::size_t index(int j, int k) const {
        return static_cast<std::size_t>(j) * static_cast<std::size_t>(n_ + 1) + static_cast<std::size_t>(k);
    }

    int n_, s_;
    Theta theta_;
    std::vector<double> q_, qo_;
    bool single_crossover_ = true;
};

QTable compute_qtable(int n, Theta theta, int s);

// k_i = crossover(s - i); non-decreasing in i.
StrategyThresholds optimal_thresholds(const QTable& table);
StrategyThresholds optimal_thresholds(int n, Theta theta, int s);

double optimal_win_prob(const QTable& table);
double optimal_win_prob(int n, Theta theta, int s);

}  // namespace secretary
