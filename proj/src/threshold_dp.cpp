// threshold_dp.cpp
#include "secretary/threshold_dp.hpp"

#include <cmath>

#include "secretary/poly_cache.hpp"

namespace secretary {

QTable::QTable(int n, Theta theta, int s) : n_(n), s_(s), theta_(theta) {
    if (n < 1) throw domain_error("compute_qtable: n must be positive");
    if (s < 1) throw domain_error("compute_qtable: s must be positive");
    const PolyCache pc(theta, n);
    q_.assign(static_cast<std::size_t>(s) * static_cast<std::size_t>(n + 1), 0.0);
    qo_ = q_;
    for (int j = 0; j < s; ++j) q_[index(j, n)] = 1.0;
    for (int k = n; k >= 2; --k) {
        const double inv = pc.inv_p(k), keep = pc.shrink(k);
        for (int j = 0; j < s; ++j) {
            qo_[index(j, k - 1)] = qbar(j, k) * inv + qo(j, k) * keep;
            q_[index(j, k - 1)] = j == 0 ? q(0, k) * keep : qbar(j - 1, k) * inv + q(j, k) * keep;
        }
    }

    // Accept-minus-reject may carry rounding noise at exact ties.
    for (int j = 0; j < s; ++j) {
        bool seen_positive = false;
        for (int k = 1; k <= n; ++k) {
            const double diff = q(j, k) - qo(j, k);
            const double tol = 1e-12 * std::max(1.0, std::abs(qo(j, k)));
            if (diff > tol) seen_positive = true;
            else if (diff < -tol && seen_positive) single_crossover_ = false;
        }
    }
}

int QTable::crossover(int j) const {
    for (int k = n_; k >= 1; --k)
        if (q(j, k) < qo(j, k)) return k;
    return 0;
}

QTable compute_qtable(int n, Theta theta, int s) { return QTable(n, theta, s); }

StrategyThresholds optimal_thresholds(const QTable& t) {
    std::vector<int> ks;
    for (int i = 1; i <= t.s(); ++i) ks.push_back(t.crossover(t.s() - i));
    return StrategyThresholds(std::move(ks));
}

StrategyThresholds optimal_thresholds(int n, Theta theta, int s) { return optimal_thresholds(QTable(n, theta, s)); }

double optimal_win_prob(const QTable& t) { return t.qbar(t.s() - 1, 1); }

double optimal_win_prob(int n, Theta theta, int s) { return optimal_win_prob(QTable(n, theta, s)); }

}  // namespace secretary
