// strategy_eval.hpp — T and W ratios for arbitrary threshold strategies at finite n.
#pragma once
#include <functional>
#include <span>
#include <vector>

#include "secretary/poly_cache.hpp"
#include "secretary/strategy.hpp"
#include "secretary/theta.hpp"

namespace secretary {

// sum_{i_1 = lb[0]}^{upper-1} w[i_1] sum_{i_2 = lb[1]}^{i_1-1} w[i_2] ... with
// one level per lower bound. Empty ranges contribute 0. Runs in O(levels * upper).
double nested_sum(std::span<const int> lb, int upper, const std::vector<double>& w);

// The ingredients that distinguish the finite-n winning sum from its limits.
struct WinKernel {
    int top = 0;                               // k_{s+1}
    std::vector<double> weight;                // weight[i] for 0 <= i < top
    std::function<double(int, int)> coeff;     // (k, c) -> theta^{N-k-c} P_k / P_N or its limit
    double first_mass = 0.0;                   // contribution of k_1 = 0
};

// sum_j sum_d coeff(k_{j-d}, 1+d) Nest(j, d); thresholds strictly increasing,
// all below kernel.top. with_delta shifts the innermost lower bound by one when d >= 1.
double win_nested(std::span<const int> ks, const WinKernel& kernel, bool with_delta = false);

WinKernel finite_kernel(const PolyCache& pc, int n);

// T_{<=r-1}(m; k_1..k_r) / (P_m)! by the nested-sum closed form, ks = (k_1..k_r).
double t_leq_ratio(int m, const StrategyThresholds& ks, Theta theta);
double t_leq_ratio_recurrence(int m, const StrategyThresholds& ks, Theta theta);

// W(n; k_1..k_s) / (P_n)!.
double win_ratio(int n, const StrategyThresholds& ks, Theta theta, bool with_delta = false);
double win_ratio_recurrence(int n, const StrategyThresholds& ks, Theta theta);

// Probability of using exactly r selections among the first m candidates, 0 <= r <= s.
double t_exact_ratio(int m, const StrategyThresholds& ks, int r, Theta theta);
// Probability the best is taken by exactly the r-th selection, 1 <= r <= s.
double w_exact_ratio(int n, const StrategyThresholds& ks, int r, Theta theta);

// Tables of t_r(m) = T_{<=r-1}(m; k_1..k_r)/(P_m)! and w_r(m) = W(m; k_1..k_r)/(P_m)!
// for 0 <= r <= s, 0 <= m <= n, filled by the O(s n) recurrences.
class StrategyTables {
public:
    StrategyTables(int n, const StrategyThresholds& ks, Theta theta);

    int n() const { return n_; }
    int s() const { return s_; }
    const StrategyThresholds& thresholds() const { return ks_; }  // canonical
    const PolyCache& cache() const { return pc_; }

    // P(at most r selections among the first m); -1 <= r, equal to 1 for r >= s.
    double t_leq(int r, int m) const;
    // P(best of the first m is captured by one of the first r selections).
    double w(int r, int m) const;

private:
    int n_, s_;
    StrategyThresholds ks_;
    PolyCache pc_;
    std::vector<std::vector<double>> t_, w_;
};

}  // namespace secretary
