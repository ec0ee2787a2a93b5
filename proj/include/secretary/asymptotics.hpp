// asymptotics.hpp — n -> infinity win probabilities and threshold search.
#pragma once
#include <span>
#include <vector>

#include "secretary/strategy.hpp"
#include "secretary/strategy_eval.hpp"
#include "secretary/theta.hpp"

namespace secretary {

enum class Regime { theta_below_1, theta_above_1, uniform };

inline constexpr int kDefaultSearchCap = 1000;
inline constexpr double kDefaultTailTol = 1e-14;
inline constexpr double kDefaultQuadTol = 1e-10;

struct AsymptoticThresholds {
    Regime regime = Regime::uniform;
    double theta = 1.0;
    std::vector<int> a;     // theta > 1: a_1 >= ... >= a_s, thresholds counted from the front
    std::vector<int> b;     // theta < 1: b_1 <= ... <= b_s, thresholds counted from the back
    std::vector<double> x;  // theta = 1: x_1 > ... > x_s, thresholds as fractions of n
    std::vector<double> p;  // p[r-1]: limiting win probability with r selections
    bool cap_hit = false;
    int cap = 0;
    int truncation = 0;     // theta > 1: index where the infinite sums were cut
    double tail_bound = 0;  // theta > 1: bound on the neglected mass

    int s() const { return static_cast<int>(p.size()); }
    double win() const { return p.back(); }
    // The (k_1..k_s) strategy these limits describe at a finite n.
    StrategyThresholds finite_thresholds(int n) const;
};

struct AsymValue {
    double value = 0;
    int truncation = 0;
    double tail_bound = 0;
};

// Limit of W/(P_N)! for theta < 1 with k_i = N - b_{s+1-i}; bs non-decreasing, b_1 >= 1.
double asym_win_prob_low(Theta theta, std::span<const int> bs);

// Limit of W/(P_N)! for theta > 1 with k_i = a_{s+1-i}; as non-increasing.
AsymValue asym_win_prob_high(Theta theta, std::span<const int> as, double tail_tol = kDefaultTailTol);

// Sequential right-aligned search: a_r (or b_r) is chosen with a_1..a_{r-1}
// fixed. Scans upward and keeps the smallest maximiser.
AsymptoticThresholds search_thresholds(Theta theta, int s, int cap = kDefaultSearchCap,
                                       double tail_tol = kDefaultTailTol);

// Exhaustive search over all ordered s-tuples with entries up to cap.
AsymptoticThresholds search_thresholds_joint(Theta theta, int s, int cap, double tail_tol = kDefaultTailTol);

// Uniform limit with thresholds x_1 > ... > x_s in (0, 1): iterated adaptive
// Gauss-Kronrod quadrature in u = log t.
double uniform_win_prob(std::span<const double> xs, double quad_tol = kDefaultQuadTol);
// Same quantity from exact antiderivatives of the polynomial integrands.
double uniform_win_prob_exact(std::span<const double> xs);

// x_r = x_{r-1} exp(I_{r-1} - 1) starting from x_0 = 1.
AsymptoticThresholds uniform_thresholds(int s, double quad_tol = kDefaultQuadTol);

WinKernel low_kernel(Theta theta, int top);
WinKernel high_kernel(Theta theta, int top);

}  // namespace secretary
