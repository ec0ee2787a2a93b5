// expectations.hpp — selection counts and stopping positions of threshold strategies.
#pragma once
#include <span>
#include <vector>

#include "secretary/strategy.hpp"
#include "secretary/theta.hpp"

namespace secretary {

inline constexpr int kDefaultExpectationN = 2000;

struct StoppingDistribution {
    Model model = Model::genie;
    bool conditional = false;
    int n = 0;
    std::vector<double> masses;  // [m] for 1 <= m <= n; [0] unused
    double win = 0.0;            // win probability of the strategy

    // Mean stopping position over n (renormalised by win when conditional).
    double expected_stop_ratio() const;
    // Mass at n (renormalised by win when conditional).
    double whole_list_probability() const;
};

// Unconditional masses sum to 1. Conditional masses are the joint
// probabilities of halting at m and winning, summing to win.
StoppingDistribution stopping_distribution(int n, const StrategyThresholds& ks, Theta theta, Model model,
                                           bool conditional);

// Expected number of selections; conditional on capturing the best when
// conditional is set. Throws undefined_result_error if that event is null.
double expected_selections(int n, const StrategyThresholds& ks, Theta theta, bool conditional);

double expected_stop_ratio(int n, const StrategyThresholds& ks, Theta theta, Model model, bool conditional);
double whole_list_probability(int n, const StrategyThresholds& ks, Theta theta, Model model, bool conditional);

// theta = 1 limits as n -> infinity for the strategy that waits until the
// fraction x_r before the (s+1-r)-th selection; x_1 > ... > x_s in (0, 1).
// Records of a uniform permutation form a rate-1 Poisson process in log t,
// which turns every quantity into a small Markov chain.
double uniform_expected_selections(std::span<const double> xs, bool conditional);
double uniform_expected_stop_ratio(std::span<const double> xs, Model model, bool conditional);
double uniform_whole_list_probability(std::span<const double> xs, Model model, bool conditional);
double uniform_chain_win_prob(std::span<const double> xs);

}  // namespace secretary
