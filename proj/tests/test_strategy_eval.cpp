// test_strategy_eval.cpp — closed forms against recurrences and brute force.
#include <gtest/gtest.h>

#include <random>

#include "brute.hpp"
#include "secretary/errors.hpp"
#include "secretary/strategy_eval.hpp"

using namespace secretary;

TEST(WinRatio, WorkedExample) {
    EXPECT_NEAR(win_ratio(4, StrategyThresholds({1}), 1.0), 11.0 / 24, 1e-15);
    EXPECT_NEAR(win_ratio(4, StrategyThresholds({0, 1}), 1.0), 17.0 / 24, 1e-15);
    EXPECT_NEAR(win_ratio(4, StrategyThresholds({1}), 1.0), 0.25 * (1 + 0.5 + 1.0 / 3), 1e-15);
}

TEST(TLeq, Examples) {
    for (double th : {0.4, 1.0, 2.2}) {
        EXPECT_DOUBLE_EQ(t_leq_ratio(7, StrategyThresholds({2, 4, 7}), th), 1.0);
        EXPECT_DOUBLE_EQ(t_leq_ratio(9, StrategyThresholds({0}), th), 0.0);
    }
    for (int k = 0; k <= 10; ++k) EXPECT_NEAR(t_leq_ratio(10, StrategyThresholds({k}), 1.0), k / 10.0, 1e-14);
    EXPECT_THROW(t_leq_ratio(3, StrategyThresholds({4}), 1.0), domain_error);
}

TEST(ClosedForm, AgreesWithRecurrences) {
    std::mt19937_64 rng(5);
    for (double th : {0.3, 1.0, 1.7}) {
        for (int rep = 0; rep < 200; ++rep) {
            const int n = std::uniform_int_distribution<int>(1, 60)(rng);
            const int s = std::uniform_int_distribution<int>(1, 5)(rng);
            const StrategyThresholds ks(brute::random_thresholds(rng, s, n));
            const double a = win_ratio(n, ks, th), b = win_ratio_recurrence(n, ks, th);
            const double c = win_ratio(n, ks, th, true);
            EXPECT_NEAR(a, b, 1e-10 * std::max(1.0, std::fabs(b))) << th << " " << n << " " << ks.to_string();
            EXPECT_NEAR(a, c, 1e-12);
            const int m = std::uniform_int_distribution<int>(ks.back(), std::max(ks.back(), 60))(rng);
            const double t = t_leq_ratio(m, ks, th), tr = t_leq_ratio_recurrence(m, ks, th);
            EXPECT_NEAR(t, tr, 1e-10 * std::max(1.0, std::fabs(tr)));
        }
    }
}

TEST(ClosedForm, CanonicalisationInvariant) {
    for (double th : {0.5, 1.0, 2.0}) {
        const StrategyThresholds dup({2, 2, 2, 5});
        EXPECT_NEAR(win_ratio(12, dup, th), win_ratio(12, dup.canonical(), th), 1e-14);
        EXPECT_EQ(dup.canonical(), StrategyThresholds({2, 3, 4, 5}));
    }
}

TEST(ClosedForm, MatchesBruteForce) {
    std::mt19937_64 rng(9);
    for (double th : {0.5, 1.0, 2.0}) {
        for (int n = 1; n <= 7; ++n) {
            for (int s = 1; s <= 3; ++s) {
                for (int rep = 0; rep < 8; ++rep) {
                    const auto kv = brute::random_thresholds(rng, s, n - 1);
                    const StrategyThresholds ks(kv);
                    const auto b = brute::enumerate(n, th, kv, true);
                    EXPECT_NEAR(win_ratio(n, ks, th), b.win, 1e-12);
                    double tsum = 0, wsum = 0;
                    for (int r = 0; r <= s; ++r) {
                        const double t = t_exact_ratio(n, ks, r, th);
                        EXPECT_NEAR(t, b.picked[r], 1e-12) << "T_" << r;
                        tsum += t;
                    }
                    for (int r = 1; r <= s; ++r) {
                        const double w = w_exact_ratio(n, ks, r, th);
                        EXPECT_NEAR(w, b.captured[r], 1e-12) << "W_" << r;
                        wsum += w;
                    }
                    EXPECT_NEAR(tsum, 1.0, 1e-12);
                    EXPECT_NEAR(wsum, win_ratio(n, ks, th), 1e-12);
                    EXPECT_NEAR(t_exact_ratio(n, ks, 0, th), t_leq_ratio(n, ks.prefix(1), th), 1e-12);
                    EXPECT_NEAR(w_exact_ratio(n, ks, 1, th), win_ratio(n, ks.prefix(1), th), 1e-12);
                }
            }
        }
    }
}

TEST(Tables, AgreeWithClosedForms) {
    std::mt19937_64 rng(12);
    for (double th : {0.3, 1.0, 1.7}) {
        for (int rep = 0; rep < 30; ++rep) {
            const int n = std::uniform_int_distribution<int>(2, 60)(rng);
            const int s = std::uniform_int_distribution<int>(1, 4)(rng);
            const StrategyThresholds ks(brute::random_thresholds(rng, s, n - 1));
            const StrategyTables T(n, ks, th);
            EXPECT_NEAR(T.w(s, n), win_ratio(n, ks, th), 1e-12);
            for (int r = 1; r <= s; ++r) {
                const auto pre = ks.prefix(r);
                EXPECT_NEAR(T.t_leq(r - 1, n), t_leq_ratio(n, pre, th), 1e-11);
            }
        }
    }
}
