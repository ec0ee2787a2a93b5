// poly_cache.hpp — P_i(theta) = 1 + theta + ... + theta^(i-1) and stable ratios.
#pragma once
#include <vector>

#include "secretary/theta.hpp"

namespace secretary {

// Exact geometric sum P_i(theta); P_0 = 0 and P_i(1) = i. May overflow to
// infinity for theta > 1 and large i; use PolyCache ratios instead.
double p_value(int i, Theta theta);

// Gaussian binomial B(n, m) as the product of ratios P_{n+j} / P_j.
double q_binomial(int n, int m, Theta theta);

// Immutable table for 0 <= i <= n. For theta > 1 the polynomials are stored
// in the reciprocal variable phi = 1/theta, using P_i(theta) = theta^(i-1) P_i(phi),
// so every accessor below stays finite for any n.
class PolyCache {
public:
    PolyCache(Theta theta, int n);

    Theta theta() const { return theta_; }
    int n() const { return n_; }

    // P_i(theta); may be +inf for theta > 1.
    double p(int i) const;
    double inv_p(int i) const;
    // theta * P_{k-1} / P_k, equal to 1 - 1/P_k; zero at k = 1.
    double shrink(int k) const;
    // theta^e * P_k / P_m.
    double pow_ratio(int e, int k, int m) const;
    // theta^e / P_m.
    double pow_over_p(int e, int m) const;

private:
    Theta theta_;
    int n_;
    bool high_;    // theta > 1
    double base_;  // theta, or 1/theta when high_
    std::vector<double> pp_;
};

}  // namespace secretary
