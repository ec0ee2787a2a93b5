// mallows.hpp — Mallows weights, the exact pmf table and an exact sampler.
#pragma once
#include <cstdint>
#include <random>
#include <vector>

#include "secretary/permutation.hpp"
#include "secretary/rational.hpp"
#include "secretary/theta.hpp"

namespace secretary {

inline constexpr int kDefaultEnumerationCap = 8;

struct PmfEntry {
    Permutation pi;
    Rational weight;       // theta^kendall_tau(pi)
    Rational probability;  // weight / (P_n)!
};

// One entry per element of S_n, lexicographic order. Throws resource_error
// when n exceeds cap.
std::vector<PmfEntry> mallows_pmf_table(int n, const Rational& theta, int cap = kDefaultEnumerationCap);

// (P_n)! = prod_{i=1..n} P_i(theta), exactly.
Rational q_factorial(int n, const Rational& theta);

// Inversion-table sampler: position p takes the (r+1)-th smallest unused value
// with P(r) proportional to theta^r, r in 0..n-1-p. Exact for the Kendall model.
class MallowsSampler {
public:
    MallowsSampler(int n, Theta theta);

    // Fills out with a sample (values 1..n). Uses only engine() draws.
    void sample(std::mt19937_64& engine, std::vector<int>& out);

    int n() const { return n_; }

private:
    int draw_offset(std::mt19937_64& engine, int m) const;

    int n_;
    double theta_;
    double log_base_;  // log of theta, or of 1/theta for theta > 1
    std::vector<double> tail_mass_;  // -expm1(m * log_base_) per m
    std::vector<int> tree_;
    int top_bit_;
};

Permutation sample_mallows(int n, Theta theta, std::uint64_t rng_seed);

}  // namespace secretary
