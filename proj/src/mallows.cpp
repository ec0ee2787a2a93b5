// mallows.cpp
#include "secretary/mallows.hpp"

#include <cmath>

#include "secretary/errors.hpp"

namespace secretary {

Rational q_factorial(int n, const Rational& theta) {
    Rational f = 1, p = 0;
    for (int i = 1; i <= n; ++i) {
        p = p * theta + 1;
        f *= p;
    }
    return f;
}

std::vector<PmfEntry> mallows_pmf_table(int n, const Rational& theta, int cap) {
    if (n < 1) throw domain_error("mallows_pmf_table: n must be positive");
    if (n > cap) throw resource_error("mallows_pmf_table: n exceeds enumeration cap");
    if (theta <= 0) throw domain_error("mallows_pmf_table: theta must be positive");
    const int max_inv = n * (n - 1) / 2;
    std::vector<Rational> powers(static_cast<std::size_t>(max_inv) + 1);
    powers[0] = 1;
    for (int i = 1; i <= max_inv; ++i) powers[static_cast<std::size_t>(i)] = powers[static_cast<std::size_t>(i) - 1] * theta;
    const Rational z = q_factorial(n, theta);

    std::vector<PmfEntry> table;
    table.reserve(static_cast<std::size_t>(factorial(n)));
    for_each_permutation(n, [&](const Permutation& pi) {
        const Rational& w = powers[static_cast<std::size_t>(kendall_tau(pi))];
        table.push_back({pi, w, w / z});
    });
    return table;
}

MallowsSampler::MallowsSampler(int n, Theta theta) : n_(n), theta_(theta.value) {
    if (n < 1) throw domain_error("MallowsSampler: n must be positive");
    log_base_ = std::log(theta_ > 1.0 ? 1.0 / theta_ : theta_);
    tail_mass_.resize(static_cast<std::size_t>(n) + 1);
    for (int m = 0; m <= n; ++m) tail_mass_[static_cast<std::size_t>(m)] = -std::expm1(m * log_base_);
    tree_.assign(static_cast<std::size_t>(n) + 1, 0);
    top_bit_ = 1;
    while (top_bit_ * 2 <= n) top_bit_ *= 2;
}

int MallowsSampler::draw_offset(std::mt19937_64& engine, int m) const {
    // Truncated geometric on {0..m-1} with ratio base = min(theta, 1/theta).
    const double u = std::generate_canonical<double, 64>(engine);
    int r;
    if (theta_ == 1.0) {
        r = static_cast<int>(u * m);
    } else {
        const double x = std::log1p(-u * tail_mass_[static_cast<std::size_t>(m)]) / log_base_;
        r = static_cast<int>(std::floor(x));
    }
    if (r >= m) r = m - 1;
    if (r < 0) r = 0;
    return theta_ > 1.0 ? m - 1 - r : r;
}

void MallowsSampler::sample(std::mt19937_64& engine, std::vector<int>& out) {
    const int n = n_;
    out.resize(static_cast<std::size_t>(n));
    // Fenwick tree holding one unit per unused value; build in O(n).
    for (int i = 1; i <= n; ++i) tree_[static_cast<std::size_t>(i)] = i & -i;
    for (int p = 0; p < n; ++p) {
        int rank = draw_offset(engine, n - p) + 1;
        int pos = 0;
        for (int step = top_bit_; step; step >>= 1) {
            const int nxt = pos + step;
            if (nxt <= n && tree_[static_cast<std::size_t>(nxt)] < rank) {
                pos = nxt;
                rank -= tree_[static_cast<std::size_t>(nxt)];
            }
        }
        const int value = pos + 1;
        out[static_cast<std::size_t>(p)] = value;
        for (int x = value; x <= n; x += x & -x) --tree_[static_cast<std::size_t>(x)];
    }
}

Permutation sample_mallows(int n, Theta theta, std::uint64_t rng_seed) {
    std::mt19937_64 engine(rng_seed);
    MallowsSampler sampler(n, theta);
    std::vector<int> v;
    sampler.sample(engine, v);
    return Permutation(std::move(v));
}

}  // namespace secretary
