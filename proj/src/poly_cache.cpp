// poly_cache.cpp
#include "secretary/poly_cache.hpp"

#include <cmath>

namespace secretary {

double p_value(int i, Theta theta) {
    if (i < 0) throw domain_error("p_value: index must be nonnegative");
    double p = 0.0;
    for (int j = 0; j < i; ++j) p = p * theta.value + 1.0;
    return p;
}

double q_binomial(int n, int m, Theta theta) {
    if (n < 0 || m < 0) throw domain_error("q_binomial: arguments must be nonnegative");
    if (m > n) std::swap(n, m);
    double b = 1.0;
    for (int j = 1; j <= m; ++j) b *= p_value(n + j, theta) / p_value(j, theta);
    return b;
}

PolyCache::PolyCache(Theta theta, int n)
    : theta_(theta), n_(n), high_(theta.value > 1.0), base_(high_ ? 1.0 / theta.value : theta.value) {
    if (n < 0) throw domain_error("PolyCache: n must be nonnegative");
    pp_.assign(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 1; i <= n; ++i) pp_[static_cast<std::size_t>(i)] = pp_[static_cast<std::size_t>(i) - 1] * base_ + 1.0;
}

double PolyCache::p(int i) const {
    const double q = pp_.at(static_cast<std::size_t>(i));
    if (!high_ || i == 0) return q;
    return std::pow(theta_.value, i - 1) * q;
}

double PolyCache::inv_p(int i) const {
    if (i < 1) throw domain_error("PolyCache::inv_p: index must be positive");
    const double q = pp_.at(static_cast<std::size_t>(i));
    return high_ ? std::pow(base_, i - 1) / q : 1.0 / q;
}

double PolyCache::shrink(int k) const {
    if (k < 1) throw domain_error("PolyCache::shrink: index must be positive");
    const double num = pp_.at(static_cast<std::size_t>(k) - 1);
    const double den = pp_.at(static_cast<std::size_t>(k));
    return high_ ? num / den : base_ * num / den;
}

double PolyCache::pow_ratio(int e, int k, int m) const {
    if (k == 0) return 0.0;
    const double r = pp_.at(static_cast<std::size_t>(k)) / pp_.at(static_cast<std::size_t>(m));
    return high_ ? std::pow(base_, m - k - e) * r : std::pow(base_, e) * r;
}

double PolyCache::pow_over_p(int e, int m) const {
    const double q = pp_.at(static_cast<std::size_t>(m));
    return high_ ? std::pow(base_, m - 1 - e) / q : std::pow(base_, e) / q;
}

}  // namespace secretary
