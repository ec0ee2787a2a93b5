// strategy_eval.cpp
#include "secretary/strategy_eval.hpp"

#include <algorithm>

#include "secretary/errors.hpp"

namespace secretary {

double nested_sum(std::span<const int> lb, int upper, const std::vector<double>& w) {
    if (lb.empty()) return 1.0;
    const int levels = static_cast<int>(lb.size());
    if (upper <= lb[0]) return 0.0;
    std::vector<double> inner(static_cast<std::size_t>(upper) + 1, 1.0), outer(inner.size());
    for (int e = levels - 1; e >= 0; --e) {
        const int lo = std::max(lb[static_cast<std::size_t>(e)], 0);
        outer[0] = 0.0;
        for (int x = 1; x <= upper; ++x) {
            const int i = x - 1;
            outer[static_cast<std::size_t>(x)] = outer[static_cast<std::size_t>(x) - 1] +
                (i >= lo ? w[static_cast<std::size_t>(i)] * inner[static_cast<std::size_t>(i)] : 0.0);
        }
        std::swap(inner, outer);
    }
    return inner[static_cast<std::size_t>(upper)];
}

double win_nested(std::span<const int> ks, const WinKernel& kernel, bool with_delta) {
    const int s = static_cast<int>(ks.size());
    auto K = [&](int j) { return j <= s ? ks[static_cast<std::size_t>(j) - 1] : kernel.top; };
    double total = 0.0;
    std::vector<int> lb;
    for (int j = 1; j <= s; ++j) {
        for (int d = 0; d <= j - 1; ++d) {
            const int k = K(j - d);
            if (j == 1 && k == 0) {
                total += kernel.first_mass;
                continue;
            }
            const double coef = kernel.coeff(k, 1 + d);
            if (coef == 0.0) continue;
            const bool guarded = with_delta && d >= 1;
            if (guarded && K(j + 1) < K(j) + 2) continue;
            lb.assign(1, K(j) + (guarded ? 1 : 0));
            for (int e = 2; e <= d + 1; ++e) lb.push_back(K(j - e + 2));
            total += coef * nested_sum(lb, K(j + 1), kernel.weight);
        }
    }
    return total;
}

WinKernel finite_kernel(const PolyCache& pc, int n) {
    WinKernel kern;
    kern.top = n;
    kern.weight.assign(static_cast<std::size_t>(n) + 1, 0.0);
    for (int i = 1; i <= n; ++i) kern.weight[static_cast<std::size_t>(i)] = pc.inv_p(i);
    kern.coeff = [&pc, n](int k, int c) { return pc.pow_ratio(n - k - c, k, n); };
    kern.first_mass = pc.pow_over_p(n - 1, n);
    return kern;
}

namespace {

// Canonical thresholds below n; later ones can never fire within n positions.
std::vector<int> effective(const StrategyThresholds& ks, int n) {
    const StrategyThresholds c = ks.canonical();
    std::vector<int> out;
    for (int k : c.ks())
        if (k < n) out.push_back(k);
    return out;
}

}  // namespace

double t_leq_ratio(int m, const StrategyThresholds& ks, Theta theta) {
    if (m < ks.back()) throw domain_error("t_leq_ratio: m must be at least k_r");
    const auto c = ks.canonical().ks();
    const int r = static_cast<int>(c.size());
    if (m <= c.back()) return 1.0;
    const PolyCache pc(theta, m);
    std::vector<double> w(static_cast<std::size_t>(m) + 1, 0.0);
    for (int i = 1; i <= m; ++i) w[static_cast<std::size_t>(i)] = pc.inv_p(i);
    double total = 0.0;
    std::vector<int> lb;
    for (int d = 0; d <= r - 1; ++d) {
        const int k = c[static_cast<std::size_t>(r - d - 1)];
        const double coef = pc.pow_ratio(m - k - d, k, m);
        if (coef == 0.0) continue;
        lb.clear();
        for (int e = 1; e <= d; ++e) lb.push_back(c[static_cast<std::size_t>(r - e)]);
        total += coef * nested_sum(lb, m, w);
    }
    return total;
}

double t_leq_ratio_recurrence(int m, const StrategyThresholds& ks, Theta theta) {
    if (m < ks.back()) throw domain_error("t_leq_ratio: m must be at least k_r");
    return StrategyTables(m, ks, theta).t_leq(ks.s() - 1, m);
}

double win_ratio(int n, const StrategyThresholds& ks, Theta theta, bool with_delta) {
    if (n < 1) throw domain_error("win_ratio: n must be positive");
    const auto k = effective(ks, n);
    if (k.empty()) return 0.0;
    const PolyCache pc(theta, n);
    return win_nested(k, finite_kernel(pc, n), with_delta);
}

double win_ratio_recurrence(int n, const StrategyThresholds& ks, Theta theta) {
    return StrategyTables(n, ks, theta).w(ks.s(), n);
}

double t_exact_ratio(int m, const StrategyThresholds& ks, int r, Theta theta) {
    if (r < 0 || r > ks.s()) throw domain_error("t_exact_ratio: r must lie in 0..s");
    if (m < 1) throw domain_error("t_exact_ratio: m must be positive");
    const StrategyTables t(m, ks, theta);
    return t.t_leq(r, m) - t.t_leq(r - 1, m);
}

double w_exact_ratio(int n, const StrategyThresholds& ks, int r, Theta theta) {
    if (r < 1 || r > ks.s()) throw domain_error("w_exact_ratio: r must lie in 1..s");
    const StrategyTables t(n, ks, theta);
    return t.w(r, n) - t.w(r - 1, n);
}

StrategyTables::StrategyTables(int n, const StrategyThresholds& ks, Theta theta)
    : n_(n), s_(ks.s()), ks_(ks.canonical()), pc_(theta, n) {
    if (n < 1) throw domain_error("StrategyTables: n must be positive");
    const auto N = static_cast<std::size_t>(n) + 1;
    t_.assign(static_cast<std::size_t>(s_) + 1, std::vector<double>(N, 0.0));
    w_ = t_;
    for (int r = 1; r <= s_; ++r) {
        const int k = ks_[r - 1];
        auto& t = t_[static_cast<std::size_t>(r)];
        auto& w = w_[static_cast<std::size_t>(r)];
        const auto& tp = t_[static_cast<std::size_t>(r) - 1];
        const auto& wp = w_[static_cast<std::size_t>(r) - 1];
        t[0] = 1.0;
        for (int m = 1; m <= n; ++m) {
            const auto u = static_cast<std::size_t>(m);
            if (m <= k) {
                t[u] = 1.0;
                w[u] = wp[u];
            } else {
                const double keep = pc_.shrink(m), inv = pc_.inv_p(m);
                t[u] = keep * t[u - 1] + inv * tp[u - 1];
                w[u] = keep * w[u - 1] + inv * t[u - 1];
            }
        }
    }
}

double StrategyTables::t_leq(int r, int m) const {
    if (r < 0) return 0.0;
    if (r >= s_) return 1.0;
    return t_.at(static_cast<std::size_t>(r) + 1).at(static_cast<std::size_t>(m));
}

double StrategyTables::w(int r, int m) const {
    return w_.at(static_cast<std::size_t>(r)).at(static_cast<std::size_t>(m));
}

}  // namespace secretary
