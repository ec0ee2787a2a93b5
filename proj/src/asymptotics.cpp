// asymptotics.cpp
#include "secretary/asymptotics.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include <algorithm>
#include <cmath>
#include <functional>

#include "secretary/errors.hpp"
#include "secretary/poly_cache.hpp"

namespace secretary {

namespace {

constexpr double kImprovement = 1e-13;

std::vector<int> canonical_below(std::vector<int> ks, int top) {
    for (std::size_t i = 1; i < ks.size(); ++i)
        if (ks[i] <= ks[i - 1]) ks[i] = ks[i - 1] + 1;
    std::vector<int> out;
    for (int k : ks)
        if (k < top) out.push_back(k);
    return out;
}

double high_series_sum(double theta) {
    // sum_{i >= 1} 1/P_i(theta) for theta > 1.
    double s = 0.0;
    const double phi = 1.0 / theta;
    double pphi = 0.0, phipow = 1.0;
    for (int i = 1; i < 1000000; ++i) {
        pphi = pphi * phi + 1.0;
        const double term = phipow / pphi;
        phipow *= phi;
        s += term;
        if (term < 1e-18 * s) break;
    }
    return s;
}

struct HighTruncation {
    int top;
    double bound;
};

HighTruncation high_truncation(double theta, int s, int min_top, double tail_tol) {
    if (!(tail_tol > 0)) throw domain_error("tail_tol must be positive");
    const double S = high_series_sum(theta);
    const double factor = s * std::pow(1.0 + S, s - 1) / (1.0 - 1.0 / theta);
    // theta^{1-M} * factor <= tail_tol
    int M = static_cast<int>(std::ceil(1.0 + std::log(factor / tail_tol) / std::log(theta)));
    M = std::max(M, min_top);
    return {M, factor * std::pow(theta, 1 - M)};
}

// Win probability as a function of a new smallest threshold k_1 while the
// remaining canonical thresholds stay fixed.
class StageEvaluator {
public:
    StageEvaluator(const WinKernel& kernel, std::vector<int> rest) : kernel_(kernel), rest_(std::move(rest)) {
        const int top = kernel.top;
        prefix_.assign(static_cast<std::size_t>(top) + 1, 0.0);
        for (int i = 1; i <= top; ++i)
            prefix_[static_cast<std::size_t>(i)] = prefix_[static_cast<std::size_t>(i) - 1] + kernel.weight[static_cast<std::size_t>(i) - 1];
        // Full tuple is (k_1, rest...), so rest[j-2] = k_j.
        ks_.assign(1, 0);
        ks_.insert(ks_.end(), rest_.begin(), rest_.end());
        const int s = static_cast<int>(ks_.size());
        auto K = [&](int j) { return j <= s ? ks_[static_cast<std::size_t>(j) - 1] : top; };
        fixed_ = 0.0;
        g_.assign(static_cast<std::size_t>(s) + 1, 0.0);
        std::vector<int> lb;
        for (int j = 2; j <= s; ++j) {
            for (int d = 0; d <= j - 1; ++d) {
                lb.assign(1, K(j));
                for (int e = 2; e <= d + 1; ++e) lb.push_back(K(j - e + 2));
                const double nest = nested_sum(lb, K(j + 1), kernel.weight);
                if (d == j - 1) g_[static_cast<std::size_t>(j)] = nest;
                else fixed_ += kernel.coeff(K(j - d), 1 + d) * nest;
            }
        }
    }

    // Valid for k_1 strictly below the first fixed threshold.
    double value(int k1) const {
        const int s = static_cast<int>(ks_.size());
        const int upper = s >= 2 ? rest_.front() : kernel_.top;
        double v = fixed_;
        if (k1 == 0) {
            v += kernel_.first_mass;
        } else {
            v += kernel_.coeff(k1, 1) * (prefix_[static_cast<std::size_t>(upper)] - prefix_[static_cast<std::size_t>(k1)]);
            for (int j = 2; j <= s; ++j) v += kernel_.coeff(k1, j) * g_[static_cast<std::size_t>(j)];
        }
        return v;
    }

private:
    const WinKernel& kernel_;
    std::vector<int> rest_, ks_;
    std::vector<double> prefix_, g_;
    double fixed_ = 0.0;
};

double full_value(const WinKernel& kernel, const std::vector<int>& ks_raw) {
    const auto ks = canonical_below(ks_raw, kernel.top);
    if (ks.empty()) return 0.0;
    return win_nested(ks, kernel);
}

}  // namespace

WinKernel low_kernel(Theta theta, int top) {
    WinKernel kern;
    kern.top = top;
    kern.weight.assign(static_cast<std::size_t>(top) + 1, 1.0 - theta.value);
    const double t = theta.value;
    kern.coeff = [t, top](int k, int c) { return std::pow(t, top - k - c); };
    kern.first_mass = 0.0;
    return kern;
}

WinKernel high_kernel(Theta theta, int top) {
    const PolyCache pc(theta, top);
    WinKernel kern;
    kern.top = top;
    kern.weight.assign(static_cast<std::size_t>(top) + 1, 0.0);
    for (int i = 1; i <= top; ++i) kern.weight[static_cast<std::size_t>(i)] = pc.inv_p(i);
    const double t = theta.value;
    kern.coeff = [t](int k, int c) { return std::pow(t, -c) * -std::expm1(-k * std::log(t)); };
    kern.first_mass = 1.0 - 1.0 / t;
    return kern;
}

StrategyThresholds AsymptoticThresholds::finite_thresholds(int n) const {
    std::vector<int> ks;
    const int s = this->s();
    for (int i = 1; i <= s; ++i) {
        const auto r = static_cast<std::size_t>(s - i);
        switch (regime) {
            case Regime::theta_above_1: ks.push_back(a[r]); break;
            case Regime::theta_below_1: ks.push_back(std::max(0, n - b[r])); break;
            case Regime::uniform: ks.push_back(static_cast<int>(std::lround(x[r] * n))); break;
        }
    }
    return StrategyThresholds(std::move(ks));
}

double asym_win_prob_low(Theta theta, std::span<const int> bs) {
    if (!(theta.value < 1.0)) throw domain_error("asym_win_prob_low needs theta < 1");
    if (bs.empty()) throw domain_error("at least one threshold is required");
    for (std::size_t i = 0; i < bs.size(); ++i) {
        if (bs[i] < 1) throw domain_error("b thresholds must be at least 1");
        if (i && bs[i] < bs[i - 1]) throw domain_error("b thresholds must be non-decreasing");
    }
    const int top = bs.back() + 1;
    std::vector<int> ks(bs.rbegin(), bs.rend());
    for (int& k : ks) k = top - k;
    return full_value(low_kernel(theta, top), ks);
}

AsymValue asym_win_prob_high(Theta theta, std::span<const int> as, double tail_tol) {
    if (!(theta.value > 1.0)) throw domain_error("asym_win_prob_high needs theta > 1");
    if (as.empty()) throw domain_error("at least one threshold is required");
    for (std::size_t i = 0; i < as.size(); ++i) {
        if (as[i] < 0) throw domain_error("a thresholds must be nonnegative");
        if (i && as[i] > as[i - 1]) throw domain_error("a thresholds must be non-increasing");
    }
    const int s = static_cast<int>(as.size());
    const auto tr = high_truncation(theta.value, s, as.front() + s + 2, tail_tol);
    std::vector<int> ks(as.rbegin(), as.rend());
    return {full_value(high_kernel(theta, tr.top), ks), tr.top, tr.bound};
}

AsymptoticThresholds search_thresholds(Theta theta, int s, int cap, double tail_tol) {
    if (s < 1) throw domain_error("search_thresholds: s must be positive");
    if (cap < 1) throw domain_error("search_thresholds: cap must be positive");
    if (theta.uniform()) throw domain_error("search_thresholds: use uniform_thresholds for theta = 1");
    AsymptoticThresholds out;
    out.theta = theta.value;
    out.cap = cap;
    const bool high = theta.value > 1.0;
    out.regime = high ? Regime::theta_above_1 : Regime::theta_below_1;

    WinKernel kernel;
    if (high) {
        const auto tr = high_truncation(theta.value, s, cap + s + 2, tail_tol);
        kernel = high_kernel(theta, tr.top);
        out.truncation = tr.top;
        out.tail_bound = tr.bound;
    } else {
        kernel = low_kernel(theta, cap + 1);
    }
    const int top = kernel.top;

    std::vector<int> chosen;  // a_1..a_{r-1} or b_1..b_{r-1}
    for (int r = 1; r <= s; ++r) {
        // Previous thresholds as ascending positions k_2..k_r.
        std::vector<int> rest;
        for (auto it = chosen.rbegin(); it != chosen.rend(); ++it) rest.push_back(high ? *it : top - *it);
        const auto rest_c = canonical_below(rest, top);
        const StageEvaluator stage(kernel, rest_c);

        const int lo = high ? 0 : (chosen.empty() ? 1 : chosen.back());
        const int hi = high ? (chosen.empty() ? cap : chosen.back()) : cap;
        int best = lo;
        double best_p = -1.0;
        for (int v = lo; v <= hi; ++v) {
            const int k1 = high ? v : top - v;
            double p;
            if (rest_c.empty() || k1 < rest_c.front()) {
                p = stage.value(k1);
            } else {
                std::vector<int> ks{k1};
                ks.insert(ks.end(), rest.begin(), rest.end());
                p = full_value(kernel, ks);
            }
            if (p > best_p + kImprovement) {
                best_p = p;
                best = v;
            }
        }
        if (best == cap) out.cap_hit = true;
        chosen.push_back(best);
        out.p.push_back(best_p);
    }
    (high ? out.a : out.b) = chosen;
    return out;
}

AsymptoticThresholds search_thresholds_joint(Theta theta, int s, int cap, double tail_tol) {
    if (s < 1 || cap < 1) throw domain_error("search_thresholds_joint: s and cap must be positive");
    if (theta.uniform()) throw domain_error("search_thresholds_joint: theta must differ from 1");
    const bool high = theta.value > 1.0;
    AsymptoticThresholds out;
    out.theta = theta.value;
    out.cap = cap;
    out.regime = high ? Regime::theta_above_1 : Regime::theta_below_1;
    WinKernel kernel;
    if (high) {
        const auto tr = high_truncation(theta.value, s, cap + s + 2, tail_tol);
        kernel = high_kernel(theta, tr.top);
        out.truncation = tr.top;
        out.tail_bound = tr.bound;
    } else {
        kernel = low_kernel(theta, cap + 1);
    }
    const int top = kernel.top;
    for (int r = 1; r <= s; ++r) {
        std::vector<int> cur(static_cast<std::size_t>(r)), best;
        double best_p = -1.0;
        // Enumerate ordered tuples: a non-increasing (high) or b non-decreasing (low).
        std::function<void(int)> rec = [&](int i) {
            if (i == r) {
                std::vector<int> ks;
                for (auto it = cur.rbegin(); it != cur.rend(); ++it) ks.push_back(high ? *it : top - *it);
                const double p = full_value(kernel, ks);
                if (p > best_p + kImprovement) {
                    best_p = p;
                    best = cur;
                }
                return;
            }
            const int lo = high ? 0 : (i ? cur[static_cast<std::size_t>(i) - 1] : 1);
            const int hi = high ? (i ? cur[static_cast<std::size_t>(i) - 1] : cap) : cap;
            for (int v = lo; v <= hi; ++v) {
                cur[static_cast<std::size_t>(i)] = v;
                rec(i + 1);
            }
        };
        rec(0);
        out.p.push_back(best_p);
        if (r == s) (high ? out.a : out.b) = best;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Uniform limit. With ascending thresholds y_1 < ... < y_s, y_{s+1} = 1 and
// l_j = log y_j, the win probability is sum_{j,d} y_{j-d} V(j, d) where V is
// the volume of l_j <= u_1 <= l_{j+1}, l_j <= u_2 <= u_1,
// l_{j-e+2} <= u_e <= u_{e-1} for 3 <= e <= d+1.

namespace {

struct UniformLayout {
    std::vector<double> y, l;  // 1-based, y[s+1] = 1
    int s;
};

UniformLayout layout(std::span<const double> xs) {
    const int s = static_cast<int>(xs.size());
    if (s < 1) throw domain_error("at least one threshold is required");
    UniformLayout L;
    L.s = s;
    L.y.assign(static_cast<std::size_t>(s) + 2, 0.0);
    for (int j = 1; j <= s; ++j) L.y[static_cast<std::size_t>(j)] = xs[static_cast<std::size_t>(s - j)];
    L.y[static_cast<std::size_t>(s) + 1] = 1.0;
    for (int j = 1; j <= s + 1; ++j) {
        const double y = L.y[static_cast<std::size_t>(j)];
        if (!(y > 0.0) || y > 1.0) throw domain_error("uniform thresholds must lie in (0, 1)");
        if (j > 1 && !(y > L.y[static_cast<std::size_t>(j) - 1])) throw domain_error("uniform thresholds must be strictly decreasing");
    }
    L.l.resize(L.y.size());
    for (std::size_t j = 1; j < L.y.size(); ++j) L.l[j] = std::log(L.y[j]);
    return L;
}

std::vector<double> volume_bounds(const UniformLayout& L, int j, int d) {
    std::vector<double> lb{L.l[static_cast<std::size_t>(j)]};
    for (int e = 2; e <= d + 1; ++e) lb.push_back(L.l[static_cast<std::size_t>(j - e + 2)]);
    return lb;
}

double volume_quad(const std::vector<double>& lb, double upper, double tol) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 15>;
    const int levels = static_cast<int>(lb.size());
    std::function<double(int, double)> inner = [&](int e, double hi) -> double {
        if (e == levels) return 1.0;
        const double lo = lb[static_cast<std::size_t>(e)];
        if (hi <= lo) return 0.0;
        return GK::integrate([&](double u) { return inner(e + 1, u); }, lo, hi, 15, tol);
    };
    return inner(0, upper);
}

double volume_exact(const std::vector<double>& lb, double upper) {
    // F(x) = 1 at the innermost level; F_e(x) = integral_{lb_e}^{x} F_{e+1}(u) du.
    std::vector<double> poly{1.0};
    for (int e = static_cast<int>(lb.size()) - 1; e >= 0; --e) {
        std::vector<double> anti(poly.size() + 1, 0.0);
        for (std::size_t i = 0; i < poly.size(); ++i) anti[i + 1] = poly[i] / static_cast<double>(i + 1);
        double at_lo = 0.0;
        for (std::size_t i = anti.size(); i-- > 0;) at_lo = at_lo * lb[static_cast<std::size_t>(e)] + anti[i];
        anti[0] -= at_lo;
        poly = std::move(anti);
    }
    double v = 0.0;
    for (std::size_t i = poly.size(); i-- > 0;) v = v * upper + poly[i];
    return v;
}

template <typename Volume>
double uniform_sum(std::span<const double> xs, Volume&& volume) {
    const auto L = layout(xs);
    double total = 0.0;
    for (int j = 1; j <= L.s; ++j)
        for (int d = 0; d <= j - 1; ++d)
            total += L.y[static_cast<std::size_t>(j - d)] * volume(volume_bounds(L, j, d), L.l[static_cast<std::size_t>(j) + 1]);
    return total;
}

}  // namespace

double uniform_win_prob(std::span<const double> xs, double quad_tol) {
    return uniform_sum(xs, [quad_tol](const std::vector<double>& lb, double up) { return volume_quad(lb, up, quad_tol); });
}

double uniform_win_prob_exact(std::span<const double> xs) {
    return uniform_sum(xs, [](const std::vector<double>& lb, double up) { return volume_exact(lb, up); });
}

AsymptoticThresholds uniform_thresholds(int s, double quad_tol) {
    if (s < 1) throw domain_error("uniform_thresholds: s must be positive");
    AsymptoticThresholds out;
    out.regime = Regime::uniform;
    double prev = 1.0;
    for (int r = 1; r <= s; ++r) {
        // I_{r-1}: coefficient of the new smallest threshold y_1, i.e. the
        // d = j-1 volumes over the thresholds already fixed.
        double I = 0.0;
        if (r >= 2) {
            UniformLayout L;
            L.s = r;
            L.y.assign(static_cast<std::size_t>(r) + 2, 0.0);
            for (int j = 2; j <= r; ++j) L.y[static_cast<std::size_t>(j)] = out.x[static_cast<std::size_t>(r - j)];
            L.y[static_cast<std::size_t>(r) + 1] = 1.0;
            L.l.assign(L.y.size(), 0.0);
            for (int j = 2; j <= r + 1; ++j) L.l[static_cast<std::size_t>(j)] = std::log(L.y[static_cast<std::size_t>(j)]);
            for (int j = 2; j <= r; ++j)
                I += volume_quad(volume_bounds(L, j, j - 1), L.l[static_cast<std::size_t>(j) + 1], quad_tol);
        }
        const double x = prev * std::exp(I - 1.0);
        out.x.push_back(x);
        out.p.push_back(uniform_win_prob(out.x, quad_tol));
        prev = x;
    }
    return out;
}

}  // namespace secretary
