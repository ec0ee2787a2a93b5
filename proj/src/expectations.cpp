// expectations.cpp
#include "secretary/expectations.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/quadrature/gauss_kronrod.hpp>

#include "secretary/errors.hpp"
#include "secretary/strategy_eval.hpp"

namespace secretary {

namespace {

double require_win(double win) {
    if (!(win > 0.0)) throw undefined_result_error("success-conditioned quantity with zero win probability");
    return win;
}

}  // namespace

double StoppingDistribution::expected_stop_ratio() const {
    double mean = 0.0;
    for (int m = 1; m <= n; ++m) mean += m * masses[static_cast<std::size_t>(m)];
    if (conditional) mean /= require_win(win);
    return mean / n;
}

double StoppingDistribution::whole_list_probability() const {
    const double tail = masses[static_cast<std::size_t>(n)];
    return conditional ? tail / require_win(win) : tail;
}

StoppingDistribution stopping_distribution(int n, const StrategyThresholds& ks, Theta theta, Model model,
                                           bool conditional) {
    const StrategyTables T(n, ks, theta);
    const auto& k = T.thresholds().ks();
    const int s = T.s();
    const PolyCache& pc = T.cache();

    StoppingDistribution D;
    D.model = model;
    D.conditional = conditional;
    D.n = n;
    D.win = T.w(s, n);
    D.masses.assign(static_cast<std::size_t>(n) + 1, 0.0);

    int passed = 0;  // thresholds strictly below m
    double acc = 0.0;
    for (int m = 1; m <= n; ++m) {
        while (passed < s && k[static_cast<std::size_t>(passed)] < m) ++passed;
        const double best_here = pc.pow_over_p(n - m, n);  // value n sits at position m
        const double final_pick = T.t_leq(s - 1, m - 1) - T.t_leq(s - 2, m - 1);
        double mass = 0.0;
        if (model == Model::genie) {
            if (conditional) {
                if (passed > 0) mass = best_here * T.t_leq(std::min(passed, s) - 1, m - 1);
            } else if (m < n && passed > 0) {
                if (passed < s) mass = best_here * T.t_leq(passed - 1, m - 1);
                else mass = final_pick * pc.inv_p(m) + best_here * T.t_leq(s - 2, m - 1);
            }
        } else if (passed == s && m < n) {
            mass = conditional ? best_here * final_pick : final_pick * pc.inv_p(m);
        }
        D.masses[static_cast<std::size_t>(m)] = mass;
        acc += mass;
    }
    const bool residual = !(model == Model::genie && conditional);
    if (residual) D.masses[static_cast<std::size_t>(n)] = std::max(0.0, (conditional ? D.win : 1.0) - acc);
    return D;
}

double expected_selections(int n, const StrategyThresholds& ks, Theta theta, bool conditional) {
    const StrategyTables T(n, ks, theta);
    const int s = T.s();
    if (!conditional) {
        double e = 0.0;
        for (int r = 0; r <= s - 1; ++r) e += 1.0 - T.t_leq(r, n);
        return e;
    }
    const double win = require_win(T.w(s, n));
    double e = 0.0;
    for (int r = 1; r <= s; ++r) e += r * (T.w(r, n) - T.w(r - 1, n));
    return e / win;
}

double expected_stop_ratio(int n, const StrategyThresholds& ks, Theta theta, Model model, bool conditional) {
    return stopping_distribution(n, ks, theta, model, conditional).expected_stop_ratio();
}

double whole_list_probability(int n, const StrategyThresholds& ks, Theta theta, Model model, bool conditional) {
    return stopping_distribution(n, ks, theta, model, conditional).whole_list_probability();
}

// ---------------------------------------------------------------------------
// Uniform limit. State (j, f): j selections made so far, f = 1 when the most
// recent record was selected. Every record either is selected (j < s and
// past the threshold for selection j+1) or clears f.

namespace {

class RecordChain {
public:
    explicit RecordChain(std::span<const double> xs) : s_(static_cast<int>(xs.size())) {
        if (s_ < 1) throw domain_error("at least one threshold is required");
        for (int j = 0; j < s_; ++j) {
            const double y = xs[static_cast<std::size_t>(s_ - 1 - j)];
            if (!(y > 0.0) || !(y < 1.0)) throw domain_error("uniform thresholds must lie in (0, 1)");
            if (j && !(y > y_.back())) throw domain_error("uniform thresholds must be strictly decreasing");
            y_.push_back(y);
        }
    }

    int s() const { return s_; }
    const std::vector<double>& y() const { return y_; }  // ascending

    // Distribution over (j, f) at time t >= y_1; index 2j + f.
    std::vector<double> at(double t) const {
        std::vector<double> p(static_cast<std::size_t>(2 * s_ + 2), 0.0);
        p[0] = 1.0;
        double from = y_.front();
        for (int j = 1; j <= s_ && from < t; ++j) {
            const double to = std::min(t, j < s_ ? y_[static_cast<std::size_t>(j)] : 1.0);
            if (to > from) p = advance(p, std::log(to / from), j);
            from = std::max(from, to);
        }
        return p;
    }

    double prob(const std::vector<double>& p, int j, int f) const { return p[static_cast<std::size_t>(2 * j + f)]; }

private:
    // One record while the first `open` selections are allowed.
    std::vector<double> step(const std::vector<double>& p, int open) const {
        std::vector<double> q(p.size(), 0.0);
        for (int j = 0; j <= s_; ++j) {
            const double mass = p[static_cast<std::size_t>(2 * j)] + p[static_cast<std::size_t>(2 * j + 1)];
            if (j < open) q[static_cast<std::size_t>(2 * j + 3)] += mass;
            else q[static_cast<std::size_t>(2 * j)] += mass;
        }
        return q;
    }

    // Poisson(len) records with `open` selections allowed.
    std::vector<double> advance(std::vector<double> p, double len, int open) const {
        std::vector<double> out(p.size(), 0.0);
        double w = std::exp(-len);
        for (int k = 0;; ++k) {
            for (std::size_t i = 0; i < p.size(); ++i) out[i] += w * p[i];
            if (k > len && w < 1e-18) break;
            p = step(p, open);
            w *= len / (k + 1);
        }
        return out;
    }

    int s_;
    std::vector<double> y_;
};

// P(halted by t) for the unconditional case, P(halted by t and won) otherwise.
double halted_by(const RecordChain& c, double t, Model model, bool conditional) {
    if (t <= c.y().front()) return 0.0;
    const auto p = c.at(t);
    const int s = c.s();
    // No record after t has probability t.
    if (model == Model::genie) {
        if (conditional) {
            double f = 0.0;
            for (int j = 1; j <= s; ++j) f += c.prob(p, j, 1);
            return t * f;
        }
        double f = 0.0;
        for (int j = 1; j < s; ++j) f += c.prob(p, j, 1);
        return c.prob(p, s, 0) + c.prob(p, s, 1) + t * f;
    }
    return conditional ? t * c.prob(p, s, 1) : c.prob(p, s, 0) + c.prob(p, s, 1);
}

double chain_win(const RecordChain& c) {
    const auto p = c.at(1.0);
    double w = 0.0;
    for (int j = 1; j <= c.s(); ++j) w += c.prob(p, j, 1);
    return w;
}

}  // namespace

double uniform_chain_win_prob(std::span<const double> xs) { return chain_win(RecordChain(xs)); }

double uniform_expected_selections(std::span<const double> xs, bool conditional) {
    const RecordChain c(xs);
    const auto p = c.at(1.0);
    double e = 0.0;
    for (int j = 1; j <= c.s(); ++j) e += j * (conditional ? c.prob(p, j, 1) : c.prob(p, j, 0) + c.prob(p, j, 1));
    return conditional ? e / require_win(chain_win(c)) : e;
}

double uniform_expected_stop_ratio(std::span<const double> xs, Model model, bool conditional) {
    using GK = boost::math::quadrature::gauss_kronrod<double, 31>;
    const RecordChain c(xs);
    const double scale = conditional ? require_win(chain_win(c)) : 1.0;
    // E[T] = integral of P(T > t); below y_1 nothing has halted.
    double e = c.y().front();
    std::vector<double> cuts = c.y();
    cuts.push_back(1.0);
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i)
        e += GK::integrate([&](double t) { return 1.0 - halted_by(c, t, model, conditional) / scale; },
                           cuts[i], cuts[i + 1], 10, 1e-13);
    return e;
}

double uniform_whole_list_probability(std::span<const double> xs, Model model, bool conditional) {
    const RecordChain c(xs);
    const double scale = conditional ? require_win(chain_win(c)) : 1.0;
    return std::max(0.0, 1.0 - halted_by(c, 1.0, model, conditional) / scale);
}

}  // namespace secretary
