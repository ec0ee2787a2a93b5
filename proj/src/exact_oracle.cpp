// exact_oracle.cpp
#include "secretary/exact_oracle.hpp"

#include <algorithm>
#include <map>
#include <optional>

#include "json.hpp"

#include "secretary/errors.hpp"

namespace secretary {

namespace {

void check_size(int n, int cap) {
    if (n < 1) throw domain_error("n must be positive");
    if (n > cap) throw resource_error("n = " + std::to_string(n) + " exceeds the enumeration cap " + std::to_string(cap));
}

// Polynomial in theta with integer coefficients, indexed by inversion count.
using CountPoly = std::vector<std::int64_t>;

Rational evaluate(const CountPoly& c, const std::vector<Rational>& powers) {
    Rational r = 0;
    for (std::size_t d = 0; d < c.size(); ++d)
        if (c[d]) r += powers[d] * Rational(static_cast<long>(c[d]));
    return r;
}

std::vector<Rational> theta_powers(const Rational& theta, int max_exp) {
    std::vector<Rational> p(static_cast<std::size_t>(max_exp) + 1);
    p[0] = 1;
    for (int i = 1; i <= max_exp; ++i) p[static_cast<std::size_t>(i)] = p[static_cast<std::size_t>(i) - 1] * theta;
    return p;
}

}  // namespace

EnumerationResult enumerate_strategy(int n, const Rational& theta, const StrategyThresholds& ks, Model model, int cap) {
    check_size(n, cap);
    if (theta <= 0) throw domain_error("theta must be positive");
    const int s = ks.s();
    const int deg = n * (n - 1) / 2;
    const auto zero = CountPoly(static_cast<std::size_t>(deg) + 1, 0);
    CountPoly win = zero;
    std::vector<CountPoly> picked(static_cast<std::size_t>(s) + 1, zero), captured(picked);
    std::vector<CountPoly> stop(static_cast<std::size_t>(n) + 1, zero), stop_win(stop);

    for_each_permutation(n, [&](const Permutation& pi) {
        const auto c = static_cast<std::size_t>(kendall_tau(pi));
        const PlayOutcome o = play(pi.values(), ks, model);
        ++picked[static_cast<std::size_t>(o.selections)][c];
        ++stop[static_cast<std::size_t>(o.stop)][c];
        if (o.win) {
            ++win[c];
            ++captured[static_cast<std::size_t>(o.capture)][c];
            ++stop_win[static_cast<std::size_t>(o.stop)][c];
        }
    });

    const auto powers = theta_powers(theta, deg);
    const Rational z = q_factorial(n, theta);
    auto norm = [&](const CountPoly& c) { return Rational(evaluate(c, powers) / z); };
    EnumerationResult r;
    r.win = norm(win);
    for (const auto& c : picked) r.exactly_picked.push_back(norm(c));
    for (const auto& c : captured) r.captured_by.push_back(norm(c));
    for (const auto& c : stop) r.stop_mass.push_back(norm(c));
    for (const auto& c : stop_win) r.stop_mass_win.push_back(norm(c));
    r.captured_by[0] = 0;
    r.stop_mass[0] = 0;
    r.stop_mass_win[0] = 0;
    return r;
}

Rational enumerate_win_prob(int n, const Rational& theta, const StrategyThresholds& ks, Model model, int cap) {
    return enumerate_strategy(n, theta, ks, model, cap).win;
}

// ---------------------------------------------------------------------------

std::int64_t PrefixProbabilities::index_of(const Permutation& prefix) {
    std::int64_t idx = 0, f = 1;
    for (int j = 0; j < prefix.size(); ++j) {
        int rank = 1;
        for (int l = 0; l < j; ++l)
            if (prefix[l] < prefix[j]) ++rank;
        idx += (rank - 1) * f;
        f *= j + 1;
    }
    return idx;
}

Permutation PrefixProbabilities::prefix_at(int length, std::int64_t index) {
    std::vector<int> ranks(static_cast<std::size_t>(length));
    for (int j = 1; j <= length; ++j) {
        ranks[static_cast<std::size_t>(j) - 1] = static_cast<int>(index % j) + 1;
        index /= j;
    }
    std::vector<int> avail(static_cast<std::size_t>(length));
    for (int v = 0; v < length; ++v) avail[static_cast<std::size_t>(v)] = v + 1;
    std::vector<int> out(static_cast<std::size_t>(length));
    for (int j = length; j >= 1; --j) {
        const auto pos = static_cast<std::size_t>(ranks[static_cast<std::size_t>(j) - 1] - 1);
        out[static_cast<std::size_t>(j) - 1] = avail[pos];
        avail.erase(avail.begin() + static_cast<std::ptrdiff_t>(pos));
    }
    return Permutation(std::move(out));
}

PrefixProbabilities::PrefixProbabilities(int n, const Rational& theta, int s, int cap) : n_(n), s_(s), theta_(theta) {
    check_size(n, cap);
    if (s < 1) throw domain_error("s must be positive");
    if (theta <= 0) throw domain_error("theta must be positive");
    levels_.resize(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) {
        auto& L = levels_[static_cast<std::size_t>(k)];
        const auto size = static_cast<std::size_t>(factorial(k));
        L.sd.assign(size, 0);
        L.q0.assign(size, 0);
        L.eligible.assign(size, 0);
        L.q.assign(static_cast<std::size_t>(s), std::vector<Rational>(size));
        L.qo.assign(static_cast<std::size_t>(s), std::vector<Rational>(size));
        for (std::size_t idx = 0; idx < size; ++idx)
            L.eligible[idx] = k == n || static_cast<std::int64_t>(idx) / factorial(k - 1) == k - 1;
    }

    // Leaves: SD = theta^c. Q_0 numerators collect each leaf at the length
    // where its best candidate sits.
    const auto powers = theta_powers(theta, n * (n - 1) / 2);
    auto& leaves = levels_[static_cast<std::size_t>(n)];
    for_each_permutation(n, [&](const Permutation& pi) {
        const std::int64_t idx = index_of(pi);
        const Rational& w = powers[static_cast<std::size_t>(kendall_tau(pi))];
        leaves.sd[static_cast<std::size_t>(idx)] = w;
        const int b = pi.best_position() + 1;
        levels_[static_cast<std::size_t>(b)].q0[static_cast<std::size_t>(idx % factorial(b))] += w;
    });

    for (int i = 0; i < s; ++i) {
        leaves.q[static_cast<std::size_t>(i)] = leaves.q0;
        std::fill(leaves.qo[static_cast<std::size_t>(i)].begin(), leaves.qo[static_cast<std::size_t>(i)].end(), Rational(0));
    }
    for (int k = n - 1; k >= 1; --k) {
        auto& L = levels_[static_cast<std::size_t>(k)];
        const auto& C = levels_[static_cast<std::size_t>(k) + 1];
        const std::int64_t size = factorial(k);
        for (std::int64_t idx = 0; idx < size; ++idx) {
            const auto u = static_cast<std::size_t>(idx);
            for (int j = 1; j <= k + 1; ++j) L.sd[u] += C.sd[static_cast<std::size_t>(child_index(k, idx, j))];
            for (int i = 0; i < s; ++i) {
                Rational acc = 0;
                for (int j = 1; j <= k + 1; ++j) {
                    const auto c = static_cast<std::size_t>(child_index(k, idx, j));
                    acc += std::max(C.q[static_cast<std::size_t>(i)][c], C.qo[static_cast<std::size_t>(i)][c]);
                }
                L.qo[static_cast<std::size_t>(i)][u] = acc;
                L.q[static_cast<std::size_t>(i)][u] = i == 0 ? L.q0[u] : L.q0[u] + L.qo[static_cast<std::size_t>(i) - 1][u];
            }
        }
    }
}

const Rational& PrefixProbabilities::q_num(int i, int length, std::int64_t idx) const {
    return level(length).q.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(idx));
}

const Rational& PrefixProbabilities::qo_num(int i, int length, std::int64_t idx) const {
    return level(length).qo.at(static_cast<std::size_t>(i)).at(static_cast<std::size_t>(idx));
}

Rational PrefixProbabilities::qbar_num(int i, int length, std::int64_t idx) const {
    return std::max(q_num(i, length, idx), qo_num(i, length, idx));
}

bool PrefixProbabilities::type_positive(int i, int length, std::int64_t idx) const {
    return q_num(i, length, idx) >= qo_num(i, length, idx);
}

bool PrefixProbabilities::eligible(int length, std::int64_t idx) const {
    return level(length).eligible.at(static_cast<std::size_t>(idx)) != 0;
}

Rational PrefixProbabilities::q(int i, const Permutation& p) const {
    const auto idx = index_of(p);
    return q_num(i, p.size(), idx) / sd(p.size(), idx);
}

Rational PrefixProbabilities::qo(int i, const Permutation& p) const {
    const auto idx = index_of(p);
    return qo_num(i, p.size(), idx) / sd(p.size(), idx);
}

Rational PrefixProbabilities::qbar(int i, const Permutation& p) const {
    const auto idx = index_of(p);
    return qbar_num(i, p.size(), idx) / sd(p.size(), idx);
}

Rational PrefixProbabilities::optimal_win() const { return qbar_num(s_ - 1, 1, 0) / sd(1, 0); }

// ---------------------------------------------------------------------------

namespace {

struct Node {
    int length;
    std::int64_t idx;
};

// Main step: scan the forest below sigma, keeping the first eligible type
// i-positive prefix on every branch; recurse with one query fewer below each.
void expand(const PrefixProbabilities& P, Node sigma, int i, std::vector<std::pair<Node, int>>& out) {
    if (sigma.length >= P.n()) return;  // full permutation, nothing below
    std::vector<Node> pending;
    for (int j = sigma.length + 1; j >= 1; --j)
        pending.push_back({sigma.length + 1, PrefixProbabilities::child_index(sigma.length, sigma.idx, j)});
    std::vector<Node> gamma;
    while (!pending.empty()) {
        const Node phi = pending.back();
        pending.pop_back();
        if (P.eligible(phi.length, phi.idx) && P.type_positive(i, phi.length, phi.idx)) {
            gamma.push_back(phi);
        } else {
            for (int j = phi.length + 1; j >= 1; --j)
                pending.push_back({phi.length + 1, PrefixProbabilities::child_index(phi.length, phi.idx, j)});
        }
    }
    for (const Node& g : gamma) {
        out.push_back({g, i});
        if (i >= 1) expand(P, g, i - 1, out);
    }
}

}  // namespace

std::vector<std::vector<Permutation>> StrikeSet::layers() const {
    std::vector<std::vector<Permutation>> out(static_cast<std::size_t>(s));
    for (const auto& m : members) out[static_cast<std::size_t>(m.layer)].push_back(m.prefix);
    for (auto& layer : out) std::sort(layer.begin(), layer.end());
    return out;
}

StrikeSet build_strike_set(const PrefixProbabilities& P) {
    const int n = P.n(), s = P.s();
    std::vector<std::pair<Node, int>> found;
    const Node root{1, 0};
    if (P.type_positive(s - 1, 1, 0)) {
        found.push_back({root, s - 1});
        if (s >= 2) expand(P, root, s - 2, found);
    } else {
        expand(P, root, s - 1, found);
    }

    StrikeSet a;
    a.s = s;
    Rational num = 0;
    std::vector<std::vector<char>> mark(static_cast<std::size_t>(n) + 1);
    for (int k = 1; k <= n; ++k) mark[static_cast<std::size_t>(k)].assign(static_cast<std::size_t>(factorial(k)), 0);
    for (const auto& [node, layer] : found) {
        a.members.push_back({PrefixProbabilities::prefix_at(node.length, node.idx), layer});
        num += P.q_num(0, node.length, node.idx);
        mark[static_cast<std::size_t>(node.length)][static_cast<std::size_t>(node.idx)] = 1;
    }
    a.win = num / P.sd(1, 0);

    a.chain_histogram.assign(static_cast<std::size_t>(n) + 1, 0);
    const std::int64_t leaves = factorial(n);
    for (std::int64_t leaf = 0; leaf < leaves; ++leaf) {
        int c = 0;
        for (int k = 1; k <= n; ++k) c += mark[static_cast<std::size_t>(k)][static_cast<std::size_t>(leaf % factorial(k))];
        ++a.chain_histogram[static_cast<std::size_t>(c)];
        a.longest_chain = std::max(a.longest_chain, c);
    }
    return a;
}

StrikeSet build_strike_set(int n, const Rational& theta, int s, int cap) {
    return build_strike_set(PrefixProbabilities(n, theta, s, cap));
}

StrikeSetCheck check_strike_set(const StrikeSet& a, const PrefixProbabilities& P) {
    StrikeSetCheck r;
    for (const auto& m : a.members) {
        const auto idx = PrefixProbabilities::index_of(m.prefix);
        if (!m.prefix.is_eligible(P.n())) r.eligible = false;
        if (!P.type_positive(m.layer, m.prefix.size(), idx)) r.typed = false;
    }
    r.minimal = a.longest_chain <= a.s;
    r.covering = a.chain_histogram.empty() || a.chain_histogram[0] == 0;
    return r;
}

// ---------------------------------------------------------------------------

InvarianceReport invariance_suite(int n, const Rational& theta, int s) {
    if (n > 6) throw resource_error("invariance_suite is exhaustive over prefixes and capped at n = 6");
    const PrefixProbabilities P(n, theta, s);
    InvarianceReport rep;
    auto fail = [&](const std::string& what) {
        if (rep.counterexamples.size() < 50) rep.counterexamples.push_back(what);
    };
    auto prob = [&](const Rational& num, int k, std::int64_t idx) { return Rational(num / P.sd(k, idx)); };

    for (int i = 0; i < s; ++i) {
        for (int k = 1; k <= n; ++k) {
            std::map<int, Rational> by_last;
            std::optional<Rational> qo_len;
            for (std::int64_t idx = 0; idx < factorial(k); ++idx) {
                const int last = static_cast<int>(idx / factorial(k - 1)) + 1;
                const Rational q = prob(P.q_num(i, k, idx), k, idx);
                const Rational qo = prob(P.qo_num(i, k, idx), k, idx);
                ++rep.checks;
                auto [it, fresh] = by_last.emplace(last, q);
                if (!fresh && it->second != q)
                    fail("Q_" + std::to_string(i) + " differs for prefixes of length " + std::to_string(k) +
                         " ending in relative value " + std::to_string(last) + ": " + P.prefix_at(k, idx).to_string());
                if (!qo_len) qo_len = qo;
                else if (*qo_len != qo)
                    fail("Q_" + std::to_string(i) + "^o not length-only at " + P.prefix_at(k, idx).to_string());
            }
        }
    }

    // g_tau maps the subtree below [12...k] onto the subtree below tau.
    for (int k = 1; k <= n - 1; ++k) {
        for (std::int64_t t = 0; t < factorial(k); ++t) {
            const Permutation tau = PrefixProbabilities::prefix_at(k, t);
            const bool tau_eligible = tau.is_eligible(n);
            for (int len = k; len <= n; ++len) {
                for (std::int64_t idx = 0; idx < factorial(len); ++idx) {
                    const Permutation sigma = PrefixProbabilities::prefix_at(len, idx);
                    if (prefix_relabel(sigma, k) != Permutation::identity(k)) continue;
                    if (len == k && !tau_eligible) continue;
                    const Permutation rho = apply_prefix_action(tau, sigma);
                    const auto ridx = PrefixProbabilities::index_of(rho);
                    for (int i = 0; i < s; ++i) {
                        ++rep.checks;
                        const std::string where = "g_" + tau.to_string() + " on " + sigma.to_string() + ", i=" + std::to_string(i);
                        if (prob(P.q_num(i, len, idx), len, idx) != prob(P.q_num(i, len, ridx), len, ridx))
                            fail("Q not preserved by " + where);
                        if (prob(P.qo_num(i, len, idx), len, idx) != prob(P.qo_num(i, len, ridx), len, ridx))
                            fail("Q^o not preserved by " + where);
                        if (tau_eligible && sigma.is_eligible(n) &&
                            P.type_positive(i, len, idx) != P.type_positive(i, len, ridx))
                            fail("type positivity not preserved by " + where);
                    }
                }
            }
        }
    }
    return rep;
}

std::string prefix_tree_json(const PrefixProbabilities& P) {
    nlohmann::ordered_json doc;
    doc["n"] = P.n();
    doc["s"] = P.s();
    doc["theta"] = to_string(P.theta());
    doc["win"] = to_string(P.optimal_win());
    auto& nodes = doc["prefixes"] = nlohmann::ordered_json::array();
    for (int k = 1; k <= P.n(); ++k) {
        for (std::int64_t idx = 0; idx < factorial(k); ++idx) {
            nlohmann::ordered_json node;
            node["prefix"] = PrefixProbabilities::prefix_at(k, idx).to_string();
            node["eligible"] = P.eligible(k, idx);
            const Rational& sd = P.sd(k, idx);
            for (int i = 0; i < P.s(); ++i) {
                node["q" + std::to_string(i)] = to_string(Rational(P.q_num(i, k, idx) / sd));
                node["qo" + std::to_string(i)] = to_string(Rational(P.qo_num(i, k, idx) / sd));
            }
            nodes.push_back(std::move(node));
        }
    }
    return doc.dump();
}

}  // namespace secretary
