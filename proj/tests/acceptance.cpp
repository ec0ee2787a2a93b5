// acceptance.cpp — one PASS/FAIL line per acceptance criterion.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "brute.hpp"
#include "secretary/asymptotics.hpp"
#include "secretary/errors.hpp"
#include "secretary/exact_oracle.hpp"
#include "secretary/expectations.hpp"
#include "secretary/permutation.hpp"
#include "secretary/rational.hpp"
#include "secretary/simulator.hpp"
#include "secretary/strategy_eval.hpp"
#include "secretary/threshold_dp.hpp"

using namespace secretary;

namespace {

using Rows = std::vector<std::vector<std::string>>;

Rows read_csv(const std::string& name) {
    std::ifstream in(std::string(SECRETARY_REFERENCE_DIR) + "/" + name);
    if (!in) throw std::runtime_error("missing reference file " + name);
    Rows rows;
    std::string line;
    std::getline(in, line);
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::vector<std::string> cells;
        std::stringstream ss(line);
        std::string c;
        while (std::getline(ss, c, ',')) cells.push_back(c);
        rows.push_back(cells);
    }
    return rows;
}

std::string fmt(const char* f, double a, double b = 0, double c = 0) {
    char buf[256];
    std::snprintf(buf, sizeof buf, f, a, b, c);
    return buf;
}

struct Criterion {
    int id;
    std::string title;
    std::vector<std::string> fails, flags, notes;
    long checks = 0;
    double limit_s = 0;  // runtime bound, 0 for none

    void expect(bool ok, const std::string& what) {
        ++checks;
        if (!ok) fails.push_back(what);
    }
    // Within tol passes; above strict (if set) is reported as a flag.
    void near(const std::string& what, double expected, double obtained, double tol, double strict = -1) {
        const double d = std::fabs(expected - obtained);
        ++checks;
        const std::string msg = what + fmt(": expected %.10g obtained %.10g diff %.3g", expected, obtained, d);
        if (!(d <= tol))
            fails.push_back(msg + fmt(" > %.0e", tol));
        else if (strict >= 0 && d > strict)
            flags.push_back(msg + fmt(" (within %.0e, above %.0e)", tol, strict));
    }
};

int report(Criterion& c, const std::function<void(Criterion&)>& body) {
    const auto t0 = std::chrono::steady_clock::now();
    try {
        body(c);
    } catch (const std::exception& e) {
        c.fails.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (c.limit_s > 0 && secs > c.limit_s) c.fails.push_back(fmt("runtime %.2fs over %.0fs", secs, c.limit_s));
    const bool ok = c.fails.empty();
    std::printf("%s criterion %d: %s (%ld checks, %zu flagged, %.2fs)\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(),
                c.checks, c.flags.size(), secs);
    for (const auto& n : c.notes) std::printf("    note: %s\n", n.c_str());
    for (const auto& f : c.flags) std::printf("    flag: %s\n", f.c_str());
    for (const auto& f : c.fails) std::printf("    fail: %s\n", f.c_str());
    std::fflush(stdout);
    return ok ? 0 : 1;
}

bool in_band(double th) { return th > 0.9 && th < 1.2; }

void worked_example(Criterion& c) {
    const Rational one(1);
    for (int s : {1, 2}) {
        const Rational want = s == 2 ? Rational(17, 24) : Rational(11, 24);
        const PrefixProbabilities p(4, one, s);
        c.expect(p.optimal_win() == want, "oracle optimum s=" + std::to_string(s) + " = " + to_string(p.optimal_win()));
        const auto ks = optimal_thresholds(4, 1.0, s);
        c.expect(enumerate_win_prob(4, one, ks, Model::genie) == want, "oracle at DP thresholds s=" + std::to_string(s));
        c.near("DP s=" + std::to_string(s), to_double(want), optimal_win_prob(4, 1.0, s), 1e-12);
        c.near("closed form s=" + std::to_string(s), to_double(want), win_ratio(4, ks, 1.0), 1e-12);
    }
}

void threshold_table(Criterion& c) {
    std::map<double, std::vector<std::vector<std::string>>> by_theta;
    for (const auto& r : read_csv("thresholds.csv")) by_theta[std::stod(r[0])].push_back(r);
    for (const auto& [th, rows] : by_theta) {
        const auto res = search_thresholds(th, 5, 1000);
        c.expect(!res.cap_hit, fmt("theta=%g hit the search cap", th));
        const auto& got = th < 1 ? res.b : res.a;
        for (const auto& r : rows) {
            const int s = std::stoi(r[1]);
            const auto i = static_cast<std::size_t>(s - 1);
            const std::string cell = fmt("theta=%g s=%g", th, s);
            const int want = std::stoi(r[3]);
            if (in_band(th)) {
                c.near(cell + " threshold", want, got[i], 1, 0);
                c.near(cell + " p", std::stod(r[4]), res.p[i], 1e-4, 5e-7);
            } else {
                c.expect(got[i] == want, cell + " threshold " + std::to_string(got[i]) + " != " + r[3]);
                c.near(cell + " p", std::stod(r[4]), res.p[i], 5e-7);
            }
        }
    }
}

void uniform_table(Criterion& c) {
    const auto u = uniform_thresholds(5);
    for (const auto& r : read_csv("uniform.csv")) {
        const auto i = static_cast<std::size_t>(std::stoi(r[0]) - 1);
        c.near("x" + r[0], std::stod(r[1]), u.x[i], 1e-9);
        c.near("p" + r[0], std::stod(r[2]), u.p[i], 1e-9);
    }
    c.near("x1 = 1/e", std::exp(-1.0), u.x[0], 1e-10);
}

void selections_table(Criterion& c) {
    const int n = kDefaultExpectationN;
    for (const auto& r : read_csv("selections.csv")) {
        const double th = std::stod(r[0]);
        const double want_u = std::stod(r[1]), want_c = std::stod(r[2]);
        const std::string cell = "theta=" + r[0];
        if (th == 1.0) {
            // Rounded fractional thresholds give an O(1/n) proxy error; the
            // tolerance is checked on the limit and the proxy must converge to it.
            const auto u = uniform_thresholds(5);
            const double lim_u = uniform_expected_selections(u.x, false);
            const double lim_c = uniform_expected_selections(u.x, true);
            c.near(cell + " unconditional (limit)", want_u, lim_u, 1e-4);
            c.near(cell + " conditional (limit)", want_c, lim_c, 1e-4);
            for (bool cond : {false, true}) {
                const double lim = cond ? lim_c : lim_u;
                const double a = expected_selections(n, u.finite_thresholds(n), 1.0, cond);
                const double b = expected_selections(2 * n, u.finite_thresholds(2 * n), 1.0, cond);
                c.notes.push_back(fmt("theta=1 proxy n=2000 %.8f, n=4000 %.8f, limit %.8f", a, b, lim) +
                                  (cond ? " (conditional)" : " (unconditional)"));
                c.expect(std::fabs(b - lim) < std::fabs(a - lim), cell + " proxy does not converge from 2000 to 4000");
                c.expect(std::fabs(a - lim) < 5.0 / n, cell + " proxy n=2000 further than 5/n from the limit");
                const double want = cond ? want_c : want_u;
                if (std::fabs(a - want) > 1e-4)
                    c.flags.push_back(cell + (cond ? " conditional" : " unconditional") +
                                      fmt(" proxy n=2000 alone: diff %.3g above 1e-04", std::fabs(a - want)));
            }
            continue;
        }
        const auto ks = search_thresholds(th, 5).finite_thresholds(n);
        const double tol = in_band(th) ? 1e-2 : 1e-4;
        const double strict = in_band(th) ? 1e-4 : -1;
        c.near(cell + " unconditional", want_u, expected_selections(n, ks, th, false), tol, strict);
        c.near(cell + " conditional", want_c, expected_selections(n, ks, th, true), tol, strict);
        if (th == 0.1 || th == 0.5 || th == 5.0) {
            const auto k2 = search_thresholds(th, 5).finite_thresholds(2 * n);
            c.near(cell + " n=2000 vs n=4000", expected_selections(n, ks, th, false),
                   expected_selections(2 * n, k2, th, false), 1e-4);
        }
    }
}

void stopping_table(Criterion& c) {
    const int n = kDefaultExpectationN;
    for (const auto& r : read_csv("stopping.csv")) {
        const Model m = parse_model(r[0]);
        const bool cond = r[1] == "1";
        const int s = std::stoi(r[2]);
        const auto u = uniform_thresholds(s);
        const auto d = stopping_distribution(n, u.finite_thresholds(n), 1.0, m, cond);
        const std::string cell = r[0] + (cond ? " conditional" : " unconditional") + " s=" + r[2];
        c.near(cell + " esr", std::stod(r[3]), d.expected_stop_ratio(), 1e-3);
        const double wl = d.whole_list_probability();
        if (m == Model::genie && !cond && s == 5) {
            // Allowed to disagree; the obtained value is reported either way.
            const double lim = uniform_whole_list_probability(u.x, m, cond);
            const double diff = std::fabs(wl - std::stod(r[4]));
            ++c.checks;
            const std::string msg = cell + fmt(" whole_list: printed %.4g obtained %.6g (limit %.6g)", std::stod(r[4]),
                                               wl, lim);
            if (diff <= 1e-3)
                c.notes.push_back(msg + " confirmed");
            else
                c.flags.push_back(msg);
        } else {
            c.near(cell + " whole_list", std::stod(r[4]), wl, 1e-3);
        }
        // Limit of the proxy, for reference.
        const double lim = uniform_expected_stop_ratio(u.x, m, cond);
        c.expect(std::fabs(lim - d.expected_stop_ratio()) < 5.0 / n, cell + " esr proxy far from its limit");
    }
}

void oracle_equivalence(Criterion& c) {
    std::mt19937_64 rng(20240601);
    for (const char* ts : {"1/2", "1", "2"}) {
        const Rational thq = parse_rational(ts);
        const double th = to_double(thq);
        for (int n = 1; n <= 7; ++n)
            for (int s = 1; s <= 3; ++s)
                for (int rep = 0; rep < 50; ++rep) {
                    const auto kv = brute::random_thresholds(rng, s, n - 1);
                    const StrategyThresholds ks(kv);
                    const std::string tag = std::string("theta=") + ts + " n=" + std::to_string(n) + " ks=" + ks.to_string();
                    const auto g = enumerate_strategy(n, thq, ks, Model::genie);
                    const auto d = enumerate_strategy(n, thq, ks, Model::dowry);
                    const auto bg = brute::enumerate(n, th, kv, true);
                    const auto bd = brute::enumerate(n, th, kv, false);
                    const double w = to_double(g.win);
                    c.near(tag + " win closed form", w, win_ratio(n, ks, th), 1e-12);
                    c.near(tag + " win recurrence", w, win_ratio_recurrence(n, ks, th), 1e-12);
                    c.near(tag + " win naive", w, bg.win, 1e-12);
                    double below = 0;
                    for (int r = 0; r <= s; ++r) {
                        const double t = to_double(g.exactly_picked[static_cast<std::size_t>(r)]);
                        c.near(tag + " T_" + std::to_string(r), t, t_exact_ratio(n, ks, r, th), 1e-12);
                        c.near(tag + " T_" + std::to_string(r) + " naive", t, bg.picked[static_cast<std::size_t>(r)], 1e-12);
                        below += t;
                        if (r < s) {
                            c.near(tag + " T_<=" + std::to_string(r), below, t_leq_ratio(n, ks.prefix(r + 1), th), 1e-12);
                            c.near(tag + " T_<=" + std::to_string(r) + " recurrence", below,
                                   t_leq_ratio_recurrence(n, ks.prefix(r + 1), th), 1e-12);
                        }
                    }
                    for (int r = 1; r <= s; ++r) {
                        const double wr = to_double(g.captured_by[static_cast<std::size_t>(r)]);
                        c.near(tag + " W_" + std::to_string(r), wr, w_exact_ratio(n, ks, r, th), 1e-12);
                        c.near(tag + " W_" + std::to_string(r) + " naive", wr, bg.captured[static_cast<std::size_t>(r)],
                               1e-12);
                    }
                    for (const auto* e : {&g, &d}) {
                        const Model m = e == &g ? Model::genie : Model::dowry;
                        const auto& b = e == &g ? bg : bd;
                        const auto du = stopping_distribution(n, ks, th, m, false);
                        const auto dc = stopping_distribution(n, ks, th, m, true);
                        for (int pos = 1; pos <= n; ++pos) {
                            const auto p = static_cast<std::size_t>(pos);
                            const std::string at = tag + " " + to_string(m) + " m=" + std::to_string(pos);
                            c.near(at + " stop", to_double(e->stop_mass[p]), du.masses[p], 1e-12);
                            c.near(at + " stop naive", to_double(e->stop_mass[p]), b.stop[p], 1e-12);
                            c.near(at + " stop&win", to_double(e->stop_mass_win[p]), dc.masses[p], 1e-12);
                            c.near(at + " stop&win naive", to_double(e->stop_mass_win[p]), b.stop_win[p], 1e-12);
                        }
                    }
                }
    }
}

void invariance(Criterion& c) {
    for (int n = 1; n <= 6; ++n)
        for_each_permutation(n, [&](const Permutation& pi) {
            for (int k = 1; k <= n; ++k) {
                bool inc = true;
                for (int j = 1; j < k; ++j) inc = inc && pi[j] > pi[j - 1];
                if (!inc) break;
                for_each_permutation(k, [&](const Permutation& tau) {
                    const auto moved = apply_prefix_action(tau, pi);
                    ++c.checks;
                    if (kendall_tau(pi) - kendall_tau(moved) != -kendall_tau(tau))
                        c.fails.push_back("kendall prefix equivariance n=" + std::to_string(n));
                });
            }
        });
    for (const char* ts : {"1/2", "1", "2"})
        for (int n = 1; n <= 5; ++n)
            for (int s = 1; s <= 3; ++s) {
                const auto rep = invariance_suite(n, parse_rational(ts), s);
                c.checks += rep.checks;
                for (const auto& ce : rep.counterexamples) c.fails.push_back(std::string("theta=") + ts + " " + ce);
            }
    std::vector<double> grid;
    for (const auto& r : read_csv("thresholds.csv")) {
        const double th = std::stod(r[0]);
        if (grid.empty() || grid.back() != th) grid.push_back(th);
    }
    const int n = 1000;
    for (double th : grid) {
        StrategyThresholds prev;
        for (int s = 1; s <= 5; ++s) {
            const QTable t(n, th, s);
            c.expect(t.single_crossover(), fmt("single crossover theta=%g s=%g", th, s));
            const auto ks = optimal_thresholds(t);
            for (int i = 1; i < s; ++i) c.expect(ks[i - 1] <= ks[i], fmt("ordered theta=%g s=%g", th, s));
            for (int i = 0; i + 1 < s; ++i) c.expect(ks[i + 1] == prev[i], fmt("right alignment theta=%g s=%g", th, s));
            prev = ks;
        }
    }
}

void monte_carlo(Criterion& c) {
    const auto a = simulate(4, 1.0, StrategyThresholds({0, 1}), Model::genie, 1000000, 1);
    c.notes.push_back(fmt("n=4: %.6f +- %.6f (exact %.6f)", a.win_rate.mean, a.win_rate.se, 17.0 / 24));
    c.near("n=4 theta=1 s=2", 17.0 / 24, a.win_rate.mean, 3 * a.win_rate.se);
    const auto ks = uniform_thresholds(2).finite_thresholds(200);
    const auto b = simulate(200, 1.0, ks, Model::genie, 1000000, 2);
    c.notes.push_back("n=200 thresholds " + ks.to_string() +
                      fmt(": %.6f +- %.6f (printed 0.5910)", b.win_rate.mean, b.win_rate.se));
    c.near("n=200 theta=1 scaled s=2", 0.5910, b.win_rate.mean, 3 * b.win_rate.se + 0.01);
}

void genie_dowry(Criterion& c) {
    for (const char* ts : {"1/2", "1", "2"}) {
        const Rational th = parse_rational(ts);
        for (int n = 1; n <= 6; ++n)
            for (int s = 1; s <= 3; ++s)
                for (const auto& kv : brute::all_thresholds(s, n - 1)) {
                    const StrategyThresholds ks(kv);
                    const auto g = enumerate_strategy(n, th, ks, Model::genie);
                    const auto d = enumerate_strategy(n, th, ks, Model::dowry);
                    const std::string tag = std::string("theta=") + ts + " n=" + std::to_string(n) + " ks=" + ks.to_string();
                    c.expect(g.win == d.win, tag + " win");
                    c.expect(g.exactly_picked == d.exactly_picked, tag + " selection counts");
                }
    }
    for (double th : {0.5, 1.0, 2.0})
        for (int n : {6, 25, 120}) {
            const auto ks = optimal_thresholds(n, th, 3);
            const auto g = simulate(n, th, ks, Model::genie, 200000, 11);
            const auto d = simulate(n, th, ks, Model::dowry, 200000, 12);
            const std::string tag = fmt("sim theta=%g n=%g", th, n) + " ks=" + ks.to_string();
            const double exact = win_ratio(n, ks, th);
            c.near(tag + " genie win", exact, g.win_rate.mean, 3 * g.win_rate.se);
            c.near(tag + " dowry win", exact, d.win_rate.mean, 3 * d.win_rate.se);
            c.near(tag + " genie vs dowry win", g.win_rate.mean, d.win_rate.mean,
                   3 * std::hypot(g.win_rate.se, d.win_rate.se));
            c.near(tag + " genie vs dowry selections", g.mean_selections.mean, d.mean_selections.mean,
                   3 * std::hypot(g.mean_selections.se, d.mean_selections.se));
        }
}

}  // namespace

int main() {
    std::vector<Criterion> cs = {
        {1, "worked example n=4 theta=1, oracle and DP", {}, {}, {}, 0, 1},
        {2, "asymptotic thresholds and win probabilities, cap 1000", {}, {}, {}, 0, 600},
        {3, "uniform thresholds x1..x5 and p1..p5", {}, {}, {}, 0, 60},
        {4, "expected selections, proxy n=2000", {}, {}, {}, 0, 0},
        {5, "stopping ratio and whole-list probability at theta=1, proxy n=2000", {}, {}, {}, 0, 0},
        {6, "closed form, recurrence and enumeration agree", {}, {}, {}, 0, 0},
        {7, "invariance suites, single crossover, right alignment", {}, {}, {}, 0, 0},
        {8, "Monte Carlo against exact and printed values", {}, {}, {}, 0, 120},
        {9, "Genie and Dowry agree, exactly and in simulation", {}, {}, {}, 0, 0},
    };
    const std::vector<std::function<void(Criterion&)>> bodies = {
        worked_example, threshold_table, uniform_table, selections_table, stopping_table,
        oracle_equivalence, invariance, monte_carlo, genie_dowry};
    int failed = 0;
    for (std::size_t i = 0; i < cs.size(); ++i) failed += report(cs[i], bodies[i]);
    std::printf("%d of %zu criteria failed\n", failed, cs.size());
    return failed ? 1 : 0;
}
