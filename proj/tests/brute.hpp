// brute.hpp — naive reference implementations used only by the tests.
#pragma once
#include <algorithm>
#include <cmath>
#include <cstdint>
#include <numeric>
#include <random>
#include <vector>

namespace brute {

inline std::int64_t inversions(const std::vector<int>& v) {
    std::int64_t c = 0;
    for (std::size_t a = 0; a < v.size(); ++a)
        for (std::size_t b = a + 1; b < v.size(); ++b)
            if (v[a] > v[b]) ++c;
    return c;
}

struct Play {
    bool win = false;
    int picks = 0;
    int capture = 0;
    int stop = 0;
};

// Straight transcription of the rules: the (i+1)-th selection may happen only
// after position ks[i]; a selection is a left-to-right maximum. Genie halts
// on the best or on the last selection, Dowry only on the last selection.
inline Play play(const std::vector<int>& v, const std::vector<int>& ks, bool genie) {
    const int n = static_cast<int>(v.size());
    const int s = static_cast<int>(ks.size());
    Play p;
    p.stop = n;
    int best = 0;
    for (int pos = 1; pos <= n; ++pos) {
        const int x = v[static_cast<std::size_t>(pos - 1)];
        if (x < best) continue;
        best = x;
        if (p.picks == s || pos <= ks[static_cast<std::size_t>(p.picks)]) continue;
        ++p.picks;
        if (x == n) {
            p.win = true;
            p.capture = p.picks;
        }
        if ((genie && x == n) || p.picks == s) {
            p.stop = pos;
            break;
        }
    }
    return p;
}

struct Totals {
    double win = 0;
    std::vector<double> picked;    // [r], r = 0..s
    std::vector<double> captured;  // [r], r = 1..s
    std::vector<double> stop;      // [m], m = 1..n
    std::vector<double> stop_win;  // [m]
};

inline Totals enumerate(int n, double theta, const std::vector<int>& ks, bool genie) {
    const int s = static_cast<int>(ks.size());
    Totals t;
    t.picked.assign(static_cast<std::size_t>(s) + 1, 0.0);
    t.captured.assign(static_cast<std::size_t>(s) + 1, 0.0);
    t.stop.assign(static_cast<std::size_t>(n) + 1, 0.0);
    t.stop_win.assign(static_cast<std::size_t>(n) + 1, 0.0);
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    double z = 0;
    do {
        const double w = std::pow(theta, static_cast<double>(inversions(v)));
        z += w;
        const Play p = play(v, ks, genie);
        t.picked[static_cast<std::size_t>(p.picks)] += w;
        t.stop[static_cast<std::size_t>(p.stop)] += w;
        if (p.win) {
            t.win += w;
            t.captured[static_cast<std::size_t>(p.capture)] += w;
            t.stop_win[static_cast<std::size_t>(p.stop)] += w;
        }
    } while (std::next_permutation(v.begin(), v.end()));
    t.win /= z;
    for (auto* vec : {&t.picked, &t.captured, &t.stop, &t.stop_win})
        for (double& x : *vec) x /= z;
    return t;
}

// Random non-decreasing tuple of length s with entries in [0, hi].
inline std::vector<int> random_thresholds(std::mt19937_64& rng, int s, int hi) {
    std::uniform_int_distribution<int> d(0, hi);
    std::vector<int> ks(static_cast<std::size_t>(s));
    for (int& k : ks) k = d(rng);
    std::sort(ks.begin(), ks.end());
    return ks;
}

// All non-decreasing s-tuples with entries in [0, hi].
inline std::vector<std::vector<int>> all_thresholds(int s, int hi) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur(static_cast<std::size_t>(s), 0);
    while (true) {
        out.push_back(cur);
        int i = s - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == hi) --i;
        if (i < 0) break;
        const int v = cur[static_cast<std::size_t>(i)] + 1;
        for (int j = i; j < s; ++j) cur[static_cast<std::size_t>(j)] = v;
    }
    return out;
}

}  // namespace brute
