// exact_oracle.hpp — exhaustive rational evaluation over S_n, prefix-tree
// probabilities and strike sets for small n.
#pragma once
#include <cstdint>
#include <string>
#include <vector>

#include "secretary/mallows.hpp"
#include "secretary/permutation.hpp"
#include "secretary/rational.hpp"
#include "secretary/strategy.hpp"

namespace secretary {

// Aggregate outcome of playing one strategy on all of S_n, weighted exactly.
struct EnumerationResult {
    Rational win;                           // P(win)
    std::vector<Rational> exactly_picked;   // [r] = P(exactly r selections), r = 0..s
    std::vector<Rational> captured_by;      // [r] = P(best taken by selection r), r = 1..s; [0] unused
    std::vector<Rational> stop_mass;        // [m] = P(halt at position m), m = 1..n; [0] unused
    std::vector<Rational> stop_mass_win;    // [m] = P(halt at m and win)
};

EnumerationResult enumerate_strategy(int n, const Rational& theta, const StrategyThresholds& ks, Model model,
                                     int cap = kDefaultEnumerationCap);

Rational enumerate_win_prob(int n, const Rational& theta, const StrategyThresholds& ks, Model model,
                            int cap = kDefaultEnumerationCap);

// Prefix tree of S_n. A node of length k is addressed by its index in
// 0..k!-1, where index = sum_j (r_j - 1) (j-1)! over the relative ranks r_j of
// the prefix entries; child f_j(sigma) of a length-k node has index idx + (j-1) k!.
class PrefixProbabilities {
public:
    PrefixProbabilities(int n, const Rational& theta, int s, int cap = kDefaultEnumerationCap);

    int n() const { return n_; }
    int s() const { return s_; }
    const Rational& theta() const { return theta_; }

    static std::int64_t index_of(const Permutation& prefix);
    static Permutation prefix_at(int length, std::int64_t index);
    static std::int64_t child_index(int length, std::int64_t index, int j) {
        return index + (j - 1) * factorial(length);
    }

    // Probabilities conditioned on the prefix (numerator / SD).
    Rational q(int i, const Permutation& prefix) const;
    Rational qo(int i, const Permutation& prefix) const;
    Rational qbar(int i, const Permutation& prefix) const;
    Rational q0(const Permutation& prefix) const { return q(0, prefix); }

    // Raw numerators sharing the denominator sd().
    const Rational& sd(int length, std::int64_t idx) const { return level(length).sd[idx]; }
    const Rational& q_num(int i, int length, std::int64_t idx) const;
    const Rational& qo_num(int i, int length, std::int64_t idx) const;
    Rational qbar_num(int i, int length, std::int64_t idx) const;
    bool type_positive(int i, int length, std::int64_t idx) const;
    bool eligible(int length, std::int64_t idx) const;

    // qbar_{s-1}([1]), the optimal win probability.
    Rational optimal_win() const;

private:
    struct Level {
        std::vector<Rational> sd, q0;
        std::vector<std::vector<Rational>> q, qo;  // [i][idx]
        std::vector<char> eligible;
    };
    const Level& level(int length) const { return levels_.at(static_cast<std::size_t>(length)); }

    int n_, s_;
    Rational theta_;
    std::vector<Level> levels_;  // index 0 unused
};

struct StrikeMember {
    Permutation prefix;
    int layer;  // member of A_layer, type layer-positive
};

struct StrikeSet {
    std::vector<StrikeMember> members;  // layers s-1 down to 0
    int s = 0;
    Rational win;             // sum of Q_0 * SD over members, normalised
    int longest_chain = 0;    // most members on one root-to-leaf path
    std::vector<std::int64_t> chain_histogram;  // [c] = leaves whose path meets c members
    std::vector<std::vector<Permutation>> layers() const;
};

StrikeSet build_strike_set(const PrefixProbabilities& probs);
StrikeSet build_strike_set(int n, const Rational& theta, int s, int cap = kDefaultEnumerationCap);

struct StrikeSetCheck {
    bool eligible = true, minimal = true, covering = true, typed = true;
    bool ok() const { return eligible && minimal && covering && typed; }
};
StrikeSetCheck check_strike_set(const StrikeSet& a, const PrefixProbabilities& probs);

struct InvarianceReport {
    std::int64_t checks = 0;
    std::vector<std::string> counterexamples;
    bool pass() const { return counterexamples.empty(); }
};

// Exhaustive checks on the prefix tree: Q_i depends only on (length, last
// relative value), Q_i^o only on length, and g_tau preserves Q_i, Q_i^o and
// type i-positivity. Throws resource_error for n > 6.
InvarianceReport invariance_suite(int n, const Rational& theta, int s);

// JSON dump of every prefix with exact fraction strings.
std::string prefix_tree_json(const PrefixProbabilities& probs);

}  // namespace secretary
