// permutation.hpp — permutations of 1..n, the Kendall statistic and prefixes.
#pragma once
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace secretary {

// A bijection on {1,...,n}, written in one-line notation. Value n is the best
// candidate, value 1 the worst; index 0 is the first candidate interviewed.
class Permutation {
public:
    Permutation() = default;
    // Throws domain_error unless `values` is a bijection on {1,...,values.size()}.
    explicit Permutation(std::vector<int> values);
    Permutation(std::initializer_list<int> values);

    static Permutation identity(int n);

    int size() const { return static_cast<int>(values_.size()); }
    int operator[](int pos) const { return values_[static_cast<std::size_t>(pos)]; }
    std::span<const int> values() const { return values_; }

    // Position (0-based) holding value n, i.e. the best candidate.
    int best_position() const;
    // True when position `pos` exceeds every value to its left.
    bool is_left_to_right_max(int pos) const;
    // Eligible in the prefix-tree sense: ends in a left-to-right maximum, or
    // has full length `full_length`.
    bool is_eligible(int full_length) const;

    Permutation reversed() const;
    std::string to_string() const;  // "[4231]" style for n < 10, comma separated otherwise

    friend bool operator==(const Permutation&, const Permutation&) = default;
    friend auto operator<=>(const Permutation&, const Permutation&) = default;

private:
    std::vector<int> values_;
};

// Number of pairs (a, b), a before b, with value(a) > value(b). O(n log n).
std::int64_t kendall_tau(const Permutation& pi);

// Relabels the first k entries of pi by relative order. 1 <= k <= |pi|.
Permutation prefix_relabel(const Permutation& pi, int k);

// Rank normalization of an arbitrary sequence of distinct integers.
Permutation rank_normalize(std::span<const int> values);

// g_tau action: pi must start with an increasing run of length |tau|; the first
// |tau| entries are rearranged into the relative pattern tau, the rest is fixed.
Permutation apply_prefix_action(const Permutation& tau, const Permutation& pi);

// Calls visit(pi) for every pi in S_n in lexicographic order.
void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit);

std::int64_t factorial(int n);

}  // namespace secretary
