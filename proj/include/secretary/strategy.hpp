// strategy.hpp — threshold strategies and their play-through semantics.
#pragma once
#include <span>
#include <string>
#include <vector>

namespace secretary {

enum class Model { genie, dowry };

const char* to_string(Model m);
Model parse_model(const std::string& text);

// Non-decreasing thresholds k_1 <= ... <= k_s. The i-th selection is the first
// left-to-right maximum strictly after position k_i (1-based) and after the
// previous selection.
class StrategyThresholds {
public:
    StrategyThresholds() = default;
    // Throws domain_error if empty, negative or decreasing.
    explicit StrategyThresholds(std::vector<int> ks);

    int s() const { return static_cast<int>(ks_.size()); }
    int operator[](int i) const { return ks_[static_cast<std::size_t>(i)]; }  // 0-based
    const std::vector<int>& ks() const { return ks_; }
    int back() const { return ks_.back(); }

    // First r thresholds.
    StrategyThresholds prefix(int r) const;
    // Rewrites duplicates into strictly increasing form, k'_{i+1} = max(k_{i+1}, k'_i + 1).
    // The play-through outcome of every permutation is unchanged.
    StrategyThresholds canonical() const;
    bool strictly_increasing() const;

    std::string to_string() const;  // "(0,1)"
    friend bool operator==(const StrategyThresholds&, const StrategyThresholds&) = default;

private:
    std::vector<int> ks_;
};

StrategyThresholds parse_thresholds(const std::string& text);  // "0,1" or "(0,1)"

struct PlayOutcome {
    bool win = false;
    int selections = 0;  // selections made before the process halts
    int capture = 0;     // 1-based index of the selection that took the best, 0 if none
    int stop = 0;        // 1-based position where interviewing halts
};

// Plays a strategy on one interview order (values 1..n, n best).
// Genie: a query accompanies each of the first s-1 selections and a confirmed
// best halts the process; the s-th selection halts it unconditionally.
// Dowry: interviewing halts only once all s selections are spent.
PlayOutcome play(std::span<const int> values, const StrategyThresholds& ks, Model model);

}  // namespace secretary
