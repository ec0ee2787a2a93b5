// permutation.cpp — permutation primitives and the inversion count.
#include "secretary/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "secretary/errors.hpp"

namespace secretary {

namespace {

void check_bijection(const std::vector<int>& v) {
    std::vector<char> seen(v.size() + 1, 0);
    for (int x : v) {
        if (x < 1 || x > static_cast<int>(v.size()) || seen[static_cast<std::size_t>(x)])
            throw domain_error("permutation: values must be a bijection on 1..n");
        seen[static_cast<std::size_t>(x)] = 1;
    }
}

}  // namespace

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
    check_bijection(values_);
}

Permutation::Permutation(std::initializer_list<int> values) : values_(values) {
    check_bijection(values_);
}

Permutation Permutation::identity(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    return Permutation(std::move(v));
}

int Permutation::best_position() const {
    auto it = std::find(values_.begin(), values_.end(), size());
    return static_cast<int>(it - values_.begin());
}

bool Permutation::is_left_to_right_max(int pos) const {
    if (pos < 0 || pos >= size()) throw domain_error("is_left_to_right_max: position out of range");
    for (int j = 0; j < pos; ++j)
        if (values_[static_cast<std::size_t>(j)] > values_[static_cast<std::size_t>(pos)]) return false;
    return true;
}

bool Permutation::is_eligible(int full_length) const {
    if (values_.empty()) return false;
    return size() == full_length || values_.back() == size();
}

Permutation Permutation::reversed() const {
    std::vector<int> v(values_.rbegin(), values_.rend());
    return Permutation(std::move(v));
}

std::string Permutation::to_string() const {
    std::ostringstream os;
    os << '[';
    const bool compact = size() < 10;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (i && !compact) os << ',';
        os << values_[i];
    }
    os << ']';
    return os.str();
}

std::int64_t kendall_tau(const Permutation& pi) {
    // Fenwick tree over values: count earlier entries larger than the current one.
    const int n = pi.size();
    std::vector<int> tree(static_cast<std::size_t>(n) + 1, 0);
    std::int64_t inv = 0;
    for (int i = 0; i < n; ++i) {
        int v = pi[i];
        int le = 0;
        for (int x = v; x > 0; x -= x & -x) le += tree[static_cast<std::size_t>(x)];
        inv += i - le;
        for (int x = v; x <= n; x += x & -x) ++tree[static_cast<std::size_t>(x)];
    }
    return inv;
}

Permutation rank_normalize(std::span<const int> values) {
    std::vector<int> order(values.size());
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
        return values[static_cast<std::size_t>(a)] < values[static_cast<std::size_t>(b)];
    });
    std::vector<int> ranks(values.size());
    for (std::size_t r = 0; r < order.size(); ++r)
        ranks[static_cast<std::size_t>(order[r])] = static_cast<int>(r) + 1;
    return Permutation(std::move(ranks));
}

Permutation prefix_relabel(const Permutation& pi, int k) {
    if (k < 1 || k > pi.size()) throw domain_error("prefix_relabel: k must satisfy 1 <= k <= n");
    return rank_normalize(pi.values().first(static_cast<std::size_t>(k)));
}

Permutation apply_prefix_action(const Permutation& tau, const Permutation& pi) {
    const int k = tau.size();
    if (k > pi.size()) throw domain_error("apply_prefix_action: tau longer than pi");
    for (int j = 1; j < k; ++j)
        if (pi[j] < pi[j - 1]) throw domain_error("apply_prefix_action: pi must start increasing");
    std::vector<int> v(pi.values().begin(), pi.values().end());
    // The first k entries of pi are sorted, so the entry of relative rank r is pi[r-1].
    for (int j = 0; j < k; ++j) v[static_cast<std::size_t>(j)] = pi[tau[j] - 1];
    return Permutation(std::move(v));
}

void for_each_permutation(int n, const std::function<void(const Permutation&)>& visit) {
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 1);
    do {
        visit(Permutation(v));
    } while (std::next_permutation(v.begin(), v.end()));
}

std::int64_t factorial(int n) {
    std::int64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

}  // namespace secretary
