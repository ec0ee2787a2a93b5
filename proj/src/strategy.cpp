// strategy.cpp
#include "secretary/strategy.hpp"

#include <sstream>

#include "secretary/errors.hpp"

namespace secretary {

const char* to_string(Model m) { return m == Model::genie ? "genie" : "dowry"; }

Model parse_model(const std::string& text) {
    if (text == "genie") return Model::genie;
    if (text == "dowry") return Model::dowry;
    throw domain_error("model must be 'genie' or 'dowry'");
}

StrategyThresholds::StrategyThresholds(std::vector<int> ks) : ks_(std::move(ks)) {
    if (ks_.empty()) throw domain_error("strategy needs at least one threshold");
    for (std::size_t i = 0; i < ks_.size(); ++i) {
        if (ks_[i] < 0) throw domain_error("thresholds must be nonnegative");
        if (i && ks_[i] < ks_[i - 1]) throw domain_error("thresholds must be non-decreasing");
    }
}

StrategyThresholds StrategyThresholds::prefix(int r) const {
    if (r < 1 || r > s()) throw domain_error("strategy prefix length out of range");
    return StrategyThresholds(std::vector<int>(ks_.begin(), ks_.begin() + r));
}

StrategyThresholds StrategyThresholds::canonical() const {
    std::vector<int> out(ks_);
    for (std::size_t i = 1; i < out.size(); ++i)
        if (out[i] <= out[i - 1]) out[i] = out[i - 1] + 1;
    return StrategyThresholds(std::move(out));
}

bool StrategyThresholds::strictly_increasing() const {
    for (std::size_t i = 1; i < ks_.size(); ++i)
        if (ks_[i] <= ks_[i - 1]) return false;
    return true;
}

std::string StrategyThresholds::to_string() const {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < ks_.size(); ++i) os << (i ? "," : "") << ks_[i];
    os << ')';
    return os.str();
}

StrategyThresholds parse_thresholds(const std::string& text) {
    std::vector<int> ks;
    std::string cur;
    auto flush = [&] {
        if (cur.empty()) return;
        std::size_t used = 0;
        int v = 0;
        try {
            v = std::stoi(cur, &used);
        } catch (const std::exception&) {
            throw domain_error("bad threshold '" + cur + "'");
        }
        if (used != cur.size()) throw domain_error("bad threshold '" + cur + "'");
        ks.push_back(v);
        cur.clear();
    };
    for (char c : text) {
        if (c == ',' || c == ' ') flush();
        else if (c != '(' && c != ')') cur += c;
    }
    flush();
    return StrategyThresholds(std::move(ks));
}

PlayOutcome play(std::span<const int> values, const StrategyThresholds& ks, Model model) {
    const int n = static_cast<int>(values.size());
    const int s = ks.s();
    PlayOutcome out;
    int running_max = 0;
    for (int m = 1; m <= n; ++m) {
        const int v = values[static_cast<std::size_t>(m) - 1];
        if (v < running_max) continue;
        running_max = v;
        if (out.selections == s || m <= ks[out.selections]) continue;
        ++out.selections;
        if (v == n) out.capture = out.selections;
        const bool halt = out.selections == s || (model == Model::genie && v == n);
        if (halt) {
            out.stop = m;
            break;
        }
    }
    if (out.stop == 0) out.stop = n;
    out.win = out.capture > 0;
    return out;
}

}  // namespace secretary
