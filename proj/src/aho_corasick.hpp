#pragma once

#include <queue>
#include <vector>

namespace oplab::detail {

// Multi-pattern automaton over the symbols 0..symbols-1. After build(),
// step() is total and matched(s) says some pattern is a suffix of the input
// read so far.
class AhoCorasick {
public:
    explicit AhoCorasick(int symbols) : symbols_(symbols) { add_state(); }

    int add(const std::vector<int>& pattern) {
        int s = 0;
        for (int c : pattern) {
            if (go_[s][c] < 0) {
                int t = add_state();
                go_[s][c] = t;
            }
            s = go_[s][c];
        }
        ends_[s] = true;
        return s;
    }

    void build() {
        fail_.assign(go_.size(), 0);
        matched_ = ends_;
        suffix_match_.assign(go_.size(), false);
        std::queue<int> queue;
        for (int c = 0; c < symbols_; ++c) {
            int t = go_[0][c];
            if (t < 0) {
                go_[0][c] = 0;
            } else {
                queue.push(t);
            }
        }
        while (!queue.empty()) {
            int s = queue.front();
            queue.pop();
            if (s != 0) {
                suffix_match_[s] = matched_[fail_[s]];
                matched_[s] = matched_[s] || matched_[fail_[s]];
            }
            for (int c = 0; c < symbols_; ++c) {
                int t = go_[s][c];
                if (t < 0) {
                    go_[s][c] = go_[fail_[s]][c];
                } else if (s != 0) {
                    fail_[t] = go_[fail_[s]][c];
                    queue.push(t);
                }
            }
        }
    }

    int symbols() const { return symbols_; }
    int states() const { return static_cast<int>(go_.size()); }
    int step(int s, int c) const { return go_[s][c]; }
    bool matched(int s) const { return matched_[s]; }
    // Some pattern other than the path to s itself is a suffix of that path.
    bool proper_suffix_matched(int s) const { return suffix_match_[s]; }

private:
    int add_state() {
        go_.emplace_back(symbols_, -1);
        ends_.push_back(false);
        return static_cast<int>(go_.size()) - 1;
    }

    int symbols_;
    std::vector<std::vector<int>> go_;
    std::vector<bool> ends_;
    std::vector<int> fail_;
    std::vector<bool> matched_;
    std::vector<bool> suffix_match_;
};

// Drops duplicates and every pattern that contains another as a factor.
inline std::vector<std::vector<int>> factor_reduce(int symbols, const std::vector<std::vector<int>>& patterns) {
    AhoCorasick ac(symbols);
    for (const auto& p : patterns) ac.add(p);
    ac.build();
    std::vector<std::vector<int>> kept;
    std::vector<bool> seen(ac.states(), false);
    for (const auto& p : patterns) {
        int s = 0;
        bool redundant = false;
        for (std::size_t k = 0; k < p.size() && !redundant; ++k) {
            s = ac.step(s, p[k]);
            redundant = k + 1 < p.size() ? ac.matched(s) : ac.proper_suffix_matched(s);
        }
        if (redundant || seen[s]) continue;
        seen[s] = true;
        kept.push_back(p);
    }
    return kept;
}

}  // namespace oplab::detail
