// Match-set transfer counting for monomial operads.
//
// Every non-root vertex of a relation is a subpattern. The state of a normal
// form is the set of subpatterns that match at its root vertex; a leaf has
// the empty set. A tree whose children are normal forms is itself a normal
// form iff no relation matches at its root, and both that test and the new
// state depend only on the generator and the children's states. Normal forms
// are then counted by (state, degree) with one series per state.

#include "profile_dp.hpp"

#include <algorithm>
#include <map>

namespace oplab::detail {

namespace {

constexpr int kWildcard = -1;

struct Pattern {
    Label label = 0;
    std::vector<int> kids;  // subpattern ids, kWildcard for a leaf of the relation
};

class PatternStore {
public:
    int intern(const TreeNode& node) {
        Pattern pat{node.label, {}};
        pat.kids.reserve(node.children.size());
        for (const auto& c : node.children) pat.kids.push_back(c ? intern(*c) : kWildcard);
        auto key = std::make_pair(pat.label, pat.kids);
        if (auto it = index_.find(key); it != index_.end()) return it->second;
        int id = static_cast<int>(patterns_.size());
        patterns_.push_back(std::move(pat));
        index_.emplace(std::move(key), id);
        return id;
    }

    const Pattern& operator[](int id) const { return patterns_[id]; }
    std::size_t size() const { return patterns_.size(); }

private:
    std::vector<Pattern> patterns_;
    std::map<std::pair<Label, std::vector<int>>, int> index_;
};

// Flat truncated series: `len` coefficient slots per degree.
struct Series {
    std::vector<BigInt> data;
};

struct Prefix {
    bool left_is_state = true;
    int left = 0;   // state or prefix index
    int right = 0;  // state
    Series series;
};

struct Transition {
    Label label = 0;
    std::vector<int> kids;  // state per child slot
    int target = 0;         // state of the resulting tree
    int product = -1;          // prefix index of the full product (arity >= 2)
};

}  // namespace

std::vector<std::vector<BigInt>> profile_dp_counts(const MonomialOperadPresentation& p, DpMode mode, int max_degree,
                                                   int max_arity) {
    const Alphabet& alphabet = *p.alphabet();
    if (mode == DpMode::arity && alphabet.has_unary())
        throw CompletenessError("arity-graded counting needs generators of arity >= 2");
    if (max_degree < 0) return {};

    PatternStore store;
    std::vector<Pattern> roots;
    for (const auto& r : p.relations()) {
        Pattern root{r.root()->label, {}};
        for (const auto& c : r.root()->children) root.kids.push_back(c ? store.intern(*c) : kWildcard);
        roots.push_back(std::move(root));
    }
    std::vector<std::vector<const Pattern*>> roots_by_label(alphabet.size());
    for (const auto& r : roots) roots_by_label[r.label].push_back(&r);
    std::vector<std::vector<int>> patterns_by_label(alphabet.size());
    for (std::size_t id = 0; id < store.size(); ++id) patterns_by_label[store[static_cast<int>(id)].label].push_back(static_cast<int>(id));

    // states[i] is a sorted set of subpattern ids; state 0 (empty) also holds the leaf
    std::vector<std::vector<int>> states{{}};
    std::map<std::vector<int>, int> state_index{{{}, 0}};
    std::vector<Transition> transitions;

    auto fits = [&](const Pattern& pat, const std::vector<int>& kids) {
        for (std::size_t i = 0; i < pat.kids.size(); ++i) {
            if (pat.kids[i] == kWildcard) continue;
            const auto& st = states[kids[i]];
            if (!std::binary_search(st.begin(), st.end(), pat.kids[i])) return false;
        }
        return true;
    };

    // Closure over reachable states: state t is combined only with states
    // 0..t, and every tuple contains t, so each tuple is examined once.
    for (std::size_t t = 0; t < states.size(); ++t) {
        for (Label label = 0; label < alphabet.size(); ++label) {
            const int k = alphabet.arity(label);
            std::vector<int> idx(k, 0);
            while (true) {
                bool contains_t = false;
                for (int i : idx) contains_t |= (i == static_cast<int>(t));
                bool ok = contains_t;
                for (const Pattern* r : roots_by_label[label])
                    if (ok && fits(*r, idx)) ok = false;
                if (ok) {
                    std::vector<int> matched;
                    for (int id : patterns_by_label[label])
                        if (fits(store[id], idx)) matched.push_back(id);
                    auto [it, inserted] = state_index.emplace(matched, static_cast<int>(states.size()));
                    if (inserted) states.push_back(std::move(matched));
                    transitions.push_back({label, idx, it->second, -1});
                }
                int j = k - 1;
                while (j >= 0 && idx[j] == static_cast<int>(t)) idx[j--] = 0;
                if (j < 0) break;
                ++idx[j];
            }
        }
    }

    const std::size_t len = mode == DpMode::weight_arity ? static_cast<std::size_t>(max_arity) + 1 : 1;
    const std::size_t degrees = static_cast<std::size_t>(max_degree) + 1;
    const int offset = mode == DpMode::arity ? 0 : 1;  // degree added by the root vertex
    const std::size_t leaf_degree = mode == DpMode::arity ? 1 : 0;

    std::vector<Series> state_series(states.size());
    for (auto& s : state_series) s.data.assign(degrees * len, 0);
    if (leaf_degree < degrees) {
        std::size_t slot = leaf_degree * len + (mode == DpMode::weight_arity ? 1 : 0);
        if (slot < degrees * len && (mode != DpMode::weight_arity || len > 1)) state_series[0].data[slot] = 1;
    }

    // Shared prefix products for generators of arity >= 2.
    std::vector<Prefix> prefixes;
    std::map<std::tuple<bool, int, int>, int> prefix_index;
    auto prefix_for = [&](bool left_is_state, int left, int right) {
        auto key = std::make_tuple(left_is_state, left, right);
        if (auto it = prefix_index.find(key); it != prefix_index.end()) return it->second;
        int id = static_cast<int>(prefixes.size());
        Prefix pre;
        pre.left_is_state = left_is_state;
        pre.left = left;
        pre.right = right;
        pre.series.data.assign(degrees * len, 0);
        prefixes.push_back(std::move(pre));
        prefix_index.emplace(key, id);
        return id;
    };
    for (auto& tr : transitions) {
        if (tr.kids.size() < 2) continue;
        int current = prefix_for(true, tr.kids[0], tr.kids[1]);
        for (std::size_t j = 2; j < tr.kids.size(); ++j) current = prefix_for(false, current, tr.kids[j]);
        tr.product = current;
    }

    auto coefficient = [&](const Series& s, std::size_t degree) { return &s.data[degree * len]; };
    BigInt scratch;
    auto mul_add = [&](BigInt* acc, const BigInt* a, const BigInt* b) {
        if (len == 1) {
            if (sgn(a[0]) != 0 && sgn(b[0]) != 0) mpz_addmul(acc[0].get_mpz_t(), a[0].get_mpz_t(), b[0].get_mpz_t());
            return;
        }
        for (std::size_t i = 0; i < len; ++i) {
            if (sgn(a[i]) == 0) continue;
            for (std::size_t j = 0; i + j < len; ++j)
                if (sgn(b[j]) != 0) mpz_addmul(acc[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
        }
    };

    std::vector<std::vector<BigInt>> totals(degrees, std::vector<BigInt>(len, 0));
    for (std::size_t degree = 0; degree < degrees; ++degree) {
        if (static_cast<int>(degree) - offset >= 0) {
            const std::size_t t = degree - offset;
            for (auto& pre : prefixes) {
                const Series& left = pre.left_is_state ? state_series[pre.left] : prefixes[pre.left].series;
                const Series& right = state_series[pre.right];
                BigInt* acc = &pre.series.data[t * len];
                for (std::size_t m = 0; m <= t; ++m) mul_add(acc, coefficient(left, m), coefficient(right, t - m));
            }
            for (const auto& tr : transitions) {
                const BigInt* src = tr.product >= 0 ? coefficient(prefixes[tr.product].series, t)
                                                    : coefficient(state_series[tr.kids[0]], t);
                BigInt* dst = &state_series[tr.target].data[degree * len];
                for (std::size_t i = 0; i < len; ++i)
                    if (sgn(src[i]) != 0) dst[i] += src[i];
            }
        }
        for (std::size_t o = 0; o < states.size(); ++o) {
            const BigInt* src = coefficient(state_series[o], degree);
            for (std::size_t i = 0; i < len; ++i) totals[degree][i] += src[i];
        }
    }

    return totals;
}

}  // namespace oplab::detail
