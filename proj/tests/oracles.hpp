#pragma once

// Deliberately naive reference implementations. They share no code with the
// library engines they check: trees are rebuilt from path sequences, subtrees
// are found by listing every pruning, and free trees are generated by arity.

#include <algorithm>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <string>
#include <vector>

#include "oplab/graded_algebra.hpp"
#include "oplab/monomial_operad.hpp"
#include "oplab/single_branched.hpp"
#include "oplab/tree.hpp"

namespace oracle {

using namespace oplab;

/// Grafting on path sequences: the paths through leaf i get each path of the
/// inner monomial appended.
inline PathSequence compose_paths(const PathSequence& outer, int leaf, const PathSequence& inner) {
    PathSequence out;
    for (int k = 0; k < static_cast<int>(outer.size()); ++k) {
        if (k + 1 != leaf) {
            out.push_back(outer[k]);
            continue;
        }
        for (const auto& p : inner) {
            Word w = outer[k];
            w.insert(w.end(), p.begin(), p.end());
            out.push_back(w);
        }
    }
    return out;
}

/// Every connected subtree rooted at `node`: each child is either cut to a
/// leaf or replaced by one of its own rooted prunings.
inline std::vector<NodePtr> rooted_prunings(const Alphabet& alphabet, const NodePtr& node) {
    std::vector<std::vector<NodePtr>> options;
    for (const auto& child : node->children) {
        std::vector<NodePtr> opt{nullptr};
        if (child) {
            auto sub = rooted_prunings(alphabet, child);
            opt.insert(opt.end(), sub.begin(), sub.end());
        }
        options.push_back(std::move(opt));
    }
    std::vector<NodePtr> out;
    std::vector<NodePtr> pick(options.size());
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
        if (i == options.size()) {
            out.push_back(make_node(alphabet, node->label, pick));
            return;
        }
        for (const auto& o : options[i]) {
            pick[i] = o;
            rec(i + 1);
        }
    };
    rec(0);
    return out;
}

inline std::set<TreeMonomial> all_submonomials(const TreeMonomial& t) {
    std::set<TreeMonomial> out;
    std::function<void(const NodePtr&)> visit = [&](const NodePtr& n) {
        if (!n) return;
        for (const auto& r : rooted_prunings(*t.alphabet(), n)) out.insert(TreeMonomial::from_root(t.alphabet(), r));
        for (const auto& c : n->children) visit(c);
    };
    visit(t.root_ptr());
    return out;
}

inline bool naive_divides(const TreeMonomial& d, const TreeMonomial& t) {
    if (d.is_trivial()) return true;
    return all_submonomials(t).count(d) > 0;
}

/// All tree monomials of weight exactly w, by splitting weight over children.
inline std::vector<TreeMonomial> free_monomials_of_weight(const AlphabetPtr& alphabet, int w) {
    std::map<int, std::vector<NodePtr>> memo;  // weight -> subtrees (nullptr = leaf at weight 0)
    std::function<const std::vector<NodePtr>&(int)> build = [&](int k) -> const std::vector<NodePtr>& {
        auto it = memo.find(k);
        if (it != memo.end()) return it->second;
        std::vector<NodePtr> out;
        if (k == 0) {
            out.push_back(nullptr);
        } else {
            for (Label g = 0; g < alphabet->size(); ++g) {
                const int a = alphabet->arity(g);
                std::vector<NodePtr> pick(a);
                std::function<void(int, int)> rec = [&](int i, int left) {
                    if (i == a) {
                        if (left == 0) out.push_back(make_node(*alphabet, g, pick));
                        return;
                    }
                    for (int s = 0; s <= left; ++s)
                        for (const auto& c : build(s)) {
                            pick[i] = c;
                            rec(i + 1, left - s);
                        }
                };
                rec(0, k - 1);
            }
        }
        return memo[k] = std::move(out);
    };
    std::vector<TreeMonomial> out;
    if (w == 0) {
        out.push_back(TreeMonomial::trivial(alphabet));
        return out;
    }
    for (const auto& n : build(w)) out.push_back(TreeMonomial::from_root(alphabet, n));
    return out;
}

/// Normal-form counts by arity from the full free operad (no unary letters).
inline std::vector<long> normal_forms_by_arity(const MonomialOperadPresentation& p, int max_arity) {
    std::vector<long> counts(max_arity + 1, 0);
    for (int w = 0; w < max_arity; ++w)
        for (const auto& t : free_monomials_of_weight(p.alphabet(), w)) {
            if (t.arity() > max_arity) continue;
            bool ok = true;
            if (!t.is_trivial()) {
                auto subs = all_submonomials(t);
                for (const auto& r : p.relations()) ok = ok && subs.count(r) == 0;
            }
            counts[t.arity()] += ok;
        }
    return counts;
}

inline TreeMonomial random_monomial(std::mt19937_64& rng, const AlphabetPtr& alphabet, int weight) {
    TreeMonomial t = TreeMonomial::trivial(alphabet);
    for (int k = 0; k < weight; ++k) {
        Label g = std::uniform_int_distribution<Label>(0, static_cast<Label>(alphabet->size() - 1))(rng);
        int leaf = std::uniform_int_distribution<int>(1, t.arity())(rng);
        t = compose(t, leaf, TreeMonomial::corolla(alphabet, g));
    }
    return t;
}

/// Words of length n over d letters avoiding every forbidden factor.
inline std::vector<long> hilbert_by_words(int d, const std::vector<AlgebraWord>& forbidden, int max_degree) {
    std::vector<long> out(max_degree + 1, 0);
    std::vector<AlgebraWord> level{{}};
    out[0] = 1;
    for (int n = 1; n <= max_degree; ++n) {
        std::vector<AlgebraWord> next;
        for (const auto& w : level)
            for (int x = 0; x < d; ++x) {
                AlgebraWord v = w;
                v.push_back(x);
                bool bad = false;
                for (const auto& f : forbidden)
                    if (v.size() >= f.size() && std::equal(f.begin(), f.end(), v.end() - f.size())) bad = true;
                if (!bad) next.push_back(std::move(v));
            }
        out[n] = static_cast<long>(next.size());
        level = std::move(next);
    }
    return out;
}

inline std::vector<BigInt> fibonacci(int n) {
    std::vector<BigInt> f(n + 1);
    f[0] = 0;
    if (n >= 1) f[1] = 1;
    for (int i = 2; i <= n; ++i) f[i] = f[i - 1] + f[i - 2];
    return f;
}

/// p(n) by the simple coin-change recursion.
inline std::vector<BigInt> partitions(int n) {
    std::vector<BigInt> p(n + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= n; ++part)
        for (int m = part; m <= n; ++m) p[m] += p[m - part];
    return p;
}

}  // namespace oracle
