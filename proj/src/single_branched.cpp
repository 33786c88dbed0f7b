#include "oplab/single_branched.hpp"

#include <numeric>
#include <sstream>

#include "aho_corasick.hpp"

namespace oplab {

BranchWord::BranchWord(AlphabetPtr alphabet, std::vector<BranchLetter> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
    if (!alphabet_) throw InvalidArgumentError("branch word needs an alphabet");
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        auto& l = letters_[k];
        if (l.generator >= alphabet_->size()) throw InvalidArgumentError("branch word letter outside the alphabet");
        if (k + 1 == letters_.size()) {
            l.index = 1;
        } else if (l.index < 1 || l.index > alphabet_->arity(l.generator)) {
            throw LeafIndexError("composition index " + std::to_string(l.index) + " out of range for '" +
                                 (*alphabet_)[l.generator].id + "'");
        }
    }
}

std::string BranchWord::to_string() const {
    std::string out;
    for (std::size_t k = 0; k < letters_.size(); ++k) {
        if (k) out += ' ';
        out += (*alphabet_)[letters_[k].generator].id;
        if (k + 1 < letters_.size()) out += ':' + std::to_string(letters_[k].index);
    }
    return out;
}

BranchWord parse_branch_word(std::string_view text, const AlphabetPtr& alphabet) {
    std::istringstream in{std::string(text)};
    std::string token;
    std::vector<BranchLetter> letters;
    while (in >> token) {
        auto colon = token.find(':');
        std::string id = token.substr(0, colon);
        auto label = alphabet->find(id);
        if (!label) throw ParseError("unknown generator '" + id + "' in branch word", 0, std::string(text));
        int index = 1;
        if (colon != std::string::npos) {
            try {
                std::size_t used = 0;
                index = std::stoi(token.substr(colon + 1), &used);
                if (used != token.size() - colon - 1) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw ParseError("bad composition index in '" + token + "'", 0, std::string(text));
            }
        }
        letters.push_back({*label, index});
    }
    return BranchWord(alphabet, std::move(letters));
}

BranchWord to_branch_word(const TreeMonomial& t) {
    std::vector<BranchLetter> letters;
    for (const TreeNode* node = t.root(); node;) {
        const TreeNode* next = nullptr;
        int index = 1;
        for (std::size_t i = 0; i < node->children.size(); ++i) {
            if (!node->children[i]) continue;
            if (next) throw NotSingleBranchedError(t.to_string() + " has more than one branch");
            next = node->children[i].get();
            index = static_cast<int>(i) + 1;
        }
        letters.push_back({node->label, index});
        node = next;
    }
    return BranchWord(t.alphabet(), std::move(letters));
}

TreeMonomial from_branch_word(const BranchWord& w) {
    const Alphabet& alphabet = *w.alphabet();
    NodePtr below;
    for (std::size_t k = w.size(); k-- > 0;) {
        const auto& letter = w.letters()[k];
        std::vector<NodePtr> children(alphabet.arity(letter.generator));
        if (below) children[letter.index - 1] = below;
        below = make_node(alphabet, letter.generator, std::move(children));
    }
    return below ? TreeMonomial::from_root(w.alphabet(), below) : TreeMonomial::trivial(w.alphabet());
}

namespace {

bool shift_holds(const std::vector<BranchLetter>& x, std::size_t p) {
    const std::size_t n = x.size();
    for (std::size_t j = 0; j + p < n; ++j) {
        if (x[j].generator != x[j + p].generator) return false;
        if (j + p + 1 < n && x[j].index != x[j + p].index) return false;
    }
    return true;
}

int require_period(const BranchWord& w) {
    auto p = minimal_period(w);
    if (!p) throw AperiodicError("'" + w.to_string() + "' is not periodic");
    return *p;
}

}  // namespace

std::optional<int> minimal_period(const BranchWord& w) {
    for (std::size_t p = 1; p < w.size(); ++p)
        if (shift_holds(w.letters(), p)) return static_cast<int>(p);
    return std::nullopt;
}

bool is_local_period(const BranchWord& w, int p) {
    if (p < 1 || static_cast<std::size_t>(p) >= w.size())
        throw InvalidArgumentError("local period must satisfy 1 <= p < " + std::to_string(w.size()));
    return shift_holds(w.letters(), static_cast<std::size_t>(p));
}

bool is_period(const BranchWord& w, int p) {
    const int minimal = require_period(w);
    if (p < 1) throw InvalidArgumentError("period must be positive");
    const bool by_divisibility = p % minimal == 0;
    const int n = static_cast<int>(w.size());
    const bool by_witness = is_local_period(extend(w, p, n + p), p);
    if (by_divisibility != by_witness)
        throw std::logic_error("period characterisations disagree on '" + w.to_string() + "' at p = " +
                               std::to_string(p));
    return by_divisibility;
}

BranchWord extend(const BranchWord& w, int m, int l) {
    const int p = require_period(w);
    const int n = static_cast<int>(w.size());
    if (m < -1 || l < n) throw InvalidArgumentError("extension needs m >= -1 and l >= |w|");
    std::vector<BranchLetter> letters;
    letters.reserve(static_cast<std::size_t>(l + m + 1));
    for (int q = -m; q <= l; ++q) {
        int r = ((q - 1) % p + p) % p + 1;
        letters.push_back(w.at(static_cast<std::size_t>(r)));
    }
    return BranchWord(w.alphabet(), std::move(letters));
}

namespace {

// Factor-avoidance automaton over "full letters" (generator, index).
class FactorAutomaton {
public:
    explicit FactorAutomaton(const AvoidanceSystem& system)
        : alphabet_(*system.alphabet), offset_(offsets(alphabet_)), ac_(offset_.back()) {
        for (const auto& f : system.forbidden) {
            if (f.empty()) {
                forbid_all_ = true;
                continue;
            }
            // The last letter of a factor matches any index.
            std::vector<int> pattern;
            for (std::size_t k = 0; k + 1 < f.size(); ++k) pattern.push_back(symbol(f.letters()[k]));
            pattern.push_back(0);
            Label last = f.letters().back().generator;
            for (int i = 1; i <= alphabet_.arity(last); ++i) {
                pattern.back() = symbol({last, i});
                ac_.add(pattern);
            }
        }
        ac_.build();
    }

    int symbols() const { return ac_.symbols(); }
    int states() const { return ac_.states(); }
    int symbol(const BranchLetter& l) const { return offset_[l.generator] + l.index - 1; }
    int step(int state, int c) const { return ac_.step(state, c); }
    bool dead(int state) const { return ac_.matched(state); }
    bool forbid_all() const { return forbid_all_; }
    const Alphabet& alphabet() const { return alphabet_; }

private:
    static std::vector<int> offsets(const Alphabet& alphabet) {
        std::vector<int> offset(alphabet.size() + 1, 0);
        for (Label x = 0; x < alphabet.size(); ++x) offset[x + 1] = offset[x] + alphabet.arity(x);
        return offset;
    }

    const Alphabet& alphabet_;
    std::vector<int> offset_;
    detail::AhoCorasick ac_;
    bool forbid_all_ = false;
};

bool contains_factor(const std::vector<BranchLetter>& w, const BranchWord& f) {
    const auto& x = f.letters();
    if (x.size() > w.size()) return false;
    for (std::size_t s = 0; s + x.size() <= w.size(); ++s) {
        bool hit = true;
        for (std::size_t j = 0; j < x.size() && hit; ++j) {
            hit = w[s + j].generator == x[j].generator;
            if (hit && j + 1 < x.size()) hit = w[s + j].index == x[j].index;
        }
        if (hit) return true;
    }
    return false;
}

}  // namespace

DimSeries closed_set_counts(const AvoidanceSystem& system, int max_height) {
    if (max_height < 0) throw InvalidArgumentError("max height must be nonnegative");
    FactorAutomaton automaton(system);
    const Alphabet& alphabet = automaton.alphabet();
    std::vector<BigInt> values(max_height + 1, 0);
    values[0] = automaton.forbid_all() ? 0 : 1;
    if (automaton.forbid_all()) return make_series(std::move(values), IndexKind::height);

    // counts[s]: words of full letters (every letter has an index) leading to state s
    std::vector<BigInt> counts(automaton.states(), 0), next(automaton.states(), 0);
    counts[0] = 1;
    for (int h = 1; h <= max_height; ++h) {
        // close the word with a final letter carrying the dummy index 1
        BigInt total = 0;
        for (int s = 0; s < automaton.states(); ++s) {
            if (sgn(counts[s]) == 0) continue;
            for (Label y = 0; y < alphabet.size(); ++y)
                if (!automaton.dead(automaton.step(s, automaton.symbol({y, 1})))) total += counts[s];
        }
        values[h] = total;
        if (h == max_height) break;
        std::fill(next.begin(), next.end(), 0);
        for (int s = 0; s < automaton.states(); ++s) {
            if (sgn(counts[s]) == 0) continue;
            for (int c = 0; c < automaton.symbols(); ++c) {
                int t = automaton.step(s, c);
                if (!automaton.dead(t)) next[t] += counts[s];
            }
        }
        counts.swap(next);
    }
    return make_series(std::move(values), IndexKind::height);
}

DimSeries closed_set_counts_brute(const AvoidanceSystem& system, int max_height) {
    if (max_height < 0) throw InvalidArgumentError("max height must be nonnegative");
    const Alphabet& alphabet = *system.alphabet;
    auto avoids = [&](const std::vector<BranchLetter>& w) {
        for (const auto& f : system.forbidden)
            if (f.empty() || contains_factor(w, f)) return false;
        return true;
    };
    std::vector<BigInt> values(max_height + 1, 0);
    std::vector<std::vector<BranchLetter>> level{{}};
    values[0] = avoids({}) ? 1 : 0;
    for (int h = 1; h <= max_height; ++h) {
        std::vector<std::vector<BranchLetter>> grown;
        for (const auto& w : level) {
            std::vector<int> slots{1};
            if (!w.empty()) {
                slots.resize(alphabet.arity(w.back().generator));
                std::iota(slots.begin(), slots.end(), 1);
            }
            for (int slot : slots) {
                for (Label y = 0; y < alphabet.size(); ++y) {
                    auto v = w;
                    if (!v.empty()) v.back().index = slot;
                    v.push_back({y, 1});
                    if (avoids(v)) grown.push_back(std::move(v));
                }
            }
        }
        level = std::move(grown);
        values[h] = static_cast<unsigned long>(level.size());
    }
    return make_series(std::move(values), IndexKind::height);
}

AvoidanceSystem at_most_one_turn_system(int max_height) {
    AlphabetPtr alphabet = make_alphabet({{"x", 2}});
    AvoidanceSystem system{alphabet, {}};
    // x o_2 (x o_1)^k x o_2 x: a second index 2 anywhere
    for (int k = 0; k + 3 <= std::max(max_height, 3); ++k) {
        std::vector<BranchLetter> letters{{0, 2}};
        for (int j = 0; j < k; ++j) letters.push_back({0, 1});
        letters.push_back({0, 2});
        letters.push_back({0, 1});
        system.forbidden.emplace_back(alphabet, std::move(letters));
    }
    return system;
}

}  // namespace oplab
