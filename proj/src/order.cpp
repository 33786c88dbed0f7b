#include "oplab/order.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace oplab {

WordOrder::WordOrder(WordOrderKind kind, std::size_t alphabet_size, std::vector<Label> rank) : kind_(kind) {
    if (kind == WordOrderKind::lex)
        throw InvalidArgumentError("plain lexicographic order is not a well-order on words; use deglex or degrevlex");
    if (rank.empty()) {
        rank.resize(alphabet_size);
        std::iota(rank.begin(), rank.end(), Label{0});
    }
    if (rank.size() != alphabet_size) throw InvalidArgumentError("rank must list every generator exactly once");
    position_.assign(alphabet_size, alphabet_size);
    for (std::size_t i = 0; i < rank.size(); ++i) {
        if (rank[i] >= alphabet_size || position_[rank[i]] != alphabet_size)
            throw InvalidArgumentError("rank must list every generator exactly once");
        position_[rank[i]] = i;
    }
}

Ordering WordOrder::compare(const Word& a, const Word& b) const {
    if (a.size() != b.size()) return a.size() < b.size() ? Ordering::less : Ordering::greater;
    auto by_rank = [&](Label x, Label y) {
        return position_[x] < position_[y] ? Ordering::less : Ordering::greater;
    };
    if (kind_ == WordOrderKind::deglex) {
        for (std::size_t i = 0; i < a.size(); ++i)
            if (a[i] != b[i]) return by_rank(a[i], b[i]);
    } else {
        // degrevlex: equal length words are compared from the right end.
        for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return by_rank(a[i], b[i]);
    }
    return Ordering::equal;
}

TreeOrder TreeOrder::deglex(const Alphabet& alphabet) {
    return TreeOrder(WordOrder(WordOrderKind::deglex, alphabet.size()));
}

Ordering TreeOrder::compare_paths(const PathSequence& a, const PathSequence& b) const {
    if (a.size() != b.size()) return a.size() < b.size() ? Ordering::less : Ordering::greater;
    for (std::size_t i = 0; i < a.size(); ++i) {
        Ordering o = base_.compare(a[i], b[i]);
        if (o != Ordering::equal) return o;
    }
    return Ordering::equal;
}

Ordering TreeOrder::compare(const TreeMonomial& a, const TreeMonomial& b) const {
    require_same_alphabet(a, b);
    if (a.arity() != b.arity()) return a.arity() < b.arity() ? Ordering::less : Ordering::greater;
    if (a == b) return Ordering::equal;
    return compare_paths(to_path_sequence(a), to_path_sequence(b));
}

TreeOrder make_tree_order(const Alphabet& alphabet, std::string_view kind, std::string_view rank) {
    WordOrderKind k;
    if (kind == "deglex")
        k = WordOrderKind::deglex;
    else if (kind == "degrevlex")
        k = WordOrderKind::degrevlex;
    else if (kind == "lex")
        k = WordOrderKind::lex;
    else
        throw InvalidArgumentError("unknown order '" + std::string(kind) + "'");
    std::vector<Label> labels;
    if (!rank.empty()) {
        std::stringstream ss{std::string(rank)};
        std::string id;
        while (std::getline(ss, id, ',')) {
            id.erase(std::remove_if(id.begin(), id.end(), ::isspace), id.end());
            auto label = alphabet.find(id);
            if (!label) throw InvalidArgumentError("unknown generator '" + id + "' in rank");
            labels.push_back(*label);
        }
    }
    return TreeOrder(WordOrder(k, alphabet.size(), std::move(labels)));
}

TreePolynomial::TreePolynomial(const TreeMonomial& m, Rational coefficient) { add(m, coefficient); }

int TreePolynomial::arity() const {
    if (terms_.empty()) throw ZeroPolynomialError("the zero polynomial has no arity");
    return terms_.begin()->first.arity();
}

Rational TreePolynomial::coefficient(const TreeMonomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? Rational(0) : it->second;
}

void TreePolynomial::add(const TreeMonomial& m, const Rational& c) {
    if (c == 0) return;
    if (!terms_.empty()) {
        const TreeMonomial& first = terms_.begin()->first;
        require_same_alphabet(first, m);
        if (first.arity() != m.arity())
            throw InvalidArgumentError("tree polynomial terms must share one arity");
    }
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

TreePolynomial& TreePolynomial::operator+=(const TreePolynomial& other) {
    for (const auto& [m, c] : other.terms_) add(m, c);
    return *this;
}

TreePolynomial& TreePolynomial::operator-=(const TreePolynomial& other) {
    for (const auto& [m, c] : other.terms_) add(m, -c);
    return *this;
}

TreePolynomial& TreePolynomial::operator*=(const Rational& scalar) {
    if (scalar == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, c] : terms_) c *= scalar;
    return *this;
}

TreeMonomial leading_monomial(const TreeOrder& order, const TreePolynomial& f) {
    if (f.is_zero()) throw ZeroPolynomialError("leading monomial of the zero polynomial");
    const TreeMonomial* best = nullptr;
    for (const auto& [m, c] : f.terms())
        if (!best || order.compare(m, *best) == Ordering::greater) best = &m;
    return *best;
}

}  // namespace oplab
