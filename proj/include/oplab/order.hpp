#pragma once

// Monomial orders on words over the alphabet and their path extension to tree
// monomials; tree polynomials with exact rational coefficients.

#include <map>
#include <vector>

#include "oplab/tree.hpp"

namespace oplab {

enum class WordOrderKind { deglex, degrevlex, lex };

enum class Ordering { less, equal, greater };

class WordOrder {
public:
    /// `rank` lists generator labels from smallest to largest. Empty means
    /// declaration order. `lex` is not a well-order on words and is rejected.
    WordOrder(WordOrderKind kind, std::size_t alphabet_size, std::vector<Label> rank = {});

    WordOrderKind kind() const { return kind_; }
    Ordering compare(const Word& a, const Word& b) const;

private:
    WordOrderKind kind_;
    std::vector<std::size_t> position_;  // label -> rank position
};

/// Path extension: more leaves is larger; at equal arity the first differing
/// path word decides under the base order.
class TreeOrder {
public:
    explicit TreeOrder(WordOrder base) : base_(std::move(base)) {}

    static TreeOrder deglex(const Alphabet& alphabet);

    const WordOrder& base() const { return base_; }
    Ordering compare(const TreeMonomial& a, const TreeMonomial& b) const;
    Ordering compare_paths(const PathSequence& a, const PathSequence& b) const;
    bool less(const TreeMonomial& a, const TreeMonomial& b) const { return compare(a, b) == Ordering::less; }

private:
    WordOrder base_;
};

/// Parses "deglex" / "degrevlex" with an optional comma-separated rank list of
/// generator ids (smallest first).
TreeOrder make_tree_order(const Alphabet& alphabet, std::string_view kind, std::string_view rank = {});

class TreePolynomial {
public:
    TreePolynomial() = default;
    explicit TreePolynomial(const TreeMonomial& m, Rational coefficient = 1);

    bool is_zero() const { return terms_.empty(); }
    int arity() const;
    const std::map<TreeMonomial, Rational>& terms() const { return terms_; }
    Rational coefficient(const TreeMonomial& m) const;

    TreePolynomial& operator+=(const TreePolynomial& other);
    TreePolynomial& operator-=(const TreePolynomial& other);
    TreePolynomial& operator*=(const Rational& scalar);

    friend TreePolynomial operator+(TreePolynomial a, const TreePolynomial& b) { return a += b; }
    friend TreePolynomial operator-(TreePolynomial a, const TreePolynomial& b) { return a -= b; }
    friend TreePolynomial operator*(const Rational& s, TreePolynomial a) { return a *= s; }

private:
    void add(const TreeMonomial& m, const Rational& c);

    std::map<TreeMonomial, Rational> terms_;
};

TreeMonomial leading_monomial(const TreeOrder& order, const TreePolynomial& f);

}  // namespace oplab
