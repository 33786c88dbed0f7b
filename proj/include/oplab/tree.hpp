#pragma once

// Planar rooted trees labelled by an operation alphabet: the term language of
// the free nonsymmetric operad.

#include <compare>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "oplab/common.hpp"

namespace oplab {

using Label = std::uint32_t;

struct Generator {
    std::string id;
    int arity = 0;

    friend bool operator==(const Generator&, const Generator&) = default;
};

/// Finite ordered list of generators. Generators of arity 0 are rejected.
class Alphabet {
public:
    explicit Alphabet(std::vector<Generator> generators);

    std::size_t size() const { return generators_.size(); }
    const Generator& operator[](Label label) const { return generators_.at(label); }
    const std::vector<Generator>& generators() const { return generators_; }
    int arity(Label label) const { return generators_.at(label).arity; }
    std::optional<Label> find(std::string_view id) const;
    bool has_unary() const;
    int max_arity() const;

    friend bool operator==(const Alphabet&, const Alphabet&) = default;

private:
    std::vector<Generator> generators_;
};

using AlphabetPtr = std::shared_ptr<const Alphabet>;

AlphabetPtr make_alphabet(std::vector<Generator> generators);

/// Internal vertex of a tree monomial. A null child pointer is a leaf.
struct TreeNode {
    Label label = 0;
    std::vector<std::shared_ptr<const TreeNode>> children;
    int arity = 0;   // leaves below this vertex
    int weight = 0;  // internal vertices in this subtree
    int height = 0;  // 1 for a vertex whose children are all leaves

    bool child_is_leaf(std::size_t i) const { return children[i] == nullptr; }
};

using NodePtr = std::shared_ptr<const TreeNode>;

/// Builds an internal vertex, checking the arity against the alphabet.
NodePtr make_node(const Alphabet& alphabet, Label label, std::vector<NodePtr> children);

int compare_nodes(const TreeNode* a, const TreeNode* b);

/// A tree monomial: either the trivial monomial (identity, arity 1) or a
/// labelled planar rooted tree. Immutable; subtrees are shared.
class TreeMonomial {
public:
    static TreeMonomial trivial(AlphabetPtr alphabet);
    /// The corolla of a single generator.
    static TreeMonomial corolla(AlphabetPtr alphabet, Label label);
    static TreeMonomial from_root(AlphabetPtr alphabet, NodePtr root);

    bool is_trivial() const { return root_ == nullptr; }
    int arity() const { return root_ ? root_->arity : 1; }
    int weight() const { return root_ ? root_->weight : 0; }
    int height() const { return root_ ? root_->height : 0; }
    bool is_single_branched() const;

    const TreeNode* root() const { return root_.get(); }
    const NodePtr& root_ptr() const { return root_; }
    const AlphabetPtr& alphabet() const { return alphabet_; }

    /// Literal form, e.g. `a(b(*,*))`; the trivial monomial prints as `1`.
    std::string to_string() const;

    friend bool operator==(const TreeMonomial& a, const TreeMonomial& b) {
        return compare_nodes(a.root(), b.root()) == 0;
    }
    friend std::strong_ordering operator<=>(const TreeMonomial& a, const TreeMonomial& b) {
        return compare_nodes(a.root(), b.root()) <=> 0;
    }

private:
    TreeMonomial(AlphabetPtr alphabet, NodePtr root) : alphabet_(std::move(alphabet)), root_(std::move(root)) {}

    AlphabetPtr alphabet_;
    NodePtr root_;
};

using Word = std::vector<Label>;
using PathSequence = std::vector<Word>;

std::string word_to_string(const Alphabet& alphabet, const Word& word);
std::string path_to_string(const Alphabet& alphabet, const PathSequence& path);

/// Partial composition T1 o_i T2 (grafting T2 at leaf i of T1, 1-based).
TreeMonomial compose(const TreeMonomial& outer, int leaf, const TreeMonomial& inner);

PathSequence to_path_sequence(const TreeMonomial& t);
TreeMonomial from_path_sequence(const PathSequence& path, const AlphabetPtr& alphabet);

/// True iff `t` contains a subtree carrying the labelled shape of `divisor`.
bool divides(const TreeMonomial& divisor, const TreeMonomial& t);

/// True iff `divisor` matches with its root vertex placed on `anchor`.
bool matches_at(const TreeNode& divisor, const TreeNode& anchor);

/// Distinct submonomials of a nontrivial monomial, optionally of one weight.
std::set<TreeMonomial> submonomials(const TreeMonomial& t, std::optional<int> weight = std::nullopt);

/// Calls `fn` on every internal vertex, in preorder (planar order).
void for_each_vertex(const TreeMonomial& t, const std::function<void(const TreeNode&)>& fn);

/// Parses the literal grammar
///   monomial := "1" | node ; node := id "(" child ("," child)* ")" ; child := "*" | node
TreeMonomial parse_monomial(std::string_view text, const AlphabetPtr& alphabet);

void require_same_alphabet(const TreeMonomial& a, const TreeMonomial& b);

}  // namespace oplab
