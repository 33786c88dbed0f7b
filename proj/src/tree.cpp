#include "oplab/tree.hpp"

#include <algorithm>
#include <cctype>

namespace oplab {

namespace {

bool valid_id(std::string_view id) {
    if (id.empty()) return false;
    return std::all_of(id.begin(), id.end(), [](char c) {
        return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
}

}  // namespace

Alphabet::Alphabet(std::vector<Generator> generators) : generators_(std::move(generators)) {
    for (std::size_t i = 0; i < generators_.size(); ++i) {
        const auto& g = generators_[i];
        if (!valid_id(g.id)) throw InvalidArgumentError("invalid generator id '" + g.id + "'");
        if (g.arity < 1) throw InvalidArgumentError("generator '" + g.id + "' must have arity >= 1");
        for (std::size_t j = 0; j < i; ++j)
            if (generators_[j].id == g.id) throw InvalidArgumentError("duplicate generator id '" + g.id + "'");
    }
}

std::optional<Label> Alphabet::find(std::string_view id) const {
    for (std::size_t i = 0; i < generators_.size(); ++i)
        if (generators_[i].id == id) return static_cast<Label>(i);
    return std::nullopt;
}

bool Alphabet::has_unary() const {
    return std::any_of(generators_.begin(), generators_.end(), [](const Generator& g) { return g.arity == 1; });
}

int Alphabet::max_arity() const {
    int m = 0;
    for (const auto& g : generators_) m = std::max(m, g.arity);
    return m;
}

AlphabetPtr make_alphabet(std::vector<Generator> generators) {
    return std::make_shared<const Alphabet>(std::move(generators));
}

NodePtr make_node(const Alphabet& alphabet, Label label, std::vector<NodePtr> children) {
    if (label >= alphabet.size()) throw InvalidArgumentError("label out of range");
    if (static_cast<int>(children.size()) != alphabet.arity(label))
        throw InvalidArgumentError("generator '" + alphabet[label].id + "' has arity " +
                                   std::to_string(alphabet.arity(label)) + " but got " +
                                   std::to_string(children.size()) + " children");
    auto node = std::make_shared<TreeNode>();
    node->label = label;
    node->weight = 1;
    node->height = 1;
    for (const auto& c : children) {
        if (c) {
            node->arity += c->arity;
            node->weight += c->weight;
            node->height = std::max(node->height, c->height + 1);
        } else {
            node->arity += 1;
        }
    }
    node->children = std::move(children);
    return node;
}

int compare_nodes(const TreeNode* a, const TreeNode* b) {
    if (a == b) return 0;
    if (!a) return -1;
    if (!b) return 1;
    if (a->label != b->label) return a->label < b->label ? -1 : 1;
    for (std::size_t i = 0; i < a->children.size(); ++i) {
        int c = compare_nodes(a->children[i].get(), b->children[i].get());
        if (c != 0) return c;
    }
    return 0;
}

TreeMonomial TreeMonomial::trivial(AlphabetPtr alphabet) { return TreeMonomial(std::move(alphabet), nullptr); }

TreeMonomial TreeMonomial::corolla(AlphabetPtr alphabet, Label label) {
    auto node = make_node(*alphabet, label, std::vector<NodePtr>(alphabet->arity(label)));
    return TreeMonomial(std::move(alphabet), std::move(node));
}

TreeMonomial TreeMonomial::from_root(AlphabetPtr alphabet, NodePtr root) {
    return TreeMonomial(std::move(alphabet), std::move(root));
}

bool TreeMonomial::is_single_branched() const { return weight() == height(); }

namespace {

void print_node(const Alphabet& alphabet, const TreeNode& node, std::string& out) {
    out += alphabet[node.label].id;
    out += '(';
    for (std::size_t i = 0; i < node.children.size(); ++i) {
        if (i) out += ',';
        if (node.children[i])
            print_node(alphabet, *node.children[i], out);
        else
            out += '*';
    }
    out += ')';
}

}  // namespace

std::string TreeMonomial::to_string() const {
    if (!root_) return "1";
    std::string out;
    print_node(*alphabet_, *root_, out);
    return out;
}

void require_same_alphabet(const TreeMonomial& a, const TreeMonomial& b) {
    if (a.alphabet() == b.alphabet()) return;
    if (!a.alphabet() || !b.alphabet() || !(*a.alphabet() == *b.alphabet()))
        throw AlphabetMismatchError("tree monomials are over different alphabets");
}

std::string word_to_string(const Alphabet& alphabet, const Word& word) {
    bool single = std::all_of(alphabet.generators().begin(), alphabet.generators().end(),
                              [](const Generator& g) { return g.id.size() == 1; });
    std::string out;
    for (std::size_t i = 0; i < word.size(); ++i) {
        if (i && !single) out += '.';
        out += alphabet[word[i]].id;
    }
    return out;
}

std::string path_to_string(const Alphabet& alphabet, const PathSequence& path) {
    std::string out = "(";
    for (std::size_t i = 0; i < path.size(); ++i) {
        if (i) out += ',';
        out += path[i].empty() ? std::string("ε") : word_to_string(alphabet, path[i]);
    }
    return out + ")";
}

// ---------------------------------------------------------------- composition

namespace {

// Replaces leaf number `leaf` (1-based, counted within `node`) by `inner`.
NodePtr graft(const Alphabet& alphabet, const TreeNode& node, int leaf, const NodePtr& inner) {
    std::vector<NodePtr> children = node.children;
    int seen = 0;
    for (auto& child : children) {
        int width = child ? child->arity : 1;
        if (leaf <= seen + width) {
            if (child)
                child = graft(alphabet, *child, leaf - seen, inner);
            else
                child = inner;
            break;
        }
        seen += width;
    }
    return make_node(alphabet, node.label, std::move(children));
}

}  // namespace

TreeMonomial compose(const TreeMonomial& outer, int leaf, const TreeMonomial& inner) {
    require_same_alphabet(outer, inner);
    if (leaf < 1 || leaf > outer.arity())
        throw LeafIndexError("leaf index " + std::to_string(leaf) + " out of range 1.." +
                             std::to_string(outer.arity()));
    if (inner.is_trivial()) return outer;
    if (outer.is_trivial()) return inner;
    return TreeMonomial::from_root(outer.alphabet(), graft(*outer.alphabet(), *outer.root(), leaf, inner.root_ptr()));
}

// -------------------------------------------------------------- path sequences

namespace {

void collect_paths(const TreeNode& node, Word& prefix, PathSequence& out) {
    prefix.push_back(node.label);
    for (const auto& child : node.children) {
        if (child)
            collect_paths(*child, prefix, out);
        else
            out.push_back(prefix);
    }
    prefix.pop_back();
}

// Recursive descent over the words; `depth` letters are already consumed.
NodePtr rebuild(const PathSequence& path, std::size_t& pos, std::size_t depth, const Alphabet& alphabet) {
    if (pos >= path.size()) throw MalformedPathError("path sequence has too few words");
    const Word& w = path[pos];
    if (w.size() <= depth) throw MalformedPathError("word ends above an internal vertex");
    Label label = w[depth];
    if (label >= alphabet.size()) throw MalformedPathError("unknown generator in path sequence");
    std::vector<NodePtr> children(alphabet.arity(label));
    for (auto& child : children) {
        if (pos >= path.size()) throw MalformedPathError("path sequence has too few words");
        if (path[pos].size() == depth + 1)
            ++pos;  // leaf
        else
            child = rebuild(path, pos, depth + 1, alphabet);
    }
    return make_node(alphabet, label, std::move(children));
}

}  // namespace

PathSequence to_path_sequence(const TreeMonomial& t) {
    PathSequence out;
    if (t.is_trivial()) {
        out.emplace_back();
        return out;
    }
    Word prefix;
    collect_paths(*t.root(), prefix, out);
    return out;
}

TreeMonomial from_path_sequence(const PathSequence& path, const AlphabetPtr& alphabet) {
    if (path.empty()) throw MalformedPathError("empty path sequence");
    if (path.size() == 1 && path[0].empty()) return TreeMonomial::trivial(alphabet);
    std::size_t pos = 0;
    NodePtr root = rebuild(path, pos, 0, *alphabet);
    if (pos != path.size()) throw MalformedPathError("path sequence has leftover words");
    TreeMonomial t = TreeMonomial::from_root(alphabet, std::move(root));
    // The descent only reads the letter at each vertex's own depth; the
    // prefixes of every word must agree with the rebuilt tree as well.
    if (to_path_sequence(t) != path) throw MalformedPathError("inconsistent prefixes in path sequence");
    return t;
}

// ----------------------------------------------------------------- divisibility

bool matches_at(const TreeNode& divisor, const TreeNode& anchor) {
    if (divisor.label != anchor.label) return false;
    for (std::size_t i = 0; i < divisor.children.size(); ++i) {
        const TreeNode* d = divisor.children[i].get();
        if (!d) continue;
        const TreeNode* a = anchor.children[i].get();
        if (!a || !matches_at(*d, *a)) return false;
    }
    return true;
}

namespace {

bool divides_below(const TreeNode& divisor, const TreeNode& node) {
    if (node.height >= divisor.height && node.weight >= divisor.weight && matches_at(divisor, node)) return true;
    for (const auto& child : node.children)
        if (child && child->height >= divisor.height && divides_below(divisor, *child)) return true;
    return false;
}

void visit(const TreeNode& node, const std::function<void(const TreeNode&)>& fn) {
    fn(node);
    for (const auto& child : node.children)
        if (child) visit(*child, fn);
}

}  // namespace

bool divides(const TreeMonomial& divisor, const TreeMonomial& t) {
    require_same_alphabet(divisor, t);
    if (divisor.is_trivial()) throw DegenerateDivisorError("the trivial monomial divides everything");
    if (t.is_trivial()) return false;
    return divides_below(*divisor.root(), *t.root());
}

void for_each_vertex(const TreeMonomial& t, const std::function<void(const TreeNode&)>& fn) {
    if (t.root()) visit(*t.root(), fn);
}

// ---------------------------------------------------------------- submonomials

namespace {

// All connected vertex sets rooted at `node` (the node itself always kept),
// restricted to at most `budget` vertices. Children outside the set become leaves.
std::vector<NodePtr> rooted_pieces(const Alphabet& alphabet, const TreeNode& node, int budget) {
    std::vector<NodePtr> out;
    if (budget < 1) return out;
    // partial[k] = list of child vectors for the first k children, with weights
    struct Partial {
        std::vector<NodePtr> children;
        int weight;
    };
    std::vector<Partial> partial{{{}, 1}};
    for (const auto& child : node.children) {
        std::vector<Partial> next;
        for (const auto& p : partial) {
            auto cut = p;
            cut.children.push_back(nullptr);
            next.push_back(std::move(cut));
            if (!child) continue;
            for (const auto& piece : rooted_pieces(alphabet, *child, budget - p.weight)) {
                auto keep = p;
                keep.children.push_back(piece);
                keep.weight += piece->weight;
                next.push_back(std::move(keep));
            }
        }
        partial = std::move(next);
    }
    for (auto& p : partial) out.push_back(make_node(alphabet, node.label, std::move(p.children)));
    return out;
}

}  // namespace

std::set<TreeMonomial> submonomials(const TreeMonomial& t, std::optional<int> weight) {
    if (t.is_trivial()) throw DegenerateDivisorError("submonomials of the trivial monomial");
    std::set<TreeMonomial> out;
    int budget = weight ? *weight : t.weight();
    for_each_vertex(t, [&](const TreeNode& v) {
        for (auto& piece : rooted_pieces(*t.alphabet(), v, budget)) {
            if (weight && piece->weight != *weight) continue;
            out.insert(TreeMonomial::from_root(t.alphabet(), std::move(piece)));
        }
    });
    return out;
}

// ---------------------------------------------------------------------- parser

namespace {

class LiteralParser {
public:
    LiteralParser(std::string_view text, const Alphabet& alphabet) : text_(text), alphabet_(alphabet) {}

    NodePtr parse_all(bool& trivial) {
        skip_ws();
        std::size_t save = pos_;
        std::string id = identifier();
        skip_ws();
        if (id == "1" && (pos_ >= text_.size() || text_[pos_] != '(')) {
            if (pos_ != text_.size()) fail("trailing input");
            trivial = true;
            return nullptr;
        }
        pos_ = save;
        trivial = false;
        NodePtr root = node();
        skip_ws();
        if (pos_ != text_.size()) fail("trailing input");
        return root;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw ParseError(what + " at offset " + std::to_string(pos_) + " in '" + std::string(text_) + "'");
    }

    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    std::string identifier() {
        std::size_t start = pos_;
        while (pos_ < text_.size() &&
               (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
            ++pos_;
        if (start == pos_) fail("expected generator id");
        return std::string(text_.substr(start, pos_ - start));
    }

    void expect(char c) {
        skip_ws();
        if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
        ++pos_;
    }

    NodePtr node() {
        skip_ws();
        std::string id = identifier();
        auto label = alphabet_.find(id);
        if (!label) fail("unknown generator '" + id + "'");
        expect('(');
        std::vector<NodePtr> children;
        while (true) {
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == '*') {
                ++pos_;
                children.push_back(nullptr);
            } else {
                children.push_back(node());
            }
            skip_ws();
            if (pos_ < text_.size() && text_[pos_] == ',') {
                ++pos_;
                continue;
            }
            expect(')');
            break;
        }
        if (static_cast<int>(children.size()) != alphabet_.arity(*label))
            fail("generator '" + id + "' has arity " + std::to_string(alphabet_.arity(*label)) + " but got " +
                 std::to_string(children.size()) + " children");
        return make_node(alphabet_, *label, std::move(children));
    }

    std::string_view text_;
    const Alphabet& alphabet_;
    std::size_t pos_ = 0;
};

}  // namespace

TreeMonomial parse_monomial(std::string_view text, const AlphabetPtr& alphabet) {
    LiteralParser parser(text, *alphabet);
    bool trivial = false;
    NodePtr root = parser.parse_all(trivial);
    return trivial ? TreeMonomial::trivial(alphabet) : TreeMonomial::from_root(alphabet, std::move(root));
}

}  // namespace oplab
