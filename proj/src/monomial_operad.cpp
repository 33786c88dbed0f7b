#include "oplab/monomial_operad.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>
#include <sstream>

#include "profile_dp.hpp"

namespace oplab {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

std::uint64_t fnv1a(std::string_view text) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : text) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

// Normal forms of weight w+1 from those of weight w: removing a top vertex
// from a normal form leaves a normal form, so grafting every generator on
// every leaf of the previous level reaches the whole next level.
std::vector<TreeMonomial> next_level(const MonomialOperadPresentation& p, const std::vector<TreeMonomial>& prev,
                                     int arity_limit) {
    const AlphabetPtr& alphabet = p.alphabet();
    std::vector<TreeMonomial> corollas;
    for (Label x = 0; x < alphabet->size(); ++x) corollas.push_back(TreeMonomial::corolla(alphabet, x));
    std::set<TreeMonomial> found;
    for (const auto& t : prev) {
        for (Label x = 0; x < alphabet->size(); ++x) {
            if (t.arity() + alphabet->arity(x) - 1 > arity_limit) continue;
            for (int leaf = 1; leaf <= t.arity(); ++leaf) {
                TreeMonomial candidate = compose(t, leaf, corollas[x]);
                if (!found.contains(candidate) && is_normal_form(p, candidate)) found.insert(std::move(candidate));
            }
        }
    }
    return {found.begin(), found.end()};
}

void sort_by_order(std::vector<TreeMonomial>& level, const TreeOrder& order) {
    std::vector<std::pair<PathSequence, std::size_t>> keyed;
    keyed.reserve(level.size());
    for (std::size_t i = 0; i < level.size(); ++i) keyed.emplace_back(to_path_sequence(level[i]), i);
    std::stable_sort(keyed.begin(), keyed.end(), [&](const auto& a, const auto& b) {
        const TreeMonomial& ta = level[a.second];
        const TreeMonomial& tb = level[b.second];
        if (ta.arity() != tb.arity()) return ta.arity() < tb.arity();
        return order.compare_paths(a.first, b.first) == Ordering::less;
    });
    std::vector<TreeMonomial> sorted;
    sorted.reserve(level.size());
    for (const auto& k : keyed) sorted.push_back(level[k.second]);
    level = std::move(sorted);
}

std::vector<BigInt> scalar_column(const std::vector<std::vector<BigInt>>& counts) {
    std::vector<BigInt> out;
    out.reserve(counts.size());
    for (const auto& c : counts) out.push_back(c[0]);
    return out;
}

}  // namespace

MonomialOperadPresentation::MonomialOperadPresentation(AlphabetPtr alphabet, std::vector<TreeMonomial> relations,
                                                       std::string name)
    : alphabet_(std::move(alphabet)), name_(std::move(name)) {
    if (!alphabet_) throw InvalidArgumentError("presentation needs an alphabet");
    std::set<TreeMonomial> unique;
    for (auto& r : relations) {
        if (r.alphabet() != alphabet_ && !(r.alphabet() && *r.alphabet() == *alphabet_))
            throw AlphabetMismatchError("relation " + r.to_string() + " is over a different alphabet");
        if (r.is_trivial()) throw DegenerateDivisorError("the trivial monomial cannot be a relation");
        unique.insert(r);
    }
    for (const auto& r : unique) {
        bool redundant = false;
        for (const auto& s : unique) {
            if (s == r || s.weight() > r.weight()) continue;
            if (divides(s, r)) {
                redundant = true;
                break;
            }
        }
        if (!redundant) relations_.push_back(TreeMonomial::from_root(alphabet_, r.root_ptr()));
    }
}

int MonomialOperadPresentation::max_relation_height() const {
    int h = 0;
    for (const auto& r : relations_) h = std::max(h, r.height());
    return h;
}

std::string MonomialOperadPresentation::to_text() const {
    std::ostringstream out;
    if (!name_.empty()) out << "name " << name_ << '\n';
    for (const auto& g : alphabet_->generators()) out << "generator " << g.id << ' ' << g.arity << '\n';
    for (const auto& r : relations_) out << "relation " << r.to_string() << '\n';
    return out.str();
}

std::uint64_t MonomialOperadPresentation::fingerprint() const {
    std::string text = to_text();
    if (!name_.empty()) text = text.substr(text.find('\n') + 1);
    return fnv1a(text);
}

MonomialOperadPresentation parse_presentation(std::string_view text, std::string name) {
    std::vector<Generator> generators;
    AlphabetPtr alphabet;
    std::vector<TreeMonomial> relations;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        auto space = line.find_first_of(" \t");
        std::string keyword = line.substr(0, space);
        std::string rest = space == std::string::npos ? std::string{} : trim(line.substr(space));
        try {
            if (keyword == "name") {
                if (name.empty()) name = rest;
            } else if (keyword == "generator") {
                if (alphabet) throw ParseError("generator declared after the first relation");
                std::istringstream fields(rest);
                std::string id, extra;
                int arity = 0;
                if (!(fields >> id >> arity) || (fields >> extra))
                    throw ParseError("expected 'generator <id> <arity>'");
                generators.push_back({id, arity});
            } else if (keyword == "relation") {
                if (!alphabet) alphabet = make_alphabet(generators);
                if (rest.empty()) throw ParseError("expected 'relation <tree literal>'");
                relations.push_back(parse_monomial(rest, alphabet));
            } else {
                throw ParseError("unknown keyword '" + keyword + "'");
            }
        } catch (const ParseError& e) {
            if (e.line() != 0) throw;
            throw ParseError(e.what(), line_no, trim(raw));
        } catch (const Error& e) {
            throw ParseError(e.what(), line_no, trim(raw));
        }
    }
    if (!alphabet) {
        if (generators.empty()) throw ParseError("presentation declares no generators");
        alphabet = make_alphabet(generators);
    }
    return MonomialOperadPresentation(alphabet, std::move(relations), std::move(name));
}

bool is_normal_form(const MonomialOperadPresentation& p, const TreeMonomial& t) {
    for (const auto& r : p.relations())
        if (divides(r, t)) return false;
    return true;
}

IrrEnumerator::IrrEnumerator(const MonomialOperadPresentation& p, int max_weight)
    : IrrEnumerator(p, max_weight, TreeOrder::deglex(*p.alphabet())) {}

IrrEnumerator::IrrEnumerator(const MonomialOperadPresentation& p, int max_weight, TreeOrder order)
    : presentation_(&p), max_weight_(max_weight), order_(std::move(order)) {
    if (max_weight >= 0) level_.push_back(TreeMonomial::trivial(p.alphabet()));
}

void IrrEnumerator::advance_level() {
    level_ = next_level(*presentation_, level_, std::numeric_limits<int>::max());
    sort_by_order(level_, order_);
    cursor_ = 0;
    ++weight_;
}

std::optional<TreeMonomial> IrrEnumerator::next() {
    while (cursor_ >= level_.size()) {
        if (weight_ >= max_weight_ || level_.empty()) return std::nullopt;
        advance_level();
    }
    return level_[cursor_++];
}

std::vector<TreeMonomial> enumerate_irr(const MonomialOperadPresentation& p, int max_weight) {
    std::vector<TreeMonomial> out;
    IrrEnumerator it(p, max_weight);
    while (auto t = it.next()) out.push_back(std::move(*t));
    return out;
}

Engine parse_engine(std::string_view name) {
    if (name == "brute") return Engine::brute;
    if (name == "dp" || name == "profile_dp" || name == "profile-dp") return Engine::profile_dp;
    throw InvalidArgumentError("unknown engine '" + std::string(name) + "' (expected brute or dp)");
}

std::string_view to_string(Engine engine) { return engine == Engine::brute ? "brute" : "profile_dp"; }

DimSeries dim_by_arity(const MonomialOperadPresentation& p, int max_arity, Engine engine,
                       std::optional<int> weight_cap) {
    if (max_arity < 0) throw InvalidArgumentError("max arity must be nonnegative");
    const bool unary = p.alphabet()->has_unary();
    if (unary && !weight_cap)
        throw CompletenessError("alphabet has a unary generator: arity counts need a weight cap");
    if (weight_cap && *weight_cap < 0) throw InvalidArgumentError("weight cap must be nonnegative");
    // Without unary generators a tree of arity n has weight at most n - 1.
    const int natural = std::max(max_arity - 1, 0);
    const bool capped = unary || (weight_cap && *weight_cap < natural);
    const int max_weight = capped ? *weight_cap : natural;

    std::vector<BigInt> values(max_arity + 1, 0);
    if (engine == Engine::brute) {
        std::vector<TreeMonomial> level{TreeMonomial::trivial(p.alphabet())};
        for (int w = 0;; ++w) {
            for (const auto& t : level)
                if (t.arity() <= max_arity) values[t.arity()] += 1;
            if (w == max_weight || level.empty()) break;
            level = next_level(p, level, max_arity);
        }
    } else if (!capped) {
        auto counts = detail::profile_dp_counts(p, detail::DpMode::arity, max_arity);
        values = scalar_column(counts);
    } else {
        auto counts = detail::profile_dp_counts(p, detail::DpMode::weight_arity, max_weight, max_arity);
        for (const auto& by_arity : counts)
            for (int n = 0; n <= max_arity; ++n) values[n] += by_arity[n];
    }
    return make_series(std::move(values), IndexKind::arity, !capped);
}

DimSeries dim_by_weight(const MonomialOperadPresentation& p, int max_weight, Engine engine) {
    if (max_weight < 0) throw InvalidArgumentError("max weight must be nonnegative");
    std::vector<BigInt> values;
    if (engine == Engine::brute) {
        values.assign(max_weight + 1, 0);
        std::vector<TreeMonomial> level{TreeMonomial::trivial(p.alphabet())};
        for (int w = 0; w <= max_weight && !level.empty(); ++w) {
            values[w] = static_cast<unsigned long>(level.size());
            if (w < max_weight) level = next_level(p, level, std::numeric_limits<int>::max());
        }
    } else {
        values = scalar_column(detail::profile_dp_counts(p, detail::DpMode::weight, max_weight));
    }
    return make_series(std::move(values), IndexKind::weight);
}

std::string_view to_string(GrowthClass c) {
    switch (c) {
        case GrowthClass::bounded: return "bounded";
        case GrowthClass::linear: return "linear";
        case GrowthClass::superlinear_witness: return "superlinear_witness";
    }
    return "?";
}

GapReport gap_dichotomy_check(const MonomialOperadPresentation& p, int max_weight) {
    if (max_weight < 6) throw InvalidArgumentError("gap check needs a weight horizon of at least 6");
    GapReport report;
    report.weight_counts = dim_by_weight(p, max_weight);
    report.partial_sums = make_series(report.weight_counts.partial_sums(), IndexKind::weight);
    const auto& counts = report.weight_counts.values;

    for (int d = 3; d <= max_weight; ++d) {
        if (counts[d] <= d - 3) {
            report.criterion_d = d;
            break;
        }
    }
    if (!report.criterion_d) {
        report.growth_class = GrowthClass::superlinear_witness;
        return report;
    }

    const int start = max_weight - max_weight / 3;
    bool tail_zero = true;
    for (int n = start; n <= max_weight; ++n) tail_zero &= (counts[n] == 0);
    report.growth_class = tail_zero ? GrowthClass::bounded : GrowthClass::linear;

    // Least-squares line through (n, d_V(n)) on the tail window.
    const auto& sums = report.partial_sums.values;
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    const double m = max_weight - start + 1;
    for (int n = start; n <= max_weight; ++n) {
        double y = sums[n].get_d();
        sx += n;
        sy += y;
        sxx += double(n) * n;
        sxy += n * y;
    }
    AffineCheck fit;
    const double denom = m * sxx - sx * sx;
    fit.slope = denom == 0 ? 0 : (m * sxy - sx * sy) / denom;
    fit.intercept = (sy - fit.slope * sx) / m;
    for (int n = 0; n <= max_weight; ++n) {
        double bound = fit.slope * n + fit.intercept;
        if (sums[n].get_d() > bound + std::max(5.0, 0.1 * std::abs(bound))) {
            fit.first_violation = n;
            break;
        }
    }
    report.affine = fit;
    return report;
}

}  // namespace oplab
