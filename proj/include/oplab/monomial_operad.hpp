#pragma once

// Finitely presented nonsymmetric monomial operads: normal forms, enumeration,
// dimension counts and the growth dichotomy report.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oplab/order.hpp"
#include "oplab/tree.hpp"

namespace oplab {

/// Alphabet plus a finite set of forbidden divisors. The relation set is
/// self-reduced at construction: duplicates and relations divisible by another
/// relation are dropped, and the survivors are stored in structural order.
class MonomialOperadPresentation {
public:
    MonomialOperadPresentation(AlphabetPtr alphabet, std::vector<TreeMonomial> relations, std::string name = {});

    const AlphabetPtr& alphabet() const { return alphabet_; }
    const std::vector<TreeMonomial>& relations() const { return relations_; }
    const std::string& name() const { return name_; }
    int max_relation_height() const;

    /// Text format: `generator <id> <arity>` lines, then `relation <literal>` lines.
    std::string to_text() const;
    /// FNV-1a hash of `to_text()`; stable across runs and platforms.
    std::uint64_t fingerprint() const;

private:
    AlphabetPtr alphabet_;
    std::vector<TreeMonomial> relations_;
    std::string name_;
};

MonomialOperadPresentation parse_presentation(std::string_view text, std::string name = {});

bool is_normal_form(const MonomialOperadPresentation& p, const TreeMonomial& t);

/// Streams the normal forms of weight <= max_weight, one weight level at a
/// time, each level sorted by the path extension of `order`.
class IrrEnumerator {
public:
    IrrEnumerator(const MonomialOperadPresentation& p, int max_weight);
    IrrEnumerator(const MonomialOperadPresentation& p, int max_weight, TreeOrder order);

    std::optional<TreeMonomial> next();
    int current_weight() const { return weight_; }

private:
    void advance_level();

    const MonomialOperadPresentation* presentation_;
    int max_weight_;
    TreeOrder order_;
    int weight_ = 0;
    std::vector<TreeMonomial> level_;
    std::size_t cursor_ = 0;
};

std::vector<TreeMonomial> enumerate_irr(const MonomialOperadPresentation& p, int max_weight);

enum class Engine { brute, profile_dp };

Engine parse_engine(std::string_view name);
std::string_view to_string(Engine engine);

/// values[n] = number of normal forms of arity n, n <= max_arity.
///
/// With a unary generator the arity counts may be infinite; a weight cap is
/// then mandatory and the result is flagged inexact.
DimSeries dim_by_arity(const MonomialOperadPresentation& p, int max_arity, Engine engine = Engine::profile_dp,
                       std::optional<int> weight_cap = std::nullopt);

/// values[w] = number of normal forms of weight w, w <= max_weight.
DimSeries dim_by_weight(const MonomialOperadPresentation& p, int max_weight, Engine engine = Engine::profile_dp);

enum class GrowthClass { bounded, linear, superlinear_witness };

std::string_view to_string(GrowthClass c);

struct AffineCheck {
    double slope = 0;
    double intercept = 0;
    std::optional<int> first_violation;  // index where d_V(n) exceeds the fit beyond tolerance
};

struct GapReport {
    std::optional<int> criterion_d;   // smallest d >= 3 with weight-d count <= d - 3
    GrowthClass growth_class = GrowthClass::superlinear_witness;
    DimSeries weight_counts;          // dims by weight
    DimSeries partial_sums;           // d_V(n) = sum_{w <= n} counts[w]
    std::optional<AffineCheck> affine;
};

/// Growth dichotomy report: looks for the linear-growth criterion and, when it
/// holds, checks the partial sums against a least-squares affine bound fitted
/// on the last third of the horizon.
GapReport gap_dichotomy_check(const MonomialOperadPresentation& p, int max_weight);

}  // namespace oplab
