#pragma once

// Exhaustive growth sweep over one-binary-generator monomial operads.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "oplab/monomial_operad.hpp"

namespace oplab {

struct SweepRow {
    std::uint32_t key = 0;           // bit i set: candidate relation i is present
    std::string relations;           // literals joined by ';' ("-" when empty)
    std::optional<int> criterion_d;
    GrowthClass growth_class = GrowthClass::superlinear_witness;
    double tail_exponent = 0;        // least-squares slope of log partial sums by arity
    bool exponential = false;
};

struct SweepReport {
    int max_relation_weight = 0;
    int horizon = 0;                 // weight horizon
    std::vector<std::size_t> candidates_by_weight;  // index w: monomials of weight w
    std::vector<TreeMonomial> candidates;
    std::vector<SweepRow> rows;      // ordered by key

    /// No tail exponent inside (1.1, 1.9).
    bool dichotomy_holds() const;
    /// Every linear row carries the linear-growth criterion.
    bool linear_rows_have_criterion() const;
};

/// Relations range over all subsets of the weight-2..max_relation_weight
/// monomials in one binary generator. Rows run on up to `threads` workers;
/// the result does not depend on the thread count.
SweepReport run_sweep(int max_relation_weight, int horizon, unsigned threads = 1);

/// Thread count from OPLAB_THREADS, else the hardware concurrency.
unsigned default_threads();

}  // namespace oplab
