#pragma once

#include <vector>

#include "oplab/monomial_operad.hpp"

namespace oplab::detail {

enum class DpMode {
    arity,         // degree = arity, scalar coefficients (no unary generators)
    weight,        // degree = weight, scalar coefficients
    weight_arity,  // degree = weight, coefficients are arity vectors
};

// Counts normal forms by match-set transfer. Returns, for every
// degree 0..max_degree, a coefficient vector: length 1 in the scalar modes,
// length max_arity + 1 in weight_arity mode. The trivial monomial is included.
std::vector<std::vector<BigInt>> profile_dp_counts(const MonomialOperadPresentation& p, DpMode mode, int max_degree,
                                                   int max_arity = 0);

}  // namespace oplab::detail
