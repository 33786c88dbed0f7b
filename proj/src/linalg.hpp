#pragma once

#include <vector>

#include "oplab/common.hpp"

namespace oplab::detail {

using IntMatrix = std::vector<std::vector<BigInt>>;

/// Rank of the matrix reduced modulo the prime 2^61 - 1. A lower bound for
/// the rank over the rationals.
std::size_t rank_mod_prime(const IntMatrix& rows, std::size_t cols);

/// Basis of the right nullspace over Q, by fraction-free (Bareiss) row
/// echelon form followed by rational back substitution. One basis vector
/// per free column.
std::vector<std::vector<Rational>> nullspace(IntMatrix rows, std::size_t cols);

}  // namespace oplab::detail
