#pragma once

// Algebra-to-operad constructions: the min-envelope, the operadization of a
// monomial algebra, and the dimension-level symmetric envelope.

#include <string>

#include "oplab/graded_algebra.hpp"
#include "oplab/monomial_operad.hpp"

namespace oplab {

enum class Provenance { min_envelope, operadization, symmetric_envelope, direct };

std::string_view to_string(Provenance p);

struct OperadDimProfile {
    DimSeries dims;  // indexed by arity
    Provenance provenance = Provenance::direct;
};

/// dims[0] = 0, dims[n] = A[n-1]. Requires A[0] = 1.
OperadDimProfile min_envelope_dims(const DimSeries& algebra_dims);

/// dims[0] = 0, dims[n] = n * A[n-1]. Requires A[0] = 1.
OperadDimProfile symmetric_envelope_dims(const DimSeries& algebra_dims);

/// The piecewise arity formula for the operadization on d variables:
/// 1 at arity 1 and d, A[l] at arity (l+1)d - l for l >= 1, else 0.
OperadDimProfile operadization_dims(const DimSeries& algebra_dims, int d, int max_arity);

/// Right-normal chain a o_{i_1} (a o_{i_2} (... a)) for the word x_{i_1}...x_{i_k}.
TreeMonomial operadize_word(const AlphabetPtr& alphabet, const AlgebraWord& w);

/// One generator `a` of arity d = number of variables, relations
/// (a o_j a) o_i a for i < j, and the images of the forbidden words.
MonomialOperadPresentation operadize(const MonomialAlgebraPresentation& algebra);

}  // namespace oplab
