#pragma once

// Connected graded monomial algebras and the closed-form example algebras.

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "oplab/common.hpp"

namespace oplab {

using AlgebraWord = std::vector<int>;  // variable indices

/// F<variables> modulo a finite set of forbidden words of length >= 2. The
/// forbidden set is self-reduced at construction.
class MonomialAlgebraPresentation {
public:
    MonomialAlgebraPresentation(std::vector<std::string> variables, std::vector<AlgebraWord> forbidden,
                                std::string name = {});

    const std::vector<std::string>& variables() const { return variables_; }
    const std::vector<AlgebraWord>& forbidden() const { return forbidden_; }
    const std::string& name() const { return name_; }
    int num_variables() const { return static_cast<int>(variables_.size()); }

    std::string word_to_string(const AlgebraWord& w) const;
    /// `var <id>` lines then `forbid <word>` lines.
    std::string to_text() const;

private:
    std::vector<std::string> variables_;
    std::vector<AlgebraWord> forbidden_;
    std::string name_;
};

/// Words are space-separated ids, or a run of ids split by longest match.
MonomialAlgebraPresentation parse_algebra(std::string_view text, std::string name = {});

DimSeries hilbert_dims(const MonomialAlgebraPresentation& a, int max_degree);
/// Word-by-word enumeration; oracle for hilbert_dims.
DimSeries hilbert_dims_brute(const MonomialAlgebraPresentation& a, int max_degree);

/// 1 + n + (f - 1) f / 2 with f = floor(n^((r-1)/2)), for 2 < r < 3.
DimSeries warfield_dims(const Rational& r, int max_degree);
/// The forbidden-pattern algebra behind warfield_dims, truncated at max_degree.
MonomialAlgebraPresentation warfield_model(const Rational& r, int max_degree);

/// Closed intervals [(2m+1)^(2m+1) + 1, (2m+2)^(2m+2) + 1] for m < count.
std::vector<std::pair<std::uint64_t, std::uint64_t>> lambda_intervals(int count);
bool in_lambda(std::uint64_t n);
/// 0 on the lambda set, 1 elsewhere, for n = 0..max_degree.
std::vector<std::uint8_t> example62_delta(std::size_t max_degree);
/// 1, 2, then 3 + delta(n).
DimSeries example62_dims(int max_degree);
/// The three relation families of the example, truncated at max_degree.
MonomialAlgebraPresentation example62_model(int max_degree);

DimSeries partition_dims(int max_degree);
/// values[1] = 1 (identity), values[n] = floor(n^a) - floor((n-1)^a) for n >= 2.
DimSeries floor_power_dims(const Rational& alpha, int max_index);
DimSeries polynomial_ring_dims(int d, int max_degree);
DimSeries free_algebra_dims(int d, int max_degree);

/// Multiplies by 1/(1-z)^n, truncated at the input's length.
DimSeries adjoin_polynomial_variables(const DimSeries& dims, int n);

/// A named closed-form family: `polyring:<d>`, `free:<d>`, `warfield:<r>`,
/// `example62`, `partition`, `floorpow:<a>`.
struct ClosedFormSeries {
    enum class Kind { polynomial_ring, free_algebra, warfield, example62, partition, floor_power };

    Kind kind = Kind::partition;
    Rational parameter = 0;

    static ClosedFormSeries parse(std::string_view text);
    std::string name() const;
    DimSeries dims(int max_index) const;
};

}  // namespace oplab
