#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace oplab {

using BigInt = mpz_class;
using Rational = mpq_class;

// Error hierarchy. Every failure raised by the library derives from Error so
// front ends can separate library errors from programming errors.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class LeafIndexError : public Error { using Error::Error; };
class AlphabetMismatchError : public Error { using Error::Error; };
class MalformedPathError : public Error { using Error::Error; };
class DegenerateDivisorError : public Error { using Error::Error; };
class ZeroPolynomialError : public Error { using Error::Error; };
class CompletenessError : public Error { using Error::Error; };
class NotSingleBranchedError : public Error { using Error::Error; };
class AperiodicError : public Error { using Error::Error; };
class DegenerateSeriesError : public Error { using Error::Error; };
class WindowTooShortError : public Error { using Error::Error; };
class InvalidArgumentError : public Error { using Error::Error; };

// Parse failures carry the 1-based line number of the offending input line
// (0 when the input is a single literal).
class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::string text = {})
        : Error(line == 0 ? what : "line " + std::to_string(line) + ": " + what + " [" + text + "]"),
          line_(line), text_(std::move(text)) {}

    std::size_t line() const noexcept { return line_; }
    const std::string& text() const noexcept { return text_; }

private:
    std::size_t line_;
    std::string text_;
};

enum class IndexKind { arity, weight, degree, height };

std::string_view to_string(IndexKind kind);

/// Exact nonnegative integer sequence indexed from 0.
///
/// `exact` is false when the values are known to be truncations of the true
/// counts (for example arity counts of an operad with unary generators,
/// computed under a weight cap).
struct DimSeries {
    std::vector<BigInt> values;
    IndexKind index_kind = IndexKind::arity;
    bool exact = true;

    std::size_t truncation() const { return values.empty() ? 0 : values.size() - 1; }
    std::size_t size() const { return values.size(); }
    const BigInt& operator[](std::size_t i) const { return values[i]; }

    std::vector<BigInt> partial_sums() const;

    friend bool operator==(const DimSeries& a, const DimSeries& b) {
        return a.values == b.values && a.index_kind == b.index_kind && a.exact == b.exact;
    }
};

DimSeries make_series(std::vector<BigInt> values, IndexKind kind, bool exact = true);

/// Natural logarithm of a positive big integer without overflow.
double log_big(const BigInt& x);

/// Parses a decimal literal such as "2.5", "-3", "1e-2" or "7/4" exactly.
Rational parse_decimal_rational(std::string_view text);

/// floor(n^q) for rational q >= 0, computed exactly with integer roots.
BigInt floor_rational_power(const BigInt& n, const Rational& q);

}  // namespace oplab
