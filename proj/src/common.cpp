#include "oplab/common.hpp"

#include <cctype>
#include <cmath>

namespace oplab {

std::string_view to_string(IndexKind kind) {
    switch (kind) {
        case IndexKind::arity: return "arity";
        case IndexKind::weight: return "weight";
        case IndexKind::degree: return "degree";
        case IndexKind::height: return "height";
    }
    return "unknown";
}

std::vector<BigInt> DimSeries::partial_sums() const {
    std::vector<BigInt> sums(values.size());
    BigInt running = 0;
    for (std::size_t i = 0; i < values.size(); ++i) {
        running += values[i];
        sums[i] = running;
    }
    return sums;
}

DimSeries make_series(std::vector<BigInt> values, IndexKind kind, bool exact) {
    DimSeries s;
    s.values = std::move(values);
    s.index_kind = kind;
    s.exact = exact;
    return s;
}

double log_big(const BigInt& x) {
    if (sgn(x) <= 0) throw InvalidArgumentError("log of a nonpositive integer");
    long exponent = 0;
    double mantissa = mpz_get_d_2exp(&exponent, x.get_mpz_t());
    return std::log(mantissa) + static_cast<double>(exponent) * std::log(2.0);
}

Rational parse_decimal_rational(std::string_view text) {
    std::string s(text);
    auto fail = [&] { return InvalidArgumentError("not a decimal number: '" + s + "'"); };
    if (s.empty()) throw fail();
    if (auto slash = s.find('/'); slash != std::string::npos) {
        Rational num = parse_decimal_rational(s.substr(0, slash));
        Rational den = parse_decimal_rational(s.substr(slash + 1));
        if (den == 0) throw fail();
        Rational q = num / den;
        q.canonicalize();
        return q;
    }
    std::size_t pos = 0;
    bool negative = false;
    if (s[pos] == '+' || s[pos] == '-') negative = s[pos++] == '-';
    BigInt mantissa = 0;
    long scale = 0;
    bool any_digit = false;
    bool seen_point = false;
    for (; pos < s.size(); ++pos) {
        char c = s[pos];
        if (std::isdigit(static_cast<unsigned char>(c))) {
            mantissa = mantissa * 10 + (c - '0');
            if (seen_point) --scale;
            any_digit = true;
        } else if (c == '.' && !seen_point) {
            seen_point = true;
        } else {
            break;
        }
    }
    if (!any_digit) throw fail();
    if (pos < s.size()) {
        if (s[pos] != 'e' && s[pos] != 'E') throw fail();
        ++pos;
        std::size_t used = 0;
        long e = 0;
        try {
            e = std::stol(s.substr(pos), &used);
        } catch (const std::exception&) {
            throw fail();
        }
        if (pos + used != s.size()) throw fail();
        scale += e;
    }
    BigInt ten_power;
    mpz_ui_pow_ui(ten_power.get_mpz_t(), 10, static_cast<unsigned long>(scale < 0 ? -scale : scale));
    Rational q = scale < 0 ? Rational(mantissa, ten_power) : Rational(mantissa * ten_power);
    q.canonicalize();
    return negative ? Rational(-q) : q;
}

BigInt floor_rational_power(const BigInt& n, const Rational& q) {
    if (sgn(n) < 0 || sgn(q) < 0) throw InvalidArgumentError("floor_rational_power needs n >= 0, q >= 0");
    if (!q.get_num().fits_ulong_p() || !q.get_den().fits_ulong_p())
        throw InvalidArgumentError("exponent too large");
    BigInt power;
    mpz_pow_ui(power.get_mpz_t(), n.get_mpz_t(), q.get_num().get_ui());
    BigInt root;
    mpz_root(root.get_mpz_t(), power.get_mpz_t(), q.get_den().get_ui());
    return root;
}

}  // namespace oplab
