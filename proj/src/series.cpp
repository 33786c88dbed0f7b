#include "oplab/series.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "linalg.hpp"

namespace oplab {

SeriesWindow to_window(const DimSeries& dims) {
    SeriesWindow w;
    w.coefficients.reserve(dims.size());
    for (const auto& v : dims.values) w.coefficients.emplace_back(v);
    return w;
}

namespace {

void trim(Polynomial& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

std::string coefficient_term(const Rational& c, std::size_t k, std::string_view var, bool first) {
    std::string out;
    Rational a = abs(c);
    if (first)
        out += sgn(c) < 0 ? "-" : "";
    else
        out += sgn(c) < 0 ? " - " : " + ";
    const bool unit = a == 1;
    if (k == 0 || !unit) out += a.get_str();
    if (k > 0) {
        if (!unit) out += "*";
        out += var;
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

// Quotient and remainder of a by b over Q (b nonzero, trimmed).
std::pair<Polynomial, Polynomial> divmod(Polynomial a, const Polynomial& b) {
    trim(a);
    Polynomial q;
    if (a.size() >= b.size()) q.assign(a.size() - b.size() + 1, 0);
    while (a.size() >= b.size() && !a.empty()) {
        const std::size_t shift = a.size() - b.size();
        Rational f = a.back() / b.back();
        q[shift] = f;
        for (std::size_t i = 0; i < b.size(); ++i) a[i + shift] -= f * b[i];
        trim(a);
    }
    trim(q);
    return {q, a};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = divmod(a, b).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Polynomial multiply_truncated(const Polynomial& a, const std::vector<Rational>& s, std::size_t len) {
    Polynomial out(len, 0);
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (sgn(a[i]) == 0) continue;
        for (std::size_t j = 0; i + j < len && j < s.size(); ++j) out[i + j] += a[i] * s[j];
    }
    return out;
}

// Minimal connection polynomial C (C[0] = 1) and linear complexity L.
std::pair<Polynomial, std::size_t> berlekamp_massey(const std::vector<Rational>& s) {
    Polynomial c{1}, b{1};
    std::size_t l = 0, m = 1;
    Rational last = 1;
    for (std::size_t n = 0; n < s.size(); ++n) {
        Rational d = s[n];
        for (std::size_t i = 1; i <= l && i < c.size(); ++i) d += c[i] * s[n - i];
        if (sgn(d) == 0) {
            ++m;
            continue;
        }
        Rational f = d / last;
        Polynomial t = c;
        if (c.size() < b.size() + m) c.resize(b.size() + m, 0);
        for (std::size_t i = 0; i < b.size(); ++i) c[i + m] -= f * b[i];
        if (2 * l <= n) {
            l = n + 1 - l;
            b = std::move(t);
            last = d;
            m = 1;
        } else {
            ++m;
        }
    }
    c.resize(l + 1, 0);
    return {c, l};
}

ZeroRunReport zero_runs(std::size_t size, const std::function<bool(std::size_t)>& is_zero) {
    ZeroRunReport report;
    report.truncation = size == 0 ? 0 : size - 1;
    for (std::size_t i = 0; i < size;) {
        if (!is_zero(i)) {
            ++i;
            continue;
        }
        std::size_t j = i;
        while (j + 1 < size && is_zero(j + 1)) ++j;
        report.runs.emplace_back(i, j);
        report.max_run = std::max(report.max_run, j - i + 1);
        if (j + 1 < size) ++report.complete_runs;
        i = j + 1;
    }
    if (report.complete_runs >= 3) {
        auto len = [&](std::size_t k) { return report.runs[k].second - report.runs[k].first + 1; };
        const std::size_t last = report.complete_runs - 1;
        report.growing = len(last - 2) < len(last - 1) && len(last - 1) < len(last);
    }
    return report;
}

}  // namespace

std::string polynomial_to_string(const Polynomial& p, std::string_view var) {
    std::string out;
    bool first = true;
    for (std::size_t k = 0; k < p.size(); ++k) {
        if (sgn(p[k]) == 0) continue;
        out += coefficient_term(p[k], k, var, first);
        first = false;
    }
    return first ? "0" : out;
}

GkReport gk_estimate(const DimSeries& dims, double tail) {
    if (!(tail > 0 && tail <= 1)) throw InvalidArgumentError("tail fraction must lie in (0, 1]");
    bool any = false;
    for (std::size_t i = 2; i < dims.size(); ++i) any |= sgn(dims[i]) != 0;
    if (!any) throw DegenerateSeriesError("series vanishes beyond index 1; growth is undefined");
    for (const auto& v : dims.values)
        if (sgn(v) < 0) throw InvalidArgumentError("dimension series must be nonnegative");

    const auto sums = dims.partial_sums();
    const std::size_t n = sums.size() - 1;
    GkReport report;
    report.n = n;
    report.window_start = std::max<std::size_t>(2, n - static_cast<std::size_t>(std::floor(n * tail)));
    if (report.window_start >= n) report.window_start = n > 2 ? n - 1 : 2;

    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    std::size_t count = 0;
    report.pointwise_max = -INFINITY;
    for (std::size_t i = report.window_start; i <= n; ++i) {
        if (sgn(sums[i]) <= 0) continue;
        const double x = std::log(static_cast<double>(i));
        const double y = log_big(sums[i]);
        report.pointwise_max = std::max(report.pointwise_max, y / x);
        sx += x;
        sy += y;
        sxx += x * x;
        sxy += x * y;
        ++count;
    }
    report.pointwise = sgn(sums[n]) > 0 ? log_big(sums[n]) / std::log(static_cast<double>(n)) : 0.0;
    const double denom = count * sxx - sx * sx;
    report.slope = count >= 2 && denom > 0 ? (count * sxy - sx * sy) / denom : 0.0;

    // Doubling exponent e(m) = log2(S(2m)/S(m)) stays bounded for polynomial
    // growth and grows linearly for geometric growth.
    auto doubling = [&](std::size_t m) -> std::optional<double> {
        if (m == 0 || 2 * m > n || sgn(sums[m]) <= 0) return std::nullopt;
        return (log_big(sums[2 * m]) - log_big(sums[m])) / std::log(2.0);
    };
    auto half = doubling(n / 2);
    auto quarter = doubling(n / 4);
    report.exp_flag = half && quarter && *half >= 10.0 && *half >= 1.6 * *quarter;
    return report;
}

std::vector<Rational> expand_rational(const Polynomial& numerator, const Polynomial& denominator, std::size_t n) {
    if (denominator.empty() || sgn(denominator[0]) == 0)
        throw InvalidArgumentError("denominator must have a nonzero constant term");
    std::vector<Rational> c(n + 1, 0);
    for (std::size_t k = 0; k <= n; ++k) {
        Rational v = k < numerator.size() ? numerator[k] : Rational(0);
        for (std::size_t i = 1; i < denominator.size() && i <= k; ++i) v -= denominator[i] * c[k - i];
        c[k] = v / denominator[0];
    }
    return c;
}

std::string RationalFit::to_string() const {
    return "(" + polynomial_to_string(numerator) + ") / (" + polynomial_to_string(denominator) + ")";
}

std::optional<RationalFit> fit_rational(const SeriesWindow& s, std::size_t holdout) {
    if (s.size() <= holdout + 4) return std::nullopt;
    const std::size_t fit_len = s.size() - holdout;
    std::vector<Rational> fit(s.coefficients.begin(), s.coefficients.begin() + fit_len);
    auto [c, l] = berlekamp_massey(fit);
    if (2 * l + 2 > fit_len) return std::nullopt;

    Polynomial numerator = multiply_truncated(c, fit, l);
    Polynomial denominator = c;
    trim(numerator);
    trim(denominator);
    if (!numerator.empty()) {
        Polynomial g = gcd(numerator, denominator);
        if (g.size() > 1) {
            numerator = divmod(numerator, g).first;
            denominator = divmod(denominator, g).first;
        }
    }
    const Rational lead = denominator[0];
    for (auto& x : numerator) x /= lead;
    for (auto& x : denominator) x /= lead;

    const auto expansion = expand_rational(numerator, denominator, s.truncation());
    for (std::size_t i = 0; i < s.size(); ++i)
        if (expansion[i] != s[i]) return std::nullopt;
    RationalFit result;
    result.numerator = std::move(numerator);
    result.denominator = std::move(denominator);
    result.holdout_verified = holdout > 0;
    result.fit_length = fit_len;
    result.truncation = s.truncation();
    return result;
}

Rational RecurrenceCandidate::residual(const SeriesWindow& s, std::size_t n) const {
    Rational total = 0;
    for (int i = 0; i <= order; ++i) {
        Rational p = 0, power = 1;
        for (const auto& a : coefficients[i]) {
            p += a * power;
            power *= static_cast<long>(n);
        }
        total += p * s[n - i];
    }
    return total;
}

std::string RecurrenceCandidate::to_string() const {
    std::string out;
    bool first = true;
    for (int i = 0; i <= order; ++i) {
        if (std::all_of(coefficients[i].begin(), coefficients[i].end(), [](const Rational& a) { return sgn(a) == 0; }))
            continue;
        if (!first) out += " + ";
        first = false;
        out += "(" + polynomial_to_string(coefficients[i], "n") + ")*c(n";
        if (i > 0) out += "-" + std::to_string(i);
        out += ")";
    }
    return out + " = 0";
}

std::optional<RecurrenceCandidate> guess_holonomic(const SeriesWindow& s, int max_order, int max_degree,
                                                   std::size_t holdout) {
    if (max_order < 1 || max_degree < 0) throw InvalidArgumentError("need max order >= 1 and max degree >= 0");
    const std::size_t n_max = s.truncation();
    auto needed = [&](int r, int d) { return static_cast<std::size_t>((r + 1) * (d + 1) + r) + holdout; };
    if (s.size() == 0 || n_max < needed(max_order, max_degree))
        throw WindowTooShortError("guessing at order " + std::to_string(max_order) + ", degree " +
                                  std::to_string(max_degree) + " needs N >= " +
                                  std::to_string(needed(max_order, max_degree)) + " (have " + std::to_string(n_max) +
                                  ")");
    const std::size_t last_fit = n_max - holdout;

    for (int r = 1; r <= max_order; ++r) {
        for (int d = 0; d <= max_degree; ++d) {
            const std::size_t cols = static_cast<std::size_t>((r + 1) * (d + 1));
            detail::IntMatrix rows;
            for (std::size_t n = r; n <= last_fit; ++n) {
                BigInt scale = 1;
                for (int i = 0; i <= r; ++i) mpz_lcm(scale.get_mpz_t(), scale.get_mpz_t(), s[n - i].get_den_mpz_t());
                std::vector<BigInt> row(cols);
                for (int i = 0; i <= r; ++i) {
                    BigInt base = s[n - i].get_num() * (scale / s[n - i].get_den());
                    for (int j = 0; j <= d; ++j) {
                        row[i * (d + 1) + j] = base;
                        base *= static_cast<long>(n);
                    }
                }
                rows.push_back(std::move(row));
            }
            // Full rank modulo a prime certifies a trivial nullspace over Q.
            if (detail::rank_mod_prime(rows, cols) == cols) continue;
            for (auto& v : detail::nullspace(std::move(rows), cols)) {
                BigInt den = 1, content = 0;
                for (const auto& x : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), x.get_den_mpz_t());
                for (auto& x : v) {
                    x *= den;
                    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), x.get_num_mpz_t());
                }
                auto lead = std::find_if(v.begin(), v.end(), [](const Rational& x) { return sgn(x) != 0; });
                if (lead == v.end()) continue;
                if (sgn(*lead) < 0) content = -content;
                RecurrenceCandidate cand;
                cand.order = r;
                cand.degree = d;
                for (int i = 0; i <= r; ++i) {
                    Polynomial p(v.begin() + i * (d + 1), v.begin() + (i + 1) * (d + 1));
                    for (auto& x : p) x /= content;
                    cand.coefficients.push_back(std::move(p));
                }
                cand.fit_window = {static_cast<std::size_t>(r), last_fit};
                cand.holdout = holdout;
                bool ok = true;
                for (std::size_t n = r; n <= n_max && ok; ++n) ok = sgn(cand.residual(s, n)) == 0;
                if (!ok) continue;
                cand.holdout_verified = true;
                return cand;
            }
        }
    }
    return std::nullopt;
}

ZeroRunReport zero_run_report(const SeriesWindow& s) {
    return zero_runs(s.size(), [&](std::size_t i) { return sgn(s[i]) == 0; });
}

ZeroRunReport zero_run_report(const std::vector<BigInt>& values) {
    return zero_runs(values.size(), [&](std::size_t i) { return sgn(values[i]) == 0; });
}

ZeroRunReport zero_run_report(const std::vector<std::uint8_t>& values) {
    return zero_runs(values.size(), [&](std::size_t i) { return values[i] == 0; });
}

SeriesWindow exponential_transform(const SeriesWindow& s) {
    SeriesWindow out;
    out.coefficients.reserve(s.size());
    BigInt factorial = 1;
    for (std::size_t n = 0; n < s.size(); ++n) {
        if (n > 0) factorial *= static_cast<unsigned long>(n);
        out.coefficients.push_back(s[n] / Rational(factorial));
        out.coefficients.back().canonicalize();
    }
    return out;
}

}  // namespace oplab
