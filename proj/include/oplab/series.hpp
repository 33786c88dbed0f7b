#pragma once

// Series analysis: GK-dimension estimates, rational fitting, holonomic
// recurrence guessing, zero-run reports and the exponential transform.

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "oplab/common.hpp"

namespace oplab {

/// Exact coefficients c_0..c_N.
struct SeriesWindow {
    std::vector<Rational> coefficients;

    std::size_t truncation() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
    std::size_t size() const { return coefficients.size(); }
    const Rational& operator[](std::size_t i) const { return coefficients[i]; }
};

SeriesWindow to_window(const DimSeries& dims);

/// Polynomial in z (or n), lowest degree first.
using Polynomial = std::vector<Rational>;

std::string polynomial_to_string(const Polynomial& p, std::string_view var = "z");

struct GkReport {
    std::size_t n = 0;                // last index used
    std::size_t window_start = 0;     // first index of the tail window
    double pointwise = 0;             // log S(N) / log N
    double pointwise_max = 0;         // max of log S(n) / log n over the window
    double slope = 0;                 // least-squares slope of log S against log n
    bool exp_flag = false;            // doubling exponents keep growing
};

/// `tail` is the fraction of indices, counted from the end, used as window.
GkReport gk_estimate(const DimSeries& dims, double tail = 1.0 / 3.0);

struct RationalFit {
    Polynomial numerator;
    Polynomial denominator;  // constant term 1
    bool holdout_verified = false;
    std::size_t fit_length = 0;  // coefficients used for fitting
    std::size_t truncation = 0;

    std::string to_string() const;
};

/// Minimal recurrence by Berlekamp-Massey on all but the last `holdout`
/// coefficients, then an exact check of the expansion on the whole window.
std::optional<RationalFit> fit_rational(const SeriesWindow& s, std::size_t holdout = 20);

/// Expansion of numerator/denominator up to index n.
std::vector<Rational> expand_rational(const Polynomial& numerator, const Polynomial& denominator, std::size_t n);

struct RecurrenceCandidate {
    int order = 0;
    int degree = 0;
    std::vector<Polynomial> coefficients;  // p_0..p_R in n, integer with content 1
    std::pair<std::size_t, std::size_t> fit_window;
    std::size_t holdout = 0;
    bool holdout_verified = false;

    /// Value of sum_i p_i(n) c_{n-i}.
    Rational residual(const SeriesWindow& s, std::size_t n) const;
    std::string to_string() const;
};

/// Searches orders 1..max_order and degrees 0..max_degree, smallest order
/// first, then smallest degree. Absence means "none at these bounds".
std::optional<RecurrenceCandidate> guess_holonomic(const SeriesWindow& s, int max_order, int max_degree,
                                                   std::size_t holdout = 20);

struct ZeroRunReport {
    std::vector<std::pair<std::size_t, std::size_t>> runs;  // maximal [i, j] with c_i..c_j = 0
    std::size_t max_run = 0;
    std::size_t complete_runs = 0;  // runs ending before the last index
    bool growing = false;           // last three complete runs strictly lengthen
    std::size_t truncation = 0;
};

ZeroRunReport zero_run_report(const SeriesWindow& s);
ZeroRunReport zero_run_report(const std::vector<BigInt>& values);
ZeroRunReport zero_run_report(const std::vector<std::uint8_t>& values);

/// c_n -> c_n / n!.
SeriesWindow exponential_transform(const SeriesWindow& s);

}  // namespace oplab
