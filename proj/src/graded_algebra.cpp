#include "oplab/graded_algebra.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "aho_corasick.hpp"

namespace oplab {

namespace {

std::string trim(std::string_view s) {
    auto b = s.find_first_not_of(" \t\r");
    if (b == std::string_view::npos) return {};
    auto e = s.find_last_not_of(" \t\r");
    return std::string(s.substr(b, e - b + 1));
}

bool valid_id(const std::string& id) {
    return !id.empty() && std::all_of(id.begin(), id.end(), [](unsigned char c) { return std::isalnum(c) || c == '_'; });
}

AlgebraWord power(int x, std::size_t k) { return AlgebraWord(k, x); }

AlgebraWord concat(std::initializer_list<AlgebraWord> parts) {
    AlgebraWord out;
    for (const auto& p : parts) out.insert(out.end(), p.begin(), p.end());
    return out;
}

}  // namespace

MonomialAlgebraPresentation::MonomialAlgebraPresentation(std::vector<std::string> variables,
                                                         std::vector<AlgebraWord> forbidden, std::string name)
    : variables_(std::move(variables)), name_(std::move(name)) {
    if (variables_.empty()) throw InvalidArgumentError("a monomial algebra needs at least one variable");
    std::set<std::string> seen;
    for (const auto& v : variables_) {
        if (!valid_id(v)) throw InvalidArgumentError("invalid variable id '" + v + "'");
        if (!seen.insert(v).second) throw InvalidArgumentError("duplicate variable '" + v + "'");
    }
    for (const auto& w : forbidden) {
        if (w.size() < 2) throw InvalidArgumentError("forbidden words must have length >= 2");
        for (int x : w)
            if (x < 0 || x >= num_variables()) throw InvalidArgumentError("forbidden word uses an unknown variable");
    }
    forbidden_ = detail::factor_reduce(num_variables(), forbidden);
    std::sort(forbidden_.begin(), forbidden_.end(), [](const AlgebraWord& a, const AlgebraWord& b) {
        return a.size() != b.size() ? a.size() < b.size() : a < b;
    });
}

std::string MonomialAlgebraPresentation::word_to_string(const AlgebraWord& w) const {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i) out += ' ';
        out += variables_[w[i]];
    }
    return out;
}

std::string MonomialAlgebraPresentation::to_text() const {
    std::ostringstream out;
    if (!name_.empty()) out << "name " << name_ << '\n';
    for (const auto& v : variables_) out << "var " << v << '\n';
    for (const auto& w : forbidden_) out << "forbid " << word_to_string(w) << '\n';
    return out.str();
}

MonomialAlgebraPresentation parse_algebra(std::string_view text, std::string name) {
    std::vector<std::string> variables;
    std::vector<AlgebraWord> forbidden;
    std::map<std::string, int> index;
    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    auto fail = [&](const std::string& what) { throw ParseError(what, line_no, trim(raw)); };
    while (std::getline(in, raw)) {
        ++line_no;
        std::string line = trim(raw.substr(0, raw.find('#')));
        if (line.empty()) continue;
        auto space = line.find_first_of(" \t");
        std::string keyword = line.substr(0, space);
        std::string rest = space == std::string::npos ? std::string{} : trim(line.substr(space));
        if (keyword == "name") {
            if (name.empty()) name = rest;
        } else if (keyword == "var") {
            if (!forbidden.empty()) fail("variable declared after the first forbidden word");
            if (!valid_id(rest)) fail("expected 'var <id>'");
            if (index.count(rest)) fail("duplicate variable '" + rest + "'");
            index[rest] = static_cast<int>(variables.size());
            variables.push_back(rest);
        } else if (keyword == "forbid") {
            AlgebraWord w;
            std::istringstream tokens(rest);
            std::string token;
            while (tokens >> token) {
                if (auto it = index.find(token); it != index.end()) {
                    w.push_back(it->second);
                    continue;
                }
                for (std::size_t pos = 0; pos < token.size();) {
                    std::size_t best = 0;
                    int best_id = -1;
                    for (const auto& [id, x] : index) {
                        if (id.size() > best && token.compare(pos, id.size(), id) == 0) {
                            best = id.size();
                            best_id = x;
                        }
                    }
                    if (best_id < 0) fail("cannot split '" + token + "' into variables");
                    w.push_back(best_id);
                    pos += best;
                }
            }
            if (w.size() < 2) fail("forbidden words must have length >= 2");
            forbidden.push_back(std::move(w));
        } else {
            fail("unknown keyword '" + keyword + "'");
        }
    }
    if (variables.empty()) throw ParseError("algebra declares no variables");
    return MonomialAlgebraPresentation(std::move(variables), std::move(forbidden), std::move(name));
}

DimSeries hilbert_dims(const MonomialAlgebraPresentation& a, int max_degree) {
    if (max_degree < 0) throw InvalidArgumentError("max degree must be nonnegative");
    detail::AhoCorasick ac(a.num_variables());
    for (const auto& w : a.forbidden()) ac.add(w);
    ac.build();
    std::vector<BigInt> values(max_degree + 1, 0);
    std::vector<BigInt> counts(ac.states(), 0), next(ac.states(), 0);
    counts[0] = 1;
    values[0] = 1;
    for (int n = 1; n <= max_degree; ++n) {
        std::fill(next.begin(), next.end(), 0);
        for (int s = 0; s < ac.states(); ++s) {
            if (sgn(counts[s]) == 0) continue;
            for (int x = 0; x < a.num_variables(); ++x) {
                int t = ac.step(s, x);
                if (!ac.matched(t)) next[t] += counts[s];
            }
        }
        counts.swap(next);
        for (const auto& c : counts) values[n] += c;
    }
    return make_series(std::move(values), IndexKind::degree);
}

DimSeries hilbert_dims_brute(const MonomialAlgebraPresentation& a, int max_degree) {
    if (max_degree < 0) throw InvalidArgumentError("max degree must be nonnegative");
    auto has_factor = [&](const AlgebraWord& w) {
        for (const auto& f : a.forbidden())
            if (std::search(w.begin(), w.end(), f.begin(), f.end()) != w.end()) return true;
        return false;
    };
    std::vector<BigInt> values(max_degree + 1, 0);
    std::vector<AlgebraWord> level{{}};
    values[0] = 1;
    for (int n = 1; n <= max_degree; ++n) {
        std::vector<AlgebraWord> grown;
        for (const auto& w : level) {
            for (int x = 0; x < a.num_variables(); ++x) {
                AlgebraWord v = w;
                v.push_back(x);
                if (!has_factor(v)) grown.push_back(std::move(v));
            }
        }
        level = std::move(grown);
        values[n] = static_cast<unsigned long>(level.size());
    }
    return make_series(std::move(values), IndexKind::degree);
}

namespace {

Rational warfield_exponent(const Rational& r) {
    if (r <= 2 || r >= 3) throw InvalidArgumentError("warfield parameter r must satisfy 2 < r < 3");
    return (r - 1) / 2;
}

}  // namespace

DimSeries warfield_dims(const Rational& r, int max_degree) {
    const Rational q = warfield_exponent(r);
    if (max_degree < 0) throw InvalidArgumentError("max degree must be nonnegative");
    std::vector<BigInt> values(max_degree + 1, 0);
    values[0] = 1;
    if (max_degree >= 1) values[1] = 2;
    for (int n = 2; n <= max_degree; ++n) {
        BigInt f = floor_rational_power(BigInt(n), q);
        values[n] = 1 + n + (f - 1) * f / 2;
    }
    return make_series(std::move(values), IndexKind::degree);
}

MonomialAlgebraPresentation warfield_model(const Rational& r, int max_degree) {
    const Rational q = warfield_exponent(r);
    std::vector<AlgebraWord> forbidden;
    const int x1 = 0, x2 = 1;
    // monomials of degree >= 3 in x2 are generated by x2 x1^a x2 x1^b x2
    for (int a = 0; a + 3 <= max_degree; ++a)
        for (int b = 0; a + b + 3 <= max_degree; ++b)
            forbidden.push_back(concat({{x2}, power(x1, a), {x2}, power(x1, b), {x2}}));
    for (int n = 2; n <= max_degree; ++n) {
        const long threshold = n - floor_rational_power(BigInt(n), q).get_si();
        for (int j = 0; j <= n - 2 && j < threshold; ++j)
            for (int i = 0; i <= n - 2 - j; ++i) {
                int l = n - 2 - j - i;
                forbidden.push_back(concat({power(x1, i), {x2}, power(x1, j), {x2}, power(x1, l)}));
            }
    }
    return MonomialAlgebraPresentation({"x1", "x2"}, std::move(forbidden), "warfield:" + r.get_str());
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> lambda_intervals(int count) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (int m = 0; m < count; ++m) {
        mpz_class lo, hi;
        mpz_ui_pow_ui(lo.get_mpz_t(), 2 * m + 1, 2 * m + 1);
        mpz_ui_pow_ui(hi.get_mpz_t(), 2 * m + 2, 2 * m + 2);
        if (!hi.fits_ulong_p() || hi.get_ui() >= (std::uint64_t(1) << 62)) break;
        out.emplace_back(lo.get_ui() + 1, hi.get_ui() + 1);
    }
    return out;
}

bool in_lambda(std::uint64_t n) {
    for (const auto& [lo, hi] : lambda_intervals(16)) {
        if (n < lo) return false;
        if (n <= hi) return true;
    }
    return false;
}

std::vector<std::uint8_t> example62_delta(std::size_t max_degree) {
    std::vector<std::uint8_t> delta(max_degree + 1, 1);
    for (const auto& [lo, hi] : lambda_intervals(16))
        for (std::uint64_t n = lo; n <= hi && n <= max_degree; ++n) delta[n] = 0;
    return delta;
}

DimSeries example62_dims(int max_degree) {
    if (max_degree < 0) throw InvalidArgumentError("max degree must be nonnegative");
    auto delta = example62_delta(static_cast<std::size_t>(max_degree));
    std::vector<BigInt> values(max_degree + 1, 0);
    values[0] = 1;
    if (max_degree >= 1) values[1] = 2;
    for (int n = 2; n <= max_degree; ++n) values[n] = 3 + delta[n];
    return make_series(std::move(values), IndexKind::degree);
}

MonomialAlgebraPresentation example62_model(int max_degree) {
    const int x1 = 0, x2 = 1;
    std::vector<AlgebraWord> forbidden;
    // (a) degree >= 3 in x2
    for (int a = 0; a + 3 <= max_degree; ++a)
        for (int b = 0; a + b + 3 <= max_degree; ++b)
            forbidden.push_back(concat({{x2}, power(x1, a), {x2}, power(x1, b), {x2}}));
    // (b) x1^i x2 x1^j with i > 0 and j > 0
    for (int i = 1; i + 2 <= max_degree; ++i)
        for (int j = 1; i + j + 1 <= max_degree; ++j)
            forbidden.push_back(concat({power(x1, i), {x2}, power(x1, j)}));
    // (c) x2 x1^i x2 for (2m+1)^(2m+1) - 1 <= i <= (2m+2)^(2m+2) - 1
    for (const auto& [lo, hi] : lambda_intervals(16)) {
        for (std::uint64_t i = lo - 2; i <= hi - 2 && i + 2 <= static_cast<std::uint64_t>(max_degree); ++i)
            forbidden.push_back(concat({{x2}, power(x1, i), {x2}}));
    }
    return MonomialAlgebraPresentation({"x1", "x2"}, std::move(forbidden), "example62");
}

DimSeries partition_dims(int max_degree) {
    if (max_degree < 0) throw InvalidArgumentError("max degree must be nonnegative");
    std::vector<BigInt> p(max_degree + 1, 0);
    p[0] = 1;
    for (int part = 1; part <= max_degree; ++part)
        for (int n = part; n <= max_degree; ++n) p[n] += p[n - part];
    return make_series(std::move(p), IndexKind::degree);
}

DimSeries floor_power_dims(const Rational& alpha, int max_index) {
    if (alpha <= 0) throw InvalidArgumentError("floor-power exponent must be positive");
    if (max_index < 0) throw InvalidArgumentError("max index must be nonnegative");
    std::vector<BigInt> values(max_index + 1, 0);
    if (max_index >= 1) values[1] = 1;
    BigInt previous = 1;  // floor(1^alpha)
    for (int n = 2; n <= max_index; ++n) {
        BigInt current = floor_rational_power(BigInt(n), alpha);
        values[n] = current - previous;
        previous = current;
    }
    return make_series(std::move(values), IndexKind::arity);
}

DimSeries polynomial_ring_dims(int d, int max_degree) {
    if (d < 1) throw InvalidArgumentError("polynomial ring needs d >= 1");
    if (max_degree < 0) throw InvalidArgumentError("max degree must be nonnegative");
    std::vector<BigInt> values(max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) mpz_bin_uiui(values[n].get_mpz_t(), n + d - 1, d - 1);
    return make_series(std::move(values), IndexKind::degree);
}

DimSeries free_algebra_dims(int d, int max_degree) {
    if (d < 1) throw InvalidArgumentError("free algebra needs d >= 1");
    if (max_degree < 0) throw InvalidArgumentError("max degree must be nonnegative");
    std::vector<BigInt> values(max_degree + 1);
    for (int n = 0; n <= max_degree; ++n) mpz_ui_pow_ui(values[n].get_mpz_t(), d, n);
    return make_series(std::move(values), IndexKind::degree);
}

DimSeries adjoin_polynomial_variables(const DimSeries& dims, int n) {
    if (n < 1) throw InvalidArgumentError("must adjoin at least one variable");
    std::vector<BigInt> values = dims.values;
    for (int k = 0; k < n; ++k)
        for (std::size_t i = 1; i < values.size(); ++i) values[i] += values[i - 1];
    return make_series(std::move(values), dims.index_kind, dims.exact);
}

ClosedFormSeries ClosedFormSeries::parse(std::string_view text) {
    auto colon = text.find(':');
    std::string head(text.substr(0, colon));
    std::string arg = colon == std::string_view::npos ? std::string{} : std::string(text.substr(colon + 1));
    auto need_arg = [&]() {
        if (arg.empty()) throw InvalidArgumentError("'" + head + "' needs a parameter, e.g. " + head + ":2");
        return parse_decimal_rational(arg);
    };
    auto need_int = [&]() {
        Rational v = need_arg();
        if (v.get_den() != 1 || v < 1) throw InvalidArgumentError("'" + head + "' needs a positive integer");
        return v;
    };
    ClosedFormSeries s;
    if (head == "polyring") {
        s = {Kind::polynomial_ring, need_int()};
    } else if (head == "free") {
        s = {Kind::free_algebra, need_int()};
    } else if (head == "warfield") {
        s = {Kind::warfield, need_arg()};
        warfield_exponent(s.parameter);
    } else if (head == "floorpow") {
        s = {Kind::floor_power, need_arg()};
        if (s.parameter <= 0) throw InvalidArgumentError("floorpow exponent must be positive");
    } else if (head == "example62" && arg.empty()) {
        s = {Kind::example62, 0};
    } else if (head == "partition" && arg.empty()) {
        s = {Kind::partition, 0};
    } else {
        throw InvalidArgumentError("unknown algebra series '" + std::string(text) + "'");
    }
    return s;
}

std::string ClosedFormSeries::name() const {
    switch (kind) {
        case Kind::polynomial_ring: return "polyring:" + parameter.get_str();
        case Kind::free_algebra: return "free:" + parameter.get_str();
        case Kind::warfield: return "warfield:" + parameter.get_str();
        case Kind::example62: return "example62";
        case Kind::partition: return "partition";
        case Kind::floor_power: return "floorpow:" + parameter.get_str();
    }
    return "?";
}

DimSeries ClosedFormSeries::dims(int max_index) const {
    switch (kind) {
        case Kind::polynomial_ring: return polynomial_ring_dims(static_cast<int>(parameter.get_num().get_si()), max_index);
        case Kind::free_algebra: return free_algebra_dims(static_cast<int>(parameter.get_num().get_si()), max_index);
        case Kind::warfield: return warfield_dims(parameter, max_index);
        case Kind::example62: return example62_dims(max_index);
        case Kind::partition: return partition_dims(max_index);
        case Kind::floor_power: return floor_power_dims(parameter, max_index);
    }
    throw InvalidArgumentError("unknown closed-form kind");
}

}  // namespace oplab
