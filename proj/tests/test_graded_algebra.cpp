#include <catch2/catch_amalgamated.hpp>

#include "oplab/presets.hpp"
#include "oracles.hpp"

using namespace oplab;

namespace {

std::vector<long> to_longs(const DimSeries& d) {
    std::vector<long> out;
    for (const auto& v : d.values) out.push_back(v.get_si());
    return out;
}

}  // namespace

TEST_CASE("small monomial algebras", "[algebra]") {
    CHECK(to_longs(hilbert_dims(fibonacci_algebra(), 8)) == std::vector<long>{1, 2, 3, 5, 8, 13, 21, 34, 55});
    CHECK(to_longs(hilbert_dims(bounded_algebra(), 6)) == std::vector<long>{1, 2, 2, 2, 2, 2, 2});
    MonomialAlgebraPresentation free2({"x", "y"}, {});
    auto f = hilbert_dims(free2, 20);
    for (int n = 0; n <= 20; ++n) CHECK(f[n] == BigInt(1) << n);
    CHECK(f == free_algebra_dims(2, 20));
}

TEST_CASE("algebra text format", "[algebra]") {
    auto a = parse_algebra("# comment\nvar x1\nvar x2\nforbid x1x1\nforbid x1 x1 x2\n", "fib");
    CHECK(a.forbidden().size() == 1);
    CHECK(a.forbidden() == fibonacci_algebra().forbidden());
    CHECK(a.variables() == fibonacci_algebra().variables());
    CHECK(parse_algebra(a.to_text()).forbidden() == a.forbidden());
    CHECK_THROWS_AS(parse_algebra("var x\nforbid y\n"), ParseError);
    CHECK_THROWS_AS(parse_algebra("var x\nforbid x\n"), ParseError);
    CHECK_THROWS_AS(MonomialAlgebraPresentation({"x"}, {{0}}), InvalidArgumentError);
}

TEST_CASE("automaton counts match word filtering", "[algebra][property]") {
    std::mt19937_64 rng(17);
    for (int trial = 0; trial < 60; ++trial) {
        int d = std::uniform_int_distribution<int>(1, 3)(rng);
        int k = std::uniform_int_distribution<int>(0, 4)(rng);
        std::vector<AlgebraWord> forbidden;
        for (int i = 0; i < k; ++i) {
            AlgebraWord w(std::uniform_int_distribution<int>(2, 4)(rng));
            for (auto& x : w) x = std::uniform_int_distribution<int>(0, d - 1)(rng);
            forbidden.push_back(w);
        }
        std::vector<std::string> vars;
        for (int i = 0; i < d; ++i) vars.push_back("x" + std::to_string(i + 1));
        MonomialAlgebraPresentation a(vars, forbidden);
        auto expected = oracle::hilbert_by_words(d, forbidden, d == 3 ? 9 : 12);
        REQUIRE(to_longs(hilbert_dims(a, static_cast<int>(expected.size()) - 1)) == expected);
        REQUIRE(hilbert_dims_brute(a, 8) == hilbert_dims(a, 8));
    }
}

TEST_CASE("warfield-type algebra", "[algebra]") {
    Rational r(5, 2);
    auto w = warfield_dims(r, 10000);
    CHECK(w[0] == 1);
    CHECK(w[1] == 2);
    CHECK(w[4] == 6);
    for (int n = 1; n <= 10000; ++n) REQUIRE(w[n] > w[n - 1]);
    CHECK(hilbert_dims(warfield_model(r, 40), 40) == warfield_dims(r, 40));
    CHECK(hilbert_dims(warfield_model(Rational(21, 10), 30), 30) == warfield_dims(Rational(21, 10), 30));
    CHECK_THROWS_AS(warfield_dims(Rational(3), 5), InvalidArgumentError);
    CHECK_THROWS_AS(warfield_dims(Rational(2), 5), InvalidArgumentError);
}

TEST_CASE("gapped algebra", "[algebra]") {
    auto d = example62_dims(60);
    CHECK(d[0] == 1);
    CHECK(d[1] == 2);
    CHECK(d[2] == 3);
    for (int n = 2; n <= 5; ++n) CHECK(d[n] == 3);
    for (int n = 6; n <= 27; ++n) CHECK(d[n] == 4);
    CHECK(d[28] == 3);
    CHECK(in_lambda(257));
    CHECK_FALSE(in_lambda(258));
    auto iv = lambda_intervals(3);
    CHECK(iv[1] == std::pair<std::uint64_t, std::uint64_t>{28, 257});
    CHECK(iv[2] == std::pair<std::uint64_t, std::uint64_t>{3126, 46657});
    CHECK(hilbert_dims(example62_model(60), 60) == d);
}

TEST_CASE("partition numbers", "[algebra]") {
    auto p = partition_dims(400);
    CHECK(to_longs(partition_dims(6)) == std::vector<long>{1, 1, 2, 3, 5, 7, 11});
    CHECK(p.values == oracle::partitions(400));
    // Euler's pentagonal recurrence
    for (int n = 1; n <= 400; ++n) {
        BigInt s = 0;
        for (int k = 1;; ++k) {
            int g1 = k * (3 * k - 1) / 2, g2 = k * (3 * k + 1) / 2;
            if (g1 > n) break;
            BigInt term = p[n - g1];
            if (g2 <= n) term += p[n - g2];
            s += (k % 2 ? term : BigInt(-term));
        }
        REQUIRE(s == p[n]);
    }
}

TEST_CASE("floor-power and polynomial series", "[algebra]") {
    auto f = floor_power_dims(Rational(3, 2), 100);
    BigInt sum = 0;
    for (int n = 2; n <= 100; ++n) sum += f[n];
    CHECK(sum + 1 == 1000);  // floor(100^1.5) with the identity at arity 1
    CHECK(f[0] == 0);
    CHECK(f[1] == 1);
    auto one = floor_power_dims(Rational(1), 10);
    for (int n = 2; n <= 10; ++n) CHECK(one[n] == 1);

    auto unit = make_series({1, 0, 0, 0, 0, 0}, IndexKind::degree);
    CHECK(to_longs(adjoin_polynomial_variables(unit, 2)) == std::vector<long>{1, 2, 3, 4, 5, 6});
    auto w = warfield_dims(Rational(5, 2), 50);
    auto twice = adjoin_polynomial_variables(adjoin_polynomial_variables(w, 1), 1);
    CHECK(twice == adjoin_polynomial_variables(w, 2));
    auto prefix = adjoin_polynomial_variables(w, 1);
    BigInt acc = 0;
    for (int n = 0; n <= 50; ++n) CHECK(prefix[n] == (acc += w[n]));
    CHECK(polynomial_ring_dims(3, 10)[10] == 66);
    CHECK(adjoin_polynomial_variables(unit, 3) == polynomial_ring_dims(3, 5));
}

TEST_CASE("closed-form names", "[algebra]") {
    CHECK(ClosedFormSeries::parse("warfield:2.5").dims(20) == warfield_dims(Rational(5, 2), 20));
    CHECK(ClosedFormSeries::parse("polyring:2").name() == "polyring:2");
    CHECK(ClosedFormSeries::parse("partition").dims(10) == partition_dims(10));
    CHECK_THROWS_AS(ClosedFormSeries::parse("polyring:x"), InvalidArgumentError);
    CHECK_THROWS_AS(ClosedFormSeries::parse("nothing"), InvalidArgumentError);
}
