#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace oplab;

namespace {

AlphabetPtr fig3() { return make_alphabet({{"a", 1}, {"b", 2}, {"c", 2}}); }

PathSequence paths(const AlphabetPtr& alphabet, std::initializer_list<std::string> words) {
    PathSequence out;
    for (const auto& w : words) {
        Word word;
        for (char ch : w) word.push_back(*alphabet->find(std::string(1, ch)));
        out.push_back(word);
    }
    return out;
}

}  // namespace

TEST_CASE("figure 3 path sequences", "[tree]") {
    auto A = fig3();
    auto T1 = parse_monomial("a(b(*,*))", A);
    auto T2 = parse_monomial("b(*,c(*,*))", A);
    auto T3 = parse_monomial("b(c(*,*),*)", A);
    auto T4 = parse_monomial("b(c(*,*),b(*,*))", A);
    CHECK(to_path_sequence(T1) == paths(A, {"ab", "ab"}));
    CHECK(to_path_sequence(T2) == paths(A, {"b", "bc", "bc"}));
    CHECK(to_path_sequence(T3) == paths(A, {"bc", "bc", "b"}));
    CHECK(to_path_sequence(T4) == paths(A, {"bc", "bc", "bb", "bb"}));
    CHECK(path_to_string(*A, to_path_sequence(T4)) == "(bc,bc,bb,bb)");

    CHECK(from_path_sequence(paths(A, {"ab", "ab"}), A) == T1);
    CHECK(from_path_sequence(paths(A, {"b", "bc", "bc"}), A) == T2);
    CHECK_THROWS_AS(from_path_sequence(paths(A, {"ab", "ab", "ab"}), A), MalformedPathError);

    auto trivial = TreeMonomial::trivial(A);
    CHECK(to_path_sequence(trivial) == PathSequence{Word{}});
    CHECK(trivial.height() == 0);
    CHECK(trivial.to_string() == "1");
}

TEST_CASE("grafting the figure 3 monomials", "[tree]") {
    auto A = fig3();
    auto T1 = parse_monomial("a(b(*,*))", A);
    auto T2 = parse_monomial("b(*,c(*,*))", A);
    auto T = compose(T1, 1, T2);
    CHECK(to_path_sequence(T) == paths(A, {"abb", "abbc", "abbc", "ab"}));
    CHECK(T.arity() == 4);
    CHECK(T.weight() == 4);

    CHECK_THROWS_AS(compose(T1, 3, T2), LeafIndexError);
    CHECK_THROWS_AS(compose(T1, 0, T2), LeafIndexError);
    auto other = make_alphabet({{"a", 1}, {"b", 2}});
    CHECK_THROWS_AS(compose(T1, 1, TreeMonomial::corolla(other, 0)), AlphabetMismatchError);
}

TEST_CASE("grafting matches the path-sequence oracle", "[tree][property]") {
    std::mt19937_64 rng(11);
    auto A = make_alphabet({{"u", 1}, {"b", 2}, {"t", 3}});
    for (int trial = 0; trial < 3000; ++trial) {
        auto S = oracle::random_monomial(rng, A, std::uniform_int_distribution<int>(0, 5)(rng));
        auto U = oracle::random_monomial(rng, A, std::uniform_int_distribution<int>(0, 5)(rng));
        int i = std::uniform_int_distribution<int>(1, S.arity())(rng);
        auto C = compose(S, i, U);
        REQUIRE(to_path_sequence(C) == oracle::compose_paths(to_path_sequence(S), i, to_path_sequence(U)));
        REQUIRE(C.arity() == S.arity() + U.arity() - 1);
        REQUIRE(C.weight() == S.weight() + U.weight());
    }
}

TEST_CASE("operad axioms on random triples", "[tree][property]") {
    std::mt19937_64 rng(2024);
    auto A = make_alphabet({{"u", 1}, {"b", 2}, {"t", 3}});
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int trial = 0; trial < 2000; ++trial) {
        auto T = oracle::random_monomial(rng, A, pick(0, 4));
        auto U = oracle::random_monomial(rng, A, pick(0, 4));
        auto V = oracle::random_monomial(rng, A, pick(0, 4));
        const int n = T.arity(), m = U.arity();
        const int i = pick(1, n);
        const int j = pick(i, i + m - 1);
        REQUIRE(compose(compose(T, i, U), j, V) == compose(T, i, compose(U, j - i + 1, V)));
        if (n >= 2) {
            int a = pick(1, n - 1);
            int b = pick(a + 1, n);
            // parallel: graft at a and b in either order
            REQUIRE(compose(compose(T, a, U), b + m - 1, V) == compose(compose(T, b, V), a, U));
        }
        auto unit = TreeMonomial::trivial(A);
        REQUIRE(compose(unit, 1, T) == T);
        REQUIRE(compose(T, i, unit) == T);
    }
}

TEST_CASE("path sequences round trip exhaustively to weight 6", "[tree][property]") {
    auto A = make_alphabet({{"u", 1}, {"b", 2}, {"c", 2}});
    std::size_t total = 0;
    for (int w = 0; w <= 6; ++w)
        for (const auto& t : oracle::free_monomials_of_weight(A, w)) {
            REQUIRE(from_path_sequence(to_path_sequence(t), A) == t);
            REQUIRE(parse_monomial(t.to_string(), A) == t);
            ++total;
        }
    CHECK(total > 10000);
}

TEST_CASE("divisibility examples", "[tree]") {
    auto B = make_alphabet({{"a", 2}});
    auto T = parse_monomial("a(a(*,*),a(*,*))", B);
    CHECK(divides(T, T));
    // (a o_2 a) o_1 a: leaf positions of a divisor constrain nothing, so both
    // two-vertex combs divide it
    auto X = compose(compose(TreeMonomial::corolla(B, 0), 2, TreeMonomial::corolla(B, 0)), 1,
                     TreeMonomial::corolla(B, 0));
    CHECK(divides(parse_monomial("a(*,a(*,*))", B), X));
    CHECK(divides(parse_monomial("a(a(*,*),*)", B), X));
    CHECK_FALSE(divides(parse_monomial("a(a(a(*,*),*),*)", B), X));

    auto A = fig3();
    auto T14 = compose(parse_monomial("a(b(*,*))", A), 1, parse_monomial("b(*,c(*,*))", A));
    CHECK_FALSE(divides(parse_monomial("b(b(*,*),b(*,*))", A), T14));
    CHECK_THROWS_AS(divides(TreeMonomial::trivial(A), T14), DegenerateDivisorError);
}

TEST_CASE("divisibility agrees with the pruning oracle exhaustively", "[tree][property]") {
    auto A = make_alphabet({{"u", 1}, {"b", 2}});
    std::vector<TreeMonomial> divisors, targets;
    for (int w = 1; w <= 3; ++w)
        for (auto& t : oracle::free_monomials_of_weight(A, w)) divisors.push_back(t);
    for (int w = 1; w <= 5; ++w)
        for (auto& t : oracle::free_monomials_of_weight(A, w)) targets.push_back(t);
    for (const auto& t : targets) {
        auto subs = oracle::all_submonomials(t);
        for (const auto& d : divisors) REQUIRE(divides(d, t) == (subs.count(d) > 0));
    }
}

TEST_CASE("submonomials are distinct", "[tree]") {
    auto B = make_alphabet({{"a", 2}});
    auto comb = parse_monomial("a(a(a(*,*),*),*)", B);
    auto two = submonomials(comb, 2);
    REQUIRE(two.size() == 1);
    CHECK(two.begin()->to_string() == "a(a(*,*),*)");
    CHECK(submonomials(comb, 3) == std::set<TreeMonomial>{comb});

    auto A = fig3();
    auto T4 = parse_monomial("b(c(*,*),b(*,*))", A);
    std::set<std::string> ones;
    for (const auto& s : submonomials(T4, 1)) ones.insert(s.to_string());
    CHECK(ones == std::set<std::string>{"b(*,*)", "c(*,*)"});
    CHECK(submonomials(T4) == oracle::all_submonomials(T4));
}

TEST_CASE("literal grammar", "[tree]") {
    auto A = fig3();
    CHECK(parse_monomial(" a ( b ( * , * ) ) ", A).to_string() == "a(b(*,*))");
    CHECK(parse_monomial("b(b(b(*,*),*),*)", A).height() == 3);
    CHECK_THROWS_AS(parse_monomial("b(*)", A), ParseError);
    CHECK_THROWS_AS(parse_monomial("z(*,*)", A), ParseError);
    CHECK_THROWS_AS(parse_monomial("b(*,*", A), ParseError);
    CHECK_THROWS_AS(make_alphabet({{"x", 0}}), InvalidArgumentError);
}
