#include <catch2/catch_amalgamated.hpp>

#include "oracles.hpp"

using namespace oplab;

namespace {

AlphabetPtr two_binary() { return make_alphabet({{"a", 2}, {"b", 2}}); }

BranchWord periodic_word(std::mt19937_64& rng, const AlphabetPtr& A, int period, int length) {
    std::vector<BranchLetter> base(period);
    for (auto& l : base) {
        l.generator = std::uniform_int_distribution<Label>(0, static_cast<Label>(A->size() - 1))(rng);
        l.index = std::uniform_int_distribution<int>(1, A->arity(l.generator))(rng);
    }
    std::vector<BranchLetter> letters;
    for (int i = 0; i < length; ++i) letters.push_back(base[i % period]);
    return BranchWord(A, letters);
}

}  // namespace

TEST_CASE("branch words and trees", "[branch]") {
    auto A = make_alphabet({{"a", 1}, {"b", 2}, {"c", 2}});
    auto T1 = parse_monomial("a(b(*,*))", A);
    auto w = to_branch_word(T1);
    CHECK(w.to_string() == "a:1 b");
    CHECK(from_branch_word(w) == T1);
    CHECK(from_branch_word(to_branch_word(parse_monomial("b(c(*,*),*)", A))).to_string() == "b(c(*,*),*)");
    CHECK_THROWS_AS(to_branch_word(parse_monomial("b(c(*,*),b(*,*))", A)), NotSingleBranchedError);
    CHECK(parse_branch_word("b:2 c", A) == to_branch_word(parse_monomial("b(*,c(*,*))", A)));
    CHECK_THROWS_AS(parse_branch_word("a:2 b", A), LeafIndexError);
}

TEST_CASE("the worked period example", "[branch]") {
    auto A = two_binary();
    auto w = parse_branch_word("a:1 a:1 b:1 a:1 a:1 b:1 a:1 a", A);
    CHECK(minimal_period(w) == 3);
    CHECK(is_local_period(w, 7));
    CHECK_FALSE(is_period(w, 7));
    CHECK(is_period(w, 6));
    CHECK(is_period(w, 3));

    // positions run from -m to l, the original word sitting at 1..8
    auto right = extend(w, -1, 9);
    CHECK(right.size() == w.size() + 1);
    CHECK(right.to_string() == "a:1 a:1 b:1 a:1 a:1 b:1 a:1 a:1 b");
    auto e = extend(w, 0, 9);
    CHECK(e.size() == w.size() + 2);
    CHECK(minimal_period(e) == 3);
    auto big = extend(w, 3, static_cast<int>(w.size()) + 3);
    CHECK(big.size() == w.size() + 7);
    CHECK(minimal_period(big) == minimal_period(w));

    CHECK_THROWS_AS(is_local_period(w, 0), InvalidArgumentError);
    CHECK_THROWS_AS(is_local_period(w, 8), InvalidArgumentError);
    auto aperiodic = parse_branch_word("a:1 b", A);
    CHECK_FALSE(minimal_period(aperiodic));
    CHECK_THROWS_AS(is_period(aperiodic, 1), AperiodicError);
}

TEST_CASE("periods are exactly the multiples of the minimal period", "[branch][property]") {
    std::mt19937_64 rng(43);
    auto A = make_alphabet({{"a", 2}, {"b", 3}});
    auto pick = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
    for (int trial = 0; trial < 1000; ++trial) {
        int p = pick(1, 5);
        int n = pick(p + 1, 4 * p + 6);
        auto w = periodic_word(rng, A, p, n);
        auto m = minimal_period(w);
        REQUIRE(m);
        if (n >= 2 * p) REQUIRE(p % *m == 0);
        int l = pick(1, n - 1);
        REQUIRE(is_period(w, l) == (l % *m == 0));
        // extensions are factors with the same minimal period
        auto e = extend(w, pick(-1, 4), n + pick(0, 4));
        REQUIRE(minimal_period(e) == m);
    }
}

TEST_CASE("equal windows of a periodic word sit a period multiple apart", "[branch][property]") {
    std::mt19937_64 rng(8);
    auto A = make_alphabet({{"a", 2}, {"b", 2}, {"c", 2}});
    for (int trial = 0; trial < 300; ++trial) {
        int p = std::uniform_int_distribution<int>(2, 5)(rng);
        auto w = periodic_word(rng, A, p, 4 * p + 3);
        auto m = *minimal_period(w);
        const auto& L = w.letters();
        for (std::size_t i = 0; i + m < L.size(); ++i)
            for (std::size_t j = i + 1; j + m <= L.size() && i + m <= L.size(); ++j) {
                bool equal = std::equal(L.begin() + i, L.begin() + i + m, L.begin() + j);
                if (equal) REQUIRE((j - i) % m == 0);
            }
    }
}

TEST_CASE("the one-turn avoidance system", "[branch]") {
    auto counts = closed_set_counts(at_most_one_turn_system(50), 50);
    for (int h = 1; h <= 50; ++h) REQUIRE(counts[h] == h);
    CHECK(closed_set_counts_brute(at_most_one_turn_system(10), 10) == closed_set_counts(at_most_one_turn_system(10), 10));
}

TEST_CASE("avoidance counting agrees with brute force", "[branch][property]") {
    std::mt19937_64 rng(77);
    auto A = make_alphabet({{"a", 2}, {"b", 2}});
    for (int trial = 0; trial < 40; ++trial) {
        AvoidanceSystem s{A, {}};
        int k = std::uniform_int_distribution<int>(1, 4)(rng);
        for (int i = 0; i < k; ++i)
            s.forbidden.push_back(periodic_word(rng, A, std::uniform_int_distribution<int>(1, 3)(rng),
                                                std::uniform_int_distribution<int>(2, 4)(rng)));
        REQUIRE(closed_set_counts(s, 9) == closed_set_counts_brute(s, 9));
    }
}
