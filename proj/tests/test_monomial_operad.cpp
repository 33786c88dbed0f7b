#include <catch2/catch_amalgamated.hpp>

#include "oplab/presets.hpp"
#include "oplab/sweep.hpp"
#include "oracles.hpp"

using namespace oplab;

namespace {

std::vector<long> to_longs(const DimSeries& d) {
    std::vector<long> out;
    for (const auto& v : d.values) out.push_back(v.get_si());
    return out;
}

MonomialOperadPresentation binary(std::vector<std::string> relations) {
    auto A = make_alphabet({{"a", 2}});
    std::vector<TreeMonomial> r;
    for (const auto& s : relations) r.push_back(parse_monomial(s, A));
    return MonomialOperadPresentation(A, r);
}

}  // namespace

TEST_CASE("presentation text format", "[operad]") {
    auto p = parse_presentation(
        "# fibonacci\n"
        "name fib\n"
        "generator a 2\n"
        "relation a(a(*,*),a(*,*))\n"
        "relation a(a(a(*,*),*),*)\n"
        "relation a(a(a(*,*),a(*,*)),*)\n");
    CHECK(p.name() == "fib");
    CHECK(p.relations().size() == 2);  // the third is divisible by the first
    CHECK(p.max_relation_height() == 3);
    auto q = parse_presentation(p.to_text());
    CHECK(q.to_text() == p.to_text());
    CHECK(q.fingerprint() == p.fingerprint());
    CHECK(parse_presentation(p.to_text(), "other").fingerprint() == p.fingerprint());
    CHECK(binary_chain_presentation(2).fingerprint() == p.fingerprint());

    CHECK_THROWS_AS(parse_presentation("generator a 2\nrelation b(*,*)\n"), ParseError);
    CHECK_THROWS_AS(parse_presentation("generator a 2\nfrobnicate\n"), ParseError);
    try {
        parse_presentation("generator a 2\n\nrelation a(*)\n");
        FAIL("expected a parse error");
    } catch (const ParseError& e) {
        CHECK(e.line() == 3);
    }
    auto A = make_alphabet({{"a", 2}});
    CHECK_THROWS_AS(MonomialOperadPresentation(A, {TreeMonomial::trivial(A)}), DegenerateDivisorError);
    auto other = make_alphabet({{"b", 2}});
    CHECK_THROWS_AS(MonomialOperadPresentation(A, {TreeMonomial::corolla(other, 0)}), AlphabetMismatchError);
}

TEST_CASE("normal forms of the Fibonacci presentation", "[operad]") {
    auto p = binary_chain_presentation(2);
    auto A = p.alphabet();
    CHECK_FALSE(is_normal_form(p, parse_monomial("a(a(a(*,*),*),*)", A)));
    CHECK(is_normal_form(p, parse_monomial("a(a(*,a(*,*)),*)", A)));
    auto free_op = MonomialOperadPresentation(A, {});
    CHECK(is_normal_form(free_op, parse_monomial("a(a(a(*,*),*),*)", A)));
}

TEST_CASE("enumerate_irr streams by weight", "[operad]") {
    auto A = make_alphabet({{"a", 2}});
    auto free_op = MonomialOperadPresentation(A, {});
    CHECK(enumerate_irr(free_op, 3).size() == 9);

    std::vector<int> by_weight(5, 0);
    for (const auto& t : enumerate_irr(binary_chain_presentation(2), 4)) ++by_weight[t.weight()];
    CHECK(by_weight == std::vector<int>{1, 1, 2, 3, 5});

    auto both = binary({"a(a(*,*),*)", "a(*,a(*,*))"});
    CHECK(enumerate_irr(both, 6).size() == 2);

    IrrEnumerator it(free_op, 4);
    auto ord = TreeOrder::deglex(*A);
    std::optional<TreeMonomial> prev;
    std::size_t n = 0;
    while (auto t = it.next()) {
        if (prev && prev->weight() == t->weight()) REQUIRE(ord.less(*prev, *t));
        if (prev) REQUIRE(prev->weight() <= t->weight());
        prev = t;
        ++n;
    }
    CHECK(n == 1 + 1 + 2 + 5 + 14);
}

TEST_CASE("binary chain dimension sequences", "[operad]") {
    auto one = dim_by_arity(binary_chain_presentation(1), 20);
    auto fib = dim_by_arity(binary_chain_presentation(2), 25);
    auto three = dim_by_arity(binary_chain_presentation(3), 30);
    CHECK(one[1] == 1);
    for (int n = 2; n <= 20; ++n) CHECK(one[n] == BigInt(1) << (n - 2));
    CHECK(fib.values == oracle::fibonacci(25));
    for (int n = 0; n <= 30; ++n) CHECK(three[n] == (n == 0 ? 0 : n <= 2 ? 1 : 2));
    CHECK(dim_by_arity(binary_chain_presentation(2), 14, Engine::brute) ==
          dim_by_arity(binary_chain_presentation(2), 14, Engine::profile_dp));
}

TEST_CASE("dims match the free-tree oracle", "[operad][property]") {
    std::mt19937_64 rng(99);
    auto A = make_alphabet({{"b", 2}, {"t", 3}});
    std::vector<TreeMonomial> pool;
    for (int w = 2; w <= 3; ++w)
        for (auto& t : oracle::free_monomials_of_weight(A, w)) pool.push_back(t);
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<TreeMonomial> rel;
        for (const auto& t : pool)
            if (std::uniform_int_distribution<int>(0, 9)(rng) == 0) rel.push_back(t);
        MonomialOperadPresentation p(A, rel);
        auto expected = oracle::normal_forms_by_arity(p, 8);
        REQUIRE(to_longs(dim_by_arity(p, 8, Engine::profile_dp)) == expected);
        REQUIRE(to_longs(dim_by_arity(p, 8, Engine::brute)) == expected);
    }
}

TEST_CASE("dims by weight", "[operad]") {
    auto A = make_alphabet({{"a", 2}});
    auto free_op = MonomialOperadPresentation(A, {});
    CHECK(to_longs(dim_by_weight(free_op, 6)) == std::vector<long>{1, 1, 2, 5, 14, 42, 132});
    CHECK(to_longs(dim_by_weight(binary_chain_presentation(2), 6)) == std::vector<long>{1, 1, 2, 3, 5, 8, 13});
    CHECK(dim_by_weight(binary_chain_presentation(3), 12, Engine::brute) ==
          dim_by_weight(binary_chain_presentation(3), 12));
    auto U = make_alphabet({{"u", 1}, {"b", 2}});
    auto p = parse_presentation("generator u 1\ngenerator b 2\nrelation u(u(*))\n");
    CHECK(dim_by_weight(p, 7, Engine::brute) == dim_by_weight(p, 7));
    CHECK(dim_by_weight(p, 0)[0] == 1);
    CHECK(dim_by_weight(p, 1)[1] == 2);
}

TEST_CASE("unary generators need a weight cap", "[operad]") {
    auto p = parse_presentation("generator u 1\ngenerator b 2\nrelation u(u(*))\n");
    CHECK_THROWS_AS(dim_by_arity(p, 5), CompletenessError);
    auto capped = dim_by_arity(p, 5, Engine::profile_dp, 6);
    CHECK_FALSE(capped.exact);
    CHECK(capped == dim_by_arity(p, 5, Engine::brute, 6));
    CHECK(dim_by_arity(binary_chain_presentation(2), 8).exact);
}

TEST_CASE("normal forms are closed under submonomials", "[operad][property]") {
    auto p = binary({"a(a(*,*),a(*,*))", "a(*,a(a(*,*),*))"});
    for (const auto& t : enumerate_irr(p, 5)) {
        if (t.is_trivial()) continue;
        for (const auto& s : submonomials(t)) REQUIRE(is_normal_form(p, s));
    }
}

TEST_CASE("adding relations never increases dims", "[operad][property]") {
    std::mt19937_64 rng(3);
    auto A = make_alphabet({{"a", 2}});
    std::vector<TreeMonomial> pool;
    for (int w = 2; w <= 3; ++w)
        for (auto& t : oracle::free_monomials_of_weight(A, w)) pool.push_back(t);
    for (int trial = 0; trial < 30; ++trial) {
        std::vector<TreeMonomial> small, big;
        for (const auto& t : pool) {
            int r = std::uniform_int_distribution<int>(0, 3)(rng);
            if (r == 0) small.push_back(t);
            if (r <= 1) big.push_back(t);
        }
        auto a = dim_by_arity(MonomialOperadPresentation(A, small), 14);
        auto b = dim_by_arity(MonomialOperadPresentation(A, big), 14);
        for (int n = 0; n <= 14; ++n) REQUIRE(b[n] <= a[n]);
    }
}

TEST_CASE("growth dichotomy report", "[operad]") {
    auto r = gap_dichotomy_check(binary_chain_presentation(3), 30);
    REQUIRE(r.criterion_d);
    CHECK(*r.criterion_d == 5);
    CHECK(r.growth_class == GrowthClass::linear);
    REQUIRE(r.affine);
    CHECK_FALSE(r.affine->first_violation);

    auto A = make_alphabet({{"a", 2}});
    auto free_r = gap_dichotomy_check(MonomialOperadPresentation(A, {}), 20);
    CHECK_FALSE(free_r.criterion_d);
    CHECK(free_r.growth_class == GrowthClass::superlinear_witness);

    auto bounded = gap_dichotomy_check(binary({"a(a(*,*),*)", "a(*,a(*,*))"}), 10);
    CHECK(bounded.criterion_d == 3);
    CHECK(bounded.growth_class == GrowthClass::bounded);
    CHECK(to_longs(bounded.weight_counts)[2] == 0);
    CHECK_THROWS_AS(gap_dichotomy_check(binary({}), 5), InvalidArgumentError);
}

TEST_CASE("small sweep", "[operad][sweep]") {
    auto r = run_sweep(2, 20, 1);
    REQUIRE(r.rows.size() == 4);
    CHECK(r.candidates_by_weight[2] == 2);
    CHECK(r.dichotomy_holds());
    CHECK(r.linear_rows_have_criterion());
    CHECK(r.rows[0].growth_class == GrowthClass::superlinear_witness);
    CHECK(r.rows[3].growth_class == GrowthClass::bounded);

    auto three = run_sweep(3, 16, 1);
    CHECK(three.candidates_by_weight[3] == 5);
    CHECK(three.rows.size() == 128);
    auto parallel = run_sweep(3, 16, 3);
    for (std::size_t i = 0; i < three.rows.size(); ++i) {
        REQUIRE(three.rows[i].relations == parallel.rows[i].relations);
        REQUIRE(three.rows[i].tail_exponent == parallel.rows[i].tail_exponent);
        REQUIRE(three.rows[i].criterion_d == parallel.rows[i].criterion_d);
    }
    CHECK_THROWS_AS(run_sweep(4, 20, 1), InvalidArgumentError);
}
