#include "sytpoly/poly.hpp"
#include "sytpoly/polytope.hpp"
#include "sytpoly/rng.hpp"
#include "sytpoly/verify.hpp"

#include "oracles.hpp"

#include <doctest.h>

using namespace sytpoly;
using namespace sytpoly_test;

namespace {

RationalPolynomial random_poly(SplitMix64& rng, int n) {
    RationalPolynomial p(n);
    const int terms = static_cast<int>(rng.next_in(0, 4));
    for (int t = 0; t < terms; ++t) {
        Exponent e(static_cast<size_t>(n));
        for (auto& ei : e) ei = static_cast<int>(rng.next_in(0, 3));
        const long num = rng.next_in(-6, 6);
        const long den = rng.next_in(1, 6);
        p.add_term(e, Rational(num) / Rational(den));
    }
    return p;
}

} // namespace

TEST_CASE("linear_form") {
    CHECK(linear_form(2, {1}).to_string() == "1*t1");
    CHECK(linear_form(2, {1, 2}) ==
          RationalPolynomial::monomial({1, 0}, 1) +
              RationalPolynomial::monomial({0, 1}, 1));
    CHECK(linear_form(4, {2, 3, 4}).term_count() == 3);
    CHECK_THROWS_AS(linear_form(3, {}), std::invalid_argument);
}

TEST_CASE("staircase_product") {
    CHECK(staircase_product(1) == RationalPolynomial::constant(1, 1));
    CHECK(staircase_product(2) == RationalPolynomial::monomial({1, 0}, 1));
    // t1 (t1+t2) t2 = t1^2 t2 + t1 t2^2
    RationalPolynomial expect(3);
    expect.add_term({2, 1, 0}, 1);
    expect.add_term({1, 2, 0}, 1);
    CHECK(staircase_product(3) == expect);
}

TEST_CASE("ssyt enumeration") {
    const auto single = enumerate_ssyt(Partition({1}, 1), 2);
    REQUIRE(single.size() == 2);
    CHECK(single[0].weight(2) == std::vector<int>{1, 0});
    CHECK(single[1].weight(2) == std::vector<int>{0, 1});

    const auto hook = enumerate_ssyt(Partition({2, 1}, 2), 2);
    REQUIRE(hook.size() == 2);
    CHECK(hook[0].weight(2) == std::vector<int>{2, 1});
    CHECK(hook[1].weight(2) == std::vector<int>{1, 2});

    CHECK(enumerate_ssyt(Partition({1, 1, 1}, 3), 2).empty());
}

TEST_CASE("ssyt enumeration matches the assignment-filter oracle") {
    CHECK(static_cast<long>(enumerate_ssyt(Partition({2, 1}, 2), 3).size()) ==
          brute_ssyt_count({2, 1}, 3));
    CHECK(static_cast<long>(enumerate_ssyt(Partition({2, 2}, 2), 3).size()) ==
          brute_ssyt_count({2, 2}, 3));
    CHECK(static_cast<long>(enumerate_ssyt(Partition({3, 1}, 2), 2).size()) ==
          brute_ssyt_count({3, 1}, 2));
    CHECK(static_cast<long>(enumerate_ssyt(Partition({3, 2, 1}, 3), 4).size()) ==
          brute_ssyt_count({3, 2, 1}, 4));
}

TEST_CASE("schur_substituted small shapes") {
    RationalPolynomial s1(2); // t1 + 2 t2
    s1.add_term({1, 0}, 1);
    s1.add_term({0, 1}, 2);
    CHECK(schur_substituted(Partition({1}, 2), 2) == s1);

    RationalPolynomial s11(2); // t1 t2 + t2^2
    s11.add_term({1, 1}, 1);
    s11.add_term({0, 2}, 1);
    CHECK(schur_substituted(Partition({1, 1}, 2), 2) == s11);

    RationalPolynomial s2(2); // t1^2 + 3 t1 t2 + 3 t2^2
    s2.add_term({2, 0}, 1);
    s2.add_term({1, 1}, 3);
    s2.add_term({0, 2}, 3);
    CHECK(schur_substituted(Partition({2}, 2), 2) == s2);

    CHECK_THROWS_AS(schur_substituted(Partition({1, 1, 1}, 3), 2),
                    std::invalid_argument);
}

TEST_CASE("rhs_polynomial worked examples") {
    const RationalPolynomial hook = rhs_polynomial(Partition({1, 0}, 2), 2);
    CHECK(hook.coefficient({2, 0}) == Rational(1) / Rational(2));
    CHECK(hook.coefficient({1, 1}) == 1);
    CHECK(hook.term_count() == 2);

    for (int m = 0; m <= 4; ++m) {
        const RationalPolynomial row = rhs_polynomial(Partition({m}, 1), 1);
        CHECK(row.term_count() == 1);
        CHECK(row.coefficient({m}) == Rational(1) / Rational(factorial(m)));
    }

    CHECK(rhs_polynomial(Partition({}, 2), 2) ==
          RationalPolynomial::monomial({1, 0}, 1));
}

TEST_CASE("lhs_polynomial worked examples") {
    std::map<GapVector, BigInt> t1{{{1, 0}, 1}};
    CHECK(lhs_polynomial(t1, 2) == RationalPolynomial::monomial({1, 0}, 1));

    std::map<GapVector, BigInt> t2{{{2, 0}, 1}, {{1, 1}, 1}};
    const RationalPolynomial lhs = lhs_polynomial(t2, 2);
    CHECK(lhs.coefficient({2, 0}) == Rational(1) / Rational(2));
    CHECK(lhs.coefficient({1, 1}) == 1);

    std::map<GapVector, BigInt> t3{{{3}, 1}};
    CHECK(lhs_polynomial(t3, 1).coefficient({3}) == Rational(1) / Rational(6));
}

TEST_CASE("identity on small shapes") {
    for (const auto& [n, parts] : std::vector<std::pair<int, std::vector<int>>>{
             {1, {}}, {1, {3}}, {2, {1, 0}}, {2, {2, 1}}, {3, {2, 1, 0}}}) {
        const Partition l(parts, n);
        const auto table = count_by_gaps(build_diagram(n, l));
        CHECK(lhs_polynomial(table, n) == rhs_polynomial(l, n));
    }
}

TEST_CASE("support") {
    const RationalPolynomial hook = rhs_polynomial(Partition({1, 0}, 2), 2);
    CHECK(hook.support() == std::set<Exponent>{{2, 0}, {1, 1}});
    CHECK(RationalPolynomial(2).support().empty());
    const RationalPolynomial sq = linear_form(2, {1, 2}) * linear_form(2, {1, 2});
    CHECK(sq.support() == std::set<Exponent>{{2, 0}, {1, 1}, {0, 2}});
}

TEST_CASE("polynomial json serialization") {
    const RationalPolynomial hook = rhs_polynomial(Partition({1, 0}, 2), 2);
    const auto j = poly_to_json(hook);
    REQUIRE(j.size() == 2);
    // graded-lex: same degree, (1,1) before (2,0)
    CHECK(j[0]["exp"] == std::vector<int>{1, 1});
    CHECK(j[0]["num"] == "1");
    CHECK(j[0]["den"] == "1");
    CHECK(j[1]["exp"] == std::vector<int>{2, 0});
    CHECK(j[1]["num"] == "1");
    CHECK(j[1]["den"] == "2");
    CHECK(poly_to_json(RationalPolynomial(2)).empty());
}

TEST_CASE("ring sanity on random polynomials") {
    SplitMix64 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        const int n = static_cast<int>(rng.next_in(1, 3));
        const RationalPolynomial a = random_poly(rng, n);
        const RationalPolynomial b = random_poly(rng, n);
        const RationalPolynomial c = random_poly(rng, n);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a * RationalPolynomial(n)).is_zero());
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("substituted schur is symmetric in the underlying x variables") {
    SplitMix64 rng(11);
    const int n = 3;
    const RationalPolynomial s = schur_substituted(Partition({2, 1, 0}, 3), n);
    const std::vector<std::vector<int>> perms = {
        {0, 1, 2}, {0, 2, 1}, {1, 0, 2}, {1, 2, 0}, {2, 0, 1}, {2, 1, 0}};
    for (int trial = 0; trial < 25; ++trial) {
        std::vector<Rational> x(3);
        for (auto& xi : x)
            xi = Rational(static_cast<long>(rng.next_in(-20, 20))) /
                 Rational(static_cast<long>(rng.next_in(1, 9)));
        auto t_of_x = [&](const std::vector<Rational>& xs) {
            std::vector<Rational> t(3);
            t[0] = xs[0] - xs[1];
            t[1] = xs[1] - xs[2];
            t[2] = xs[2];
            return t;
        };
        const Rational base = s.evaluate(t_of_x(x));
        for (const auto& perm : perms) {
            std::vector<Rational> px(3);
            for (size_t i = 0; i < 3; ++i) px[i] = x[static_cast<size_t>(perm[i])];
            CHECK(s.evaluate(t_of_x(px)) == base);
        }
    }
}

TEST_CASE("schur support equals the lambda simplex-sum lattice points") {
    const Partition l({2, 1, 0}, 3);
    const auto sup = schur_substituted(l, 3).support();
    const auto pts = lattice_points(lambda_simplex_sum(3, l));
    CHECK(std::set<LatticePoint>(sup.begin(), sup.end()) == pts);
}
