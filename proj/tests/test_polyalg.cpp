#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "schubound/sparse_poly.hpp"
#include "schubound/symfunc.hpp"

using namespace schubound;

namespace {

SparsePoly power_sum(int n, int power) {
    SparsePoly p(n);
    for (int i = 0; i < n; ++i) {
        Exponents e(static_cast<std::size_t>(n), 0);
        e[static_cast<std::size_t>(i)] = power;
        p.add_term(e, 1);
    }
    return p;
}

}  // namespace

TEST_CASE("vandermonde") {
    CHECK(vandermonde(1) == SparsePoly::constant(1, 1));

    SparsePoly v2 = SparsePoly::variable(2, 0);
    v2 -= SparsePoly::variable(2, 1);
    CHECK(vandermonde(2) == v2);

    // n = 3 against a naive oracle multiplier
    oracle::TermList expect{{{0, 0, 0}, 1}};
    for (int i = 0; i < 3; ++i)
        for (int j = i + 1; j < 3; ++j) {
            oracle::TermList factor;
            std::vector<int> ei(3, 0), ej(3, 0);
            ei[static_cast<std::size_t>(i)] = 1;
            ej[static_cast<std::size_t>(j)] = 1;
            factor[ei] = 1;
            factor[ej] = -1;
            expect = oracle::naive_mul(expect, factor);
        }
    CHECK(oracle::to_terms(vandermonde(3)) == expect);

    for (int n = 2; n <= 5; ++n) {
        SparsePoly v = vandermonde(n);
        long long fact = 1;
        for (int i = 2; i <= n; ++i) fact *= i;
        CHECK(v.term_count() == static_cast<std::size_t>(fact));
        long long staircase_degree = 0;
        for (int x : staircase(n)) staircase_degree += x;
        for (const auto& [e, c] : v.terms()) {
            CHECK((c == 1 || c == -1));
            std::vector<int> sorted = e;
            std::sort(sorted.begin(), sorted.end(), std::greater<>());
            CHECK(sorted == staircase(n));
            CHECK(total_degree(e) == staircase_degree);
        }
    }
}

TEST_CASE("vandermonde is alternating") {
    for (int n = 2; n <= 4; ++n) {
        SparsePoly v = vandermonde(n);
        for (int t = 0; t + 1 < n; ++t) {
            std::vector<int> perm(static_cast<std::size_t>(n));
            for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
            std::swap(perm[static_cast<std::size_t>(t)], perm[static_cast<std::size_t>(t + 1)]);
            SparsePoly swapped = permute_variables(v, perm);
            SparsePoly sum = v;
            sum += swapped;
            CHECK(sum.is_zero());
        }
    }
}

TEST_CASE("canonical string of the Vandermonde determinant") {
    CHECK(to_canonical_string(vandermonde(3)) ==
          "+1*x1^2*x2 -1*x1^2*x3 -1*x1*x2^2 +1*x1*x3^2 +1*x2^2*x3 -1*x2*x3^2");
    CHECK(to_canonical_string(SparsePoly(2)) == "0");
    CHECK(to_canonical_string(SparsePoly::constant(1, 5)) == "+5");
}

TEST_CASE("mul_pruned") {
    SparsePoly x1px2 = SparsePoly::variable(2, 0);
    x1px2 += SparsePoly::variable(2, 1);
    SparsePoly x1mx2 = SparsePoly::variable(2, 0);
    x1mx2 -= SparsePoly::variable(2, 1);

    SparsePoly mixed = mul_pruned(x1px2, x1px2, {1, 1});
    CHECK(mixed.term_count() == 1);
    CHECK(mixed.coeff({1, 1}) == 2);

    SparsePoly one = SparsePoly::constant(2, 1);
    CHECK(mul_pruned(x1px2, one, {1, 1}) == x1px2);

    SparsePoly diff = mul_pruned(x1mx2, x1px2, {2, 2});
    oracle::TermList expect = oracle::naive_mul(oracle::to_terms(x1mx2), oracle::to_terms(x1px2));
    CHECK(oracle::to_terms(diff) == expect);

    CHECK_THROWS_AS(mul(x1px2, SparsePoly::constant(3, 1)), std::invalid_argument);
    CHECK_THROWS_AS(mul_pruned(x1px2, x1px2, {1}), std::invalid_argument);
}

TEST_CASE("pruned product equals truncated exact product") {
    std::mt19937 rng(101);
    std::uniform_int_distribution<int> arity_dist(1, 3), bound_dist(0, 6);
    for (int t = 0; t < 300; ++t) {
        int arity = arity_dist(rng);
        SparsePoly p = oracle::random_poly(arity, 5, 4, rng);
        SparsePoly q = oracle::random_poly(arity, 5, 4, rng);
        Exponents bound(static_cast<std::size_t>(arity));
        for (auto& b : bound) b = bound_dist(rng);
        CHECK(mul_pruned(p, q, bound) == truncate_to_bound(mul(p, q), bound));
    }
}

TEST_CASE("ring axioms against the naive oracle") {
    std::mt19937 rng(202);
    std::uniform_int_distribution<int> arity_dist(1, 3);
    for (int t = 0; t < 200; ++t) {
        int arity = arity_dist(rng);
        SparsePoly a = oracle::random_poly(arity, 4, 3, rng);
        SparsePoly b = oracle::random_poly(arity, 4, 3, rng);
        SparsePoly c = oracle::random_poly(arity, 4, 3, rng);

        CHECK(oracle::to_terms(mul(a, b)) ==
              oracle::naive_mul(oracle::to_terms(a), oracle::to_terms(b)));
        CHECK(mul(a, b) == mul(b, a));
        CHECK(mul(mul(a, b), c) == mul(a, mul(b, c)));
        SparsePoly bc = b;
        bc += c;
        SparsePoly ab_ac = mul(a, b);
        ab_ac += mul(a, c);
        CHECK(mul(a, bc) == ab_ac);
    }
}

TEST_CASE("coeff") {
    SparsePoly x1mx2 = SparsePoly::variable(2, 0);
    x1mx2 -= SparsePoly::variable(2, 1);
    CHECK(x1mx2.coeff({1, 0}) == 1);
    CHECK(x1mx2.coeff({0, 1}) == -1);
    CHECK(x1mx2.coeff({2, 0}) == 0);
    CHECK_THROWS_AS(x1mx2.coeff({1, 0, 0}), std::invalid_argument);

    // Coefficient of x1^5 x2^4 x3^3 in Delta_3 * (x1+x2+x3)^9.
    SparsePoly product = vandermonde(3);
    for (int i = 0; i < 9; ++i) product = mul(product, power_sum(3, 1));
    CHECK(product.coeff({5, 4, 3}) == 42);
}

TEST_CASE("scale_exponents") {
    SparsePoly x1px2 = SparsePoly::variable(2, 0);
    x1px2 += SparsePoly::variable(2, 1);
    CHECK(scale_exponents(x1px2, 2) == power_sum(2, 2));
    CHECK(scale_exponents(x1px2, 1) == x1px2);
    CHECK_THROWS_AS(scale_exponents(x1px2, 0), std::invalid_argument);

    SparsePoly s2 = schur_poly(Partition({2}), 2);
    SparsePoly expect(2);
    expect.add_term({4, 0}, 1);
    expect.add_term({2, 2}, 1);
    expect.add_term({0, 4}, 1);
    CHECK(scale_exponents(s2, 2) == expect);
}

TEST_CASE("eval_all_ones") {
    CHECK(eval_all_ones(vandermonde(2)) == 0);
    CHECK(eval_all_ones(schur_poly(Partition({1}), 3)) == 3);
    CHECK(eval_all_ones(schur_poly(Partition({2, 1}), 3)) == 8);
    CHECK(eval_all_ones(schur_poly(Partition({2, 1}), 3)) ==
          oracle::weyl_dimension(Partition({2, 1}), 3));
}

TEST_CASE("divide_exact") {
    SparsePoly v3 = vandermonde(3);
    SparsePoly s = schur_poly(Partition({2, 1}), 3);
    auto q = divide_exact(mul(v3, s), v3);
    REQUIRE(q.has_value());
    CHECK(*q == s);

    SparsePoly x1 = SparsePoly::variable(2, 0);
    SparsePoly x2 = SparsePoly::variable(2, 1);
    CHECK_FALSE(divide_exact(x1, x2).has_value());
    SparsePoly two_x1 = x1;
    two_x1 += x1;
    SparsePoly three = SparsePoly::constant(2, 3);
    CHECK_FALSE(divide_exact(two_x1, three).has_value());
    CHECK_THROWS_AS(divide_exact(x1, SparsePoly(2)), std::invalid_argument);
}

TEST_CASE("serialization round trip") {
    std::mt19937 rng(303);
    std::uniform_int_distribution<int> arity_dist(1, 4);
    for (int t = 0; t < 200; ++t) {
        int arity = arity_dist(rng);
        SparsePoly p = oracle::random_poly(arity, 6, 5, rng);
        CHECK(parse_poly(to_canonical_string(p), arity) == p);
    }
    CHECK(parse_poly("0", 3) == SparsePoly(3));
    CHECK(parse_poly("+1*x1^2*x2 -1*x2", 2) ==
          parse_poly("-1*x2 +1*x1^2*x2", 2));
    CHECK_THROWS_AS(parse_poly("+1*x9", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_poly("nonsense", 2), std::invalid_argument);
}

TEST_CASE("zero polynomial keeps its arity") {
    SparsePoly z(3);
    CHECK(z.is_zero());
    CHECK(z.arity() == 3);
    CHECK_THROWS_AS(z.coeff({0, 0}), std::invalid_argument);
    SparsePoly cancel = SparsePoly::constant(3, 4);
    cancel -= SparsePoly::constant(3, 4);
    CHECK(cancel == z);
}
