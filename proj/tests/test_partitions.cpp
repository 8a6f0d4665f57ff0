#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "schubound/partition.hpp"

using namespace schubound;

TEST_CASE("partition canonical form") {
    CHECK(Partition({3, 1, 0, 0}) == Partition({3, 1}));
    CHECK(Partition({0, 0}) == Partition{});
    CHECK(Partition({3, 1}).weight() == 4);
    CHECK(Partition{}.weight() == 0);
    CHECK_THROWS_AS(Partition({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(Partition({2, -1}), std::invalid_argument);
    CHECK(Partition::rectangle(3, 2) == Partition({2, 2, 2}));
    CHECK(Partition::rectangle(3, 0) == Partition{});
}

TEST_CASE("conjugate") {
    CHECK(conjugate(Partition({3, 1})) == Partition({2, 1, 1}));
    CHECK(conjugate(Partition{}) == Partition{});
    CHECK(conjugate(Partition({1, 1, 1})) == Partition({3}));

    std::mt19937 rng(7);
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<int> w_dist(0, 12);
        int w = w_dist(rng);
        Partition la = w == 0 ? Partition{} : oracle::random_partition(w, 6, rng);
        CHECK(conjugate(conjugate(la)) == la);
        CHECK(conjugate(la).weight() == la.weight());
    }
}

TEST_CASE("complement") {
    CHECK(complement(Partition({3, 3, 3}), 4, 8) == Partition({4, 1, 1, 1}));
    CHECK(complement(Partition{}, 3, 6) == Partition({3, 3, 3}));
    CHECK(complement(Partition({3, 3, 3}), 3, 6) == Partition{});
    CHECK_THROWS_AS(complement(Partition({4}), 3, 6), std::invalid_argument);
    CHECK_THROWS_AS(complement(Partition({1, 1, 1, 1}), 3, 6), std::invalid_argument);

    std::mt19937 rng(11);
    for (int t = 0; t < 200; ++t) {
        std::uniform_int_distribution<int> n_dist(1, 4), extra_dist(0, 3), w_dist(0, 8);
        int n = n_dist(rng);
        int w = w_dist(rng);
        Partition nu = w == 0 ? Partition{} : oracle::random_partition(w, n, rng);
        int d = n + nu.first() + extra_dist(rng);
        Partition mu = complement(nu, n, d);
        CHECK(complement(mu, n, d) == nu);
        CHECK(mu.weight() == static_cast<long long>(n) * (d - n) - nu.weight());
    }
}

TEST_CASE("staircase") {
    CHECK(staircase(1) == std::vector<int>{0});
    CHECK(staircase(3) == std::vector<int>({2, 1, 0}));
    CHECK(staircase(4) == std::vector<int>({3, 2, 1, 0}));
    CHECK_THROWS_AS(staircase(0), std::invalid_argument);
}

TEST_CASE("validate_problem") {
    SchubertProblem good{std::vector<Partition>(9, Partition({1})), Partition{}, 3, 6, 4};
    CHECK(validate_problem(good).ok());

    SchubertProblem bad_weight{std::vector<Partition>(9, Partition({1})), Partition{}, 3, 7, 0};
    auto report = validate_problem(bad_weight);
    CHECK_FALSE(report.ok());
    bool mentions_weight = false;
    for (const auto& v : report.violations)
        if (v.find("weight condition") != std::string::npos) mentions_weight = true;
    CHECK(mentions_weight);

    SchubertProblem bad_pairing{{Partition({2}), Partition({1})}, Partition{}, 2, 2, 1};
    auto pairing_report = validate_problem(bad_pairing);
    CHECK_FALSE(pairing_report.ok());
    bool mentions_pairing = false;
    for (const auto& v : pairing_report.violations)
        if (v.find("pairing") != std::string::npos) mentions_pairing = true;
    CHECK(mentions_pairing);

    SchubertProblem too_many_pairs{{Partition({1})}, Partition({1}), 2, 3, 1};
    CHECK_FALSE(validate_problem(too_many_pairs).ok());
}

TEST_CASE("problems built from (lambdas, mu) via complement validate") {
    std::mt19937 rng(13);
    for (int t = 0; t < 100; ++t) {
        std::uniform_int_distribution<int> n_dist(1, 4), k_dist(0, 4), w_dist(1, 3),
            extra_dist(0, 2);
        int n = n_dist(rng);
        int k = k_dist(rng);
        std::vector<Partition> lambdas;
        long long total = 0;
        for (int i = 0; i < k; ++i) {
            int w = w_dist(rng);
            lambdas.push_back(oracle::random_partition(w, n, rng));
            total += w;
        }
        auto mus = oracle::partitions_of(static_cast<int>(total), n, static_cast<int>(total));
        if (total > 0 && mus.empty()) continue;
        Partition mu = total == 0 ? Partition{} : mus[0];
        long long max_lambda = 0;
        for (const auto& la : lambdas) max_lambda = std::max(max_lambda, (long long)la.first());
        int d = n + std::max<long long>(mu.first(), std::max(max_lambda, 1LL)) + extra_dist(rng);
        // complement against the d-dependent rectangle keeps the weight identity
        long long rect = static_cast<long long>(n) * (d - n);
        if (rect < total || mu.first() > d - n) continue;
        SchubertProblem p = make_problem(lambdas, complement(mu, n, d), n, d, 0);
        CHECK(validate_problem(p).ok());
    }
}

TEST_CASE("make_problem derives minimal d") {
    SchubertProblem p =
        make_problem(std::vector<Partition>(9, Partition({1})), Partition{}, 3, 0, 0);
    CHECK(p.d == 6);
    CHECK(validate_problem(p).ok());
    CHECK_THROWS_AS(
        make_problem(std::vector<Partition>(8, Partition({1})), Partition{}, 3, 0, 0),
        std::invalid_argument);
}
