#include "schubound/verify.hpp"

#include <algorithm>
#include <random>
#include <sstream>

#include "schubound/bounds.hpp"
#include "schubound/characters.hpp"
#include "schubound/partition.hpp"
#include "schubound/symfunc.hpp"

namespace schubound {

bool VerifySummary::all_passed() const {
    for (const VerifyCheck& c : checks)
        if (!c.passed) return false;
    return true;
}

namespace {

void collect_partitions(int remaining, int max_part, int max_parts,
                        std::vector<int>& acc, std::vector<Partition>& out) {
    if (remaining == 0) {
        out.push_back(Partition(acc));
        return;
    }
    if (max_parts == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        collect_partitions(remaining - p, p, max_parts - 1, acc, out);
        acc.pop_back();
    }
}

std::vector<Partition> partitions_of(int w, int max_parts, int max_part) {
    std::vector<Partition> out;
    std::vector<int> acc;
    collect_partitions(w, std::min(w, max_part), max_parts, acc, out);
    return out;
}

std::string row_to_string(const std::vector<mpz_class>& row) {
    std::string s;
    for (std::size_t i = 0; i < row.size(); ++i) {
        if (i) s += ",";
        s += row[i].get_str();
    }
    return s;
}

void check_row(VerifySummary& summary, const std::string& name,
               const std::vector<mpz_class>& got, const std::vector<long>& expected) {
    bool ok = got.size() == expected.size();
    for (std::size_t i = 0; ok && i < got.size(); ++i) ok = got[i] == expected[i];
    summary.checks.push_back({name, ok, "got " + row_to_string(got)});
}

std::vector<mpz_class> abs_row(const std::vector<mpz_class>& row) {
    std::vector<mpz_class> out;
    for (const mpz_class& v : row) out.push_back(abs(v));
    return out;
}

// Independent route to the vector-problem rows: by Schur-Weyl duality the
// signed entries are chi^mu on the class (2^c, 1^{k-2c}).
bool row_matches_mn(const std::vector<mpz_class>& row, const Partition& mu, int k) {
    for (int c = 0; c < static_cast<int>(row.size()); ++c) {
        std::vector<int> cycles(static_cast<std::size_t>(c), 2);
        cycles.resize(static_cast<std::size_t>(k - c), 1);
        if (row[static_cast<std::size_t>(c)] != murnaghan_nakayama(mu, CycleType(cycles)))
            return false;
    }
    return true;
}

mpz_class factorial_mpz(long v) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
    return r;
}

// Order of the centralizer of a permutation of the given cycle type.
mpz_class centralizer_order(const Partition& type) {
    mpz_class z = 1;
    std::map<int, int> mult;
    for (int l : type.parts()) mult[l]++;
    for (const auto& [l, m] : mult) {
        for (int i = 0; i < m; ++i) z *= l;
        z *= factorial_mpz(m);
    }
    return z;
}

template <typename Rng>
const Partition& pick(const std::vector<Partition>& from, Rng& rng) {
    std::uniform_int_distribution<std::size_t> dist(0, from.size() - 1);
    return from[dist(rng)];
}

}  // namespace

VerifySummary verify_paper_tables() {
    VerifySummary summary{"paper-tables", {}};

    // The published rows list the bounds |a|; the signed entries are checked
    // against the Murnaghan-Nakayama oracle.
    SchubertProblem gr36 = vector_problem(3, 3, 0);
    std::vector<mpz_class> row36 = signature_table(gr36, 0, 4);
    check_row(summary, "Gr(3,6) lower bounds, c=0..4", abs_row(row36), {42, 0, 2, 0, 6});
    summary.checks.push_back({"Gr(3,6) signed row matches Murnaghan-Nakayama",
                              row_matches_mn(row36, Partition({3, 3, 3}), 9),
                              row_to_string(row36)});

    SchubertProblem gr38 = vector_problem(3, 5, 0);
    std::vector<mpz_class> row38 = signature_table(gr38, 0, 7);
    check_row(summary, "Gr(3,8) lower bounds, c=0..7", abs_row(row38),
              {6006, 858, 198, 42, 6, 10, 10, 70});
    summary.checks.push_back({"Gr(3,8) signed row matches Murnaghan-Nakayama",
                              row_matches_mn(row38, Partition({5, 5, 5}), 15),
                              row_to_string(row38)});

    SchubertProblem gr39 = vector_problem(3, 6, 0);
    std::vector<mpz_class> row39 = signature_table(gr39, 0, 9);
    check_row(summary, "Gr(3,9) lower bounds, c=0..9", abs_row(row39),
              {87516, 15444, 3432, 792, 180, 60, 0, 0, 140, 420});
    summary.checks.push_back({"Gr(3,9) signed row matches Murnaghan-Nakayama",
                              row_matches_mn(row39, Partition({6, 6, 6}), 18),
                              row_to_string(row39)});

    SchubertProblem gr48 = make_problem(
        std::vector<Partition>(7, Partition({1})), Partition({3, 3, 3}), 4, 8, 0);
    std::vector<mpz_class> row48 = signature_table(gr48, 0, 3);
    check_row(summary, "Gr(4,8) lower bounds, c=0..3", abs_row(row48), {20, 0, 4, 0});
    summary.checks.push_back({"Gr(4,8) signed row matches Murnaghan-Nakayama",
                              row_matches_mn(row48, Partition({4, 1, 1, 1}), 7),
                              row_to_string(row48)});

    check_row(summary, "rectangle sign-imbalance (m,p) = (3,3), (5,3), (6,3)",
              {white_bound(3, 3), white_bound(5, 3), white_bound(6, 3)}, {0, 0, 12});

    std::vector<mpz_class> hhs14;
    for (int c = 0; c <= 7; ++c) hhs14.push_back(hhs_bound_for_c(14, 3, c));
    check_row(summary, "sharp counts r(14,3,.) for c=0..7", hhs14,
              {78, 56, 38, 24, 14, 8, 6, 6});

    std::vector<mpz_class> hhs11;
    for (int c = 0; c <= 5; ++c) hhs11.push_back(hhs_bound_for_c(11, 4, c));
    check_row(summary, "sharp counts r(11,4,.) for c=0..5", hhs11, {120, 64, 32, 16, 8, 0});

    return summary;
}

VerifySummary verify_frobenius(int max_k) {
    VerifySummary summary{"frobenius", {}};
    for (int k = 1; k <= max_k; ++k) {
        std::vector<Partition> mus = partitions_of(k, k, k);
        int values = 0;
        bool agree = true;
        std::string mismatch;
        std::map<std::pair<Partition, Partition>, mpz_class> table;
        for (const Partition& mu : mus)
            for (const Partition& type : mus) {
                ProductClass cls;
                cls.add_factor(Partition({1}), k, CycleType(type.parts()));
                mpz_class lhs = character_value(cls, mu, k);
                mpz_class rhs = murnaghan_nakayama(mu, CycleType(type.parts()));
                table[{mu, type}] = rhs;
                ++values;
                if (lhs != rhs && agree) {
                    agree = false;
                    mismatch = "mu=" + mu.to_string() + " type=" + type.to_string() +
                               ": " + lhs.get_str() + " vs " + rhs.get_str();
                }
            }
        summary.checks.push_back({"character formula = Murnaghan-Nakayama, k=" + std::to_string(k),
                                  agree,
                                  agree ? std::to_string(values) + " values" : mismatch});

        bool orthogonal = true;
        mpz_class kfact = factorial_mpz(k);
        for (const Partition& mu : mus)
            for (const Partition& rho : mus) {
                mpz_class sum = 0;
                for (const Partition& type : mus) {
                    mpz_class size = kfact / centralizer_order(type);
                    sum += size * table[{mu, type}] * table[{rho, type}];
                }
                if (sum != (mu == rho ? kfact : mpz_class(0))) orthogonal = false;
            }
        summary.checks.push_back({"character orthogonality, k=" + std::to_string(k),
                                  orthogonal, ""});
    }
    return summary;
}

VerifySummary verify_oracles(int instances, unsigned seed) {
    VerifySummary summary{"oracles", {}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> n_dist(1, 4);
    std::uniform_int_distribution<int> k_dist(1, 6);
    std::uniform_int_distribution<int> w_dist(1, 4);
    std::uniform_int_distribution<int> s_dist(1, 2);
    std::uniform_int_distribution<int> ki_dist(1, 3);

    int lr_fail = 0, route_fail = 0, schur_fail = 0;
    for (int t = 0; t < instances; ++t) {
        int n = n_dist(rng);

        // (a) signature at c = 0 against the Littlewood-Richardson rule.
        int k = k_dist(rng);
        std::vector<Partition> lambdas;
        long long total = 0;
        for (int i = 0; i < k; ++i) {
            int w = w_dist(rng);
            lambdas.push_back(pick(partitions_of(w, n, w), rng));
            total += w;
        }
        Partition mu = pick(partitions_of(static_cast<int>(total), n,
                                          static_cast<int>(total)), rng);
        if (signature_q(lambdas, mu, 0, n) != lr_multiplicity(lambdas, mu, n)) ++lr_fail;

        // (b) antisymmetrized route against the Schur-expansion route.
        ProductClass cls;
        long long cw = 0;
        int s = s_dist(rng);
        for (int i = 0; i < s; ++i) {
            int ki = ki_dist(rng);
            int w = w_dist(rng);
            Partition la = pick(partitions_of(w, n, w), rng);
            cw += static_cast<long long>(ki) * w;
            cls.add_factor(std::move(la), ki, CycleType(pick(partitions_of(ki, ki, ki), rng).parts()));
        }
        Partition cmu = pick(partitions_of(static_cast<int>(cw), n, static_cast<int>(cw)), rng);
        if (character_value(cls, cmu, n) != character_value_via_expansion(cls, cmu, n))
            ++route_fail;

        // (c) tableau route against the bialternant route, 4x4 box.
        std::uniform_int_distribution<int> box_dist(0, 4);
        std::vector<int> parts;
        for (int i = 0; i < 4; ++i) parts.push_back(box_dist(rng));
        std::sort(parts.begin(), parts.end(), std::greater<>());
        Partition box(parts);
        if (schur_poly(box, n) != schur_poly_bialternant(box, n)) ++schur_fail;
    }

    auto tally = [&](const std::string& name, int fails) {
        summary.checks.push_back({name, fails == 0,
                                  std::to_string(instances - fails) + "/" +
                                      std::to_string(instances) + " instances"});
    };
    tally("q at c=0 equals LR multiplicity", lr_fail);
    tally("antisymmetrized route equals Schur-expansion route", route_fail);
    tally("tableau Schur equals bialternant Schur", schur_fail);
    return summary;
}

VerifySummary verify_dualities(int instances, unsigned seed) {
    VerifySummary summary{"dualities", {}};
    std::mt19937 rng(seed);
    std::uniform_int_distribution<int> n_dist(1, 3);
    std::uniform_int_distribution<int> c_dist(0, 2);
    std::uniform_int_distribution<int> extra_dist(0, 3);
    std::uniform_int_distribution<int> w_dist(1, 3);

    int transpose_fail = 0, reduce_fail = 0, parity_fail = 0, bound_fail = 0;
    int made = 0;
    while (made < instances) {
        int n = n_dist(rng);
        int c = c_dist(rng);
        int extra = extra_dist(rng);
        if (2 * c + extra == 0) continue;

        std::vector<Partition> lambdas;
        for (int i = 0; i < c; ++i) {
            Partition la = pick(partitions_of(w_dist(rng), n, 3), rng);
            lambdas.push_back(la);
            lambdas.push_back(la);
        }
        for (int i = 0; i < extra; ++i)
            lambdas.push_back(pick(partitions_of(w_dist(rng), n, 3), rng));

        long long total = 0;
        for (const Partition& la : lambdas) total += la.weight();
        std::vector<Partition> mus = partitions_of(static_cast<int>(total), n, 5);
        if (mus.empty()) continue;
        Partition mu = pick(mus, rng);
        int d = n + mu.first();
        SchubertProblem p = make_problem(lambdas, complement(mu, n, d), n, d, c);
        if (!validate_problem(p).ok()) continue;
        ++made;

        mpz_class q_c = signature_q(p.lambdas, mu, c, n);
        mpz_class q_0 = signature_q(p.lambdas, mu, 0, n);

        auto [dual, sign] = transpose_dual(p);
        Partition dual_mu = complement(dual.nu, dual.n, dual.d);
        mpz_class q_dual = signature_q(dual.lambdas, dual_mu, c, dual.n);
        if (q_c != sign * q_dual) ++transpose_fail;

        SchubertProblem red = reduced_problem(p);
        Partition red_mu = complement(red.nu, red.n, red.d);
        if (signature_q(red.lambdas, red_mu, c, red.n) != q_c) ++reduce_fail;

        if (((q_c - q_0) % 2) != 0) ++parity_fail;
        if (abs(q_c) > q_0) ++bound_fail;
    }

    auto tally = [&](const std::string& name, int fails) {
        summary.checks.push_back({name, fails == 0,
                                  std::to_string(instances - fails) + "/" +
                                      std::to_string(instances) + " instances"});
    };
    tally("transpose duality a(p) = (-1)^m a(p')", transpose_fail);
    tally("reduction a(lambda, nu, c) = a(lambda + [nu], (), c)", reduce_fail);
    tally("parity q(c) = q(0) mod 2", parity_fail);
    tally("|q(c)| <= q(0)", bound_fail);
    return summary;
}

VerifySummary verify_counterexample() {
    VerifySummary summary{"counterexample", {}};
    CounterexampleReport report = verify_indefinite_counterexample();
    for (const auto& check : report.checks)
        summary.checks.push_back({check.name, check.passed, check.detail});
    return summary;
}

std::vector<VerifySummary> verify_all() {
    return {verify_paper_tables(), verify_frobenius(6), verify_oracles(200, 20260809),
            verify_dualities(100, 20260809), verify_counterexample()};
}

}  // namespace schubound
