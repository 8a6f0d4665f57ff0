#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "schubound/partition.hpp"
#include "schubound/sparse_poly.hpp"

namespace schubound {

/// Everything the engine can say about one osculating Schubert problem at a
/// fixed number c of conjugate point pairs.
struct BoundReport {
    SchubertProblem problem;
    Partition mu;               // complement of nu in the n x (d-n) rectangle
    mpz_class a_signed;         // signed signature a(lambda, nu, c)
    mpz_class lower_bound;      // |a|, the guaranteed number of real solutions
    mpz_class complex_count;    // m(lambda, nu) = a at c = 0
    std::optional<mpz_class> white_bound;  // topological degree, rectangular vector problems
    std::optional<mpz_class> hhs_bound;    // sharp count r(k,n,s) family
    std::map<std::string, std::string> provenance;
    std::optional<bool> routes_agree;  // set when cross-checking was requested
};

/// Signature of the c-twisted Hermitian form on the multiplicity space of
/// L_mu in the tensor product of the L_lambda: the coefficient of
/// x^{mu+delta} in Delta_n * prod_{i<=c} S_{lambda^(2i)}(x^2) *
/// prod_{j>2c} S_{lambda^(j)}(x). At c = 0 this is dim M = the number of
/// complex solutions. Returns 0 with *weight_mismatch set when
/// |mu| != sum |lambda^(i)|; throws on pairing violations.
mpz_class signature_q(const std::vector<Partition>& lambdas, const Partition& mu,
                      int c, int n, bool* weight_mismatch = nullptr);

/// signature_q for every c in [c_lo, c_hi]. Rows are computed independently
/// (optionally in parallel, see SCHUBOUND_THREADS) and aggregated by index,
/// so the result does not depend on the worker count.
std::vector<mpz_class> signature_table(const SchubertProblem& p, int c_lo, int c_hi);

/// Full report for one problem. Throws std::invalid_argument (with the
/// violation list) when validate_problem fails. When verify_routes is set,
/// recomputes a via the Schur-expansion route and the complex count via the
/// Littlewood-Richardson rule and records the comparison.
BoundReport lower_bound_a(const SchubertProblem& p, bool verify_routes = false);

/// The exact (unpruned) polynomial whose x^(mu+delta) coefficient is a:
/// Vandermonde times the twisted Schur product at the problem's c.
SparsePoly bound_poly(const SchubertProblem& p);

/// Transposed problem (lambda', nu', n' = d-n) and the sign (-1)^m with
/// m = sum_{i<=c} |lambda^(2i)|; a(p) = sign * a(transpose_dual(p)).
std::pair<SchubertProblem, int> transpose_dual(const SchubertProblem& p);

/// Same problem with nu appended to the lambda list and nu = (): the bound
/// is invariant under this reduction.
SchubertProblem reduced_problem(const SchubertProblem& p);

/// Sign-imbalance of the p x m rectangle: the topological degree of the real
/// Wronski map for the vector problem with mu = (m^p), p <= m. Zero for even
/// m+p; the factorial product is evaluated over exact rationals and must come
/// out integral.
mpz_class white_bound(int m, int p);

/// Coefficient of x^{k-n} y^{n-1} in (x+y)^{k-1-2s} (x^2+y^2)^s, the sharp
/// real-solution count for the vector problem with nu = ((k-n)^{n-1}) in
/// Gr(n, k+1) when the derivative has k-1-2s real roots. Requires 2s <= k-1.
mpz_class hhs_count_r(int k, int n, int s);

/// The c-indexed lower bound from hhs_count_r: s = c when 2c < k and
/// s = c - 1 when 2c = k.
mpz_class hhs_bound_for_c(int k, int n, int c);

/// Vector problem with mu = (m^p): k = m*p one-box partitions, Gr(p, p+m).
SchubertProblem vector_problem(int p, int m, int c);

/// Vector problem with nu = ((k-n)^{n-1}) in Gr(n, k+1).
SchubertProblem hhs_vector_problem(int n, int k, int c);

/// Exact verification of the 4x4 commuting-pair counterexample: two
/// selfadjoint commuting operators with only one common eigenvector, i.e.
/// a signature-2 form whose real-eigenvector guarantee does not extend to
/// common eigenvectors.
struct CounterexampleReport {
    struct Check {
        std::string name;
        bool passed;
        std::string detail;
    };
    std::vector<Check> checks;
    bool all_passed() const;
};

CounterexampleReport verify_indefinite_counterexample();

}  // namespace schubound
