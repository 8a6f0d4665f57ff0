#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace schubound {

/// Exponent vector of a monomial; its size is the polynomial arity.
using Exponents = std::vector<int>;

long long total_degree(const Exponents& e);

/// Term order: higher total degree first, ties broken lexicographically
/// (larger exponent vector first). Iterating a term map in this order yields
/// the canonical serialization, leading term first.
struct GrlexGreater {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial with exact integer coefficients.
/// Invariants: no stored zero coefficients, every key has size() == arity.
/// The zero polynomial is an empty term map with its arity retained.
class SparsePoly {
public:
    using TermMap = std::map<Exponents, mpz_class, GrlexGreater>;

    explicit SparsePoly(int arity);
    static SparsePoly constant(int arity, mpz_class value);
    static SparsePoly monomial(Exponents exps, mpz_class coef);
    /// The single variable x_{index+1} (0-based index).
    static SparsePoly variable(int arity, int index);

    int arity() const { return arity_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of the monomial, zero when absent. Throws on arity mismatch.
    mpz_class coeff(const Exponents& e) const;

    /// Adds coef * x^e, dropping the term if the sum cancels.
    void add_term(const Exponents& e, const mpz_class& coef);

    SparsePoly& operator+=(const SparsePoly& rhs);
    SparsePoly& operator-=(const SparsePoly& rhs);
    friend SparsePoly operator+(SparsePoly lhs, const SparsePoly& rhs) { return lhs += rhs; }
    friend SparsePoly operator-(SparsePoly lhs, const SparsePoly& rhs) { return lhs -= rhs; }
    friend SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs);

    bool operator==(const SparsePoly&) const = default;

private:
    int arity_;
    TermMap terms_;
};

/// Vandermonde determinant det(x_i^{n-j}) = prod_{i<j} (x_i - x_j), expanded:
/// n! terms with coefficients +-1 whose exponents are the permutations of the
/// staircase (n-1, ..., 0).
SparsePoly vandermonde(int n);

SparsePoly mul(const SparsePoly& p, const SparsePoly& q);

/// Product restricted to terms whose exponents are componentwise <= bound.
/// Sound as a prefilter for coefficient extraction at targets <= bound:
/// exponents only grow during multiplication.
SparsePoly mul_pruned(const SparsePoly& p, const SparsePoly& q, const Exponents& bound);

/// Folds a factor list into one product, smallest term counts first,
/// pruning after every step when a bound is given.
SparsePoly mul_pruned_many(std::vector<SparsePoly> factors, int arity,
                           const Exponents* bound);

mpz_class coeff(const SparsePoly& p, const Exponents& e);

/// Substitution x_i -> x_i^l as entrywise exponent scaling.
SparsePoly scale_exponents(const SparsePoly& p, int l);

/// Sum of all coefficients, i.e. evaluation at x_1 = ... = x_n = 1.
mpz_class eval_all_ones(const SparsePoly& p);

/// Variable relabeling: x_i -> x_{perm[i]+1} (perm is a 0-based bijection).
SparsePoly permute_variables(const SparsePoly& p, const std::vector<int>& perm);

/// Drops terms not componentwise <= bound.
SparsePoly truncate_to_bound(const SparsePoly& p, const Exponents& bound);

/// Invariance under all adjacent variable swaps.
bool is_symmetric(const SparsePoly& p);

/// Exact quotient p / q, or nullopt when q does not divide p.
std::optional<SparsePoly> divide_exact(const SparsePoly& p, const SparsePoly& q);

/// Canonical text form, e.g. "+1*x1^2*x2 -1*x1^2*x3"; "0" for zero.
std::string to_canonical_string(const SparsePoly& p);

/// Inverse of to_canonical_string. Throws std::invalid_argument on bad syntax
/// or variable index out of range.
SparsePoly parse_poly(const std::string& text, int arity);

}  // namespace schubound
