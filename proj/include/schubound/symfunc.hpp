#pragma once

#include <map>
#include <vector>

#include "schubound/partition.hpp"
#include "schubound/sparse_poly.hpp"

namespace schubound {

/// Conjugacy class label of a symmetric group: multiset of cycle lengths,
/// stored sorted descending.
class CycleType {
public:
    CycleType() = default;
    explicit CycleType(std::vector<int> lengths);
    static CycleType identity(int k);

    const std::vector<int>& lengths() const { return lengths_; }
    /// Sum of cycle lengths, i.e. the degree k of the symmetric group.
    long long total() const;

    bool operator==(const CycleType&) const = default;
    auto operator<=>(const CycleType&) const = default;

private:
    std::vector<int> lengths_;
};

/// Schur polynomial S_lambda(x_1..x_n) by semistandard tableau enumeration.
/// Zero when lambda has more than n parts. Memoized; thread-safe.
SparsePoly schur_poly(const Partition& lambda, int n);

/// Same polynomial via the bialternant quotient det(x_i^{lambda_j+n-j}) / Delta_n.
/// Kept as an independent route; throws std::logic_error if the division is
/// not exact (which would indicate a bug, not bad input).
SparsePoly schur_poly_bialternant(const Partition& lambda, int n);

/// Coefficients of a symmetric polynomial in the Schur basis.
struct SchurExpansion {
    std::map<Partition, mpz_class> coeffs;

    mpz_class coeff(const Partition& mu) const {
        auto it = coeffs.find(mu);
        return it == coeffs.end() ? mpz_class(0) : it->second;
    }
    bool operator==(const SchurExpansion&) const = default;
};

/// Unique expansion p = sum c_mu S_mu, found by peeling the graded-lex
/// leading exponent (which is dominance-maximal; ties cannot arise).
/// Throws std::invalid_argument when p is not symmetric.
SchurExpansion schur_expand(const SparsePoly& p, int n);

/// Expansion of S_a * S_b into Schur polynomials with at most n rows,
/// by the Littlewood-Richardson tableau rule. Memoized; thread-safe.
std::map<Partition, mpz_class> lr_expand_pair(const Partition& a, const Partition& b, int n);

/// Multiplicity of L_mu in L_{lambda^(1)} x ... x L_{lambda^(k)} as
/// gl_n-modules, via iterated two-factor LR expansion. Zero when the weight
/// condition |mu| = sum |lambda^(i)| fails.
mpz_class lr_multiplicity(const std::vector<Partition>& lambdas, const Partition& mu, int n);

/// Irreducible symmetric-group character chi^mu at the class of cycle_type,
/// by the Murnaghan-Nakayama border-strip recursion. Throws on |mu| != k.
mpz_class murnaghan_nakayama(const Partition& mu, const CycleType& cycle_type);

}  // namespace schubound
