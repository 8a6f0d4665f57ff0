#pragma once

#include <vector>

#include "schubound/partition.hpp"
#include "schubound/sparse_poly.hpp"
#include "schubound/symfunc.hpp"

namespace schubound {

/// One tensor block L_lambda^{x k} together with the cycle type of the
/// permutation acting on its k factors.
struct ClassFactor {
    Partition lambda;
    int k = 0;
    CycleType sigma;
};

/// Conjugacy class of S_{k_1} x ... x S_{k_s} acting on a tensor product of
/// gl_n-irreducibles by permuting equal factors. Cycle types are stored
/// sorted, so equal classes compare equal regardless of input order.
class ProductClass {
public:
    ProductClass() = default;

    void add_factor(Partition lambda, int k, CycleType sigma);
    const std::vector<ClassFactor>& factors() const { return factors_; }

    /// sum_i k_i |lambda^(i)|, the only weight with a nontrivial multiplicity space.
    long long total_weight() const;
    /// Flat list lambda^(1) x k_1, lambda^(2) x k_2, ...
    std::vector<Partition> flat_lambdas() const;

private:
    std::vector<ClassFactor> factors_;
};

/// prod_i prod_j S_{lambda^(i)}(x_1^{l_ij}, ..., x_n^{l_ij}), optionally pruned.
SparsePoly class_product_poly(const ProductClass& cls, int n, const Exponents* bound);

/// Coefficient of x^{mu+delta} in Delta_n * p for symmetric p, evaluated
/// without expanding Delta_n: a term x^e of p contributes sgn(w) * coef
/// exactly when (mu+delta) - e is a permutation w of the staircase delta.
mpz_class antisymmetrized_coeff(const SparsePoly& p, const Partition& mu, int n);

/// Character of the product of symmetric groups on the multiplicity space of
/// L_mu, i.e. the coefficient of x^{mu+delta} in Delta_n * class_product_poly.
/// Default route: pruned product plus antisymmetrized extraction.
/// Returns 0 and sets *weight_mismatch when |mu| != total weight (the
/// multiplicity space is trivial there, not an error).
/// Throws std::invalid_argument when mu has more than n parts.
mpz_class character_value(const ProductClass& cls, const Partition& mu, int n,
                          bool* weight_mismatch = nullptr);

/// Same value by literally multiplying out Delta_n with the full product and
/// reading one coefficient. Cross-check route.
mpz_class character_value_direct(const ProductClass& cls, const Partition& mu, int n,
                                 bool* weight_mismatch = nullptr);

/// Same value by expanding the product in the Schur basis and reading the
/// coefficient of S_mu. Independent route.
mpz_class character_value_via_expansion(const ProductClass& cls, const Partition& mu,
                                        int n, bool* weight_mismatch = nullptr);

}  // namespace schubound
