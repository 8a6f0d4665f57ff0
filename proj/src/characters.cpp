#include "schubound/characters.hpp"

#include <cstdint>
#include <stdexcept>

namespace schubound {

void ProductClass::add_factor(Partition lambda, int k, CycleType sigma) {
    if (k < 1) throw std::invalid_argument("factor multiplicity k must be >= 1");
    if (sigma.total() != k)
        throw std::invalid_argument("cycle type of a factor must sum to its multiplicity");
    factors_.push_back(ClassFactor{std::move(lambda), k, std::move(sigma)});
}

long long ProductClass::total_weight() const {
    long long w = 0;
    for (const ClassFactor& f : factors_) w += f.k * f.lambda.weight();
    return w;
}

std::vector<Partition> ProductClass::flat_lambdas() const {
    std::vector<Partition> out;
    for (const ClassFactor& f : factors_)
        for (int i = 0; i < f.k; ++i) out.push_back(f.lambda);
    return out;
}

SparsePoly class_product_poly(const ProductClass& cls, int n, const Exponents* bound) {
    std::vector<SparsePoly> factors;
    for (const ClassFactor& f : cls.factors()) {
        SparsePoly base = schur_poly(f.lambda, n);
        for (int l : f.sigma.lengths()) factors.push_back(scale_exponents(base, l));
    }
    return mul_pruned_many(std::move(factors), n, bound);
}

namespace {

Exponents mu_plus_delta(const Partition& mu, int n) {
    Exponents t(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        t[static_cast<std::size_t>(i)] = mu.part(static_cast<std::size_t>(i)) + n - 1 - i;
    return t;
}

bool gate(const ProductClass& cls, const Partition& mu, int n, bool* weight_mismatch) {
    if (n < 1) throw std::invalid_argument("character_value requires n >= 1");
    if (mu.length() > static_cast<std::size_t>(n))
        throw std::invalid_argument("mu must have at most n parts");
    if (weight_mismatch) *weight_mismatch = false;
    if (mu.weight() != cls.total_weight()) {
        if (weight_mismatch) *weight_mismatch = true;
        return false;
    }
    return true;
}

}  // namespace

mpz_class antisymmetrized_coeff(const SparsePoly& p, const Partition& mu, int n) {
    if (p.arity() != n) throw std::invalid_argument("arity mismatch");
    Exponents target = mu_plus_delta(mu, n);

    if (n > 63) throw std::invalid_argument("antisymmetrized_coeff supports n <= 63");
    mpz_class acc = 0;
    std::vector<int> r(static_cast<std::size_t>(n));
    for (const auto& [e, c] : p.terms()) {
        std::uint64_t seen = 0;
        bool match = true;
        for (int i = 0; i < n; ++i) {
            int v = target[static_cast<std::size_t>(i)] - e[static_cast<std::size_t>(i)];
            if (v < 0 || v >= n || (seen >> v) & 1u) {
                match = false;
                break;
            }
            seen |= std::uint64_t{1} << v;
            r[static_cast<std::size_t>(i)] = v;
        }
        if (!match) continue;
        // e = (mu+delta) - w(delta) with w(i) = n - r_i; sgn(w) counts the
        // pairs i < j with r_i < r_j.
        int inv = 0;
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j)
                if (r[static_cast<std::size_t>(i)] < r[static_cast<std::size_t>(j)]) ++inv;
        if (inv % 2 == 0)
            acc += c;
        else
            acc -= c;
    }
    return acc;
}

mpz_class character_value(const ProductClass& cls, const Partition& mu, int n,
                          bool* weight_mismatch) {
    if (!gate(cls, mu, n, weight_mismatch)) return 0;
    Exponents bound = mu_plus_delta(mu, n);
    SparsePoly p = class_product_poly(cls, n, &bound);
    return antisymmetrized_coeff(p, mu, n);
}

mpz_class character_value_direct(const ProductClass& cls, const Partition& mu, int n,
                                 bool* weight_mismatch) {
    if (!gate(cls, mu, n, weight_mismatch)) return 0;
    SparsePoly full = mul(vandermonde(n), class_product_poly(cls, n, nullptr));
    return full.coeff(mu_plus_delta(mu, n));
}

mpz_class character_value_via_expansion(const ProductClass& cls, const Partition& mu,
                                        int n, bool* weight_mismatch) {
    if (!gate(cls, mu, n, weight_mismatch)) return 0;
    SchurExpansion expansion = schur_expand(class_product_poly(cls, n, nullptr), n);
    return expansion.coeff(mu);
}

}  // namespace schubound
