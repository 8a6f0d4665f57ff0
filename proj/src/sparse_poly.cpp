#include "schubound/sparse_poly.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace schubound {

long long total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0LL);
}

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const {
    long long da = total_degree(a), db = total_degree(b);
    if (da != db) return da > db;
    return a > b;
}

SparsePoly::SparsePoly(int arity) : arity_(arity) {
    if (arity < 1) throw std::invalid_argument("polynomial arity must be >= 1");
}

SparsePoly SparsePoly::constant(int arity, mpz_class value) {
    SparsePoly p(arity);
    p.add_term(Exponents(static_cast<std::size_t>(arity), 0), value);
    return p;
}

SparsePoly SparsePoly::monomial(Exponents exps, mpz_class coef) {
    SparsePoly p(static_cast<int>(exps.size()));
    p.add_term(exps, coef);
    return p;
}

SparsePoly SparsePoly::variable(int arity, int index) {
    if (index < 0 || index >= arity) throw std::invalid_argument("variable index out of range");
    Exponents e(static_cast<std::size_t>(arity), 0);
    e[static_cast<std::size_t>(index)] = 1;
    return monomial(std::move(e), 1);
}

mpz_class SparsePoly::coeff(const Exponents& e) const {
    if (static_cast<int>(e.size()) != arity_)
        throw std::invalid_argument("exponent vector arity mismatch");
    auto it = terms_.find(e);
    return it == terms_.end() ? mpz_class(0) : it->second;
}

void SparsePoly::add_term(const Exponents& e, const mpz_class& coef) {
    if (static_cast<int>(e.size()) != arity_)
        throw std::invalid_argument("exponent vector arity mismatch");
    for (int x : e)
        if (x < 0) throw std::invalid_argument("exponents must be nonnegative");
    if (coef == 0) return;
    auto [it, inserted] = terms_.emplace(e, coef);
    if (!inserted) {
        it->second += coef;
        if (it->second == 0) terms_.erase(it);
    }
}

SparsePoly& SparsePoly::operator+=(const SparsePoly& rhs) {
    if (rhs.arity_ != arity_) throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

SparsePoly& SparsePoly::operator-=(const SparsePoly& rhs) {
    if (rhs.arity_ != arity_) throw std::invalid_argument("polynomial arity mismatch");
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

SparsePoly operator*(const SparsePoly& lhs, const SparsePoly& rhs) {
    return mul(lhs, rhs);
}

SparsePoly vandermonde(int n) {
    if (n < 1) throw std::invalid_argument("vandermonde requires n >= 1");
    SparsePoly result = SparsePoly::constant(n, 1);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            SparsePoly factor = SparsePoly::variable(n, i);
            factor -= SparsePoly::variable(n, j);
            result = mul(result, factor);
        }
    return result;
}

SparsePoly mul(const SparsePoly& p, const SparsePoly& q) {
    if (p.arity() != q.arity()) throw std::invalid_argument("polynomial arity mismatch");
    SparsePoly out(p.arity());
    Exponents sum(static_cast<std::size_t>(p.arity()));
    for (const auto& [ep, cp] : p.terms())
        for (const auto& [eq, cq] : q.terms()) {
            for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = ep[i] + eq[i];
            out.add_term(sum, cp * cq);
        }
    return out;
}

SparsePoly mul_pruned(const SparsePoly& p, const SparsePoly& q, const Exponents& bound) {
    if (p.arity() != q.arity()) throw std::invalid_argument("polynomial arity mismatch");
    if (static_cast<int>(bound.size()) != p.arity())
        throw std::invalid_argument("bound arity mismatch");
    SparsePoly out(p.arity());
    Exponents sum(static_cast<std::size_t>(p.arity()));
    for (const auto& [ep, cp] : p.terms())
        for (const auto& [eq, cq] : q.terms()) {
            bool keep = true;
            for (std::size_t i = 0; i < sum.size(); ++i) {
                sum[i] = ep[i] + eq[i];
                if (sum[i] > bound[i]) {
                    keep = false;
                    break;
                }
            }
            if (keep) out.add_term(sum, cp * cq);
        }
    return out;
}

SparsePoly mul_pruned_many(std::vector<SparsePoly> factors, int arity,
                           const Exponents* bound) {
    SparsePoly result = SparsePoly::constant(arity, 1);
    if (bound) result = truncate_to_bound(result, *bound);
    std::stable_sort(factors.begin(), factors.end(),
                     [](const SparsePoly& a, const SparsePoly& b) {
                         return a.term_count() < b.term_count();
                     });
    for (const SparsePoly& f : factors)
        result = bound ? mul_pruned(result, f, *bound) : mul(result, f);
    return result;
}

mpz_class coeff(const SparsePoly& p, const Exponents& e) { return p.coeff(e); }

SparsePoly scale_exponents(const SparsePoly& p, int l) {
    if (l < 1) throw std::invalid_argument("exponent scale must be >= 1");
    if (l == 1) return p;
    SparsePoly out(p.arity());
    Exponents scaled(static_cast<std::size_t>(p.arity()));
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < scaled.size(); ++i) scaled[i] = e[i] * l;
        out.add_term(scaled, c);
    }
    return out;
}

mpz_class eval_all_ones(const SparsePoly& p) {
    mpz_class sum = 0;
    for (const auto& [e, c] : p.terms()) sum += c;
    return sum;
}

SparsePoly permute_variables(const SparsePoly& p, const std::vector<int>& perm) {
    if (static_cast<int>(perm.size()) != p.arity())
        throw std::invalid_argument("permutation arity mismatch");
    SparsePoly out(p.arity());
    Exponents moved(static_cast<std::size_t>(p.arity()));
    for (const auto& [e, c] : p.terms()) {
        for (std::size_t i = 0; i < moved.size(); ++i)
            moved[static_cast<std::size_t>(perm[i])] = e[i];
        out.add_term(moved, c);
    }
    return out;
}

SparsePoly truncate_to_bound(const SparsePoly& p, const Exponents& bound) {
    if (static_cast<int>(bound.size()) != p.arity())
        throw std::invalid_argument("bound arity mismatch");
    SparsePoly out(p.arity());
    for (const auto& [e, c] : p.terms()) {
        bool keep = true;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > bound[i]) {
                keep = false;
                break;
            }
        if (keep) out.add_term(e, c);
    }
    return out;
}

bool is_symmetric(const SparsePoly& p) {
    int n = p.arity();
    std::vector<int> perm(static_cast<std::size_t>(n));
    for (int t = 0; t + 1 < n; ++t) {
        std::iota(perm.begin(), perm.end(), 0);
        std::swap(perm[static_cast<std::size_t>(t)], perm[static_cast<std::size_t>(t + 1)]);
        if (permute_variables(p, perm) != p) return false;
    }
    return true;
}

std::optional<SparsePoly> divide_exact(const SparsePoly& p, const SparsePoly& q) {
    if (p.arity() != q.arity()) throw std::invalid_argument("polynomial arity mismatch");
    if (q.is_zero()) throw std::invalid_argument("division by zero polynomial");
    SparsePoly quotient(p.arity());
    SparsePoly remainder = p;
    const auto& [eq, cq] = *q.terms().begin();
    Exponents diff(static_cast<std::size_t>(p.arity()));
    while (!remainder.is_zero()) {
        const auto& [er, cr] = *remainder.terms().begin();
        for (std::size_t i = 0; i < diff.size(); ++i) {
            diff[i] = er[i] - eq[i];
            if (diff[i] < 0) return std::nullopt;
        }
        if (!mpz_divisible_p(cr.get_mpz_t(), cq.get_mpz_t())) return std::nullopt;
        SparsePoly t = SparsePoly::monomial(diff, cr / cq);
        quotient += t;
        remainder -= mul(t, q);
    }
    return quotient;
}

std::string to_canonical_string(const SparsePoly& p) {
    if (p.is_zero()) return "0";
    std::string out;
    for (const auto& [e, c] : p.terms()) {
        if (!out.empty()) out += ' ';
        out += (c < 0) ? '-' : '+';
        mpz_class a = abs(c);
        out += a.get_str();
        for (std::size_t i = 0; i < e.size(); ++i) {
            if (e[i] == 0) continue;
            out += "*x" + std::to_string(i + 1);
            if (e[i] > 1) out += "^" + std::to_string(e[i]);
        }
    }
    return out;
}

namespace {

// One term: [+-]COEF(*xIDX(^EXP)?)*
void parse_term(const std::string& tok, int arity, SparsePoly& out) {
    std::size_t pos = 0;
    int sign = 1;
    if (pos < tok.size() && (tok[pos] == '+' || tok[pos] == '-')) {
        if (tok[pos] == '-') sign = -1;
        ++pos;
    }
    std::size_t start = pos;
    while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
    if (pos == start) throw std::invalid_argument("expected coefficient in term '" + tok + "'");
    mpz_class coef(tok.substr(start, pos - start));
    coef *= sign;
    Exponents e(static_cast<std::size_t>(arity), 0);
    while (pos < tok.size()) {
        if (tok[pos] != '*' || pos + 1 >= tok.size() || tok[pos + 1] != 'x')
            throw std::invalid_argument("expected '*x' in term '" + tok + "'");
        pos += 2;
        start = pos;
        while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
        if (pos == start) throw std::invalid_argument("expected variable index in '" + tok + "'");
        int idx = std::stoi(tok.substr(start, pos - start));
        if (idx < 1 || idx > arity)
            throw std::invalid_argument("variable index out of range in '" + tok + "'");
        int exp = 1;
        if (pos < tok.size() && tok[pos] == '^') {
            ++pos;
            start = pos;
            while (pos < tok.size() && std::isdigit(static_cast<unsigned char>(tok[pos]))) ++pos;
            if (pos == start) throw std::invalid_argument("expected exponent in '" + tok + "'");
            exp = std::stoi(tok.substr(start, pos - start));
        }
        e[static_cast<std::size_t>(idx - 1)] += exp;
    }
    out.add_term(e, coef);
}

}  // namespace

SparsePoly parse_poly(const std::string& text, int arity) {
    SparsePoly out(arity);
    std::istringstream in(text);
    std::string tok;
    std::vector<std::string> toks;
    while (in >> tok) toks.push_back(tok);
    if (toks.size() == 1 && toks[0] == "0") return out;
    for (const std::string& t : toks) parse_term(t, arity, out);
    return out;
}

}  // namespace schubound
