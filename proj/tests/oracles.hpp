// Test-side oracles, deliberately independent of the library code paths they
// check: a naive convolution multiplier over a plain lex-ordered map, a
// standard-tableau counter, the Weyl dimension formula, and small random
// generators.
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <map>
#include <random>
#include <vector>

#include "schubound/partition.hpp"
#include "schubound/sparse_poly.hpp"

namespace oracle {

using TermList = std::map<std::vector<int>, mpz_class>;  // plain lex order

inline TermList to_terms(const schubound::SparsePoly& p) {
    TermList out;
    for (const auto& [e, c] : p.terms()) out[e] = c;
    return out;
}

inline schubound::SparsePoly from_terms(const TermList& terms, int arity) {
    schubound::SparsePoly p(arity);
    for (const auto& [e, c] : terms) p.add_term(e, c);
    return p;
}

inline TermList naive_mul(const TermList& a, const TermList& b) {
    TermList out;
    for (const auto& [ea, ca] : a)
        for (const auto& [eb, cb] : b) {
            std::vector<int> e(ea.size());
            for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
            out[e] += ca * cb;
            if (out[e] == 0) out.erase(e);
        }
    return out;
}

inline TermList naive_truncate(const TermList& a, const std::vector<int>& bound) {
    TermList out;
    for (const auto& [e, c] : a) {
        bool keep = true;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > bound[i]) keep = false;
        if (keep) out[e] = c;
    }
    return out;
}

// Number of standard Young tableaux by direct backtracking.
inline mpz_class syt_count(const std::vector<int>& shape) {
    mpz_class total = 0;
    std::size_t cells = 0;
    for (int r : shape) cells += static_cast<std::size_t>(r);
    std::vector<std::vector<int>> tab(shape.size());
    for (std::size_t r = 0; r < shape.size(); ++r)
        tab[r].assign(static_cast<std::size_t>(shape[r]), 0);
    auto place = [&](auto&& self, std::size_t next) -> void {
        if (next == cells) {
            total += 1;
            return;
        }
        for (std::size_t r = 0; r < shape.size(); ++r) {
            std::size_t col = 0;
            while (col < tab[r].size() && tab[r][col] != 0) ++col;
            if (col == tab[r].size()) continue;
            if (r > 0 && (col >= tab[r - 1].size() || tab[r - 1][col] == 0)) continue;
            tab[r][col] = static_cast<int>(next + 1);
            self(self, next + 1);
            tab[r][col] = 0;
        }
    };
    place(place, 0);
    return total;
}

// dim L_lambda for gl_n: prod_{i<j} (lambda_i - lambda_j + j - i) / (j - i).
inline mpz_class weyl_dimension(const schubound::Partition& lambda, int n) {
    mpq_class dim = 1;
    for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) {
            int li = lambda.part(static_cast<std::size_t>(i - 1));
            int lj = lambda.part(static_cast<std::size_t>(j - 1));
            mpq_class factor(li - lj + j - i, j - i);
            factor.canonicalize();
            dim *= factor;
        }
    if (dim.get_den() != 1) return -1;
    return dim.get_num();
}

inline void collect_partitions(int remaining, int max_part, int max_parts,
                               std::vector<int>& acc,
                               std::vector<schubound::Partition>& out) {
    if (remaining == 0) {
        out.push_back(schubound::Partition(acc));
        return;
    }
    if (max_parts == 0) return;
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        acc.push_back(p);
        collect_partitions(remaining - p, p, max_parts - 1, acc, out);
        acc.pop_back();
    }
}

inline std::vector<schubound::Partition> partitions_of(int w, int max_parts, int max_part) {
    std::vector<schubound::Partition> out;
    std::vector<int> acc;
    collect_partitions(w, std::min(w, max_part), max_parts, acc, out);
    return out;
}

template <typename Rng>
schubound::Partition random_partition(int weight, int max_parts, Rng& rng) {
    auto all = partitions_of(weight, max_parts, weight);
    std::uniform_int_distribution<std::size_t> dist(0, all.size() - 1);
    return all[dist(rng)];
}

template <typename Rng>
schubound::SparsePoly random_poly(int arity, int max_terms, int max_exp, Rng& rng) {
    std::uniform_int_distribution<int> terms_dist(0, max_terms);
    std::uniform_int_distribution<int> exp_dist(0, max_exp);
    std::uniform_int_distribution<int> coef_dist(-9, 9);
    schubound::SparsePoly p(arity);
    int terms = terms_dist(rng);
    for (int t = 0; t < terms; ++t) {
        std::vector<int> e(static_cast<std::size_t>(arity));
        for (auto& x : e) x = exp_dist(rng);
        p.add_term(e, coef_dist(rng));
    }
    return p;
}

}  // namespace oracle
