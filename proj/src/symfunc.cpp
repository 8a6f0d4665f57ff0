#include "schubound/symfunc.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace schubound {

CycleType::CycleType(std::vector<int> lengths) : lengths_(std::move(lengths)) {
    for (int l : lengths_)
        if (l < 1) throw std::invalid_argument("cycle lengths must be positive");
    std::sort(lengths_.begin(), lengths_.end(), std::greater<>());
}

CycleType CycleType::identity(int k) {
    if (k < 0) throw std::invalid_argument("k must be nonnegative");
    return CycleType(std::vector<int>(static_cast<std::size_t>(k), 1));
}

long long CycleType::total() const {
    return std::accumulate(lengths_.begin(), lengths_.end(), 0LL);
}

namespace {

// Fills semistandard tableaux of the given shape with entries in 1..n,
// accumulating one monomial per tableau.
void enumerate_ssyt(const std::vector<int>& shape, int n, std::size_t row, int col,
                    std::vector<std::vector<int>>& tab, Exponents& content,
                    SparsePoly& out) {
    if (row == shape.size()) {
        out.add_term(content, 1);
        return;
    }
    if (col == shape[row]) {
        enumerate_ssyt(shape, n, row + 1, 0, tab, content, out);
        return;
    }
    int lo = 1;
    if (col > 0) lo = std::max(lo, tab[row][static_cast<std::size_t>(col) - 1]);
    if (row > 0) lo = std::max(lo, tab[row - 1][static_cast<std::size_t>(col)] + 1);
    for (int v = lo; v <= n; ++v) {
        tab[row][static_cast<std::size_t>(col)] = v;
        content[static_cast<std::size_t>(v - 1)]++;
        enumerate_ssyt(shape, n, row, col + 1, tab, content, out);
        content[static_cast<std::size_t>(v - 1)]--;
    }
}

std::mutex schur_cache_mutex;
std::map<std::pair<std::vector<int>, int>, SparsePoly>& schur_cache() {
    static std::map<std::pair<std::vector<int>, int>, SparsePoly> cache;
    return cache;
}

}  // namespace

SparsePoly schur_poly(const Partition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("schur_poly requires n >= 1");
    if (lambda.length() > static_cast<std::size_t>(n)) return SparsePoly(n);

    auto key = std::make_pair(lambda.parts(), n);
    {
        std::lock_guard lock(schur_cache_mutex);
        auto it = schur_cache().find(key);
        if (it != schur_cache().end()) return it->second;
    }

    SparsePoly out(n);
    if (lambda.empty()) {
        out = SparsePoly::constant(n, 1);
    } else {
        std::vector<std::vector<int>> tab;
        for (int r : lambda.parts()) tab.emplace_back(static_cast<std::size_t>(r), 0);
        Exponents content(static_cast<std::size_t>(n), 0);
        enumerate_ssyt(lambda.parts(), n, 0, 0, tab, content, out);
    }

    std::lock_guard lock(schur_cache_mutex);
    schur_cache().emplace(std::move(key), out);
    return out;
}

SparsePoly schur_poly_bialternant(const Partition& lambda, int n) {
    if (n < 1) throw std::invalid_argument("schur_poly requires n >= 1");
    if (lambda.length() > static_cast<std::size_t>(n)) return SparsePoly(n);

    // Alternant det(x_i^{lambda_j + n - j}): the shifted exponents are
    // strictly decreasing, so the n! expansion terms are distinct monomials.
    std::vector<int> shifted(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        shifted[static_cast<std::size_t>(i)] = lambda.part(static_cast<std::size_t>(i)) + n - 1 - i;

    SparsePoly alternant(n);
    std::vector<int> perm(static_cast<std::size_t>(n));
    std::iota(perm.begin(), perm.end(), 0);
    Exponents e(static_cast<std::size_t>(n));
    do {
        int inversions = 0;
        for (std::size_t i = 0; i < perm.size(); ++i)
            for (std::size_t j = i + 1; j < perm.size(); ++j)
                if (perm[i] > perm[j]) ++inversions;
        for (std::size_t i = 0; i < perm.size(); ++i)
            e[i] = shifted[static_cast<std::size_t>(perm[i])];
        alternant.add_term(e, inversions % 2 == 0 ? 1 : -1);
    } while (std::next_permutation(perm.begin(), perm.end()));

    auto quotient = divide_exact(alternant, vandermonde(n));
    if (!quotient)
        throw std::logic_error("bialternant is not divisible by the Vandermonde determinant");
    return *quotient;
}

SchurExpansion schur_expand(const SparsePoly& p, int n) {
    if (p.arity() != n) throw std::invalid_argument("arity mismatch");
    if (!is_symmetric(p))
        throw std::invalid_argument("schur_expand requires a symmetric polynomial");

    SchurExpansion out;
    SparsePoly r = p;
    while (!r.is_zero()) {
        // Symmetry puts the sorted-descending rearrangement of every exponent
        // in the support, so the graded-lex leading exponent is a partition.
        std::vector<int> lead = r.terms().begin()->first;
        mpz_class cval = r.terms().begin()->second;
        if (!std::is_sorted(lead.begin(), lead.end(), std::greater<>()))
            throw std::logic_error("leading exponent of a symmetric polynomial not a partition");
        Partition la(std::move(lead));
        SparsePoly s = schur_poly(la, n);
        for (const auto& [se, sc] : s.terms()) r.add_term(se, -cval * sc);
        out.coeffs.emplace(std::move(la), std::move(cval));
    }
    return out;
}

namespace {

struct SkewShape {
    std::vector<int> outer;
    std::vector<int> inner;  // zero-padded to outer.size()
};

// Counts Littlewood-Richardson tableaux of the skew shape with content b:
// semistandard fillings whose reverse reading word (rows top to bottom,
// right to left within a row) is a ballot sequence.
mpz_class count_lr_tableaux(const SkewShape& shape, const Partition& b) {
    std::size_t rows = shape.outer.size();
    std::vector<std::pair<int, int>> cells;  // reverse reading order
    for (std::size_t r = 0; r < rows; ++r)
        for (int col = shape.outer[r] - 1; col >= shape.inner[r]; --col)
            cells.emplace_back(static_cast<int>(r), col);

    std::size_t values = b.length();
    std::vector<int> remaining(values);
    for (std::size_t v = 0; v < values; ++v) remaining[v] = b.part(v);
    std::vector<int> placed(values, 0);
    std::vector<std::vector<int>> tab(rows);
    for (std::size_t r = 0; r < rows; ++r)
        tab[r].assign(static_cast<std::size_t>(shape.outer[r]), 0);

    mpz_class count = 0;
    auto fill = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            count += 1;
            return;
        }
        auto [r, col] = cells[idx];
        std::size_t ru = static_cast<std::size_t>(r);
        std::size_t cu = static_cast<std::size_t>(col);
        int row_cap = (col + 1 < shape.outer[ru]) ? tab[ru][cu + 1]
                                                  : static_cast<int>(values);
        int col_floor = 0;
        if (r > 0 && col >= shape.inner[ru - 1] && col < shape.outer[ru - 1])
            col_floor = tab[ru - 1][cu];
        for (int v = col_floor + 1; v <= row_cap; ++v) {
            std::size_t vi = static_cast<std::size_t>(v - 1);
            if (remaining[vi] == 0) continue;
            if (v > 1 && placed[vi] + 1 > placed[vi - 1]) continue;  // ballot
            remaining[vi]--;
            placed[vi]++;
            tab[ru][cu] = v;
            self(self, idx + 1);
            remaining[vi]++;
            placed[vi]--;
        }
    };
    fill(fill, 0);
    return count;
}

void enumerate_outer_shapes(const Partition& a, long long extra, int n,
                            std::size_t row, int prev, long long used,
                            std::vector<int>& acc,
                            std::vector<std::vector<int>>& out) {
    if (used > extra) return;
    if (row == static_cast<std::size_t>(n)) {
        if (used == extra) out.push_back(acc);
        return;
    }
    int lo = a.part(row);
    for (int v = lo; v <= prev; ++v) {
        long long new_used = used + (v - lo);
        if (new_used > extra) break;
        acc.push_back(v);
        enumerate_outer_shapes(a, extra, n, row + 1, v, new_used, acc, out);
        acc.pop_back();
    }
}

std::mutex lr_cache_mutex;
std::map<std::tuple<std::vector<int>, std::vector<int>, int>,
         std::map<Partition, mpz_class>>&
lr_cache() {
    static std::map<std::tuple<std::vector<int>, std::vector<int>, int>,
                    std::map<Partition, mpz_class>>
        cache;
    return cache;
}

}  // namespace

std::map<Partition, mpz_class> lr_expand_pair(const Partition& a, const Partition& b, int n) {
    if (n < 1) throw std::invalid_argument("lr_expand_pair requires n >= 1");
    if (a.length() > static_cast<std::size_t>(n) || b.length() > static_cast<std::size_t>(n))
        return {};

    auto key = std::make_tuple(a.parts(), b.parts(), n);
    {
        std::lock_guard lock(lr_cache_mutex);
        auto it = lr_cache().find(key);
        if (it != lr_cache().end()) return it->second;
    }

    std::map<Partition, mpz_class> out;
    std::vector<std::vector<int>> shapes;
    std::vector<int> acc;
    int cap = a.first() + static_cast<int>(b.weight());
    enumerate_outer_shapes(a, b.weight(), n, 0, cap, 0, acc, shapes);
    for (std::vector<int>& outer : shapes) {
        SkewShape shape;
        shape.inner.assign(outer.size(), 0);
        for (std::size_t r = 0; r < outer.size(); ++r) shape.inner[r] = a.part(r);
        shape.outer = outer;
        mpz_class cnt = count_lr_tableaux(shape, b);
        if (cnt > 0) out.emplace(Partition(std::move(outer)), std::move(cnt));
    }

    std::lock_guard lock(lr_cache_mutex);
    lr_cache().emplace(std::move(key), out);
    return out;
}

mpz_class lr_multiplicity(const std::vector<Partition>& lambdas, const Partition& mu, int n) {
    if (n < 1) throw std::invalid_argument("lr_multiplicity requires n >= 1");
    long long total = 0;
    for (const Partition& la : lambdas) total += la.weight();
    if (mu.weight() != total || mu.length() > static_cast<std::size_t>(n)) return 0;

    auto contained_in_mu = [&mu](const Partition& p) {
        for (std::size_t i = 0; i < p.length(); ++i)
            if (p.part(i) > mu.part(i)) return false;
        return true;
    };

    // Shapes grow monotonically under LR products, so anything sticking out
    // of mu can be dropped early.
    std::map<Partition, mpz_class> expansion{{Partition{}, 1}};
    for (const Partition& la : lambdas) {
        std::map<Partition, mpz_class> next;
        for (const auto& [rho, c] : expansion)
            for (const auto& [outer, lr] : lr_expand_pair(rho, la, n))
                if (contained_in_mu(outer)) next[outer] += c * lr;
        expansion = std::move(next);
    }
    auto it = expansion.find(mu);
    return it == expansion.end() ? mpz_class(0) : it->second;
}

namespace {

std::mutex mn_cache_mutex;
std::map<std::pair<std::vector<int>, std::vector<int>>, mpz_class>& mn_cache() {
    static std::map<std::pair<std::vector<int>, std::vector<int>>, mpz_class> cache;
    return cache;
}

// Border-strip recursion over first-column hook lengths (beta numbers):
// removing a strip of size l is the move b -> b - l on a beta number, with
// sign (-1)^h where h counts beta numbers strictly between b - l and b.
mpz_class mn_recurse(const std::vector<int>& mu, std::vector<int> cycles) {
    if (mu.empty()) return 1;

    auto key = std::make_pair(mu, cycles);
    {
        std::lock_guard lock(mn_cache_mutex);
        auto it = mn_cache().find(key);
        if (it != mn_cache().end()) return it->second;
    }

    int l = cycles.back();  // smallest cycle first keeps the memo key short
    cycles.pop_back();

    std::size_t m = mu.size();
    std::vector<int> beta(m);
    for (std::size_t i = 0; i < m; ++i)
        beta[i] = mu[i] + static_cast<int>(m - 1 - i);

    mpz_class acc = 0;
    for (std::size_t i = 0; i < m; ++i) {
        int target = beta[i] - l;
        if (target < 0) continue;
        bool occupied = false;
        int height = 0;
        for (std::size_t j = 0; j < m; ++j) {
            if (j == i) continue;
            if (beta[j] == target) {
                occupied = true;
                break;
            }
            if (beta[j] > target && beta[j] < beta[i]) ++height;
        }
        if (occupied) continue;
        std::vector<int> nb = beta;
        nb[i] = target;
        std::sort(nb.begin(), nb.end(), std::greater<>());
        std::vector<int> next(m);
        for (std::size_t j = 0; j < m; ++j)
            next[j] = nb[j] - static_cast<int>(m - 1 - j);
        while (!next.empty() && next.back() == 0) next.pop_back();
        mpz_class sub = mn_recurse(next, cycles);
        if (height % 2 == 0)
            acc += sub;
        else
            acc -= sub;
    }

    std::lock_guard lock(mn_cache_mutex);
    mn_cache().emplace(std::move(key), acc);
    return acc;
}

}  // namespace

mpz_class murnaghan_nakayama(const Partition& mu, const CycleType& cycle_type) {
    if (mu.weight() != cycle_type.total())
        throw std::invalid_argument("murnaghan_nakayama: |mu| != sum of cycle lengths");
    return mn_recurse(mu.parts(), cycle_type.lengths());
}

}  // namespace schubound
