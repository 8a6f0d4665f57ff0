#include "schubound/bounds.hpp"

#include <array>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <stdexcept>
#include <thread>

#include "schubound/characters.hpp"
#include "schubound/symfunc.hpp"

namespace schubound {

namespace {

// The class whose character is q: one 2-cycle per conjugate pair, fixed
// points for the real points.
ProductClass charsign_class(const std::vector<Partition>& lambdas, int c) {
    std::size_t k = lambdas.size();
    if (c < 0) throw std::invalid_argument("c must be nonnegative");
    if (2 * static_cast<std::size_t>(c) > k)
        throw std::invalid_argument("2c exceeds the number of partitions");
    for (int i = 0; i < c; ++i)
        if (lambdas[static_cast<std::size_t>(2 * i)] != lambdas[static_cast<std::size_t>(2 * i + 1)])
            throw std::invalid_argument("conjugate pairing requires lambda^(2i-1) = lambda^(2i)");

    ProductClass cls;
    for (int i = 0; i < c; ++i)
        cls.add_factor(lambdas[static_cast<std::size_t>(2 * i)], 2, CycleType({2}));
    for (std::size_t j = static_cast<std::size_t>(2 * c); j < k; ++j)
        cls.add_factor(lambdas[j], 1, CycleType({1}));
    return cls;
}

int worker_count(int jobs) {
    int w = 0;
    if (const char* env = std::getenv("SCHUBOUND_THREADS")) w = std::atoi(env);
    if (w < 1) {
        w = static_cast<int>(std::thread::hardware_concurrency());
        if (w < 1) w = 1;
    }
    return std::min(w, jobs);
}

mpz_class factorial(long v) {
    mpz_class r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(v));
    return r;
}

mpz_class binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

}  // namespace

mpz_class signature_q(const std::vector<Partition>& lambdas, const Partition& mu,
                      int c, int n, bool* weight_mismatch) {
    return character_value(charsign_class(lambdas, c), mu, n, weight_mismatch);
}

std::vector<mpz_class> signature_table(const SchubertProblem& p, int c_lo, int c_hi) {
    if (c_lo < 0 || c_hi < c_lo)
        throw std::invalid_argument("signature_table requires 0 <= c_lo <= c_hi");
    SchubertProblem probe = p;
    probe.c = c_hi;
    ValidationReport report = validate_problem(probe);
    if (!report.ok()) {
        std::string msg = "invalid problem:";
        for (const std::string& v : report.violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }

    Partition mu = complement(p.nu, p.n, p.d);
    int jobs = c_hi - c_lo + 1;
    std::vector<mpz_class> rows(static_cast<std::size_t>(jobs));
    int workers = worker_count(jobs);
    if (workers <= 1) {
        for (int i = 0; i < jobs; ++i)
            rows[static_cast<std::size_t>(i)] = signature_q(p.lambdas, mu, c_lo + i, p.n);
        return rows;
    }

    std::vector<std::thread> pool;
    std::exception_ptr failure;
    std::mutex failure_mutex;
    for (int t = 0; t < workers; ++t)
        pool.emplace_back([&, t] {
            try {
                for (int i = t; i < jobs; i += workers)
                    rows[static_cast<std::size_t>(i)] =
                        signature_q(p.lambdas, mu, c_lo + i, p.n);
            } catch (...) {
                std::lock_guard lock(failure_mutex);
                if (!failure) failure = std::current_exception();
            }
        });
    for (std::thread& th : pool) th.join();
    if (failure) std::rethrow_exception(failure);
    return rows;
}

BoundReport lower_bound_a(const SchubertProblem& p, bool verify_routes) {
    ValidationReport report = validate_problem(p);
    if (!report.ok()) {
        std::string msg = "invalid problem:";
        for (const std::string& v : report.violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }

    BoundReport out;
    out.problem = p;
    out.mu = complement(p.nu, p.n, p.d);

    // The target monomial x_1^{d-1-nu_n} ... x_n^{d-n-nu_1} is exactly
    // x^{mu+delta} for the complement mu.
    for (int i = 1; i <= p.n; ++i) {
        int direct = p.d - i - p.nu.part(static_cast<std::size_t>(p.n - i));
        int shifted = out.mu.part(static_cast<std::size_t>(i - 1)) + p.n - i;
        if (direct != shifted)
            throw std::logic_error("complement does not reproduce the target monomial");
    }

    out.a_signed = signature_q(p.lambdas, out.mu, p.c, p.n);
    out.lower_bound = abs(out.a_signed);
    out.complex_count =
        p.c == 0 ? out.a_signed : signature_q(p.lambdas, out.mu, 0, p.n);

    std::string rect = std::to_string(p.n) + "x" + std::to_string(p.d - p.n);
    out.provenance["mu"] = "complement of nu in the " + rect + " rectangle";
    out.provenance["a"] =
        "coefficient of x^(mu+delta) in Delta_n * prod S (antisymmetrized extraction), c = " +
        std::to_string(p.c);
    out.provenance["lower_bound"] = "|a|";
    out.provenance["complex_count"] = "a at c = 0 (= dim of the multiplicity space)";

    bool all_single_box = true;
    for (const Partition& la : p.lambdas)
        if (la != Partition({1})) {
            all_single_box = false;
            break;
        }
    int k = static_cast<int>(p.lambdas.size());
    if (all_single_box && !out.mu.empty()) {
        int m = out.mu.first();
        int rows = static_cast<int>(out.mu.length());
        if (out.mu == Partition::rectangle(rows, m) && rows <= m) {
            out.white_bound = white_bound(m, rows);
            out.provenance["white_bound"] = "rectangle sign-imbalance, m=" +
                                            std::to_string(m) + ", p=" + std::to_string(rows);
        }
        bool tail_ones = true;
        for (std::size_t i = 1; i < out.mu.length(); ++i)
            if (out.mu.part(i) != 1) {
                tail_ones = false;
                break;
            }
        if (tail_ones && out.mu.length() == static_cast<std::size_t>(p.n) &&
            out.mu.first() == k + 1 - p.n) {
            out.hhs_bound = hhs_bound_for_c(k, p.n, p.c);
            out.provenance["hhs_bound"] =
                "r(k,n,s) with k=" + std::to_string(k) + ", s=" +
                std::to_string(2 * p.c < k ? p.c : p.c - 1);
        }
    }

    if (verify_routes) {
        mpz_class a2 = character_value_via_expansion(charsign_class(p.lambdas, p.c),
                                                     out.mu, p.n);
        mpz_class m2 = lr_multiplicity(p.lambdas, out.mu, p.n);
        bool agree = (a2 == out.a_signed) && (m2 == out.complex_count);
        out.routes_agree = agree;
        out.provenance["verify"] =
            agree ? "Schur-expansion route and LR dimension agree"
                  : "route mismatch: expansion a=" + a2.get_str() + ", LR dim=" + m2.get_str();
    }
    return out;
}

SparsePoly bound_poly(const SchubertProblem& p) {
    ValidationReport report = validate_problem(p);
    if (!report.ok()) {
        std::string msg = "invalid problem:";
        for (const std::string& v : report.violations) msg += " " + v + ";";
        throw std::invalid_argument(msg);
    }
    return mul(vandermonde(p.n),
               class_product_poly(charsign_class(p.lambdas, p.c), p.n, nullptr));
}

std::pair<SchubertProblem, int> transpose_dual(const SchubertProblem& p) {
    ValidationReport report = validate_problem(p);
    if (!report.ok()) throw std::invalid_argument("transpose_dual requires a valid problem");

    SchubertProblem dual;
    dual.n = p.d - p.n;
    dual.d = p.d;
    dual.c = p.c;
    dual.nu = p.nu.conjugate();
    for (const Partition& la : p.lambdas) dual.lambdas.push_back(la.conjugate());

    long long m = 0;
    for (int i = 0; i < p.c; ++i) m += p.lambdas[static_cast<std::size_t>(2 * i + 1)].weight();
    return {std::move(dual), m % 2 == 0 ? 1 : -1};
}

SchubertProblem reduced_problem(const SchubertProblem& p) {
    SchubertProblem r = p;
    r.lambdas.push_back(p.nu);
    r.nu = Partition{};
    return r;
}

mpz_class white_bound(int m, int p) {
    if (m < 1 || p < 1) throw std::invalid_argument("white_bound requires positive m, p");
    if (p > m) throw std::invalid_argument("white_bound requires p <= m");
    if ((m + p) % 2 == 0) return 0;

    mpq_class acc(factorial(static_cast<long>(m) * p / 2));
    acc /= mpq_class(factorial((m + p - 1) / 2));
    for (int i = 1; i <= p - 1; ++i) {
        acc *= mpq_class(factorial(i) * factorial(m - i));
        acc /= mpq_class(factorial(m - p + 2 * i) * factorial((m - p - 1) / 2 + i));
    }
    if (acc.get_den() != 1)
        throw std::logic_error("white_bound product did not come out integral");
    return acc.get_num();
}

mpz_class hhs_count_r(int k, int n, int s) {
    if (k < 1 || n < 1 || n > k)
        throw std::invalid_argument("hhs_count_r requires 1 <= n <= k");
    if (s < 0 || 2 * s > k - 1)
        throw std::invalid_argument("hhs_count_r requires 0 <= 2s <= k-1");
    mpz_class r = 0;
    for (int j = 0; j <= s; ++j)
        r += binomial(s, j) * binomial(k - 1 - 2 * s, k - n - 2 * j);
    return r;
}

mpz_class hhs_bound_for_c(int k, int n, int c) {
    if (c < 0 || 2 * c > k)
        throw std::invalid_argument("hhs_bound_for_c requires 0 <= 2c <= k");
    return hhs_count_r(k, n, 2 * c < k ? c : c - 1);
}

SchubertProblem vector_problem(int p, int m, int c) {
    if (p < 1 || m < 1) throw std::invalid_argument("vector_problem requires positive p, m");
    SchubertProblem out;
    out.n = p;
    out.d = p + m;
    out.c = c;
    out.lambdas.assign(static_cast<std::size_t>(p) * static_cast<std::size_t>(m),
                       Partition({1}));
    ValidationReport report = validate_problem(out);
    if (!report.ok()) throw std::invalid_argument("vector_problem parameters are inconsistent");
    return out;
}

SchubertProblem hhs_vector_problem(int n, int k, int c) {
    if (n < 1 || k < n) throw std::invalid_argument("hhs_vector_problem requires 1 <= n <= k");
    SchubertProblem out;
    out.n = n;
    out.d = k + 1;
    out.c = c;
    out.lambdas.assign(static_cast<std::size_t>(k), Partition({1}));
    out.nu = Partition::rectangle(n - 1, k - n);
    ValidationReport report = validate_problem(out);
    if (!report.ok())
        throw std::invalid_argument("hhs_vector_problem parameters are inconsistent");
    return out;
}

// ---------------------------------------------------------------------------
// Counterexample: two commuting selfadjoint operators with only one common
// eigenvector. All checks run in exact integer/rational arithmetic.

namespace {

using Mat4 = std::array<std::array<long long, 4>, 4>;

Mat4 matmul(const Mat4& a, const Mat4& b) {
    Mat4 out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            long long s = 0;
            for (int t = 0; t < 4; ++t) s += a[i][t] * b[t][j];
            out[i][j] = s;
        }
    return out;
}

Mat4 transpose(const Mat4& a) {
    Mat4 out{};
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i][j] = a[j][i];
    return out;
}

bool is_zero(const Mat4& a) {
    for (const auto& row : a)
        for (long long v : row)
            if (v != 0) return false;
    return true;
}

// Rank of an r x 4 integer matrix over the rationals.
int rank_of(std::vector<std::array<long long, 4>> rows) {
    std::vector<std::array<mpq_class, 4>> m(rows.size());
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = static_cast<long>(rows[i][j]);
    int rank = 0;
    for (int col = 0; col < 4 && rank < static_cast<int>(m.size()); ++col) {
        int pivot = -1;
        for (int r = rank; r < static_cast<int>(m.size()); ++r)
            if (m[static_cast<std::size_t>(r)][col] != 0) {
                pivot = r;
                break;
            }
        if (pivot < 0) continue;
        std::swap(m[static_cast<std::size_t>(pivot)], m[static_cast<std::size_t>(rank)]);
        for (int r = 0; r < static_cast<int>(m.size()); ++r) {
            if (r == rank || m[static_cast<std::size_t>(r)][col] == 0) continue;
            mpq_class f = m[static_cast<std::size_t>(r)][col] /
                          m[static_cast<std::size_t>(rank)][col];
            for (int j = 0; j < 4; ++j)
                m[static_cast<std::size_t>(r)][j] -= f * m[static_cast<std::size_t>(rank)][j];
        }
        ++rank;
    }
    return rank;
}

// Congruence-diagonalizes a symmetric matrix; returns (positive, negative,
// zero) diagonal counts.
std::array<int, 3> symmetric_inertia(const Mat4& a) {
    std::array<std::array<mpq_class, 4>, 4> m;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = static_cast<long>(a[i][j]);
    const int N = 4;
    for (int i = 0; i < N; ++i) {
        if (m[i][i] == 0) {
            int diag = -1;
            for (int j = i + 1; j < N; ++j)
                if (m[j][j] != 0) {
                    diag = j;
                    break;
                }
            if (diag >= 0) {
                for (int t = 0; t < N; ++t) std::swap(m[i][t], m[diag][t]);
                for (int t = 0; t < N; ++t) std::swap(m[t][i], m[t][diag]);
            } else {
                int off = -1;
                for (int j = i + 1; j < N; ++j)
                    if (m[i][j] != 0) {
                        off = j;
                        break;
                    }
                if (off < 0) continue;
                for (int t = 0; t < N; ++t) m[i][t] += m[off][t];
                for (int t = 0; t < N; ++t) m[t][i] += m[t][off];
            }
        }
        if (m[i][i] == 0) continue;
        for (int r = i + 1; r < N; ++r) {
            if (m[r][i] == 0) continue;
            mpq_class f = m[r][i] / m[i][i];
            for (int t = 0; t < N; ++t) m[r][t] -= f * m[i][t];
            for (int t = 0; t < N; ++t) m[t][r] -= f * m[t][i];
        }
    }
    std::array<int, 3> counts{0, 0, 0};
    for (int i = 0; i < N; ++i) {
        if (m[i][i] > 0)
            counts[0]++;
        else if (m[i][i] < 0)
            counts[1]++;
        else
            counts[2]++;
    }
    return counts;
}

}  // namespace

bool CounterexampleReport::all_passed() const {
    for (const Check& c : checks)
        if (!c.passed) return false;
    return true;
}

CounterexampleReport verify_indefinite_counterexample() {
    const Mat4 x{{{0, 0, 0, 0}, {1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 0, 0}}};
    const Mat4 y{{{0, 0, 0, 0}, {0, 0, 0, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}}};
    const Mat4 j{{{0, 0, 1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, 1}}};

    CounterexampleReport report;
    auto add = [&report](std::string name, bool passed, std::string detail = "") {
        report.checks.push_back({std::move(name), passed, std::move(detail)});
    };

    Mat4 xx = matmul(x, x);
    Mat4 yy = matmul(y, y);
    add("x^2 = y^2", xx == yy);
    add("x^3 = 0", is_zero(matmul(xx, x)));
    add("y^3 = 0", is_zero(matmul(yy, y)));
    add("xy = 0", is_zero(matmul(x, y)));
    add("yx = 0", is_zero(matmul(y, x)));

    // Real matrices, so conjugation is trivial: x^t J = J x.
    add("x selfadjoint w.r.t. J", matmul(transpose(x), j) == matmul(j, x));
    add("y selfadjoint w.r.t. J", matmul(transpose(y), j) == matmul(j, y));

    auto inertia = symmetric_inertia(j);
    add("J nondegenerate", inertia[2] == 0,
        std::to_string(inertia[2]) + " zero eigenvalue directions");
    add("J signature = 2", inertia[0] - inertia[1] == 2,
        "inertia (" + std::to_string(inertia[0]) + "," + std::to_string(inertia[1]) + ")");

    auto rows_of = [](const Mat4& m) {
        std::vector<std::array<long long, 4>> rows;
        for (const auto& r : m) rows.push_back(r);
        return rows;
    };
    int ker_x = 4 - rank_of(rows_of(x));
    int ker_y = 4 - rank_of(rows_of(y));
    add("dim ker x = 2", ker_x == 2, "dim = " + std::to_string(ker_x));
    add("dim ker y = 2", ker_y == 2, "dim = " + std::to_string(ker_y));

    auto stacked = rows_of(x);
    for (const auto& r : y) stacked.push_back(r);
    int common = 4 - rank_of(stacked);
    add("dim (ker x intersect ker y) = 1", common == 1, "dim = " + std::to_string(common));

    return report;
}

}  // namespace schubound
