#include "schubound/partition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace schubound {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 0)
            throw std::invalid_argument("partition parts must be nonnegative");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("partition parts must be weakly decreasing");
    }
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
}

Partition Partition::rectangle(int rows, int width) {
    if (rows < 0 || width < 0)
        throw std::invalid_argument("rectangle dimensions must be nonnegative");
    if (width == 0) return Partition{};
    return Partition(std::vector<int>(static_cast<std::size_t>(rows), width));
}

long long Partition::weight() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0LL);
}

bool Partition::fits_in(int rows, int width) const {
    return length() <= static_cast<std::size_t>(rows) && first() <= width;
}

Partition Partition::conjugate() const {
    if (parts_.empty()) return Partition{};
    std::vector<int> conj(static_cast<std::size_t>(parts_[0]), 0);
    for (int row : parts_)
        for (int j = 0; j < row; ++j) conj[static_cast<std::size_t>(j)]++;
    return Partition(std::move(conj));
}

bool Partition::dominates(const Partition& other) const {
    if (weight() != other.weight()) return false;
    long long a = 0, b = 0;
    std::size_t len = std::max(length(), other.length());
    for (std::size_t i = 0; i < len; ++i) {
        a += part(i);
        b += other.part(i);
        if (a < b) return false;
    }
    return true;
}

std::string Partition::to_string() const {
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::vector<int> staircase(int n) {
    if (n < 1) throw std::invalid_argument("staircase requires n >= 1");
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) d[static_cast<std::size_t>(i)] = n - 1 - i;
    return d;
}

Partition conjugate(const Partition& lambda) { return lambda.conjugate(); }

Partition complement(const Partition& nu, int n, int d) {
    if (n < 1 || d < n) throw std::invalid_argument("complement requires 1 <= n <= d");
    if (!nu.fits_in(n, d - n))
        throw std::invalid_argument("partition does not fit in the " +
                                    std::to_string(n) + "x" + std::to_string(d - n) +
                                    " rectangle");
    std::vector<int> mu(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        mu[static_cast<std::size_t>(i)] = d - n - nu.part(static_cast<std::size_t>(n - 1 - i));
    return Partition(std::move(mu));
}

ValidationReport validate_problem(const SchubertProblem& p) {
    ValidationReport report;
    auto fail = [&report](std::string msg) { report.violations.push_back(std::move(msg)); };

    if (p.n < 1) fail("n must be a positive integer");
    if (p.d < 1) fail("d must be a positive integer");
    if (p.c < 0) fail("c must be nonnegative");
    if (!report.ok()) return report;
    if (p.d <= p.n) fail("d must exceed n");

    long long total = p.nu.weight();
    if (!p.nu.fits_in(p.n, p.d - p.n))
        fail("nu = " + p.nu.to_string() + " does not fit in the n x (d-n) rectangle");
    for (std::size_t i = 0; i < p.lambdas.size(); ++i) {
        const Partition& la = p.lambdas[i];
        total += la.weight();
        if (!la.fits_in(p.n, p.d - p.n))
            fail("lambda^(" + std::to_string(i + 1) + ") = " + la.to_string() +
                 " does not fit in the n x (d-n) rectangle");
    }
    long long target = static_cast<long long>(p.n) * (p.d - p.n);
    if (total != target)
        fail("weight condition fails: |nu| + sum |lambda| = " + std::to_string(total) +
             " != n(d-n) = " + std::to_string(target));
    if (2LL * p.c > static_cast<long long>(p.lambdas.size()))
        fail("2c = " + std::to_string(2 * p.c) + " exceeds k = " +
             std::to_string(p.lambdas.size()));
    else
        for (int i = 0; i < p.c; ++i)
            if (p.lambdas[static_cast<std::size_t>(2 * i)] !=
                p.lambdas[static_cast<std::size_t>(2 * i + 1)])
                fail("conjugation pairing fails: lambda^(" + std::to_string(2 * i + 1) +
                     ") != lambda^(" + std::to_string(2 * i + 2) + ")");
    return report;
}

SchubertProblem make_problem(std::vector<Partition> lambdas, Partition nu,
                             int n, int d, int c) {
    if (n < 1) throw std::invalid_argument("n must be a positive integer");
    if (d == 0) {
        long long total = nu.weight();
        for (const Partition& la : lambdas) total += la.weight();
        if (total % n != 0)
            throw std::invalid_argument("no admissible d: total weight " +
                                        std::to_string(total) +
                                        " is not a multiple of n");
        d = n + static_cast<int>(total / n);
    }
    return SchubertProblem{std::move(lambdas), std::move(nu), n, d, c};
}

}  // namespace schubound
