#pragma once

#include <compare>
#include <string>
#include <vector>

namespace schubound {

/// Integer partition: weakly decreasing nonnegative parts, stored without
/// trailing zeros so that equal partitions compare equal. Zero-padded views
/// are produced on demand via part(i).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);

    static Partition rectangle(int rows, int width);

    const std::vector<int>& parts() const { return parts_; }
    std::size_t length() const { return parts_.size(); }
    bool empty() const { return parts_.empty(); }

    /// Part i (0-based), zero when i >= length().
    int part(std::size_t i) const { return i < parts_.size() ? parts_[i] : 0; }
    int first() const { return part(0); }
    long long weight() const;

    bool fits_in(int rows, int width) const;
    Partition conjugate() const;
    bool is_self_conjugate() const { return *this == conjugate(); }

    /// Dominance order on partitions of equal weight; false when weights differ.
    bool dominates(const Partition& other) const;

    /// "(3,1)", "()" for the empty partition.
    std::string to_string() const;

    bool operator==(const Partition&) const = default;
    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// Staircase exponent vector (n-1, n-2, ..., 1, 0).
std::vector<int> staircase(int n);

/// Transpose of the Young diagram.
Partition conjugate(const Partition& lambda);

/// Complement of nu in the n x (d-n) rectangle, canonical (zero-stripped) form.
/// Throws std::invalid_argument when nu does not fit in the rectangle.
Partition complement(const Partition& nu, int n, int d);

struct SchubertProblem {
    std::vector<Partition> lambdas;
    Partition nu;
    int n = 0;  // plane dimension
    int d = 0;  // ambient degree bound
    int c = 0;  // number of complex-conjugate point pairs
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
};

ValidationReport validate_problem(const SchubertProblem& p);

/// Builds a problem, deriving the minimal admissible d from the weight
/// condition |nu| + sum |lambda| = n(d-n) when d is not given (d = 0).
/// Throws std::invalid_argument when no integer d satisfies it.
SchubertProblem make_problem(std::vector<Partition> lambdas, Partition nu,
                             int n, int d, int c);

}  // namespace schubound
