#pragma once

#include <string>

#include "schubound/bounds.hpp"
#include "schubound/partition.hpp"

namespace schubound {

/// Problem-file document: n, optional d (defaults to the minimal admissible
/// value), lambdas as (parts, count) runs, nu, and c as either an integer or
/// a two-element range [lo, hi]. Unknown keys are rejected.
struct ProblemFileData {
    SchubertProblem problem;  // c holds the low end of the range
    int c_lo = 0;
    int c_hi = 0;
};

ProblemFileData problem_from_json(const std::string& text);

/// Inverse of problem_from_json for a single-c problem; consecutive equal
/// lambdas are grouped into one (parts, count) entry.
std::string problem_to_json(const SchubertProblem& p);

std::string report_to_json(const BoundReport& report);

std::string table_to_json(const SchubertProblem& p, int c_lo, int c_hi,
                          const std::vector<mpz_class>& values);

}  // namespace schubound
