#pragma once

#include <string>
#include <vector>

namespace schubound {

struct VerifyCheck {
    std::string name;
    bool passed;
    std::string detail;
};

struct VerifySummary {
    std::string suite;
    std::vector<VerifyCheck> checks;
    bool all_passed() const;
};

/// The five published tables: Gr(3,6), Gr(3,8), Gr(3,9), Gr(4,8) signature
/// rows and the competing-bound values they are compared against.
VerifySummary verify_paper_tables();

/// For every mu |- k and every cycle type with k <= max_k: the character
/// formula at s=1, lambda=(1), n=k agrees with Murnaghan-Nakayama, and the
/// character table satisfies the orthogonality relation.
VerifySummary verify_frobenius(int max_k);

/// Randomized oracle equivalences: q at c=0 vs Littlewood-Richardson,
/// antisymmetrized vs Schur-expansion character routes, tableau vs
/// bialternant Schur polynomials.
VerifySummary verify_oracles(int instances, unsigned seed);

/// Randomized structural identities on valid problems: transpose duality,
/// reduction to empty nu, signature parity, |q(c)| <= q(0).
VerifySummary verify_dualities(int instances, unsigned seed);

/// The exact 4x4 commuting-pair counterexample checks.
VerifySummary verify_counterexample();

std::vector<VerifySummary> verify_all();

}  // namespace schubound
