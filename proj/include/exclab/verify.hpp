#pragma once

#include <string>
#include <vector>

#include "exclab/distribution.hpp"
#include "exclab/proof_structures.hpp"

namespace exclab {

struct CheckResult {
    std::string name;
    std::string status;  // "pass", "fail", "skipped", or "info"
    std::string detail;  // claimed vs computed, counterexample windows, ...
};

struct VerifyReport {
    std::vector<CheckResult> checks;

    /// True iff no check failed (skipped and info entries do not count).
    bool all_passed() const;
    void append(const VerifyReport& other);

    /// {"allPassed": ..., "checks": [{"name", "status", "detail"}, ...]}.
    std::string to_json() const;
};

struct VerifyOptions {
    int maxR = 4;
    int maxN = 5;
    int maxDnN = 8;  // n range for the type-D theorems and suites
    std::uint64_t cap = kDefaultEnumerationCap;
    int threads = 1;
};

/// Per-(r, n) cell: closed-form match and (n >= 2) recursion match, both
/// brute-force against the symbolic q-polynomial. Cells whose group size
/// exceeds the cap are reported as skipped. For Theorem 3, the statement's
/// (1-q^2)^(n-1) is evaluated informationally alongside the proof's
/// -(q^2-1)^(n-1).
VerifyReport verify_theorem(Theorem theorem, const VerifyOptions& options);

VerifyReport verify_all_theorems(const VerifyOptions& options);

/// exc under the color order over the full alphabet equals
/// r * exc_A + csum, element by element.
VerifyReport verify_lemma(const VerifyOptions& options);

/// Element-level verification of every decomposition, killing involution
/// and bijection from the proofs: partitions, involution properties,
/// statistic bookkeeping, cycle-parity flips, and per-block polynomial
/// contributions.
VerifyReport verify_proofs(const VerifyOptions& options);

/// Eqs. (1)/(2) specializations at r = 1 plus Eulerian polynomial sanity
/// (symmetry, value n! at q = 1).
VerifyReport verify_r1_regression(const VerifyOptions& options);

}  // namespace exclab
