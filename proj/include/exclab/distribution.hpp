#pragma once

#include <string>
#include <vector>

#include "exclab/colored_perm.hpp"
#include "exclab/multipoly.hpp"
#include "exclab/statistics.hpp"

namespace exclab {

enum class Variant { Abs, Clr };

/// Exponent of q used by the distribution under the given variant.
int exc_variant(const ColoredPermutation& sigma, Variant variant);

/// Brute-force distribution polynomial
///   sum over the set of q^exc t^fixAbs s^cyc
/// with exc taken per variant. With threads > 1 the index space of the
/// unrestricted group is split into contiguous chunks summed independently;
/// the result is identical for every thread count.
MultiPoly distribution(const GroupSpec& spec, Variant variant,
                       std::uint64_t cap = kDefaultEnumerationCap,
                       int threads = 1);

/// Same summand over an explicit list of elements; all elements must share
/// one (r, n).
MultiPoly distribution_over(const std::vector<ColoredPermutation>& elements, Variant variant);

/// Distribution over the elements of G_{r,n} satisfying pred.
MultiPoly distribution_filtered(int r, int n, Variant variant,
                                const std::function<bool(const ColoredPermutation&)>& pred,
                                std::uint64_t cap = kDefaultEnumerationCap,
                                int threads = 1);

enum class Theorem { T1, T2, T3, T4 };

Theorem theorem_from_string(const std::string& name);

/// Closed forms as exact q-polynomials, division-free:
///   T1: -(q^r - 1)^(n-1) [r]_q
///   T2: -q [r]_q^n [n-1]_q
///   T3: -(q^2 - 1)^(n-1)            (the proof's version; r = 2 implicit)
///   T4: -(q - 1)^(n-1) sum_{k even} C(n,k) q^k
MultiPoly closed_form(Theorem theorem, int r, int n);

/// The alternative Theorem 3 value (1 - q^2)^(n-1) as printed in the
/// theorem statement; disagrees with the proof's version for odd n.
MultiPoly closed_form_t3_statement(int n);

struct RecursionReport {
    bool passed = false;
    std::string detail;  // lhs/rhs polynomials on failure
};

/// Checks the level-n brute-force polynomial against the stated function
/// of the level-(n-1) brute-force polynomial(s), exactly.
/// T1: P_n(q,1,-1) = (q^r - 1) P_{n-1}(q,1,-1), both variants.
/// T2: P_n(q,0,-1) = [r]_q (P_{n-1}(q,0,-1) - q^(n-1) [r]_q^(n-1)), both variants.
/// T3: a_n = (q^2 - 1) a_{n-1} over D_n, color order.
/// T4: a_n = (q-1)(a_{n-1} + q b_{n-1}) and b_n = (q-1)(b_{n-1} + q a_{n-1})
///     over D_n and its complement, absolute order.
RecursionReport recursion_check(Theorem theorem, int r, int n,
                                std::uint64_t cap = kDefaultEnumerationCap);

/// P_{D_n}(q,1,-1) (even_csum = true) or P_{D_n^c}(q,1,-1) (false) for the
/// given variant; the a_n / b_n of the type-D recursions.
MultiPoly dn_specialized(int n, Variant variant, bool even_csum,
                         std::uint64_t cap = kDefaultEnumerationCap, int threads = 1);

}  // namespace exclab
