#pragma once

#include <string>

#include "exclab/colored_perm.hpp"

namespace exclab {

enum class OrderKind { Absolute, Color };

enum class Ordering { Less, Equal, Greater };

/// Total order on the alphabet Sigma.
/// Absolute: digit ascending, ties broken by color descending.
/// Color: color descending, ties broken by digit ascending.
Ordering compare(OrderKind order, const ColoredDigit& x, const ColoredDigit& y);

/// Sum of colors of the window, as a plain integer (never reduced mod r).
int csum(const ColoredPermutation& sigma);

/// Excedances of the underlying permutation: #{ i : tau(i) > i }.
int exc_underlying(const ColoredPermutation& sigma);

/// #{ i in [n-1] : sigma(i) > i^[0] under the color order }.
int exc_A(const ColoredPermutation& sigma);

/// exc_underlying + csum.
int exc_abs(const ColoredPermutation& sigma);

/// r * exc_A + csum.
int exc_clr(const ColoredPermutation& sigma);

/// Literal excedance count over the whole alphabet (r*n points) under the
/// given order. Under the color order this equals exc_clr; kept as an
/// independent computation so that identity stays a genuine cross-check.
int exc_full(const ColoredPermutation& sigma, OrderKind order);

/// #{ i : tau(i) = i }, colors ignored.
int fix_abs(const ColoredPermutation& sigma);

struct StatBundle {
    int excAbs = 0;
    int excClr = 0;
    int excA = 0;
    int excUnderlying = 0;
    int csum = 0;
    int cyc = 0;
    int fixAbs = 0;

    friend bool operator==(const StatBundle&, const StatBundle&) = default;
};

StatBundle stat_bundle(const ColoredPermutation& sigma);

/// Flat JSON object with keys excAbs, excClr, excA, excUnderlying, csum,
/// cyc, fixAbs.
std::string to_json(const StatBundle& stats);

}  // namespace exclab
