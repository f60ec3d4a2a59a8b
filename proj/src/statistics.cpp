#include "exclab/statistics.hpp"

#include "json.hpp"

namespace exclab {

Ordering compare(OrderKind order, const ColoredDigit& x, const ColoredDigit& y) {
    // Map each digit to a rank so both orders reduce to integer comparison.
    // Absolute: digit ascending, color descending within a digit.
    // Color: color descending, digit ascending within a color.
    auto key = [order](const ColoredDigit& d) {
        if (order == OrderKind::Absolute) return std::pair{d.digit, -d.color};
        return std::pair{-d.color, d.digit};
    };
    const auto kx = key(x), ky = key(y);
    if (kx < ky) return Ordering::Less;
    if (ky < kx) return Ordering::Greater;
    return Ordering::Equal;
}

int csum(const ColoredPermutation& sigma) {
    int s = 0;
    for (int c : sigma.colors()) s += c;
    return s;
}

int exc_underlying(const ColoredPermutation& sigma) {
    int count = 0;
    for (int i = 1; i <= sigma.n(); ++i)
        if (sigma.tau(i) > i) ++count;
    return count;
}

int exc_A(const ColoredPermutation& sigma) {
    int count = 0;
    for (int i = 1; i <= sigma.n() - 1; ++i)
        if (compare(OrderKind::Color, sigma.window(i), ColoredDigit{i, 0}) == Ordering::Greater)
            ++count;
    return count;
}

int exc_abs(const ColoredPermutation& sigma) { return exc_underlying(sigma) + csum(sigma); }

int exc_clr(const ColoredPermutation& sigma) { return sigma.r() * exc_A(sigma) + csum(sigma); }

int exc_full(const ColoredPermutation& sigma, OrderKind order) {
    int count = 0;
    for (int digit = 1; digit <= sigma.n(); ++digit) {
        for (int color = 0; color < sigma.r(); ++color) {
            const ColoredDigit x{digit, color};
            if (compare(order, act(sigma, x), x) == Ordering::Greater) ++count;
        }
    }
    return count;
}

int fix_abs(const ColoredPermutation& sigma) {
    int count = 0;
    for (int i = 1; i <= sigma.n(); ++i)
        if (sigma.tau(i) == i) ++count;
    return count;
}

StatBundle stat_bundle(const ColoredPermutation& sigma) {
    StatBundle b;
    b.excUnderlying = exc_underlying(sigma);
    b.excA = exc_A(sigma);
    b.csum = csum(sigma);
    b.excAbs = b.excUnderlying + b.csum;
    b.excClr = sigma.r() * b.excA + b.csum;
    b.cyc = cycle_count(sigma);
    b.fixAbs = fix_abs(sigma);
    return b;
}

std::string to_json(const StatBundle& stats) {
    nlohmann::ordered_json j;
    j["excAbs"] = stats.excAbs;
    j["excClr"] = stats.excClr;
    j["excA"] = stats.excA;
    j["excUnderlying"] = stats.excUnderlying;
    j["csum"] = stats.csum;
    j["cyc"] = stats.cyc;
    j["fixAbs"] = stats.fixAbs;
    return j.dump();
}

}  // namespace exclab
