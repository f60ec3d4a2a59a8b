#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

namespace exclab {

/// One symbol of the alphabet Sigma: a digit in [1, n] carrying a color
/// in [0, r-1]. Color 0 corresponds to the bare (unbarred) digit.
struct ColoredDigit {
    int digit;
    int color;

    friend bool operator==(const ColoredDigit&, const ColoredDigit&) = default;
};

/// Element of the colored permutation group G_{r,n} in window form:
/// position i (1-based) holds the value tau(i) with color z_i.
///
/// Invariants are checked on construction: tau is a bijection of [1, n]
/// and every color lies in [0, r-1].
class ColoredPermutation {
public:
    ColoredPermutation(int r, std::vector<int> tau, std::vector<int> z);

    static ColoredPermutation identity(int r, int n);

    int r() const { return r_; }
    int n() const { return static_cast<int>(tau_.size()); }

    /// tau(i), 1-based.
    int tau(int i) const { return tau_[static_cast<size_t>(i) - 1]; }
    /// z_i, 1-based.
    int color(int i) const { return z_[static_cast<size_t>(i) - 1]; }

    /// Window entry at position i: the colored digit sigma(i).
    ColoredDigit window(int i) const { return {tau(i), color(i)}; }

    const std::vector<int>& tau_vec() const { return tau_; }
    const std::vector<int>& colors() const { return z_; }

    friend bool operator==(const ColoredPermutation&, const ColoredPermutation&) = default;

    // Ordering matches the canonical enumeration: tau lexicographic,
    // then colors as a base-r number with z_1 most significant.
    friend bool operator<(const ColoredPermutation& a, const ColoredPermutation& b);

private:
    struct unchecked_t {};
    ColoredPermutation(unchecked_t, int r, std::vector<int> tau, std::vector<int> z)
        : r_(r), tau_(std::move(tau)), z_(std::move(z)) {}

    int r_;
    std::vector<int> tau_;
    std::vector<int> z_;

    friend class GroupScanner;
};

/// Action of sigma on a colored digit: sigma(i^[j]) = tau(i)^[(z_i + j) mod r].
ColoredDigit act(const ColoredPermutation& sigma, const ColoredDigit& x);

/// Function composition: act(multiply(a, b), x) == act(a, act(b, x)).
ColoredPermutation multiply(const ColoredPermutation& a, const ColoredPermutation& b);

ColoredPermutation inverse(const ColoredPermutation& sigma);

/// tau with colors discarded, as a plain permutation of [1, n].
std::vector<int> underlying(const ColoredPermutation& sigma);

/// Number of cycles of tau (fixed points count as cycles).
int cycle_count(const ColoredPermutation& sigma);

/// True iff tau(i) != i for every i (no absolute fixed points).
bool is_derangement(const ColoredPermutation& sigma);

enum class Restriction {
    All,
    EvenColorSum,             // D_n inside B_n; requires r = 2
    Derangements,             // D_{r,n}
    DerangementsEvenColorSum, // derangements of D_n; requires r = 2
};

struct GroupSpec {
    int r = 1;
    int n = 1;
    Restriction restriction = Restriction::All;
};

constexpr std::uint64_t kDefaultEnumerationCap = 100'000'000;

/// r^n * n!, the size of G_{r,n}. Throws on overflow past 2^63.
std::uint64_t group_size(int r, int n);

/// Visits every element of the selected set exactly once, in canonical
/// order: tau lexicographic, then colors counting up in base r with z_1
/// most significant. Refuses (throws) when r^n * n! exceeds the cap.
void for_each_element(const GroupSpec& spec,
                      const std::function<void(const ColoredPermutation&)>& fn,
                      std::uint64_t cap = kDefaultEnumerationCap);

/// Like for_each_element but with an extra filter applied to each element
/// of the *unrestricted* group; used for complement sets such as D_n^c.
void for_each_filtered(int r, int n,
                       const std::function<bool(const ColoredPermutation&)>& pred,
                       const std::function<void(const ColoredPermutation&)>& fn,
                       std::uint64_t cap = kDefaultEnumerationCap);

/// Element at the given position of the canonical order of G_{r,n} (no
/// restriction). Used to chunk enumeration sweeps across threads.
ColoredPermutation element_at(int r, int n, std::uint64_t index);

/// Materializes the stream; intended for small groups and test fixtures.
std::vector<ColoredPermutation> enumerate(const GroupSpec& spec,
                                          std::uint64_t cap = kDefaultEnumerationCap);

bool matches_restriction(const ColoredPermutation& sigma, Restriction restriction);

/// Parses window notation "d^c d^c ..." where "^0" may be omitted,
/// e.g. "3 1^1 2^2" with r = 3. Throws std::invalid_argument with the
/// offending token position on malformed input.
ColoredPermutation parse_window(const std::string& text, int r);

/// Inverse of parse_window: "d" for color 0, "d^c" otherwise.
std::string format_window(const ColoredPermutation& sigma);

}  // namespace exclab
