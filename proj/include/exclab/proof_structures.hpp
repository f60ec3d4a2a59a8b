#pragma once

#include <optional>
#include <string>

#include "exclab/colored_perm.hpp"
#include "exclab/distribution.hpp"

namespace exclab {

/// One block of a proof decomposition. K/T/R partition G_{r,n};
/// A/Tcycle/Dhat partition the derangements D_{r,n}; the Dn* blocks
/// partition the even-signed group D_n.
struct SubsetLabel {
    enum class Family { K, T, R, A, Tcycle, Dhat, DnK, DnT0, DnT1, DnR0, DnR1 };

    Family family;
    std::optional<int> colorIndex;  // present exactly for T, R, A

    friend bool operator==(const SubsetLabel&, const SubsetLabel&) = default;

    std::string to_string() const;  // "K", "T^2", "A^0", "Dhat", "DnR1", ...
};

/// The K / T^i / R^i decomposition of G_{r,n}:
///   T^i: sigma(n) = n^[i];  R^i: sigma(n-1) = n^[i];  K: neither position
///   holds digit n. Requires n >= 2.
SubsetLabel classify_grn(const ColoredPermutation& sigma);

/// Exchanges the window entries (digit and color together) at positions
/// n-1 and n. Involution; the killing map on K and the R^i -> T^i
/// bijection. Requires n >= 2.
ColoredPermutation swap_last_two(const ColoredPermutation& sigma);

/// The A^i / T / Dhat decomposition of the derangements D_{r,n}:
///   A^i: sigma(2) = 1^[i] and |sigma(1)| != 2;
///   Tcycle: |sigma| is the long cycle (2 3 ... n 1);
///   Dhat: everything else. Requires a derangement with n >= 2.
SubsetLabel classify_derangements(const ColoredPermutation& sigma);

/// Killing involution on Dhat: swaps window entries at positions i and
/// i+1 where i is minimal with |sigma(i)| != i+1.
ColoredPermutation kill_dhat(const ColoredPermutation& sigma);

/// The bijection A^i -> D_{r,n-1}: drop position 2 (which holds 1^[i])
/// and lower every remaining digit by one, keeping its color.
/// Requires sigma in some A^i with n >= 3.
ColoredPermutation reduce_A(const ColoredPermutation& sigma);

/// The bijection T_{r,n} -> W inside G_{r+1,n}: positions i < n with
/// color 0 are recolored to r; everything else is kept. For the image,
/// csum equals exc^Clr of the source.
ColoredPermutation lift_T_to_W(const ColoredPermutation& sigma);

/// Membership test for the codomain W of lift_T_to_W: underlying long
/// cycle, z_i != 0 for i < n, z_n != r (inside G_{r+1,n} with r = sigma.r()-1).
bool in_W(const ColoredPermutation& sigma);

/// The five-way decomposition of the even-signed group D_n (r = 2):
/// DnT0/DnT1 by sigma(n), DnR0/DnR1 by sigma(n-1), DnK for the rest.
/// Requires even csum and n >= 2.
SubsetLabel classify_dn(const ColoredPermutation& sigma);

/// Exact restricted sum q^exc t^fix s^cyc over the elements of the block
/// inside the spec's set, then substituted at (tVal, sVal).
MultiPoly subset_contribution(const SubsetLabel& block, const GroupSpec& spec, Variant variant,
                              const Coeff& tVal, const Coeff& sVal,
                              std::uint64_t cap = kDefaultEnumerationCap);

}  // namespace exclab
