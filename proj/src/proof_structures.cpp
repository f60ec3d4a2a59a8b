#include "exclab/proof_structures.hpp"

#include <stdexcept>

#include "exclab/statistics.hpp"

namespace exclab {

std::string SubsetLabel::to_string() const {
    switch (family) {
        case Family::K: return "K";
        case Family::T: return "T^" + std::to_string(*colorIndex);
        case Family::R: return "R^" + std::to_string(*colorIndex);
        case Family::A: return "A^" + std::to_string(*colorIndex);
        case Family::Tcycle: return "T";
        case Family::Dhat: return "Dhat";
        case Family::DnK: return "DnK";
        case Family::DnT0: return "DnT0";
        case Family::DnT1: return "DnT1";
        case Family::DnR0: return "DnR0";
        case Family::DnR1: return "DnR1";
    }
    throw std::logic_error("unreachable");
}

namespace {

void require_n_at_least(const ColoredPermutation& sigma, int min_n, const char* what) {
    if (sigma.n() < min_n)
        throw std::domain_error(std::string(what) + ": requires n >= " + std::to_string(min_n));
}

bool is_long_cycle(const ColoredPermutation& sigma) {
    // |sigma| = (2 3 ... n 1)
    const int n = sigma.n();
    for (int i = 1; i < n; ++i)
        if (sigma.tau(i) != i + 1) return false;
    return sigma.tau(n) == 1;
}

ColoredPermutation swap_positions(const ColoredPermutation& sigma, int i, int j) {
    std::vector<int> tau = sigma.tau_vec();
    std::vector<int> z = sigma.colors();
    std::swap(tau[static_cast<size_t>(i) - 1], tau[static_cast<size_t>(j) - 1]);
    std::swap(z[static_cast<size_t>(i) - 1], z[static_cast<size_t>(j) - 1]);
    return ColoredPermutation(sigma.r(), std::move(tau), std::move(z));
}

}  // namespace

SubsetLabel classify_grn(const ColoredPermutation& sigma) {
    require_n_at_least(sigma, 2, "classify_grn");
    const int n = sigma.n();
    if (sigma.tau(n) == n) return {SubsetLabel::Family::T, sigma.color(n)};
    if (sigma.tau(n - 1) == n) return {SubsetLabel::Family::R, sigma.color(n - 1)};
    return {SubsetLabel::Family::K, std::nullopt};
}

ColoredPermutation swap_last_two(const ColoredPermutation& sigma) {
    require_n_at_least(sigma, 2, "swap_last_two");
    return swap_positions(sigma, sigma.n() - 1, sigma.n());
}

SubsetLabel classify_derangements(const ColoredPermutation& sigma) {
    require_n_at_least(sigma, 2, "classify_derangements");
    if (!is_derangement(sigma))
        throw std::domain_error("classify_derangements: input has an absolute fixed point");
    if (sigma.tau(2) == 1 && sigma.tau(1) != 2)
        return {SubsetLabel::Family::A, sigma.color(2)};
    if (is_long_cycle(sigma)) return {SubsetLabel::Family::Tcycle, std::nullopt};
    return {SubsetLabel::Family::Dhat, std::nullopt};
}

ColoredPermutation kill_dhat(const ColoredPermutation& sigma) {
    if (classify_derangements(sigma).family != SubsetLabel::Family::Dhat)
        throw std::domain_error("kill_dhat: input not in Dhat");
    const int n = sigma.n();
    for (int i = 1; i < n; ++i) {
        if (sigma.tau(i) != i + 1) return swap_positions(sigma, i, i + 1);
    }
    // sigma not in Tcycle, so some i < n with tau(i) != i+1 must exist;
    // reaching here means classify_derangements is broken.
    throw std::logic_error("kill_dhat: no swap position found for a Dhat element");
}

ColoredPermutation reduce_A(const ColoredPermutation& sigma) {
    const SubsetLabel label = classify_derangements(sigma);
    if (label.family != SubsetLabel::Family::A)
        throw std::domain_error("reduce_A: input not in an A^i block");
    require_n_at_least(sigma, 3, "reduce_A");
    const int n = sigma.n();
    std::vector<int> tau, z;
    tau.reserve(static_cast<size_t>(n) - 1);
    z.reserve(static_cast<size_t>(n) - 1);
    // keep position 1, drop position 2 (holds 1^[i]), shift digits down
    tau.push_back(sigma.tau(1) - 1);
    z.push_back(sigma.color(1));
    for (int i = 3; i <= n; ++i) {
        tau.push_back(sigma.tau(i) - 1);
        z.push_back(sigma.color(i));
    }
    ColoredPermutation out(sigma.r(), std::move(tau), std::move(z));
    if (!is_derangement(out))
        throw std::logic_error("reduce_A: image is not a derangement");
    return out;
}

ColoredPermutation lift_T_to_W(const ColoredPermutation& sigma) {
    if (classify_derangements(sigma).family != SubsetLabel::Family::Tcycle)
        throw std::domain_error("lift_T_to_W: input not in T_{r,n}");
    const int r = sigma.r();
    const int n = sigma.n();
    std::vector<int> z = sigma.colors();
    for (int i = 0; i < n - 1; ++i)
        if (z[static_cast<size_t>(i)] == 0) z[static_cast<size_t>(i)] = r;
    return ColoredPermutation(r + 1, sigma.tau_vec(), std::move(z));
}

bool in_W(const ColoredPermutation& sigma) {
    const int r = sigma.r() - 1;  // sigma lives in G_{r+1,n}
    const int n = sigma.n();
    if (r < 1 || !is_long_cycle(sigma)) return false;
    for (int i = 1; i < n; ++i)
        if (sigma.color(i) == 0) return false;
    return sigma.color(n) != r;
}

SubsetLabel classify_dn(const ColoredPermutation& sigma) {
    require_n_at_least(sigma, 2, "classify_dn");
    if (sigma.r() != 2 || csum(sigma) % 2 != 0)
        throw std::domain_error("classify_dn: input not in D_n");
    const int n = sigma.n();
    if (sigma.tau(n) == n) return {sigma.color(n) == 0 ? SubsetLabel::Family::DnT0
                                                       : SubsetLabel::Family::DnT1,
                                   std::nullopt};
    if (sigma.tau(n - 1) == n)
        return {sigma.color(n - 1) == 0 ? SubsetLabel::Family::DnR0 : SubsetLabel::Family::DnR1,
                std::nullopt};
    return {SubsetLabel::Family::DnK, std::nullopt};
}

MultiPoly subset_contribution(const SubsetLabel& block, const GroupSpec& spec, Variant variant,
                              const Coeff& tVal, const Coeff& sVal, std::uint64_t cap) {
    const bool grn_block = block.family == SubsetLabel::Family::K ||
                           block.family == SubsetLabel::Family::T ||
                           block.family == SubsetLabel::Family::R;
    const bool derangement_block = block.family == SubsetLabel::Family::A ||
                                   block.family == SubsetLabel::Family::Tcycle ||
                                   block.family == SubsetLabel::Family::Dhat;
    if (block.colorIndex && (*block.colorIndex < 0 || *block.colorIndex >= spec.r))
        throw std::domain_error("subset_contribution: color index out of range");
    if (spec.n < 2) throw std::domain_error("subset_contribution: requires n >= 2");

    std::function<SubsetLabel(const ColoredPermutation&)> classify;
    GroupSpec base = spec;
    if (grn_block) {
        classify = classify_grn;
        base.restriction = Restriction::All;
    } else if (derangement_block) {
        classify = classify_derangements;
        base.restriction = Restriction::Derangements;
    } else {
        if (spec.r != 2) throw std::domain_error("subset_contribution: Dn blocks require r = 2");
        classify = classify_dn;
        base.restriction = Restriction::EvenColorSum;
    }

    MultiPoly acc;
    for_each_element(base, [&](const ColoredPermutation& sigma) {
        if (classify(sigma) == block)
            acc.add_term({exc_variant(sigma, variant), fix_abs(sigma), cycle_count(sigma)}, 1);
    }, cap);
    return acc.substitute_t(tVal).substitute_s(sVal);
}

}  // namespace exclab
