#include "doctest.h"

#include <map>
#include <stdexcept>
#include <set>

#include "exclab/proof_structures.hpp"
#include "exclab/statistics.hpp"

using namespace exclab;

namespace {

ColoredPermutation w(const std::string& window, int r) { return parse_window(window, r); }

}  // namespace

TEST_CASE("classify_grn") {
    CHECK(classify_grn(ColoredPermutation::identity(3, 4)) ==
          SubsetLabel{SubsetLabel::Family::T, 0});
    CHECK(classify_grn(w("2^1 1", 2)) == SubsetLabel{SubsetLabel::Family::R, 1});
    CHECK(classify_grn(w("1^1 2^2", 3)) == SubsetLabel{SubsetLabel::Family::T, 2});
    CHECK(classify_grn(w("3 1 2", 1)) == SubsetLabel{SubsetLabel::Family::K, std::nullopt});
    CHECK_THROWS_AS(classify_grn(w("1", 2)), std::domain_error);
}

TEST_CASE("classify_grn blocks partition G_{r,n} and T-before-R order never matters") {
    for (int r = 1; r <= 3; ++r) {
        for (int n = 2; n <= 4; ++n) {
            std::map<std::string, int> sizes;
            for_each_element({r, n, Restriction::All}, [&](const ColoredPermutation& sigma) {
                ++sizes[classify_grn(sigma).to_string()];
                // tau is injective, so sigma can never satisfy both the
                // T-condition and the R-condition
                CHECK(!(sigma.tau(n) == n && sigma.tau(n - 1) == n));
            });
            const auto block = static_cast<int>(group_size(r, n - 1));
            for (int i = 0; i < r; ++i) {
                CHECK(sizes["T^" + std::to_string(i)] == block);
                CHECK(sizes["R^" + std::to_string(i)] == block);
            }
        }
    }
}

TEST_CASE("swap_last_two") {
    CHECK(swap_last_two(w("2^1 1 3", 2)) == w("2^1 3 1", 2));
    CHECK_THROWS_AS(swap_last_two(w("1", 2)), std::domain_error);
    for (int r = 1; r <= 3; ++r)
        for (int n = 2; n <= 4; ++n)
            for_each_element({r, n, Restriction::All}, [](const ColoredPermutation& sigma) {
                CHECK(swap_last_two(swap_last_two(sigma)) == sigma);
            });
}

TEST_CASE("K_{2,2} is empty, so the K suite starts at n = 3") {
    int k_count = 0;
    for_each_element({2, 2, Restriction::All}, [&](const ColoredPermutation& sigma) {
        if (classify_grn(sigma).family == SubsetLabel::Family::K) ++k_count;
    });
    CHECK(k_count == 0);
}

TEST_CASE("classify_derangements") {
    CHECK(classify_derangements(w("3 1^1 4 2^1", 2)) == SubsetLabel{SubsetLabel::Family::A, 1});
    CHECK(classify_derangements(w("2^1 3 1^2", 3)) ==
          SubsetLabel{SubsetLabel::Family::Tcycle, std::nullopt});
    CHECK(classify_derangements(w("2 1", 1)) ==
          SubsetLabel{SubsetLabel::Family::Tcycle, std::nullopt});
    CHECK_THROWS_AS(classify_derangements(w("1^1 2", 2)), std::domain_error);
}

TEST_CASE("kill_dhat on the paper's example") {
    CHECK(kill_dhat(w("3^1 4 1^1 5^1 2^2", 3)) == w("4 3^1 1^1 5^1 2^2", 3));
    // both sides share exc(|sigma|) = 2 and csum = 5
    CHECK(exc_abs(w("3^1 4 1^1 5^1 2^2", 3)) == exc_abs(w("4 3^1 1^1 5^1 2^2", 3)));
    CHECK_THROWS_AS(kill_dhat(w("2^1 3 1^2", 3)), std::domain_error);
}

TEST_CASE("kill_dhat is a statistic-preserving parity-flipping involution") {
    for (int r = 1; r <= 3; ++r)
        for (int n = 2; n <= 4; ++n)
            for_each_element({r, n, Restriction::Derangements},
                             [](const ColoredPermutation& sigma) {
                                 if (classify_derangements(sigma).family !=
                                     SubsetLabel::Family::Dhat)
                                     return;
                                 const auto swapped = kill_dhat(sigma);
                                 CHECK(kill_dhat(swapped) == sigma);
                                 CHECK(swapped != sigma);
                                 CHECK(exc_abs(swapped) == exc_abs(sigma));
                                 CHECK(exc_clr(swapped) == exc_clr(sigma));
                                 CHECK((cycle_count(swapped) + cycle_count(sigma)) % 2 == 1);
                             });
}

TEST_CASE("reduce_A on the paper's example") {
    CHECK(reduce_A(w("3 1^1 4 2^1", 2)) == w("2 3 1^1", 2));
    CHECK(csum(w("3 1^1 4 2^1", 2)) == 2);
    CHECK(csum(w("2 3 1^1", 2)) == 1);  // drop equals the color index i = 1
    CHECK_THROWS_AS(reduce_A(w("2^1 3 1^2", 3)), std::domain_error);
}

TEST_CASE("reduce_A is a bijection A^i -> D_{r,n-1}") {
    for (int r = 1; r <= 3; ++r) {
        for (int n = 3; n <= 5; ++n) {
            const auto prev = enumerate({r, n - 1, Restriction::Derangements});
            std::map<int, std::set<ColoredPermutation>> images;
            for_each_element({r, n, Restriction::Derangements},
                             [&](const ColoredPermutation& sigma) {
                                 const auto label = classify_derangements(sigma);
                                 if (label.family != SubsetLabel::Family::A) return;
                                 images[*label.colorIndex].insert(reduce_A(sigma));
                             });
            for (int i = 0; i < r; ++i) CHECK(images[i].size() == prev.size());
        }
    }
}

TEST_CASE("lift_T_to_W") {
    const auto lifted = lift_T_to_W(w("2^1 3 1^1", 3));
    CHECK(lifted == ColoredPermutation(4, {2, 3, 1}, {1, 3, 1}));
    CHECK(in_W(lifted));
    CHECK(csum(lifted) == exc_clr(w("2^1 3 1^1", 3)));

    // all colors nonzero: lift only reinterprets the element in G_{r+1,n}
    const auto untouched = lift_T_to_W(w("2^1 3^2 1^1", 3));
    CHECK(untouched == ColoredPermutation(4, {2, 3, 1}, {1, 2, 1}));
    CHECK_THROWS_AS(lift_T_to_W(w("3 1^1 4 2^1", 2)), std::domain_error);
}

TEST_CASE("lift_T_to_W is a bijection onto W") {
    for (int r = 1; r <= 3; ++r) {
        for (int n = 2; n <= 4; ++n) {
            std::set<ColoredPermutation> images;
            int t_count = 0;
            for_each_element({r, n, Restriction::Derangements},
                             [&](const ColoredPermutation& sigma) {
                                 if (classify_derangements(sigma).family !=
                                     SubsetLabel::Family::Tcycle)
                                     return;
                                 ++t_count;
                                 const auto lifted = lift_T_to_W(sigma);
                                 CHECK(in_W(lifted));
                                 CHECK(csum(lifted) == exc_clr(sigma));
                                 images.insert(lifted);
                             });
            int w_count = 0;
            for_each_element({r + 1, n, Restriction::All}, [&](const ColoredPermutation& sigma) {
                if (in_W(sigma)) ++w_count;
            });
            CHECK(static_cast<int>(images.size()) == t_count);
            CHECK(w_count == t_count);
        }
    }
}

TEST_CASE("classify_dn on D_2") {
    CHECK(classify_dn(w("1 2", 2)).family == SubsetLabel::Family::DnT0);
    CHECK(classify_dn(w("1^1 2^1", 2)).family == SubsetLabel::Family::DnT1);
    CHECK(classify_dn(w("2 1", 2)).family == SubsetLabel::Family::DnR0);
    CHECK(classify_dn(w("2^1 1^1", 2)).family == SubsetLabel::Family::DnR1);
    int k_count = 0;
    for_each_element({2, 2, Restriction::EvenColorSum}, [&](const ColoredPermutation& sigma) {
        if (classify_dn(sigma).family == SubsetLabel::Family::DnK) ++k_count;
    });
    CHECK(k_count == 0);
    CHECK(classify_dn(ColoredPermutation::identity(2, 3)).family == SubsetLabel::Family::DnT0);
    CHECK_THROWS_AS(classify_dn(w("2 1 3^1", 2)), std::domain_error);
}

TEST_CASE("subset_contribution examples") {
    // T^0 of G_{2,2} at (q,1,-1): the two elements (1,2) and (1^1,2)
    const MultiPoly t0 = subset_contribution({SubsetLabel::Family::T, 0},
                                             {2, 2, Restriction::All}, Variant::Abs, 1, -1);
    CHECK(t0 == MultiPoly::constant(1) + MultiPoly::q());

    for (int r = 1; r <= 3; ++r)
        for (int n = 3; n <= 4; ++n) {
            CHECK(subset_contribution({SubsetLabel::Family::K, std::nullopt},
                                      {r, n, Restriction::All}, Variant::Abs, 1, -1)
                      .is_zero());
            CHECK(subset_contribution({SubsetLabel::Family::K, std::nullopt},
                                      {r, n, Restriction::All}, Variant::Clr, 1, -1)
                      .is_zero());
            CHECK(subset_contribution({SubsetLabel::Family::Dhat, std::nullopt},
                                      {r, n, Restriction::Derangements}, Variant::Abs, 0, -1)
                      .is_zero());
        }
}

TEST_CASE("subset_contribution rejects undefined blocks") {
    CHECK_THROWS_AS(subset_contribution({SubsetLabel::Family::T, 5}, {2, 3, Restriction::All},
                                        Variant::Abs, 1, -1),
                    std::domain_error);
    CHECK_THROWS_AS(subset_contribution({SubsetLabel::Family::DnK, std::nullopt},
                                        {3, 3, Restriction::All}, Variant::Abs, 1, -1),
                    std::domain_error);
}
