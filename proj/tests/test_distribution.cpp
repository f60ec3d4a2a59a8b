#include "doctest.h"

#include <stdexcept>

#include "exclab/distribution.hpp"

using namespace exclab;

namespace {

MultiPoly at(const MultiPoly& p, const Coeff& tVal, const Coeff& sVal) {
    return p.substitute_t(tVal).substitute_s(sVal);
}

}  // namespace

TEST_CASE("distribution over S_2 is t^2 s^2 + q s") {
    const MultiPoly expected = MultiPoly::term(1, 0, 2, 2) + MultiPoly::term(1, 1, 0, 1);
    CHECK(distribution({1, 2, Restriction::All}, Variant::Abs) == expected);
    CHECK(distribution({1, 2, Restriction::All}, Variant::Clr) == expected);
}

TEST_CASE("distribution over G_{r,1} at (q,1,-1) is -[r]_q") {
    for (int r = 1; r <= 4; ++r) {
        const MultiPoly p = at(distribution({r, 1, Restriction::All}, Variant::Abs), 1, -1);
        CHECK(p == -q_int(r));
    }
}

TEST_CASE("Eulerian polynomial of S_3 is 1 + 4q + q^2") {
    const MultiPoly p = at(distribution({1, 3, Restriction::All}, Variant::Abs), 1, 1);
    MultiPoly expected;
    expected.add_term({0, 0, 0}, 1);
    expected.add_term({1, 0, 0}, 4);
    expected.add_term({2, 0, 0}, 1);
    CHECK(p == expected);
}

TEST_CASE("distribution_over") {
    CHECK(distribution_over({}, Variant::Abs).is_zero());
    CHECK(distribution_over({ColoredPermutation::identity(2, 2)}, Variant::Clr) ==
          MultiPoly::term(1, 0, 2, 2));

    // D_2^c, color order, (q,1,-1): the b_2 of the type-D recursions
    std::vector<ColoredPermutation> complement;
    for_each_filtered(2, 2,
                      [](const ColoredPermutation& sigma) { return csum(sigma) % 2 == 1; },
                      [&](const ColoredPermutation& sigma) { complement.push_back(sigma); });
    REQUIRE(complement.size() == 4);
    const MultiPoly b2 = at(distribution_over(complement, Variant::Clr), 1, -1);
    CHECK(b2 == MultiPoly::q() - MultiPoly::q(3));
    CHECK(b2 == dn_specialized(2, Variant::Clr, false));

    std::vector<ColoredPermutation> mixed{ColoredPermutation::identity(2, 2),
                                          ColoredPermutation::identity(2, 3)};
    CHECK_THROWS_AS(distribution_over(mixed, Variant::Abs), std::domain_error);
}

TEST_CASE("distribution is independent of the thread count") {
    for (int threads : {2, 3, 8}) {
        CHECK(distribution({2, 4, Restriction::All}, Variant::Clr) ==
              distribution({2, 4, Restriction::All}, Variant::Clr, kDefaultEnumerationCap,
                           threads));
        CHECK(distribution({2, 4, Restriction::Derangements}, Variant::Abs) ==
              distribution({2, 4, Restriction::Derangements}, Variant::Abs,
                           kDefaultEnumerationCap, threads));
    }
}

TEST_CASE("resource cap refusal") {
    CHECK_THROWS_AS(distribution({2, 4, Restriction::All}, Variant::Abs, /*cap=*/5),
                    std::runtime_error);
}

TEST_CASE("recursion_check T1 at r=2, n=2: both sides (1+q)(1-q^2)") {
    CHECK(recursion_check(Theorem::T1, 2, 2).passed);
    const MultiPoly lhs = at(distribution({2, 2, Restriction::All}, Variant::Abs), 1, -1);
    CHECK(lhs == q_int(2) * (MultiPoly::constant(1) - MultiPoly::q(2)));
}

TEST_CASE("recursion_check T2 at r=1, n=2 handles the empty derangement set") {
    CHECK(recursion_check(Theorem::T2, 1, 2).passed);
    CHECK(at(distribution({1, 2, Restriction::All}, Variant::Abs), 0, -1) == -MultiPoly::q());
    CHECK(at(distribution({1, 1, Restriction::All}, Variant::Abs), 0, -1).is_zero());
}

TEST_CASE("recursion_check T3 at n=2: (q^2-1) a_1 = 1 - q^2") {
    CHECK(recursion_check(Theorem::T3, 2, 2).passed);
    CHECK(dn_specialized(1, Variant::Clr, true) == -MultiPoly::constant(1));
    CHECK(dn_specialized(2, Variant::Clr, true) ==
          MultiPoly::constant(1) - MultiPoly::q(2));
}

TEST_CASE("recursion_check T4 coupled system at small n") {
    for (int n = 2; n <= 4; ++n) CHECK(recursion_check(Theorem::T4, 2, n).passed);
    CHECK(dn_specialized(1, Variant::Abs, true) == -MultiPoly::constant(1));
    CHECK(dn_specialized(1, Variant::Abs, false) == -MultiPoly::q());
}

TEST_CASE("closed forms match brute force on small cells") {
    for (int r = 1; r <= 3; ++r) {
        for (int n = 1; n <= 3; ++n) {
            for (Variant v : {Variant::Abs, Variant::Clr}) {
                const MultiPoly p = distribution({r, n, Restriction::All}, v);
                CHECK(at(p, 1, -1) == closed_form(Theorem::T1, r, n));
                CHECK(at(p, 0, -1) == closed_form(Theorem::T2, r, n));
            }
        }
    }
    for (int n = 1; n <= 4; ++n) {
        CHECK(dn_specialized(n, Variant::Clr, true) == closed_form(Theorem::T3, 2, n));
        CHECK(dn_specialized(n, Variant::Abs, true) == closed_form(Theorem::T4, 2, n));
    }
}

TEST_CASE("theorem_from_string") {
    CHECK(theorem_from_string("T3") == Theorem::T3);
    CHECK_THROWS_AS(theorem_from_string("T9"), std::invalid_argument);
}
