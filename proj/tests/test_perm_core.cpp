#include "doctest.h"

#include <random>
#include <stdexcept>
#include <set>

#include "exclab/colored_perm.hpp"

using namespace exclab;

namespace {

ColoredPermutation w(const std::string& window, int r) { return parse_window(window, r); }

// Independent oracle for composition: apply b then a pointwise on Sigma.
bool composes_pointwise(const ColoredPermutation& c, const ColoredPermutation& a,
                        const ColoredPermutation& b) {
    for (int digit = 1; digit <= a.n(); ++digit)
        for (int color = 0; color < a.r(); ++color) {
            const ColoredDigit x{digit, color};
            if (!(act(c, x) == act(a, act(b, x)))) return false;
        }
    return true;
}

}  // namespace

TEST_CASE("construction rejects invalid windows") {
    CHECK_THROWS_AS(ColoredPermutation(2, {1, 1}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(ColoredPermutation(2, {1, 3}, {0, 0}), std::invalid_argument);
    CHECK_THROWS_AS(ColoredPermutation(2, {1, 2}, {0, 2}), std::invalid_argument);
    CHECK_THROWS_AS(ColoredPermutation(0, {1}, {0}), std::invalid_argument);
}

TEST_CASE("act on the paper's extended-form example") {
    const auto sigma = w("3 1^1 2^2", 3);
    CHECK(act(sigma, {1, 2}) == ColoredDigit{3, 2});
    CHECK(act(sigma, {2, 2}) == ColoredDigit{1, 0});
    const auto id = ColoredPermutation::identity(3, 3);
    for (int d = 1; d <= 3; ++d)
        for (int c = 0; c < 3; ++c) CHECK(act(id, {d, c}) == ColoredDigit{d, c});
    CHECK_THROWS_AS(act(sigma, {4, 0}), std::domain_error);
    CHECK_THROWS_AS(act(sigma, {1, 3}), std::domain_error);
}

TEST_CASE("act respects colors: digit independent of input color, color shifts") {
    for_each_element({3, 3, Restriction::All}, [](const ColoredPermutation& sigma) {
        for (int i = 1; i <= 3; ++i) {
            const int base_digit = act(sigma, {i, 0}).digit;
            for (int j = 0; j < 3; ++j) {
                const ColoredDigit image = act(sigma, {i, j});
                CHECK(image.digit == base_digit);
                CHECK(image.color == (sigma.color(i) + j) % 3);
            }
        }
    });
}

TEST_CASE("multiply is function composition") {
    const auto a = w("2 1", 2);
    const auto b = w("1^1 2", 2);
    const auto c = multiply(a, b);
    CHECK(c == w("2^1 1", 2));
    CHECK(composes_pointwise(c, a, b));

    CHECK(multiply(ColoredPermutation::identity(2, 2), b) == b);
    const auto flip = w("1^1", 2);
    CHECK(multiply(flip, flip) == ColoredPermutation::identity(2, 1));
    CHECK_THROWS_AS(multiply(a, w("1 2 3", 2)), std::domain_error);
}

TEST_CASE("group laws hold exhaustively for small groups") {
    for (int r = 1; r <= 3; ++r) {
        for (int n = 1; n <= 3; ++n) {
            const auto elements = enumerate({r, n, Restriction::All});
            const auto id = ColoredPermutation::identity(r, n);
            for (const auto& g : elements) {
                CHECK(multiply(g, id) == g);
                CHECK(multiply(id, g) == g);
                CHECK(multiply(g, inverse(g)) == id);
                CHECK(multiply(inverse(g), g) == id);
            }
            // associativity on random triples
            std::mt19937 rng(7);
            std::uniform_int_distribution<size_t> pick(0, elements.size() - 1);
            for (int trial = 0; trial < 50; ++trial) {
                const auto& a = elements[pick(rng)];
                const auto& b = elements[pick(rng)];
                const auto& c = elements[pick(rng)];
                CHECK(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
            }
        }
    }
}

TEST_CASE("multiply consistent with act on every pair of G_{2,2}") {
    const auto elements = enumerate({2, 2, Restriction::All});
    for (const auto& a : elements)
        for (const auto& b : elements) CHECK(composes_pointwise(multiply(a, b), a, b));
}

TEST_CASE("inverse examples") {
    CHECK(inverse(ColoredPermutation::identity(2, 3)) == ColoredPermutation::identity(2, 3));
    CHECK(inverse(w("2 1", 1)) == w("2 1", 1));
    CHECK(inverse(w("1^1", 3)) == w("1^2", 3));
}

TEST_CASE("underlying strips colors") {
    CHECK(underlying(w("2^1 3^2 1 4^1", 3)) == std::vector<int>{2, 3, 1, 4});
    CHECK(underlying(ColoredPermutation::identity(2, 3)) == std::vector<int>{1, 2, 3});
    CHECK(underlying(w("1^1 2^1", 2)) == std::vector<int>{1, 2});
}

TEST_CASE("cycle_count") {
    CHECK(cycle_count(ColoredPermutation::identity(3, 4)) == 4);
    CHECK(cycle_count(w("3 1^1 2^2", 3)) == 1);
    CHECK(cycle_count(w("2 1 3^1", 2)) == 2);
}

TEST_CASE("transposition of two window values flips cycle parity") {
    for_each_element({2, 4, Restriction::All}, [](const ColoredPermutation& sigma) {
        std::vector<int> tau = sigma.tau_vec();
        std::swap(tau[1], tau[3]);
        const ColoredPermutation swapped(sigma.r(), tau, sigma.colors());
        CHECK((cycle_count(sigma) + cycle_count(swapped)) % 2 == 1);
    });
}

TEST_CASE("enumerate sizes and canonical order") {
    CHECK(enumerate({1, 3, Restriction::All}).size() == 6);
    CHECK(group_size(2, 3) == 48);
    CHECK(group_size(3, 4) == 1944);

    const auto d2 = enumerate({2, 2, Restriction::EvenColorSum});
    REQUIRE(d2.size() == 4);
    CHECK(format_window(d2[0]) == "1 2");
    CHECK(format_window(d2[1]) == "1^1 2^1");
    CHECK(format_window(d2[2]) == "2 1");
    CHECK(format_window(d2[3]) == "2^1 1^1");

    CHECK(enumerate({1, 1, Restriction::Derangements}).empty());
}

TEST_CASE("enumerate yields distinct elements matching element_at") {
    const auto elements = enumerate({3, 3, Restriction::All});
    CHECK(elements.size() == group_size(3, 3));
    std::set<ColoredPermutation> seen(elements.begin(), elements.end());
    CHECK(seen.size() == elements.size());
    for (size_t i = 0; i < elements.size(); ++i)
        CHECK(element_at(3, 3, i) == elements[i]);
}

TEST_CASE("derangement counts for r=1 match 0, 1, 2, 9, 44") {
    const std::vector<size_t> expected{0, 1, 2, 9, 44};
    for (int n = 1; n <= 5; ++n)
        CHECK(enumerate({1, n, Restriction::Derangements}).size() == expected[static_cast<size_t>(n) - 1]);
}

TEST_CASE("is_derangement") {
    CHECK(is_derangement(w("2^1 1", 2)));
    CHECK_FALSE(is_derangement(w("1^1 2", 2)));
    CHECK(is_derangement(w("3 1^1 4 2^1", 2)));
}

TEST_CASE("enumeration guards") {
    CHECK_THROWS_AS(enumerate({3, 2, Restriction::EvenColorSum}), std::domain_error);
    CHECK_THROWS_AS(enumerate({2, 3, Restriction::All}, /*cap=*/10), std::runtime_error);
}

TEST_CASE("parse/format round trip and errors") {
    CHECK(w("3 1^1 2^2", 3) == ColoredPermutation(3, {3, 1, 2}, {0, 1, 2}));
    CHECK(w("1 2 3", 1) == ColoredPermutation::identity(1, 3));
    CHECK_THROWS_AS(parse_window("2^1 2^0", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_window("1 x", 2), std::invalid_argument);
    CHECK_THROWS_AS(parse_window("1^5 2", 2), std::invalid_argument);

    for (int r = 1; r <= 3; ++r)
        for (int n = 1; n <= 4; ++n)
            for_each_element({r, n, Restriction::All}, [r](const ColoredPermutation& sigma) {
                CHECK(parse_window(format_window(sigma), r) == sigma);
            });
}
