#include "exclab/distribution.hpp"

#include <stdexcept>
#include <thread>

namespace exclab {

int exc_variant(const ColoredPermutation& sigma, Variant variant) {
    return variant == Variant::Abs ? exc_abs(sigma) : exc_clr(sigma);
}

namespace {

void accumulate(MultiPoly& acc, const ColoredPermutation& sigma, Variant variant) {
    acc.add_term({exc_variant(sigma, variant), fix_abs(sigma), cycle_count(sigma)}, 1);
}

MultiPoly sum_filtered_parallel(int r, int n, Variant variant,
                                const std::function<bool(const ColoredPermutation&)>& pred,
                                std::uint64_t cap, int threads) {
    const std::uint64_t total = group_size(r, n);
    if (total > cap) throw std::runtime_error("enumeration refused: group size exceeds cap");
    if (threads <= 1) {
        MultiPoly acc;
        for_each_filtered(r, n, pred, [&](const ColoredPermutation& sigma) {
            accumulate(acc, sigma, variant);
        }, cap);
        return acc;
    }

    const auto nthreads = static_cast<std::uint64_t>(threads);
    std::vector<MultiPoly> partial(static_cast<size_t>(threads));
    std::vector<std::thread> pool;
    pool.reserve(static_cast<size_t>(threads));
    for (std::uint64_t chunk = 0; chunk < nthreads; ++chunk) {
        pool.emplace_back([&, chunk] {
            const std::uint64_t begin = total * chunk / nthreads;
            const std::uint64_t end = total * (chunk + 1) / nthreads;
            MultiPoly& acc = partial[static_cast<size_t>(chunk)];
            for (std::uint64_t index = begin; index < end; ++index) {
                const ColoredPermutation sigma = element_at(r, n, index);
                if (pred(sigma)) accumulate(acc, sigma, variant);
            }
        });
    }
    for (auto& th : pool) th.join();
    MultiPoly result;
    for (const auto& p : partial) result += p;
    return result;
}

}  // namespace

MultiPoly distribution(const GroupSpec& spec, Variant variant, std::uint64_t cap, int threads) {
    if ((spec.restriction == Restriction::EvenColorSum ||
         spec.restriction == Restriction::DerangementsEvenColorSum) &&
        spec.r != 2)
        throw std::domain_error("even color-sum restriction requires r = 2");
    return sum_filtered_parallel(
        spec.r, spec.n, variant,
        [&spec](const ColoredPermutation& sigma) {
            return matches_restriction(sigma, spec.restriction);
        },
        cap, threads);
}

MultiPoly distribution_over(const std::vector<ColoredPermutation>& elements, Variant variant) {
    MultiPoly acc;
    const ColoredPermutation* first = nullptr;
    for (const auto& sigma : elements) {
        if (first == nullptr) {
            first = &sigma;
        } else if (sigma.r() != first->r() || sigma.n() != first->n()) {
            throw std::domain_error("distribution_over: mixed (r, n) in stream");
        }
        accumulate(acc, sigma, variant);
    }
    return acc;
}

MultiPoly distribution_filtered(int r, int n, Variant variant,
                                const std::function<bool(const ColoredPermutation&)>& pred,
                                std::uint64_t cap, int threads) {
    return sum_filtered_parallel(r, n, variant, pred, cap, threads);
}

Theorem theorem_from_string(const std::string& name) {
    if (name == "T1") return Theorem::T1;
    if (name == "T2") return Theorem::T2;
    if (name == "T3") return Theorem::T3;
    if (name == "T4") return Theorem::T4;
    throw std::invalid_argument("unknown theorem id: " + name);
}

MultiPoly closed_form(Theorem theorem, int r, int n) {
    if (n < 1) throw std::domain_error("closed_form: n must be >= 1");
    switch (theorem) {
        case Theorem::T1: {
            if (r < 1) throw std::domain_error("closed_form: r must be >= 1");
            const MultiPoly qr_minus_1 = MultiPoly::q(r) - MultiPoly::constant(1);
            return -(qr_minus_1.pow(n - 1) * q_int(r));
        }
        case Theorem::T2: {
            if (r < 1) throw std::domain_error("closed_form: r must be >= 1");
            return -(MultiPoly::q() * q_int(r).pow(n) * q_int(n - 1));
        }
        case Theorem::T3: {
            const MultiPoly q2_minus_1 = MultiPoly::q(2) - MultiPoly::constant(1);
            return -q2_minus_1.pow(n - 1);
        }
        case Theorem::T4: {
            MultiPoly even_sum;
            for (int k = 0; k <= n; k += 2)
                even_sum += MultiPoly::term(binomial(n, k), k);
            const MultiPoly q_minus_1 = MultiPoly::q() - MultiPoly::constant(1);
            return -(q_minus_1.pow(n - 1) * even_sum);
        }
    }
    throw std::logic_error("unreachable");
}

MultiPoly closed_form_t3_statement(int n) {
    if (n < 1) throw std::domain_error("n must be >= 1");
    return (MultiPoly::constant(1) - MultiPoly::q(2)).pow(n - 1);
}

MultiPoly dn_specialized(int n, Variant variant, bool even_csum, std::uint64_t cap, int threads) {
    return distribution_filtered(
               2, n, variant,
               [even_csum](const ColoredPermutation& sigma) {
                   return (csum(sigma) % 2 == 0) == even_csum;
               },
               cap, threads)
        .substitute_t(1)
        .substitute_s(-1);
}

RecursionReport recursion_check(Theorem theorem, int r, int n, std::uint64_t cap) {
    if (n < 2) throw std::domain_error("recursion_check: n must be >= 2");
    auto fail = [](const MultiPoly& lhs, const MultiPoly& rhs) {
        return RecursionReport{false, "lhs = " + lhs.to_string() + "; rhs = " + rhs.to_string()};
    };
    auto check_both_variants = [&](auto&& lhs_of, auto&& rhs_of) -> RecursionReport {
        for (Variant v : {Variant::Abs, Variant::Clr}) {
            const MultiPoly lhs = lhs_of(v);
            const MultiPoly rhs = rhs_of(v);
            if (lhs != rhs) return fail(lhs, rhs);
        }
        return {true, ""};
    };

    switch (theorem) {
        case Theorem::T1: {
            const MultiPoly factor = MultiPoly::q(r) - MultiPoly::constant(1);
            return check_both_variants(
                [&](Variant v) {
                    return distribution({r, n, Restriction::All}, v, cap)
                        .substitute_t(1)
                        .substitute_s(-1);
                },
                [&](Variant v) {
                    return factor * distribution({r, n - 1, Restriction::All}, v, cap)
                                        .substitute_t(1)
                                        .substitute_s(-1);
                });
        }
        case Theorem::T2: {
            const MultiPoly rq = q_int(r);
            const MultiPoly correction = MultiPoly::q(n - 1) * rq.pow(n - 1);
            return check_both_variants(
                [&](Variant v) {
                    return distribution({r, n, Restriction::All}, v, cap)
                        .substitute_t(0)
                        .substitute_s(-1);
                },
                [&](Variant v) {
                    const MultiPoly prev = distribution({r, n - 1, Restriction::All}, v, cap)
                                               .substitute_t(0)
                                               .substitute_s(-1);
                    return rq * (prev - correction);
                });
        }
        case Theorem::T3: {
            const MultiPoly lhs = dn_specialized(n, Variant::Clr, true, cap);
            const MultiPoly rhs = (MultiPoly::q(2) - MultiPoly::constant(1)) *
                                  dn_specialized(n - 1, Variant::Clr, true, cap);
            if (lhs != rhs) return fail(lhs, rhs);
            return {true, ""};
        }
        case Theorem::T4: {
            const MultiPoly a_n = dn_specialized(n, Variant::Abs, true, cap);
            const MultiPoly b_n = dn_specialized(n, Variant::Abs, false, cap);
            const MultiPoly a_prev = dn_specialized(n - 1, Variant::Abs, true, cap);
            const MultiPoly b_prev = dn_specialized(n - 1, Variant::Abs, false, cap);
            const MultiPoly q_minus_1 = MultiPoly::q() - MultiPoly::constant(1);
            const MultiPoly a_rhs = q_minus_1 * (a_prev + MultiPoly::q() * b_prev);
            const MultiPoly b_rhs = q_minus_1 * (b_prev + MultiPoly::q() * a_prev);
            if (a_n != a_rhs) return fail(a_n, a_rhs);
            if (b_n != b_rhs) return fail(b_n, b_rhs);
            return {true, ""};
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace exclab
