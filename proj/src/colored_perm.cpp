#include "exclab/colored_perm.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace exclab {

namespace {

void check_r(int r) {
    if (r < 1) throw std::invalid_argument("number of colors r must be >= 1");
}

void check_n(int n) {
    if (n < 1) throw std::invalid_argument("number of digits n must be >= 1");
}

}  // namespace

ColoredPermutation::ColoredPermutation(int r, std::vector<int> tau, std::vector<int> z)
    : r_(r), tau_(std::move(tau)), z_(std::move(z)) {
    check_r(r_);
    check_n(static_cast<int>(tau_.size()));
    if (tau_.size() != z_.size())
        throw std::invalid_argument("tau and color vector lengths differ");
    const int n = static_cast<int>(tau_.size());
    std::vector<bool> seen(static_cast<size_t>(n) + 1, false);
    for (int v : tau_) {
        if (v < 1 || v > n) throw std::invalid_argument("tau entry out of [1, n]");
        if (seen[static_cast<size_t>(v)]) throw std::invalid_argument("tau repeats a digit");
        seen[static_cast<size_t>(v)] = true;
    }
    for (int c : z_) {
        if (c < 0 || c >= r_) throw std::invalid_argument("color out of [0, r-1]");
    }
}

ColoredPermutation ColoredPermutation::identity(int r, int n) {
    check_r(r);
    check_n(n);
    std::vector<int> tau(static_cast<size_t>(n));
    std::iota(tau.begin(), tau.end(), 1);
    return ColoredPermutation(unchecked_t{}, r, std::move(tau),
                              std::vector<int>(static_cast<size_t>(n), 0));
}

bool operator<(const ColoredPermutation& a, const ColoredPermutation& b) {
    if (a.tau_ != b.tau_) return a.tau_ < b.tau_;
    return a.z_ < b.z_;
}

ColoredDigit act(const ColoredPermutation& sigma, const ColoredDigit& x) {
    if (x.digit < 1 || x.digit > sigma.n())
        throw std::domain_error("digit out of range for this group");
    if (x.color < 0 || x.color >= sigma.r())
        throw std::domain_error("color out of range for this group");
    return {sigma.tau(x.digit), (sigma.color(x.digit) + x.color) % sigma.r()};
}

ColoredPermutation multiply(const ColoredPermutation& a, const ColoredPermutation& b) {
    if (a.r() != b.r() || a.n() != b.n())
        throw std::domain_error("multiply: mismatched group parameters");
    const int n = a.n();
    std::vector<int> tau(static_cast<size_t>(n)), z(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int bi = b.tau(i);
        tau[static_cast<size_t>(i) - 1] = a.tau(bi);
        z[static_cast<size_t>(i) - 1] = (b.color(i) + a.color(bi)) % a.r();
    }
    return ColoredPermutation(a.r(), std::move(tau), std::move(z));
}

ColoredPermutation inverse(const ColoredPermutation& sigma) {
    const int n = sigma.n();
    std::vector<int> tau(static_cast<size_t>(n)), z(static_cast<size_t>(n));
    for (int i = 1; i <= n; ++i) {
        const int ti = sigma.tau(i);
        tau[static_cast<size_t>(ti) - 1] = i;
        z[static_cast<size_t>(ti) - 1] = (sigma.r() - sigma.color(i)) % sigma.r();
    }
    return ColoredPermutation(sigma.r(), std::move(tau), std::move(z));
}

std::vector<int> underlying(const ColoredPermutation& sigma) { return sigma.tau_vec(); }

int cycle_count(const ColoredPermutation& sigma) {
    const int n = sigma.n();
    std::vector<bool> visited(static_cast<size_t>(n) + 1, false);
    int cycles = 0;
    for (int i = 1; i <= n; ++i) {
        if (visited[static_cast<size_t>(i)]) continue;
        ++cycles;
        int j = i;
        while (!visited[static_cast<size_t>(j)]) {
            visited[static_cast<size_t>(j)] = true;
            j = sigma.tau(j);
        }
    }
    return cycles;
}

bool is_derangement(const ColoredPermutation& sigma) {
    for (int i = 1; i <= sigma.n(); ++i)
        if (sigma.tau(i) == i) return false;
    return true;
}

std::uint64_t group_size(int r, int n) {
    check_r(r);
    check_n(n);
    std::uint64_t size = 1;
    const std::uint64_t limit = UINT64_MAX / 2;
    for (int i = 2; i <= n; ++i) {
        if (size > limit / static_cast<std::uint64_t>(i))
            throw std::overflow_error("group size exceeds 2^63");
        size *= static_cast<std::uint64_t>(i);
    }
    for (int i = 0; i < n; ++i) {
        if (size > limit / static_cast<std::uint64_t>(r))
            throw std::overflow_error("group size exceeds 2^63");
        size *= static_cast<std::uint64_t>(r);
    }
    return size;
}

bool matches_restriction(const ColoredPermutation& sigma, Restriction restriction) {
    switch (restriction) {
        case Restriction::All:
            return true;
        case Restriction::EvenColorSum: {
            int s = 0;
            for (int c : sigma.colors()) s += c;
            return s % 2 == 0;
        }
        case Restriction::Derangements:
            return is_derangement(sigma);
        case Restriction::DerangementsEvenColorSum: {
            if (!is_derangement(sigma)) return false;
            int s = 0;
            for (int c : sigma.colors()) s += c;
            return s % 2 == 0;
        }
    }
    throw std::logic_error("unreachable");
}

namespace {

void validate_spec(const GroupSpec& spec, std::uint64_t cap) {
    check_r(spec.r);
    check_n(spec.n);
    if ((spec.restriction == Restriction::EvenColorSum ||
         spec.restriction == Restriction::DerangementsEvenColorSum) &&
        spec.r != 2)
        throw std::domain_error("even color-sum restriction requires r = 2");
    if (group_size(spec.r, spec.n) > cap)
        throw std::runtime_error("enumeration refused: group size exceeds cap");
}

}  // namespace

// Walks taus with next_permutation and colors as a base-r counter, reusing
// one element; canonical order matches element_at.
class GroupScanner {
public:
    GroupScanner(int r, int n)
        : current_(ColoredPermutation::unchecked_t{}, r,
                   [n] {
                       std::vector<int> t(static_cast<size_t>(n));
                       std::iota(t.begin(), t.end(), 1);
                       return t;
                   }(),
                   std::vector<int>(static_cast<size_t>(n), 0)) {}

    void scan(const std::function<void(const ColoredPermutation&)>& fn) {
        const int n = current_.n();
        const int r = current_.r();
        auto& tau = current_.tau_;
        auto& z = current_.z_;
        do {
            std::fill(z.begin(), z.end(), 0);
            for (;;) {
                fn(current_);
                // increment z as a base-r number, z_1 most significant
                int pos = n - 1;
                while (pos >= 0 && z[static_cast<size_t>(pos)] == r - 1) {
                    z[static_cast<size_t>(pos)] = 0;
                    --pos;
                }
                if (pos < 0) break;
                ++z[static_cast<size_t>(pos)];
            }
        } while (std::next_permutation(tau.begin(), tau.end()));
    }

private:
    ColoredPermutation current_;
};

void for_each_element(const GroupSpec& spec,
                      const std::function<void(const ColoredPermutation&)>& fn,
                      std::uint64_t cap) {
    validate_spec(spec, cap);
    GroupScanner scanner(spec.r, spec.n);
    scanner.scan([&](const ColoredPermutation& sigma) {
        if (matches_restriction(sigma, spec.restriction)) fn(sigma);
    });
}

void for_each_filtered(int r, int n,
                       const std::function<bool(const ColoredPermutation&)>& pred,
                       const std::function<void(const ColoredPermutation&)>& fn,
                       std::uint64_t cap) {
    validate_spec(GroupSpec{r, n, Restriction::All}, cap);
    GroupScanner scanner(r, n);
    scanner.scan([&](const ColoredPermutation& sigma) {
        if (pred(sigma)) fn(sigma);
    });
}

ColoredPermutation element_at(int r, int n, std::uint64_t index) {
    const std::uint64_t total = group_size(r, n);
    if (index >= total) throw std::out_of_range("element index out of range");
    std::uint64_t colors_per_tau = 1;
    for (int i = 0; i < n; ++i) colors_per_tau *= static_cast<std::uint64_t>(r);
    std::uint64_t tau_rank = index / colors_per_tau;
    std::uint64_t z_rank = index % colors_per_tau;

    // lexicographic unranking via the factorial number system
    std::vector<int> pool(static_cast<size_t>(n));
    std::iota(pool.begin(), pool.end(), 1);
    std::vector<std::uint64_t> fact(static_cast<size_t>(n), 1);
    for (int i = 1; i < n; ++i)
        fact[static_cast<size_t>(i)] = fact[static_cast<size_t>(i) - 1] * static_cast<std::uint64_t>(i);
    std::vector<int> tau;
    tau.reserve(static_cast<size_t>(n));
    for (int i = n - 1; i >= 0; --i) {
        const std::uint64_t f = fact[static_cast<size_t>(i)];
        const auto pick = static_cast<size_t>(tau_rank / f);
        tau_rank %= f;
        tau.push_back(pool[pick]);
        pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
    }

    std::vector<int> z(static_cast<size_t>(n), 0);
    for (int i = n - 1; i >= 0; --i) {
        z[static_cast<size_t>(i)] = static_cast<int>(z_rank % static_cast<std::uint64_t>(r));
        z_rank /= static_cast<std::uint64_t>(r);
    }
    return ColoredPermutation(r, std::move(tau), std::move(z));
}

std::vector<ColoredPermutation> enumerate(const GroupSpec& spec, std::uint64_t cap) {
    std::vector<ColoredPermutation> out;
    for_each_element(spec, [&](const ColoredPermutation& sigma) { out.push_back(sigma); }, cap);
    return out;
}

ColoredPermutation parse_window(const std::string& text, int r) {
    check_r(r);
    std::istringstream in(text);
    std::vector<int> tau, z;
    std::string token;
    int pos = 0;
    while (in >> token) {
        ++pos;
        const auto caret = token.find('^');
        std::string digit_part = token.substr(0, caret);
        std::string color_part = caret == std::string::npos ? "0" : token.substr(caret + 1);
        auto parse_int = [&](const std::string& s) {
            if (s.empty() || !std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; }))
                throw std::invalid_argument("malformed token '" + token + "' at position " +
                                            std::to_string(pos));
            return std::stoi(s);
        };
        const int digit = parse_int(digit_part);
        const int color = parse_int(color_part);
        if (color >= r)
            throw std::invalid_argument("color " + std::to_string(color) + " >= r at position " +
                                        std::to_string(pos));
        if (std::find(tau.begin(), tau.end(), digit) != tau.end())
            throw std::invalid_argument("repeated digit " + std::to_string(digit) +
                                        " at position " + std::to_string(pos));
        tau.push_back(digit);
        z.push_back(color);
    }
    if (tau.empty()) throw std::invalid_argument("empty window");
    return ColoredPermutation(r, std::move(tau), std::move(z));
}

std::string format_window(const ColoredPermutation& sigma) {
    std::string out;
    for (int i = 1; i <= sigma.n(); ++i) {
        if (i > 1) out += ' ';
        out += std::to_string(sigma.tau(i));
        if (sigma.color(i) != 0) out += '^' + std::to_string(sigma.color(i));
    }
    return out;
}

}  // namespace exclab
