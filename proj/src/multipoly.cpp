#include "exclab/multipoly.hpp"

#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace exclab {

MultiPoly MultiPoly::constant(Coeff c) { return term(std::move(c), 0, 0, 0); }

MultiPoly MultiPoly::q(int exp) { return term(1, exp, 0, 0); }
MultiPoly MultiPoly::t(int exp) { return term(1, 0, exp, 0); }
MultiPoly MultiPoly::s(int exp) { return term(1, 0, 0, exp); }

MultiPoly MultiPoly::term(Coeff coeff, int qe, int te, int se) {
    if (qe < 0 || te < 0 || se < 0) throw std::domain_error("negative exponent");
    MultiPoly p;
    if (coeff != 0) p.terms_[{qe, te, se}] = std::move(coeff);
    return p;
}

Coeff MultiPoly::coeff(int qe, int te, int se) const {
    const auto it = terms_.find({qe, te, se});
    return it == terms_.end() ? Coeff(0) : it->second;
}

void MultiPoly::add_term(const Exponents& exps, const Coeff& c) {
    if (c == 0) return;
    auto [it, inserted] = terms_.try_emplace(exps, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0) terms_.erase(it);
    }
}

MultiPoly MultiPoly::operator-() const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) out.terms_[e] = -c;
    return out;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, c);
    return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
    for (const auto& [e, c] : other.terms_) add_term(e, -c);
    return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    MultiPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_)
            out.add_term({ea[0] + eb[0], ea[1] + eb[1], ea[2] + eb[2]}, ca * cb);
    return out;
}

MultiPoly MultiPoly::pow(int exp) const {
    if (exp < 0) throw std::domain_error("pow: negative exponent");
    MultiPoly result = constant(1);
    MultiPoly base = *this;
    while (exp > 0) {
        if (exp & 1) result = result * base;
        base = base * base;
        exp >>= 1;
    }
    return result;
}

namespace {

Coeff int_pow(const Coeff& base, int exp) {
    // 0^0 = 1
    Coeff result = 1;
    for (int i = 0; i < exp; ++i) result *= base;
    return result;
}

}  // namespace

MultiPoly MultiPoly::substitute_t(const Coeff& value) const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) out.add_term({e[0], 0, e[2]}, c * int_pow(value, e[1]));
    return out;
}

MultiPoly MultiPoly::substitute_s(const Coeff& value) const {
    MultiPoly out;
    for (const auto& [e, c] : terms_) out.add_term({e[0], e[1], 0}, c * int_pow(value, e[2]));
    return out;
}

Coeff MultiPoly::evaluate_q(const Coeff& value) const {
    Coeff result = 0;
    for (const auto& [e, c] : terms_) {
        if (e[1] != 0 || e[2] != 0)
            throw std::domain_error("evaluate_q: polynomial not univariate in q");
        result += c * int_pow(value, e[0]);
    }
    return result;
}

bool MultiPoly::is_univariate_q() const {
    for (const auto& [e, c] : terms_)
        if (e[1] != 0 || e[2] != 0) return false;
    return true;
}

int MultiPoly::degree_q() const {
    int deg = -1;
    for (const auto& [e, c] : terms_) deg = std::max(deg, e[0]);
    return deg;
}

std::string MultiPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Coeff abs_c = c < 0 ? Coeff(-c) : c;
        if (first) {
            if (c < 0) out << "-";
            first = false;
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        const bool has_var = e[0] > 0 || e[1] > 0 || e[2] > 0;
        if (!has_var || abs_c != 1) out << abs_c;
        bool need_space = false;  // coefficient binds to the first variable, "4q^2 t"
        auto emit = [&](const char* name, int exp) {
            if (exp == 0) return;
            if (need_space) out << ' ';
            out << name;
            if (exp > 1) out << '^' << exp;
            need_space = true;
        };
        emit("q", e[0]);
        emit("t", e[1]);
        emit("s", e[2]);
    }
    return out.str();
}

std::string MultiPoly::to_json_coeff_list() const {
    if (!is_univariate_q())
        throw std::domain_error("coefficient list requires a q-only polynomial");
    nlohmann::json coeffs = nlohmann::json::array();
    const int deg = degree_q();
    for (int i = 0; i <= deg; ++i)
        coeffs.push_back(static_cast<std::int64_t>(coeff(i)));
    return coeffs.dump();
}

std::string MultiPoly::to_json_terms() const {
    nlohmann::ordered_json out = nlohmann::ordered_json::array();
    for (const auto& [e, c] : terms_) {
        nlohmann::ordered_json rec;
        rec["a"] = e[0];
        rec["b"] = e[1];
        rec["c"] = e[2];
        rec["coeff"] = static_cast<std::int64_t>(c);
        out.push_back(rec);
    }
    return out.dump();
}

MultiPoly q_int(int m) {
    if (m < 0) throw std::domain_error("q_int: negative argument");
    MultiPoly out;
    for (int k = 0; k < m; ++k) out += MultiPoly::q(k);
    return out;
}

MultiPoly q_factorial(int m) {
    if (m < 0) throw std::domain_error("q_factorial: negative argument");
    MultiPoly out = MultiPoly::constant(1);
    for (int k = 1; k <= m; ++k) out = out * q_int(k);
    return out;
}

Coeff binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    Coeff result = 1;
    for (int i = 1; i <= k; ++i) {
        result *= n - k + i;
        result /= i;
    }
    return result;
}

}  // namespace exclab
