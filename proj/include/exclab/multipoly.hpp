#pragma once

#include <array>
#include <map>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace exclab {

using Coeff = boost::multiprecision::cpp_int;

/// Sparse exact-integer polynomial in the variables q, t, s. Terms map an
/// exponent triple (q, t, s) to a nonzero coefficient; zero coefficients
/// are never stored, so equality is term-map identity.
class MultiPoly {
public:
    using Exponents = std::array<int, 3>;  // (q, t, s)
    using TermMap = std::map<Exponents, Coeff>;

    MultiPoly() = default;

    static MultiPoly constant(Coeff c);
    static MultiPoly q(int exp = 1);
    static MultiPoly t(int exp = 1);
    static MultiPoly s(int exp = 1);
    /// c * q^a t^b s^c0.
    static MultiPoly term(Coeff coeff, int qe, int te = 0, int se = 0);

    bool is_zero() const { return terms_.empty(); }
    const TermMap& terms() const { return terms_; }

    /// Coefficient of q^a t^b s^c (zero if absent).
    Coeff coeff(int qe, int te = 0, int se = 0) const;

    void add_term(const Exponents& exps, const Coeff& c);

    MultiPoly operator-() const;
    MultiPoly& operator+=(const MultiPoly& other);
    MultiPoly& operator-=(const MultiPoly& other);
    friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
    friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
    friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);

    MultiPoly pow(int exp) const;  // throws on negative exponent

    /// Collapses the t (resp. s) exponent by substituting an integer value;
    /// 0^0 = 1, so terms with zero exponent survive a zero substitution.
    MultiPoly substitute_t(const Coeff& value) const;
    MultiPoly substitute_s(const Coeff& value) const;

    Coeff evaluate_q(const Coeff& value) const;  // requires t- and s-free

    bool is_univariate_q() const;
    int degree_q() const;  // -1 for the zero polynomial

    friend bool operator==(const MultiPoly&, const MultiPoly&) = default;

    /// Human form, e.g. "1 - q^2" or "t^2 s^2 + q s"; "0" for zero.
    std::string to_string() const;

    /// Ascending q-coefficients "[c0, c1, ...]"; requires univariate in q.
    std::string to_json_coeff_list() const;

    /// List of {"a": qe, "b": te, "c": se, "coeff": v} records, sorted
    /// lexicographically by exponent triple.
    std::string to_json_terms() const;

private:
    TermMap terms_;
};

/// [m]_q = 1 + q + ... + q^(m-1); [0]_q = 0.
MultiPoly q_int(int m);

/// [m]_q! = [m]_q [m-1]_q ... [1]_q; [0]_q! = 1 (empty product).
MultiPoly q_factorial(int m);

Coeff binomial(int n, int k);

}  // namespace exclab
