#pragma once

#include "bmw/rational.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bmw {

using Monomial = std::vector<int>;

/// Variable ordering used everywhere: lexicographic by name except that "y"
/// always sorts last.
bool var_less(const std::string& a, const std::string& b);

/// Multivariate Laurent polynomial with rational coefficients. Exponents may
/// be negative. The variable list only ever holds variables that actually
/// occur, so two equal polynomials have identical representations.
class LaurentPoly {
public:
    using Terms = std::map<Monomial, Rational>;

    LaurentPoly() = default;
    LaurentPoly(const Rational& c);  // NOLINT(google-explicit-constructor)
    LaurentPoly(long c) : LaurentPoly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
    LaurentPoly(int c) : LaurentPoly(Rational(c)) {}   // NOLINT(google-explicit-constructor)
    LaurentPoly(std::vector<std::string> vars, Terms terms);

    static LaurentPoly var(const std::string& name, int exponent = 1);

    const std::vector<std::string>& vars() const { return vars_; }
    const Terms& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const { return vars_.empty(); }
    Rational constant_value() const;  // throws unless is_constant()
    bool has_var(const std::string& v) const;
    int var_index(const std::string& v) const;  // -1 when absent

    int max_degree(const std::string& v) const;
    int min_degree(const std::string& v) const;

    /// Leading term in lex order (first variable most significant).
    const std::pair<const Monomial, Rational>& leading() const;

    /// Re-express over a superset of the variables (sorted by var_less).
    LaurentPoly over(const std::vector<std::string>& vars) const;

    LaurentPoly operator-() const;
    friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b);
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
    LaurentPoly scaled(const Rational& c) const;
    LaurentPoly pow(unsigned e) const;

    /// Multiply by the monomial with the given exponents (aligned with vars()).
    LaurentPoly shifted(const Monomial& m) const;

    /// Coefficient of v^e, as a polynomial in the remaining variables.
    LaurentPoly coeff(const std::string& v, int e) const;
    std::map<int, LaurentPoly> coeffs(const std::string& v) const;

    friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
        return a.vars_ == b.vars_ && a.terms_ == b.terms_;
    }

    std::string to_string() const;

    /// Drop variables that no longer occur.
    void prune();

private:

    std::vector<std::string> vars_;
    Terms terms_;
};

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b);

namespace poly {

/// Polynomial gcd over Q; result has lex-leading coefficient 1. Arguments
/// must have non-negative exponents.
LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b);

/// a / b when b divides a exactly, otherwise nullopt.
std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// Integer coefficients with content 1 and positive leading coefficient;
/// returns the rational factor c with p = c * result.
LaurentPoly primitive_scale(const LaurentPoly& p, Rational* factor = nullptr);

}  // namespace poly

}  // namespace bmw
