#pragma once

#include "bmw/laurent_poly.hpp"

#include <ostream>
#include <string>

namespace bmw {

/// Quotient of Laurent polynomials kept in a canonical form: num and den are
/// coprime polynomials with integer coefficients of joint content 1, and the
/// lex-leading coefficient of den is positive. Equal fractions therefore have
/// identical representations.
class RatFunc {
public:
    RatFunc() : den_(1) {}
    RatFunc(const Rational& c) : num_(Rational(c.numerator(), 1)), den_(Rational(c.denominator(), 1)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(long c) : RatFunc(Rational(c)) {}         // NOLINT(google-explicit-constructor)
    RatFunc(int c) : RatFunc(Rational(c)) {}          // NOLINT(google-explicit-constructor)
    RatFunc(const LaurentPoly& p) : RatFunc(p, LaurentPoly(1)) {}  // NOLINT(google-explicit-constructor)
    RatFunc(const LaurentPoly& num, const LaurentPoly& den);

    static RatFunc var(const std::string& name, int exponent = 1) { return RatFunc(LaurentPoly::var(name, exponent)); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
    Rational constant_value() const;
    bool has_var(const std::string& v) const { return num_.has_var(v) || den_.has_var(v); }

    RatFunc inv() const;
    RatFunc operator-() const;
    friend RatFunc operator+(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator-(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator*(const RatFunc& a, const RatFunc& b);
    friend RatFunc operator/(const RatFunc& a, const RatFunc& b);
    RatFunc& operator+=(const RatFunc& o) { return *this = *this + o; }
    RatFunc& operator-=(const RatFunc& o) { return *this = *this - o; }
    RatFunc& operator*=(const RatFunc& o) { return *this = *this * o; }
    RatFunc& operator/=(const RatFunc& o) { return *this = *this / o; }

    /// Substitute var := value. Throws std::domain_error when the
    /// denominator vanishes at value.
    RatFunc subs(const std::string& var, const RatFunc& value) const;

    friend bool operator==(const RatFunc& a, const RatFunc& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    std::string to_string() const;
    friend std::ostream& operator<<(std::ostream& os, const RatFunc& f) { return os << f.to_string(); }

private:
    friend RatFunc ratfunc_normalize(const LaurentPoly& num, const LaurentPoly& den);
    struct Raw {};
    static RatFunc from_coprime(LaurentPoly num, LaurentPoly den);
    RatFunc(Raw, LaurentPoly num, LaurentPoly den) : num_(std::move(num)), den_(std::move(den)) {}

    LaurentPoly num_;
    LaurentPoly den_;
};

/// Canonical representative of num/den. Throws std::invalid_argument on a
/// zero denominator.
RatFunc ratfunc_normalize(const LaurentPoly& num, const LaurentPoly& den);

}  // namespace bmw
