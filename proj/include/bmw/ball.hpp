#pragma once

#include "bmw/rational.hpp"

#include <mpfr.h>

#include <string>

namespace bmw {

inline constexpr mpfr_prec_t kDefaultPrecision = 512;

/// Midpoint-radius real ball. Every operation returns a ball that encloses
/// the exact result of applying the operation to any points of the inputs.
class Ball {
public:
    explicit Ball(mpfr_prec_t prec = kDefaultPrecision);
    Ball(long v, mpfr_prec_t prec);
    Ball(const Rational& v, mpfr_prec_t prec);
    Ball(const Ball& o);
    Ball(Ball&& o) noexcept;
    Ball& operator=(const Ball& o);
    Ball& operator=(Ball&& o) noexcept;
    ~Ball();

    /// Ball with the given midpoint and radius (radius rounded up).
    static Ball from_mid_rad(const Rational& mid, const Rational& rad, mpfr_prec_t prec);

    mpfr_prec_t precision() const { return prec_; }
    const mpfr_t& mid() const { return mid_; }
    const mpfr_t& rad() const { return rad_; }

    bool contains_zero() const;
    bool contains(const Rational& x) const;
    bool certified_positive() const;
    bool certified_negative() const;
    bool is_exact() const { return mpfr_zero_p(rad_) != 0; }

    /// True when the width 2r is strictly below 2^e.
    bool width_below_pow2(long e) const;
    /// log2 of the width; -inf for exact balls.
    double width_log2() const;

    Ball operator-() const;
    friend Ball operator+(const Ball& a, const Ball& b);
    friend Ball operator-(const Ball& a, const Ball& b);
    friend Ball operator*(const Ball& a, const Ball& b);
    /// Throws std::domain_error when b contains zero.
    friend Ball operator/(const Ball& a, const Ball& b);
    Ball& operator+=(const Ball& o) { return *this = *this + o; }
    Ball& operator-=(const Ball& o) { return *this = *this - o; }
    Ball& operator*=(const Ball& o) { return *this = *this * o; }

    /// "m ± r" with the midpoint to `digits` significant digits and the
    /// radius rounded up.
    std::string to_string(int digits = 20) const;
    std::string radius_string() const;

private:
    void add_rounding_error(int ternary);

    mpfr_prec_t prec_;
    mpfr_t mid_;
    mpfr_t rad_;
};

/// Enclosure of the square root. A ball that reaches below zero is accepted
/// (with its lower end clamped to 0) only when its width is below
/// 2^(-precision/2); a wider straddle throws "radicand sign unresolved" and a
/// certified negative ball throws as well.
Ball ball_sqrt(const Ball& x);

}  // namespace bmw
