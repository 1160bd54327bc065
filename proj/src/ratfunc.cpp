#include "bmw/ratfunc.hpp"

#include <algorithm>
#include <stdexcept>

namespace bmw {

namespace {

// Jointly scale num and den to integer coefficients with content 1 and a
// positive lex-leading denominator coefficient.
void scale_jointly(LaurentPoly& num, LaurentPoly& den) {
    BigInt l = 1;
    BigInt g = 0;
    for (const auto* p : {&num, &den})
        for (const auto& [m, c] : p->terms()) l = lcm(l, c.denominator());
    for (const auto* p : {&num, &den})
        for (const auto& [m, c] : p->terms()) g = gcd(g, BigInt(c.numerator() * (l / c.denominator())));
    Rational f(g, l);
    if (den.leading().second.sign() < 0) f = -f;
    if (!f.is_one()) {
        const Rational inv = f.inv();
        num = num.scaled(inv);
        den = den.scaled(inv);
    }
}

LaurentPoly horner_homogenized(const LaurentPoly& p, const std::string& v, const LaurentPoly& a, const LaurentPoly& b,
                               int total) {
    // Σ_e C_e a^e b^(total−e)
    LaurentPoly out;
    for (const auto& [e, c] : p.coeffs(v)) out = out + c * a.pow(static_cast<unsigned>(e)) * b.pow(static_cast<unsigned>(total - e));
    return out;
}

}  // namespace

RatFunc ratfunc_normalize(const LaurentPoly& num_in, const LaurentPoly& den_in) {
    if (den_in.is_zero()) throw std::invalid_argument("RatFunc: zero denominator");
    if (num_in.is_zero()) return RatFunc();
    const auto vars = merge_vars(num_in.vars(), den_in.vars());
    LaurentPoly num = num_in.over(vars);
    LaurentPoly den = den_in.over(vars);
    Monomial shift(vars.size(), 0);
    bool need_shift = false;
    for (std::size_t i = 0; i < vars.size(); ++i) {
        const int lo = std::min(num.min_degree(vars[i]), den.min_degree(vars[i]));
        shift[i] = -lo;
        need_shift = need_shift || lo != 0;
    }
    if (need_shift) {
        num = num.over(vars).shifted(shift);
        den = den.over(vars).shifted(shift);
    }
    if (!den.is_constant() && !num.is_zero()) {
        const LaurentPoly g = poly::gcd(num, den);
        if (!g.is_constant()) {
            num = *poly::exact_div(num, g);
            den = *poly::exact_div(den, g);
        }
    }
    num.prune();
    den.prune();
    scale_jointly(num, den);
    return RatFunc(RatFunc::Raw{}, std::move(num), std::move(den));
}

RatFunc::RatFunc(const LaurentPoly& num, const LaurentPoly& den) {
    *this = ratfunc_normalize(num, den);
}

Rational RatFunc::constant_value() const {
    if (!is_constant()) throw std::logic_error("RatFunc: not a constant: " + to_string());
    return num_.constant_value() / den_.constant_value();
}

RatFunc RatFunc::inv() const {
    if (is_zero()) throw std::domain_error("RatFunc: inverse of zero");
    return from_coprime(den_, num_);
}

RatFunc RatFunc::operator-() const { return RatFunc(Raw{}, -num_, den_); }

namespace {

LaurentPoly divide(const LaurentPoly& a, const LaurentPoly& g) {
    if (g.is_constant()) return a.scaled(g.constant_value().inv());
    return *poly::exact_div(a, g);
}

}  // namespace

RatFunc RatFunc::from_coprime(LaurentPoly num, LaurentPoly den) {
    if (num.is_zero()) return RatFunc();
    num.prune();
    den.prune();
    scale_jointly(num, den);
    return RatFunc(Raw{}, std::move(num), std::move(den));
}

RatFunc operator+(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.den_.is_constant() && b.den_.is_constant())
        return RatFunc::from_coprime(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
    const LaurentPoly g = poly::gcd(a.den_, b.den_);
    const LaurentPoly ad = divide(a.den_, g);
    const LaurentPoly bd = divide(b.den_, g);
    const LaurentPoly num = a.num_ * bd + b.num_ * ad;
    if (num.is_zero()) return RatFunc();
    const LaurentPoly h = poly::gcd(num, g);
    return RatFunc::from_coprime(divide(num, h), divide(g, h) * ad * bd);
}

RatFunc operator-(const RatFunc& a, const RatFunc& b) { return a + (-b); }

RatFunc operator*(const RatFunc& a, const RatFunc& b) {
    if (a.is_zero() || b.is_zero()) return RatFunc();
    const LaurentPoly g1 = poly::gcd(a.num_, b.den_);
    const LaurentPoly g2 = poly::gcd(b.num_, a.den_);
    return RatFunc::from_coprime(divide(a.num_, g1) * divide(b.num_, g2), divide(a.den_, g2) * divide(b.den_, g1));
}

RatFunc operator/(const RatFunc& a, const RatFunc& b) {
    if (b.is_zero()) throw std::domain_error("RatFunc: division by zero");
    return a * b.inv();
}

RatFunc RatFunc::subs(const std::string& v, const RatFunc& value) const {
    if (!has_var(v)) return *this;
    const int dn = num_.max_degree(v);
    const int dd = den_.max_degree(v);
    const LaurentPoly& p = value.num();
    const LaurentPoly& q = value.den();
    const LaurentPoly top = horner_homogenized(num_, v, p, q, dn) * q.pow(static_cast<unsigned>(dd));
    const LaurentPoly bottom = horner_homogenized(den_, v, p, q, dd) * q.pow(static_cast<unsigned>(dn));
    if (bottom.is_zero()) throw std::domain_error("RatFunc::subs: denominator vanishes at " + v + " = " + value.to_string());
    return ratfunc_normalize(top, bottom);
}

std::string RatFunc::to_string() const {
    if (den_ == LaurentPoly(1)) return num_.to_string();
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

}  // namespace bmw
