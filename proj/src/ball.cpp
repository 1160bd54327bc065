#include "bmw/ball.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace bmw {

namespace {

constexpr mpfr_prec_t kRadPrec = 64;

// RAII scratch value for radius arithmetic.
struct Tmp {
    explicit Tmp(mpfr_prec_t p = kRadPrec) { mpfr_init2(v, p); }
    ~Tmp() { mpfr_clear(v); }
    Tmp(const Tmp&) = delete;
    Tmp& operator=(const Tmp&) = delete;
    mpfr_t v;
};

}  // namespace

Ball::Ball(mpfr_prec_t prec) : prec_(prec) {
    mpfr_init2(mid_, prec_);
    mpfr_init2(rad_, kRadPrec);
    mpfr_set_zero(mid_, 1);
    mpfr_set_zero(rad_, 1);
}

Ball::Ball(long v, mpfr_prec_t prec) : Ball(prec) { add_rounding_error(mpfr_set_si(mid_, v, MPFR_RNDN)); }

Ball::Ball(const Rational& v, mpfr_prec_t prec) : Ball(prec) {
    add_rounding_error(mpfr_set_q(mid_, v.raw().get_mpq_t(), MPFR_RNDN));
}

Ball::Ball(const Ball& o) : prec_(o.prec_) {
    mpfr_init2(mid_, prec_);
    mpfr_init2(rad_, kRadPrec);
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
}

Ball::Ball(Ball&& o) noexcept : prec_(o.prec_) {
    mpfr_init2(mid_, prec_);
    mpfr_init2(rad_, kRadPrec);
    mpfr_swap(mid_, o.mid_);
    mpfr_swap(rad_, o.rad_);
}

Ball& Ball::operator=(const Ball& o) {
    if (this == &o) return *this;
    prec_ = o.prec_;
    mpfr_set_prec(mid_, prec_);
    mpfr_set(mid_, o.mid_, MPFR_RNDN);
    mpfr_set(rad_, o.rad_, MPFR_RNDU);
    return *this;
}

Ball& Ball::operator=(Ball&& o) noexcept {
    std::swap(prec_, o.prec_);
    mpfr_swap(mid_, o.mid_);
    mpfr_swap(rad_, o.rad_);
    return *this;
}

Ball::~Ball() {
    mpfr_clear(mid_);
    mpfr_clear(rad_);
}

Ball Ball::from_mid_rad(const Rational& mid, const Rational& rad, mpfr_prec_t prec) {
    Ball b(mid, prec);
    Tmp r;
    mpfr_set_q(r.v, rad.abs().raw().get_mpq_t(), MPFR_RNDU);
    mpfr_add(b.rad_, b.rad_, r.v, MPFR_RNDU);
    return b;
}

void Ball::add_rounding_error(int ternary) {
    if (ternary == 0 || mpfr_zero_p(mid_)) return;
    Tmp ulp;
    mpfr_set_ui_2exp(ulp.v, 1, mpfr_get_exp(mid_) - prec_, MPFR_RNDU);
    mpfr_add(rad_, rad_, ulp.v, MPFR_RNDU);
}

bool Ball::contains_zero() const { return mpfr_cmpabs(mid_, rad_) <= 0; }

bool Ball::contains(const Rational& x) const {
    mpq_class m;
    mpq_class r;
    mpfr_get_q(m.get_mpq_t(), mid_);
    mpfr_get_q(r.get_mpq_t(), rad_);
    return abs(x.raw() - m) <= r;
}

bool Ball::certified_positive() const { return mpfr_sgn(mid_) > 0 && mpfr_cmpabs(mid_, rad_) > 0; }
bool Ball::certified_negative() const { return mpfr_sgn(mid_) < 0 && mpfr_cmpabs(mid_, rad_) > 0; }

bool Ball::width_below_pow2(long e) const {
    if (mpfr_zero_p(rad_)) return true;
    return mpfr_cmp_ui_2exp(rad_, 1, e - 1) < 0;
}

double Ball::width_log2() const {
    if (mpfr_zero_p(rad_)) return -std::numeric_limits<double>::infinity();
    long e = 0;
    const double m = mpfr_get_d_2exp(&e, rad_, MPFR_RNDU);
    return std::log2(m) + static_cast<double>(e) + 1.0;
}

Ball Ball::operator-() const {
    Ball out(*this);
    mpfr_neg(out.mid_, out.mid_, MPFR_RNDN);
    return out;
}

Ball operator+(const Ball& a, const Ball& b) {
    Ball out(std::max(a.prec_, b.prec_));
    const int t = mpfr_add(out.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(out.rad_, a.rad_, b.rad_, MPFR_RNDU);
    out.add_rounding_error(t);
    return out;
}

Ball operator-(const Ball& a, const Ball& b) {
    Ball out(std::max(a.prec_, b.prec_));
    const int t = mpfr_sub(out.mid_, a.mid_, b.mid_, MPFR_RNDN);
    mpfr_add(out.rad_, a.rad_, b.rad_, MPFR_RNDU);
    out.add_rounding_error(t);
    return out;
}

Ball operator*(const Ball& a, const Ball& b) {
    Ball out(std::max(a.prec_, b.prec_));
    const int t = mpfr_mul(out.mid_, a.mid_, b.mid_, MPFR_RNDN);
    if (!a.is_exact() || !b.is_exact()) {
        Tmp am;
        Tmp bm;
        Tmp x;
        mpfr_abs(am.v, a.mid_, MPFR_RNDU);
        mpfr_abs(bm.v, b.mid_, MPFR_RNDU);
        mpfr_mul(out.rad_, am.v, b.rad_, MPFR_RNDU);
        mpfr_mul(x.v, bm.v, a.rad_, MPFR_RNDU);
        mpfr_add(out.rad_, out.rad_, x.v, MPFR_RNDU);
        mpfr_mul(x.v, a.rad_, b.rad_, MPFR_RNDU);
        mpfr_add(out.rad_, out.rad_, x.v, MPFR_RNDU);
    }
    out.add_rounding_error(t);
    return out;
}

Ball operator/(const Ball& a, const Ball& b) {
    if (b.contains_zero()) throw std::domain_error("Ball: division by a ball containing 0");
    Ball out(std::max(a.prec_, b.prec_));
    const int t = mpfr_div(out.mid_, a.mid_, b.mid_, MPFR_RNDN);
    if (!a.is_exact() || !b.is_exact()) {
        Tmp am;
        Tmp bm_up;
        Tmp bm_dn;
        Tmp x;
        Tmp den;
        mpfr_abs(am.v, a.mid_, MPFR_RNDU);
        mpfr_abs(bm_up.v, b.mid_, MPFR_RNDU);
        mpfr_abs(bm_dn.v, b.mid_, MPFR_RNDD);
        mpfr_mul(out.rad_, am.v, b.rad_, MPFR_RNDU);
        mpfr_mul(x.v, bm_up.v, a.rad_, MPFR_RNDU);
        mpfr_add(out.rad_, out.rad_, x.v, MPFR_RNDU);
        mpfr_sub(den.v, bm_dn.v, b.rad_, MPFR_RNDD);
        mpfr_mul(den.v, den.v, bm_dn.v, MPFR_RNDD);
        if (mpfr_sgn(den.v) <= 0) throw std::domain_error("Ball: division by a ball too close to 0");
        mpfr_div(out.rad_, out.rad_, den.v, MPFR_RNDU);
    }
    out.add_rounding_error(t);
    return out;
}

std::string Ball::to_string(int digits) const {
    char* m = nullptr;
    mpfr_asprintf(&m, "%.*Re", digits - 1, mid_);
    std::string out(m);
    mpfr_free_str(m);
    return out + " ± " + radius_string();
}

std::string Ball::radius_string() const {
    char* r = nullptr;
    mpfr_asprintf(&r, "%.3RUe", rad_);
    std::string out(r);
    mpfr_free_str(r);
    return out;
}

Ball ball_sqrt(const Ball& x) {
    const mpfr_prec_t p = x.precision();
    Tmp lo(p);
    Tmp hi(p);
    mpfr_sub(lo.v, x.mid(), x.rad(), MPFR_RNDD);
    mpfr_add(hi.v, x.mid(), x.rad(), MPFR_RNDU);
    if (mpfr_sgn(hi.v) < 0) throw std::domain_error("ball_sqrt: radicand certified negative");
    if (mpfr_sgn(lo.v) < 0) {
        if (!x.width_below_pow2(-static_cast<long>(p / 2))) throw std::domain_error("radicand sign unresolved");
        mpfr_set_zero(lo.v, 1);
    }
    mpfr_sqrt(lo.v, lo.v, MPFR_RNDD);
    mpfr_sqrt(hi.v, hi.v, MPFR_RNDU);
    Rational l;
    Rational h;
    {
        mpq_class ql;
        mpq_class qh;
        mpfr_get_q(ql.get_mpq_t(), lo.v);
        mpfr_get_q(qh.get_mpq_t(), hi.v);
        l = Rational(ql);
        h = Rational(qh);
    }
    const Rational mid = (l + h) / Rational(2);
    return Ball::from_mid_rad(mid, (h - l) / Rational(2), p);
}

}  // namespace bmw
