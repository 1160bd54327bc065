#pragma once

#include "bmw/field.hpp"
#include "bmw/series.hpp"

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmw {

/// σ_i(u), the i-th elementary symmetric polynomial.
template <class F>
F elem_symmetric(const std::vector<F>& u, int i) {
    const int r = static_cast<int>(u.size());
    if (i < 0 || i > r) throw std::out_of_range("elem_symmetric: index " + std::to_string(i) + " outside [0, " + std::to_string(r) + "]");
    std::vector<F> e(static_cast<std::size_t>(r) + 1, F(0));
    e[0] = F(1);
    for (int k = 0; k < r; ++k)
        for (int j = k + 1; j >= 1; --j) e[j] = e[j] + e[j - 1] * u[k];
    return e[i];
}

/// Coefficients Q_0..Q_N of Π (y − x_i)/(x_i y − 1), or of its reciprocal
/// when primed.
template <class F>
std::vector<F> q_poly_series(const std::vector<F>& u, int order, bool primed) {
    TruncSeries<F> prod = TruncSeries<F>::constant("y", order, F(1));
    for (const F& x : u) {
        // (y − x)/(xy − 1) = (x − y)/(1 − xy)
        prod = prod * TruncSeries<F>::linear("y", order, x, F(-1)) * TruncSeries<F>::geometric("y", order, x);
    }
    if (primed) prod = prod.inverse();
    return prod.coeffs();
}

template <class F>
F q_poly(int a, const std::vector<F>& u, bool primed) {
    if (a < 0) return F(0);
    return q_poly_series(u, a, primed)[static_cast<std::size_t>(a)];
}

/// Admissible ground data for odd r: q, u, δ = q − q^{-1}, ρ^{-1} = α Π u and
/// the ω_a of the closed forms, memoized.
template <class F>
class GroundParams {
public:
    GroundParams(std::vector<F> u, F q, int alpha = 1) : u_(std::move(u)), q_(std::move(q)), alpha_(alpha) {
        r_ = static_cast<int>(u_.size());
        if (r_ <= 0 || r_ % 2 == 0) throw std::invalid_argument("GroundParams: r must be odd and positive, got " + std::to_string(r_));
        if (alpha_ != 1 && alpha_ != -1) throw std::invalid_argument("GroundParams: alpha must be +1 or -1");
        if (is_zero(q_)) throw std::invalid_argument("GroundParams: q must be invertible");
        delta_ = q_ - F(1) / q_;
        if (is_zero(delta_)) throw std::invalid_argument("GroundParams: q - 1/q must be invertible");
        prod_u_ = F(1);
        for (const F& x : u_) {
            if (is_zero(x)) throw std::invalid_argument("GroundParams: u_i must be invertible");
            prod_u_ = prod_u_ * x;
        }
        rho_ = F(1) / (F(alpha_) * prod_u_);
        dinv_rho_ = rho_ / delta_;
        sigma_.reserve(static_cast<std::size_t>(r_) + 1);
        for (int i = 0; i <= r_; ++i) sigma_.push_back(elem_symmetric(u_, i));
        memo_ = std::make_shared<Memo>();
    }

    int r() const { return r_; }
    const F& q() const { return q_; }
    const std::vector<F>& u() const { return u_; }
    const F& u(int s) const { return u_.at(static_cast<std::size_t>(s - 1)); }
    const F& delta() const { return delta_; }
    int alpha() const { return alpha_; }
    const F& rho() const { return rho_; }
    const F& prod_u() const { return prod_u_; }
    /// δ^{-1} ρ
    const F& dinv_rho() const { return dinv_rho_; }
    const F& sigma(int i) const { return sigma_.at(static_cast<std::size_t>(i)); }

    F Q(int a) const { return q_cached(a, false); }
    F Qprime(int a) const { return q_cached(a, true); }

    F omega(int a) const {
        {
            std::lock_guard<std::mutex> lock(memo_->mutex);
            auto it = memo_->omega.find(a);
            if (it != memo_->omega.end()) return it->second;
        }
        const F value = a >= 0 ? omega_nonneg(a) : omega_neg(-a);
        std::lock_guard<std::mutex> lock(memo_->mutex);
        memo_->omega.emplace(a, value);
        return value;
    }

private:
    struct Memo {
        std::mutex mutex;
        std::map<int, F> omega;
        std::vector<F> q;
        std::vector<F> qprime;
    };

    F q_cached(int a, bool primed) const {
        if (a < 0) return F(0);
        std::lock_guard<std::mutex> lock(memo_->mutex);
        auto& cache = primed ? memo_->qprime : memo_->q;
        if (static_cast<int>(cache.size()) <= a) cache = q_poly_series(u_, std::max(2 * a, 4 * r_), primed);
        return cache[static_cast<std::size_t>(a)];
    }

    static F parity(int a) { return F((a % 2 == 0) ? 1 : 0); }

    F omega_nonneg(int a) const {
        F value = parity(a) + dinv_rho_ * Q(a) * prod_u_;
        for (int k = 0; k < a; k += 2) value = value + Q(a - 1 - k);
        if (a == 0) value = value - dinv_rho_;
        return value;
    }

    F omega_neg(int a) const {
        F value = parity(a) - dinv_rho_ * Qprime(a) * prod_u_;
        for (int k = 0; k < a; k += 2) value = value + Qprime(a - 1 - k);
        return value;
    }

    int r_ = 0;
    std::vector<F> u_;
    F q_;
    int alpha_ = 1;
    F delta_;
    F prod_u_;
    F rho_;
    F dinv_rho_;
    std::vector<F> sigma_;
    std::shared_ptr<Memo> memo_;
};

struct AdmissibilityEntry {
    int family = 1;  // 1: cyclotomic family indexed by b, 2: symmetry family indexed by a
    int index = 0;
    bool pass = true;
    std::string defect;
};

struct AdmissibilityReport {
    std::vector<AdmissibilityEntry> entries;
    bool all_pass = true;
    std::optional<AdmissibilityEntry> first_failure;
};

/// Check both families of admissibility equations for the values supplied
/// by `omega` (defaults to params.omega).
template <class F>
AdmissibilityReport check_admissible(const GroundParams<F>& params, int b_lo, int b_hi, int a_max,
                                     std::function<F(int)> omega = {}) {
    if (!omega) omega = [&params](int a) { return params.omega(a); };
    const int r = params.r();
    AdmissibilityReport report;
    auto record = [&report](int family, int index, const F& defect) {
        AdmissibilityEntry e{family, index, is_zero(defect), bmw::to_string(defect)};
        if (!e.pass && report.all_pass) {
            report.all_pass = false;
            report.first_failure = e;
        }
        report.entries.push_back(std::move(e));
    };
    for (int b = b_lo; b <= b_hi; ++b) {
        F sum(0);
        for (int s = 0; s <= r; ++s) {
            const F term = params.sigma(r - s) * omega(s + b);
            sum = ((r - s) % 2 == 0) ? sum + term : sum - term;
        }
        record(1, b, sum);
    }
    const F coef = params.delta() / params.rho();
    for (int a = 0; a <= a_max; ++a) {
        F rhs = omega(-a);
        for (int i = 1; i <= a; ++i) rhs = rhs + coef * (omega(a - i) * omega(-i) - omega(a - 2 * i));
        record(2, a, omega(a) - rhs);
    }
    return report;
}

/// Series in 1/y of w̃_{1,+} (sign > 0) or w̃_{1,−} (sign < 0) from the
/// closed product forms.
template <class F>
TruncSeries<F> wtilde_closed(const GroundParams<F>& p, int sign, int order) {
    const std::string z = "1/y";
    const auto one_over_1mz2 = [&] {
        TruncSeries<F> s(z, order);
        for (int i = 0; i <= order; i += 2) s[i] = F(1);
        return s;
    }();
    TruncSeries<F> z1(z, order);
    if (order >= 1) z1[1] = F(1);
    TruncSeries<F> z2(z, order);
    if (order >= 2) z2[2] = F(1);
    const TruncSeries<F> y_over = z1 * one_over_1mz2;  // y/(y²−1)
    const auto c = [&](const F& v) { return TruncSeries<F>::constant(z, order, v); };
    TruncSeries<F> prod = c(F(1));
    for (const F& x : p.u()) {
        // (y − a)/(y − b) = (1 − a z)/(1 − b z)
        const F a = sign > 0 ? F(1) / x : x;
        const F b = sign > 0 ? x : F(1) / x;
        prod = prod * TruncSeries<F>::linear(z, order, F(1), -a) * TruncSeries<F>::geometric(z, order, b);
    }
    if (sign > 0) {
        return one_over_1mz2 - c(p.dinv_rho()) + (c(p.dinv_rho() * p.prod_u()) + y_over) * prod.scaled(p.prod_u());
    }
    return z2 * one_over_1mz2 + c(p.dinv_rho()) - (c(p.dinv_rho() * p.prod_u()) - y_over) * prod.scaled(F(1) / p.prod_u());
}

/// Series in 1/y of Σ_{a≥0} ω_a y^{-a} (sign > 0) or Σ_{a≥1} ω_{−a} y^{-a}.
template <class F>
TruncSeries<F> omega_series(const GroundParams<F>& p, int sign, int order) {
    TruncSeries<F> s("1/y", order);
    for (int a = sign > 0 ? 0 : 1; a <= order; ++a) s[a] = p.omega(sign > 0 ? a : -a);
    return s;
}

struct GenericChoice {
    Rational q;
    std::vector<long> k;  // u_i = q^(2 k_i)
    int alpha = 1;
};

/// Exponent pattern with |k_i| = n + 2n(r − i) and alternating signs, giving
/// generic parameters with all seminormal radicands non-negative. For α = +1,
/// q = 2 + seed and k_i > 0 for odd i; for α = −1, q = 1/(2 + seed) and the
/// signs flip.
GenericChoice generic_choice(int r, int n, int seed = 0, int alpha = 1);

/// True when no u_i u_j^{±1} (i ≠ j) equals q^{2d} and no u_i equals ±q^d
/// for |d| < 2n, and q^2 has multiplicative order above 2n.
bool is_generic(const std::vector<Rational>& u, const Rational& q, int n);

GroundParams<Rational> make_params(const GenericChoice& choice);
GroundParams<Rational> generic_specialization(int r, int n, int seed = 0, int alpha = 1);

/// Symbolic parameters over Q(u_1..u_r, q).
GroundParams<RatFunc> symbolic_params(int r, int alpha = 1);

/// Parse a preset file of key=value lines: r, q (fraction), k (comma
/// separated exponents), alpha. '#' starts a comment.
GenericChoice parse_preset(const std::string& text);

}  // namespace bmw
