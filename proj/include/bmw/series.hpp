#pragma once

#include "bmw/field.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace bmw {

/// Power series c_0 + c_1 t + ... + c_N t^N truncated at order N. The
/// variable name is informational (for example "1/y").
template <class F>
class TruncSeries {
public:
    TruncSeries() = default;
    TruncSeries(std::string variable, int order) : variable_(std::move(variable)), coeffs_(static_cast<std::size_t>(order) + 1, F(0)) {
        if (order < 0) throw std::invalid_argument("TruncSeries: negative order");
    }
    TruncSeries(std::string variable, std::vector<F> coeffs) : variable_(std::move(variable)), coeffs_(std::move(coeffs)) {
        if (coeffs_.empty()) throw std::invalid_argument("TruncSeries: empty coefficient list");
    }

    static TruncSeries constant(std::string variable, int order, const F& c) {
        TruncSeries s(std::move(variable), order);
        s.coeffs_[0] = c;
        return s;
    }
    /// The series of 1/(1 − a t).
    static TruncSeries geometric(std::string variable, int order, const F& a) {
        TruncSeries s(std::move(variable), order);
        F p(1);
        for (auto& c : s.coeffs_) {
            c = p;
            p = p * a;
        }
        return s;
    }
    /// The polynomial c0 + c1 t.
    static TruncSeries linear(std::string variable, int order, const F& c0, const F& c1) {
        TruncSeries s(std::move(variable), order);
        s.coeffs_[0] = c0;
        if (order >= 1) s.coeffs_[1] = c1;
        return s;
    }

    const std::string& variable() const { return variable_; }
    int order() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<F>& coeffs() const { return coeffs_; }
    const F& operator[](std::size_t i) const { return coeffs_.at(i); }
    F& operator[](std::size_t i) { return coeffs_.at(i); }

    TruncSeries truncated(int order) const {
        if (order > this->order()) throw std::invalid_argument("TruncSeries: cannot extend order");
        return TruncSeries(variable_, std::vector<F>(coeffs_.begin(), coeffs_.begin() + order + 1));
    }

    friend TruncSeries operator+(const TruncSeries& a, const TruncSeries& b) {
        const int n = std::min(a.order(), b.order());
        TruncSeries s(a.variable_, n);
        for (int i = 0; i <= n; ++i) s.coeffs_[i] = a.coeffs_[i] + b.coeffs_[i];
        return s;
    }
    friend TruncSeries operator-(const TruncSeries& a, const TruncSeries& b) {
        const int n = std::min(a.order(), b.order());
        TruncSeries s(a.variable_, n);
        for (int i = 0; i <= n; ++i) s.coeffs_[i] = a.coeffs_[i] - b.coeffs_[i];
        return s;
    }
    friend TruncSeries operator*(const TruncSeries& a, const TruncSeries& b) {
        const int n = std::min(a.order(), b.order());
        TruncSeries s(a.variable_, n);
        for (int i = 0; i <= n; ++i) {
            if (is_zero(a.coeffs_[i])) continue;
            for (int j = 0; i + j <= n; ++j) s.coeffs_[i + j] = s.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j];
        }
        return s;
    }
    TruncSeries scaled(const F& c) const {
        TruncSeries s = *this;
        for (auto& x : s.coeffs_) x = x * c;
        return s;
    }
    TruncSeries inverse() const {
        if (is_zero(coeffs_[0])) throw std::domain_error("TruncSeries: constant term not invertible");
        const int n = order();
        TruncSeries s(variable_, n);
        const F inv0 = F(1) / coeffs_[0];
        s.coeffs_[0] = inv0;
        for (int k = 1; k <= n; ++k) {
            F acc(0);
            for (int i = 1; i <= k; ++i)
                if (!is_zero(coeffs_[i])) acc = acc + coeffs_[i] * s.coeffs_[k - i];
            s.coeffs_[k] = -(acc * inv0);
        }
        return s;
    }
    friend TruncSeries operator/(const TruncSeries& a, const TruncSeries& b) { return a * b.inverse(); }

    friend bool operator==(const TruncSeries& a, const TruncSeries& b) { return a.coeffs_ == b.coeffs_; }

    std::string to_string() const {
        std::string out = "[";
        for (std::size_t i = 0; i < coeffs_.size(); ++i) {
            if (i) out += ", ";
            out += bmw::to_string(coeffs_[i]);
        }
        return out + "]";
    }

private:
    std::string variable_ = "t";
    std::vector<F> coeffs_{F(0)};
};

enum class ExpansionPoint { Zero, Infinity };

/// Expand f in powers of var (at Zero) or of 1/var (at Infinity) through
/// order N. Throws std::domain_error naming the offending factor when f has
/// a pole at the expansion point.
TruncSeries<RatFunc> expand_series(const RatFunc& f, const std::string& var, int order, ExpansionPoint at);

/// Convert a series whose coefficients are constant rational functions.
TruncSeries<Rational> to_rational_series(const TruncSeries<RatFunc>& s);

}  // namespace bmw
