#pragma once

#include "bmw/rational.hpp"
#include "bmw/ratfunc.hpp"

#include <string>

namespace bmw {

/// Uniform access to the exact fields (Rational and RatFunc).
inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_zero(const RatFunc& x) { return x.is_zero(); }

inline std::string to_string(const Rational& x) { return x.to_string(); }
inline std::string to_string(const RatFunc& x) { return x.to_string(); }

inline RatFunc to_ratfunc(const Rational& x) { return RatFunc(x); }
inline RatFunc to_ratfunc(const RatFunc& x) { return x; }

/// Exact value as a rational; throws if x is not constant.
inline Rational to_rational(const Rational& x) { return x; }
inline Rational to_rational(const RatFunc& x) { return x.constant_value(); }

template <class F>
F field_sqr(const F& x) {
    return x * x;
}

}  // namespace bmw
