#include "bmw/series.hpp"

namespace bmw {

TruncSeries<RatFunc> expand_series(const RatFunc& f, const std::string& var, int order, ExpansionPoint at) {
    const std::string tname = at == ExpansionPoint::Zero ? var : "1/" + var;
    if (f.is_zero()) return TruncSeries<RatFunc>(tname, order);
    const auto num = f.num().coeffs(var);
    const auto den = f.den().coeffs(var);
    // f = t^shift * n(t)/d(t) with d(0) != 0 after rewriting in t.
    std::vector<RatFunc> n;
    std::vector<RatFunc> d;
    int shift = 0;
    if (at == ExpansionPoint::Zero) {
        const int ln = num.begin()->first;
        const int ld = den.begin()->first;
        shift = ln - ld;
        if (shift < 0)
            throw std::domain_error("expand_series: pole at " + var + "=0 from denominator factor " + var + "^" +
                                    std::to_string(-shift));
        for (const auto& [e, c] : num) {
            n.resize(static_cast<std::size_t>(e - ln) + 1);
            n[e - ln] = RatFunc(c);
        }
        for (const auto& [e, c] : den) {
            d.resize(static_cast<std::size_t>(e - ld) + 1);
            d[e - ld] = RatFunc(c);
        }
    } else {
        const int hn = num.rbegin()->first;
        const int hd = den.rbegin()->first;
        shift = hd - hn;
        if (shift < 0)
            throw std::domain_error("expand_series: pole at " + var + "=infinity, numerator degree " + std::to_string(hn) +
                                    " exceeds denominator degree " + std::to_string(hd));
        for (const auto& [e, c] : num) {
            if (static_cast<int>(n.size()) < hn - e + 1) n.resize(static_cast<std::size_t>(hn - e) + 1);
            n[hn - e] = RatFunc(c);
        }
        for (const auto& [e, c] : den) {
            if (static_cast<int>(d.size()) < hd - e + 1) d.resize(static_cast<std::size_t>(hd - e) + 1);
            d[hd - e] = RatFunc(c);
        }
    }
    auto as_series = [&](const std::vector<RatFunc>& c) {
        TruncSeries<RatFunc> s(tname, order);
        for (std::size_t i = 0; i < c.size() && static_cast<int>(i) <= order; ++i) s[i] = c[i];
        return s;
    };
    const TruncSeries<RatFunc> q = as_series(n) / as_series(d);
    TruncSeries<RatFunc> out(tname, order);
    for (int i = shift; i <= order; ++i) out[i] = q[i - shift];
    return out;
}

TruncSeries<Rational> to_rational_series(const TruncSeries<RatFunc>& s) {
    std::vector<Rational> c;
    c.reserve(s.coeffs().size());
    for (const auto& x : s.coeffs()) c.push_back(x.constant_value());
    return TruncSeries<Rational>(s.variable(), std::move(c));
}

}  // namespace bmw
