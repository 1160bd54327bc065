#include "bmw/laurent_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace bmw {

bool var_less(const std::string& a, const std::string& b) {
    const bool ay = a == "y";
    const bool by = b == "y";
    if (ay != by) return by;
    return a < b;
}

std::vector<std::string> merge_vars(const std::vector<std::string>& a, const std::vector<std::string>& b) {
    if (a == b) return a;
    std::vector<std::string> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out), var_less);
    return out;
}

LaurentPoly::LaurentPoly(const Rational& c) {
    if (!c.is_zero()) terms_.emplace(Monomial{}, c);
}

LaurentPoly::LaurentPoly(std::vector<std::string> vars, Terms terms) : vars_(std::move(vars)), terms_(std::move(terms)) {
    for (auto it = terms_.begin(); it != terms_.end();) {
        if (it->first.size() != vars_.size()) throw std::invalid_argument("LaurentPoly: exponent arity mismatch");
        it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
    }
    prune();
}

LaurentPoly LaurentPoly::var(const std::string& name, int exponent) {
    Terms t;
    t.emplace(Monomial{exponent}, Rational(1));
    return LaurentPoly({name}, std::move(t));
}

Rational LaurentPoly::constant_value() const {
    if (!is_constant()) throw std::logic_error("LaurentPoly: not a constant: " + to_string());
    return terms_.empty() ? Rational(0) : terms_.begin()->second;
}

int LaurentPoly::var_index(const std::string& v) const {
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == v) return static_cast<int>(i);
    return -1;
}

bool LaurentPoly::has_var(const std::string& v) const { return var_index(v) >= 0; }

int LaurentPoly::max_degree(const std::string& v) const {
    const int i = var_index(v);
    if (i < 0) return 0;
    int d = terms_.begin()->first[i];
    for (const auto& [m, c] : terms_) d = std::max(d, m[i]);
    return d;
}

int LaurentPoly::min_degree(const std::string& v) const {
    const int i = var_index(v);
    if (i < 0) return 0;
    int d = terms_.begin()->first[i];
    for (const auto& [m, c] : terms_) d = std::min(d, m[i]);
    return d;
}

const std::pair<const Monomial, Rational>& LaurentPoly::leading() const {
    if (terms_.empty()) throw std::logic_error("LaurentPoly: leading term of zero");
    return *terms_.rbegin();
}

void LaurentPoly::prune() {
    std::vector<bool> used(vars_.size(), false);
    for (const auto& [m, c] : terms_)
        for (std::size_t i = 0; i < m.size(); ++i)
            if (m[i] != 0) used[i] = true;
    if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
    std::vector<std::string> nv;
    for (std::size_t i = 0; i < vars_.size(); ++i)
        if (used[i]) nv.push_back(vars_[i]);
    Terms nt;
    for (const auto& [m, c] : terms_) {
        Monomial nm;
        for (std::size_t i = 0; i < m.size(); ++i)
            if (used[i]) nm.push_back(m[i]);
        nt.emplace(std::move(nm), c);
    }
    vars_ = std::move(nv);
    terms_ = std::move(nt);
}

LaurentPoly LaurentPoly::over(const std::vector<std::string>& vars) const {
    if (vars == vars_) return *this;
    std::vector<int> pos(vars_.size());
    for (std::size_t i = 0; i < vars_.size(); ++i) {
        auto it = std::find(vars.begin(), vars.end(), vars_[i]);
        if (it == vars.end()) throw std::logic_error("LaurentPoly::over: variable missing");
        pos[i] = static_cast<int>(it - vars.begin());
    }
    LaurentPoly out;
    out.vars_ = vars;
    for (const auto& [m, c] : terms_) {
        Monomial nm(vars.size(), 0);
        for (std::size_t i = 0; i < m.size(); ++i) nm[pos[i]] = m[i];
        out.terms_.emplace(std::move(nm), c);
    }
    return out;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out = *this;
    for (auto& [m, c] : out.terms_) c = -c;
    return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) return a;
    if (a.is_zero()) return b;
    const auto vars = merge_vars(a.vars_, b.vars_);
    LaurentPoly out = a.over(vars);
    for (const auto& [m, c] : b.over(vars).terms_) {
        auto [it, inserted] = out.terms_.emplace(m, c);
        if (!inserted) {
            it->second += c;
            if (it->second.is_zero()) out.terms_.erase(it);
        }
    }
    out.prune();
    return out;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + (-b); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto vars = merge_vars(a.vars_, b.vars_);
    const LaurentPoly aa = a.over(vars);
    const LaurentPoly bb = b.over(vars);
    LaurentPoly out;
    out.vars_ = vars;
    Monomial m(vars.size());
    for (const auto& [ma, ca] : aa.terms_) {
        for (const auto& [mb, cb] : bb.terms_) {
            for (std::size_t i = 0; i < m.size(); ++i) m[i] = ma[i] + mb[i];
            auto [it, inserted] = out.terms_.emplace(m, ca * cb);
            if (!inserted) it->second += ca * cb;
        }
    }
    for (auto it = out.terms_.begin(); it != out.terms_.end();) it = it->second.is_zero() ? out.terms_.erase(it) : std::next(it);
    out.prune();
    return out;
}

LaurentPoly LaurentPoly::scaled(const Rational& c) const {
    if (c.is_zero()) return {};
    LaurentPoly out = *this;
    for (auto& [m, v] : out.terms_) v *= c;
    return out;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
    LaurentPoly result(1);
    LaurentPoly b = *this;
    while (e > 0) {
        if (e & 1U) result = result * b;
        e >>= 1U;
        if (e > 0) b = b * b;
    }
    return result;
}

LaurentPoly LaurentPoly::shifted(const Monomial& shift) const {
    LaurentPoly out;
    out.vars_ = vars_;
    for (const auto& [m, c] : terms_) {
        Monomial nm = m;
        for (std::size_t i = 0; i < nm.size(); ++i) nm[i] += shift[i];
        out.terms_.emplace(std::move(nm), c);
    }
    out.prune();
    return out;
}

LaurentPoly LaurentPoly::coeff(const std::string& v, int e) const {
    const int i = var_index(v);
    if (i < 0) return e == 0 ? *this : LaurentPoly();
    LaurentPoly out;
    out.vars_ = vars_;
    for (const auto& [m, c] : terms_) {
        if (m[i] != e) continue;
        Monomial nm = m;
        nm[i] = 0;
        out.terms_.emplace(std::move(nm), c);
    }
    out.prune();
    return out;
}

std::map<int, LaurentPoly> LaurentPoly::coeffs(const std::string& v) const {
    std::map<int, LaurentPoly> out;
    const int i = var_index(v);
    if (i < 0) {
        if (!is_zero()) out.emplace(0, *this);
        return out;
    }
    std::map<int, Terms> parts;
    for (const auto& [m, c] : terms_) {
        Monomial nm = m;
        nm[i] = 0;
        parts[m[i]].emplace(std::move(nm), c);
    }
    for (auto& [e, t] : parts) out.emplace(e, LaurentPoly(vars_, std::move(t)));
    return out;
}

std::string LaurentPoly::to_string() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [m, c] = *it;
        const bool is_unit_monomial = std::all_of(m.begin(), m.end(), [](int e) { return e == 0; });
        Rational coef = c;
        if (first) {
            if (coef.sign() < 0) {
                os << "-";
                coef = -coef;
            }
        } else {
            os << (coef.sign() < 0 ? " - " : " + ");
            coef = coef.abs();
        }
        first = false;
        bool need_star = false;
        if (!coef.is_one() || is_unit_monomial) {
            os << coef.to_string();
            need_star = true;
        }
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] == 0) continue;
            if (need_star) os << "*";
            os << vars_[i];
            if (m[i] != 1) os << "^" << m[i];
            need_star = true;
        }
    }
    return os.str();
}

namespace poly {
namespace {

// Main variable for recursion: the last occurring variable in var_less order.
std::string main_var(const LaurentPoly& a, const LaurentPoly& b) {
    const auto vars = merge_vars(a.vars(), b.vars());
    return vars.back();
}

LaurentPoly lead_coeff(const LaurentPoly& p, const std::string& v) { return p.coeff(v, p.max_degree(v)); }

LaurentPoly monic(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading().second.inv());
}

LaurentPoly content(const LaurentPoly& p, const std::string& v) {
    LaurentPoly g;
    for (const auto& [e, c] : p.coeffs(v)) {
        g = gcd(g, c);
        if (g.is_constant()) return LaurentPoly(1);
    }
    return g;
}

LaurentPoly div_or_throw(const LaurentPoly& a, const LaurentPoly& b) {
    auto q = exact_div(a, b);
    if (!q) throw std::logic_error("poly: inexact division in gcd");
    return *q;
}

LaurentPoly prem(const LaurentPoly& a, const LaurentPoly& b, const std::string& v) {
    const int db = b.max_degree(v);
    const LaurentPoly lb = lead_coeff(b, v);
    LaurentPoly r = a;
    while (!r.is_zero() && r.max_degree(v) >= db) {
        const int dr = r.max_degree(v);
        const LaurentPoly lr = lead_coeff(r, v);
        r = lb * r - lr * LaurentPoly::var(v, dr - db) * b;
    }
    return r;
}

}  // namespace

LaurentPoly primitive_scale(const LaurentPoly& p, Rational* factor) {
    if (p.is_zero()) {
        if (factor) *factor = Rational(1);
        return p;
    }
    BigInt l = 1;
    BigInt g = 0;
    for (const auto& [m, c] : p.terms()) l = lcm(l, c.denominator());
    for (const auto& [m, c] : p.terms()) g = gcd(g, BigInt(c.numerator() * (l / c.denominator())));
    Rational f(g, l);
    if (p.leading().second.sign() < 0) f = -f;
    if (factor) *factor = f;
    return p.scaled(f.inv());
}

std::optional<LaurentPoly> exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("poly: division by zero polynomial");
    if (a.is_zero()) return LaurentPoly();
    if (b.is_constant()) return a.scaled(b.constant_value().inv());
    const auto vars = merge_vars(a.vars(), b.vars());
    LaurentPoly r = a.over(vars);
    const LaurentPoly bb = b.over(vars);
    const auto& [bm, bc] = bb.leading();
    LaurentPoly::Terms q;
    while (!r.is_zero()) {
        const LaurentPoly rr = r.over(vars);
        const auto& [rm, rc] = rr.leading();
        Monomial m(vars.size());
        for (std::size_t i = 0; i < m.size(); ++i) {
            m[i] = rm[i] - bm[i];
            if (m[i] < 0) return std::nullopt;
        }
        const Rational c = rc / bc;
        q.emplace(m, c);
        LaurentPoly::Terms t;
        t.emplace(m, c);
        r = rr - LaurentPoly(vars, std::move(t)) * bb;
    }
    return LaurentPoly(vars, std::move(q));
}

LaurentPoly gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero()) return monic(b);
    if (b.is_zero()) return monic(a);
    if (a.is_constant() || b.is_constant()) return LaurentPoly(1);
    const std::string v = main_var(a, b);
    if (!a.has_var(v)) return gcd(a, content(b, v));
    if (!b.has_var(v)) return gcd(content(a, v), b);
    const LaurentPoly ca = content(a, v);
    const LaurentPoly cb = content(b, v);
    const LaurentPoly g = gcd(ca, cb);
    LaurentPoly p = primitive_scale(div_or_throw(a, ca));
    LaurentPoly s = primitive_scale(div_or_throw(b, cb));
    if (p.max_degree(v) < s.max_degree(v)) std::swap(p, s);
    while (!s.is_zero()) {
        LaurentPoly r = prem(p, s, v);
        p = std::move(s);
        if (r.is_zero()) break;
        if (!r.has_var(v)) return monic(g);
        s = primitive_scale(div_or_throw(r, content(r, v)));
    }
    return monic(g * div_or_throw(p, content(p, v)));
}

}  // namespace poly

}  // namespace bmw
