#pragma once

#include "bmw/ball.hpp"
#include "bmw/matrix.hpp"
#include "bmw/params.hpp"
#include "bmw/series.hpp"
#include "bmw/tableaux.hpp"

#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace bmw {

template <class F>
F from_ratfunc(const RatFunc& x) {
    if constexpr (std::is_same_v<F, Rational>) return x.constant_value();
    else return x;
}

/// W(y) attached to the shape μ = s_{k−1}, as a rational function in y.
template <class F>
RatFunc W_rational(const RPartition& mu, const GroundParams<F>& p) {
    const RatFunc y = RatFunc::var("y");
    const RatFunc y2m1 = y * y - RatFunc(1);
    RatFunc prod(1);
    for (const Step& st : exits(mu)) {
        const RatFunc c = to_ratfunc(step_content(st, p));
        prod = prod * (y - c.inv()) / (y - c);
    }
    return y * y / y2m1 - to_ratfunc(p.dinv_rho()) +
           (to_ratfunc(p.dinv_rho() * p.prod_u()) + y / y2m1) * to_ratfunc(p.prod_u()) * prod;
}

template <class F>
RatFunc W_rational(const UpDownTableau& s, int k, const GroundParams<F>& p) {
    if (k < 1 || k > s.n()) throw std::out_of_range("W_rational: k = " + std::to_string(k));
    return W_rational(s.shape(k - 1), p);
}

/// Residue of W(y)/y at the content of `alpha`, an exit of μ, computed as a
/// limit of the product form.
template <class F>
F residue_at(const RPartition& mu, const Step& alpha, const GroundParams<F>& p) {
    const F c = step_content(alpha, p);
    F value = (p.dinv_rho() * p.prod_u() + c / (c * c - F(1))) * p.prod_u() * (c - F(1) / c) / c;
    for (const Step& st : exits(mu)) {
        if (st == alpha) continue;
        const F ca = step_content(st, p);
        value = value * (c - F(1) / ca) / (c - ca);
    }
    return value;
}

/// The same residue from the closed form for odd r.
template <class F>
F residue_closed(const RPartition& mu, const Step& alpha, const GroundParams<F>& p) {
    const F c = step_content(alpha, p);
    F value = (F(1) / (p.rho() * c)) * ((c - F(1) / c) / p.delta() + F(p.alpha()));
    for (const Step& st : exits(mu)) {
        if (st == alpha) continue;
        const F ca = step_content(st, p);
        value = value * (c - F(1) / ca) / (c - ca);
    }
    return value;
}

/// E_ss(k); requires s_{k−1} = s_{k+1}.
template <class F>
F E_diag(const UpDownTableau& s, int k, const GroundParams<F>& p) {
    if (k < 1 || k >= s.n()) throw std::out_of_range("E_diag: k = " + std::to_string(k) + " needs 1 <= k < n");
    if (s.shape(k - 1) != s.shape(k + 1)) throw std::invalid_argument("E_diag: undefined when s_{k-1} != s_{k+1}");
    return residue_at(s.shape(k - 1), s.step(k), p);
}

template <class F>
struct ABCoeffs {
    F a;
    F bsq;
};

/// a_s(k) and b_s(k)^2; requires s_{k−1} ≠ s_{k+1}.
template <class F>
ABCoeffs<F> ab_coeffs(const UpDownTableau& s, int k, const GroundParams<F>& p) {
    if (k < 1 || k >= s.n()) throw std::out_of_range("ab_coeffs: k = " + std::to_string(k) + " needs 1 <= k < n");
    if (s.shape(k - 1) == s.shape(k + 1)) throw std::invalid_argument("ab_coeffs: undefined when s_{k-1} = s_{k+1}");
    const F ck = step_content(s.step(k), p);
    const F ck1 = step_content(s.step(k + 1), p);
    const F a = p.delta() * ck1 / (ck1 - ck);
    return {a, F(1) - a * a + p.delta() * a};
}

/// Exact (square-root free) data of the module attached to one shape.
template <class F>
struct ExactModule {
    struct Entry {
        bool equal = false;  // s_{k−1} = s_{k+1}
        F e{};               // E_ss(k) when equal
        F a{};               // a_s(k) otherwise
        F bsq{};             // b_s(k)^2 otherwise
        long partner = -1;   // index of s_k s, or −1
        std::vector<std::size_t> neighbors;  // indices of t ∼_k s when equal
    };

    Shape shape;
    int n = 0;
    std::vector<UpDownTableau> basis;
    std::map<UpDownTableau, std::size_t> index;
    std::vector<std::vector<F>> content;  // content[s][i − 1]
    std::vector<std::vector<Entry>> at;   // at[k − 1][s], 1 ≤ k < n

    std::size_t dim() const { return basis.size(); }
};

template <class F>
ExactModule<F> build_exact(const Shape& shape, int n, const GroundParams<F>& p) {
    if (shape.lambda.r() != p.r()) throw std::invalid_argument("build_exact: shape has the wrong number of components");
    ExactModule<F> m;
    m.shape = shape;
    m.n = n;
    m.basis = enumerate_updown(n, shape.lambda);
    for (std::size_t i = 0; i < m.basis.size(); ++i) {
        m.index.emplace(m.basis[i], i);
        m.content.push_back(content_seq(m.basis[i], p));
    }
    std::map<std::pair<RPartition, Step>, F> residues;
    auto residue = [&](const RPartition& mu, const Step& st) {
        auto key = std::make_pair(mu, st);
        auto it = residues.find(key);
        if (it == residues.end()) it = residues.emplace(key, residue_at(mu, st, p)).first;
        return it->second;
    };
    for (int k = 1; k < n; ++k) {
        std::vector<typename ExactModule<F>::Entry> row(m.basis.size());
        for (std::size_t i = 0; i < m.basis.size(); ++i) {
            const UpDownTableau& s = m.basis[i];
            auto& en = row[i];
            const auto shapes = s.shapes();
            en.equal = shapes[static_cast<std::size_t>(k - 1)] == shapes[static_cast<std::size_t>(k + 1)];
            if (en.equal) {
                en.e = residue(shapes[static_cast<std::size_t>(k - 1)], s.step(k));
                for (const auto& t : neighbors_k(s, k)) en.neighbors.push_back(m.index.at(t));
            } else {
                const F ck = m.content[i][static_cast<std::size_t>(k - 1)];
                const F ck1 = m.content[i][static_cast<std::size_t>(k)];
                en.a = p.delta() * ck1 / (ck1 - ck);
                en.bsq = F(1) - en.a * en.a + p.delta() * en.a;
                if (auto sk = sk_action(s, k)) en.partner = static_cast<long>(m.index.at(*sk));
            }
        }
        m.at.push_back(std::move(row));
    }
    return m;
}

/// Generator matrices over balls; M(t, s) is the coefficient of v_t in g·v_s.
struct SeminormalModule {
    Shape shape;
    int n = 0;
    mpfr_prec_t precision = kDefaultPrecision;
    std::vector<UpDownTableau> basis;
    std::vector<std::vector<Rational>> content;
    std::vector<Matrix<Ball>> T;  // T[k − 1]
    std::vector<Matrix<Ball>> E;  // E[k − 1]
    std::vector<Matrix<Ball>> X;  // X[i − 1]
    std::vector<Matrix<Ball>> Xinv;

    std::size_t dim() const { return basis.size(); }
    Matrix<Ball> identity() const;
    Matrix<Ball> zero() const;
};

/// Throws std::domain_error("be-real violated ...") on a negative radicand.
SeminormalModule build_module(const ExactModule<Rational>& exact, const GroundParams<Rational>& p,
                              mpfr_prec_t precision = kDefaultPrecision);
SeminormalModule build_module(const Shape& shape, int n, const GroundParams<Rational>& p,
                              mpfr_prec_t precision = kDefaultPrecision);

struct RelationResult {
    std::string name;
    long instances = 0;
    bool exact = false;   // compared in exact arithmetic
    bool pass = true;
    double worst_width_log2 = 0;  // −inf when every residual is exactly zero
    std::string detail;           // first failing instance
};

struct RelationReport {
    Shape shape;
    int n = 0;
    std::size_t dim = 0;
    mpfr_prec_t precision = kDefaultPrecision;
    std::vector<RelationResult> relations;
    bool all_pass() const;
};

/// Defining relations plus the power identities for exponents up to
/// `power_max`, all checked on the given module.
RelationReport verify_relations(const SeminormalModule& m, const GroundParams<Rational>& p, int power_max = 3);

/// Build and verify, doubling the precision up to `max_precision` while any
/// relation fails.
RelationReport verify_shape(const Shape& shape, int n, const GroundParams<Rational>& p,
                            mpfr_prec_t precision = kDefaultPrecision, mpfr_prec_t max_precision = 4096);

/// Σ over every shape of Λ^+_{r,n} of dim²; the modules are built on the way.
std::vector<SeminormalModule> build_all(int n, const GroundParams<Rational>& p, mpfr_prec_t precision = kDefaultPrecision);

/// ω_k^{(a)}(s) by three routes.
struct OmegaMismatch : std::runtime_error {
    OmegaMismatch(std::size_t s_, int k_, int a_, const std::string& what)
        : std::runtime_error(what), s(s_), k(k_), a(a_) {}
    std::size_t s;
    int k;
    int a;
};

template <class F>
struct OmegaKTable {
    int n = 0;
    int order = 0;
    std::vector<UpDownTableau> basis;
    std::vector<std::vector<std::vector<F>>> value;  // value[s][k − 1][a]
};

/// Series in 1/y of the factor attached to one content x in the recursion
/// between consecutive generating series.
template <class F>
TruncSeries<F> omega_step_factor(const F& x, const GroundParams<F>& p, int order) {
    const std::string z = "1/y";
    const F xi = F(1) / x;
    const F q2 = p.q() * p.q();
    const F q2i = F(1) / q2;
    auto lin = [&](const F& a) { return TruncSeries<F>::linear(z, order, F(1), -a); };
    auto geo = [&](const F& a) { return TruncSeries<F>::geometric(z, order, a); };
    return lin(x) * lin(x) * geo(xi) * geo(xi) * lin(q2i * xi) * geo(q2i * x) * lin(q2 * xi) * geo(q2 * x);
}

/// Recursion route: (W̃_1 + δ^{-1}ρ − y²/(y²−1)) times the step factors of
/// c_s(1..k−1).
template <class F>
TruncSeries<F> omega_k_recursion(const std::vector<F>& contents, int k, const GroundParams<F>& p, int order) {
    const std::string z = "1/y";
    TruncSeries<F> even(z, order);
    for (int i = 0; i <= order; i += 2) even[i] = F(1);
    const auto shift = TruncSeries<F>::constant(z, order, p.dinv_rho());
    TruncSeries<F> acc = omega_series(p, +1, order) - even + shift;
    for (int i = 1; i < k; ++i) acc = acc * omega_step_factor(contents[static_cast<std::size_t>(i - 1)], p, order);
    return acc + even - shift;
}

template <class F>
OmegaKTable<F> omega_k_table(const Shape& shape, int n, const GroundParams<F>& p, int order) {
    OmegaKTable<F> table;
    table.n = n;
    table.order = order;
    table.basis = enumerate_updown(n, shape.lambda);
    std::map<RPartition, std::vector<F>> by_series;
    std::map<RPartition, std::vector<F>> by_residues;
    for (std::size_t si = 0; si < table.basis.size(); ++si) {
        const UpDownTableau& s = table.basis[si];
        const auto contents = content_seq(s, p);
        const auto shapes = s.shapes();
        std::vector<std::vector<F>> per_k;
        for (int k = 1; k <= n; ++k) {
            const RPartition& mu = shapes[static_cast<std::size_t>(k - 1)];
            const auto rec = omega_k_recursion(contents, k, p, order);
            auto it = by_series.find(mu);
            if (it == by_series.end()) {
                const auto ser = expand_series(W_rational(mu, p), "y", order, ExpansionPoint::Infinity);
                std::vector<F> v;
                for (const auto& c : ser.coeffs()) v.push_back(from_ratfunc<F>(c));
                it = by_series.emplace(mu, std::move(v)).first;
            }
            auto jt = by_residues.find(mu);
            if (jt == by_residues.end()) {
                std::vector<F> v(static_cast<std::size_t>(order) + 1, F(0));
                for (const Step& st : exits(mu)) {
                    const F e = residue_at(mu, st, p);
                    const F c = step_content(st, p);
                    F pw(1);
                    for (int a = 0; a <= order; ++a) {
                        v[static_cast<std::size_t>(a)] = v[static_cast<std::size_t>(a)] + e * pw;
                        pw = pw * c;
                    }
                }
                jt = by_residues.emplace(mu, std::move(v)).first;
            }
            for (int a = 0; a <= order; ++a) {
                const F& x = rec[static_cast<std::size_t>(a)];
                if (x != it->second[static_cast<std::size_t>(a)] || x != jt->second[static_cast<std::size_t>(a)]) {
                    throw OmegaMismatch(si, k, a,
                                        "omega_k mismatch at s=" + s.to_string() + " k=" + std::to_string(k) +
                                            " a=" + std::to_string(a) + ": recursion " + bmw::to_string(x) +
                                            ", expansion " + bmw::to_string(it->second[static_cast<std::size_t>(a)]) +
                                            ", residues " + bmw::to_string(jt->second[static_cast<std::size_t>(a)]));
                }
            }
            per_k.push_back(rec.coeffs());
        }
        table.value.push_back(std::move(per_k));
    }
    return table;
}

struct IdentityCount {
    std::string name;
    long instances = 0;
    long failures = 0;
    std::string first_failure;
};

struct IdentityReport {
    int n = 0;
    std::vector<IdentityCount> items;
    bool all_pass() const {
        for (const auto& it : items)
            if (it.failures > 0) return false;
        return true;
    }
    const IdentityCount& item(const std::string& name) const {
        for (const auto& it : items)
            if (it.name == name) return it;
        throw std::out_of_range("IdentityReport: no item " + name);
    }
};

/// Exact identity checks over every shape of Λ^+_{r,n}.
template <class F>
IdentityReport identity_suite(int n, const GroundParams<F>& p) {
    IdentityReport rep;
    rep.n = n;
    std::map<std::string, IdentityCount> items;
    const std::vector<std::string> order = {
        "content_product",    "partial_fractions",  "residue_closed_form", "residue_nonzero",
        "sum_inverse",        "sum_inverse_square", "sum_mixed",           "residue_product",
        "b_e_balance",        "a_swap",             "b_square_factored",   "a_blocked_swap",
    };
    for (const auto& name : order) items[name].name = name;
    auto record = [&items](const std::string& name, bool ok, const std::function<std::string()>& what) {
        auto& it = items[name];
        ++it.instances;
        if (!ok) {
            if (it.failures == 0) it.first_failure = what();
            ++it.failures;
        }
    };

    const F dr = p.dinv_rho();
    const F q = p.q();
    std::map<RPartition, bool> shapes_done;
    auto check_shape = [&](const RPartition& mu) {
        if (shapes_done.count(mu)) return;
        shapes_done[mu] = true;
        F prod(1);
        for (const Step& st : exits(mu)) prod = prod * step_content(st, p);
        record("content_product", prod == p.prod_u(), [&] { return mu.to_string(); });
        const RatFunc y = RatFunc::var("y");
        RatFunc sum(0);
        for (const Step& st : exits(mu)) {
            const F e = residue_at(mu, st, p);
            sum = sum + to_ratfunc(e) / (y - to_ratfunc(step_content(st, p)));
            record("residue_closed_form", e == residue_closed(mu, st, p), [&] { return mu.to_string(); });
            record("residue_nonzero", !is_zero(e), [&] { return mu.to_string(); });
        }
        record("partial_fractions", W_rational(mu, p) / y == sum, [&] { return mu.to_string(); });
    };

    for (const Shape& sh : shapes(n, p.r())) {
        const ExactModule<F> m = build_exact(sh, n, p);
        for (std::size_t si = 0; si < m.dim(); ++si) {
            const UpDownTableau& s = m.basis[si];
            const auto shp = s.shapes();
            for (int k = 1; k <= n; ++k) check_shape(shp[static_cast<std::size_t>(k - 1)]);
            for (int k = 1; k < n; ++k) {
                const auto& en = m.at[static_cast<std::size_t>(k - 1)][si];
                const F cs = m.content[si][static_cast<std::size_t>(k - 1)];
                auto where = [&] { return s.to_string() + " k=" + std::to_string(k); };
                if (en.equal) {
                    F sa(0);
                    F sb(0);
                    for (std::size_t ti : en.neighbors) {
                        const F ct = m.content[ti][static_cast<std::size_t>(k - 1)];
                        const F ett = m.at[static_cast<std::size_t>(k - 1)][ti].e;
                        sa = sa + ett / (cs * ct - F(1));
                        sb = sb + ett / ((cs * ct - F(1)) * (cs * ct - F(1)));
                    }
                    const F cs2m1 = cs * cs - F(1);
                    record("sum_inverse", sa == dr + F(1) / cs2m1, where);
                    const F rhs_b = (cs * cs + F(1)) / (cs2m1 * cs2m1) - dr +
                                    (F(1) / (p.delta() * p.delta()) - cs * cs / (cs2m1 * cs2m1)) / en.e;
                    record("sum_inverse_square", sb == rhs_b, where);
                    for (std::size_t tpi : en.neighbors) {
                        if (tpi == si) continue;
                        const F ctp = m.content[tpi][static_cast<std::size_t>(k - 1)];
                        F sc(0);
                        for (std::size_t ti : en.neighbors) {
                            const F ct = m.content[ti][static_cast<std::size_t>(k - 1)];
                            sc = sc + m.at[static_cast<std::size_t>(k - 1)][ti].e / ((cs * ct - F(1)) * (ct * ctp - F(1)));
                        }
                        const F rhs_c = (cs * ctp + F(1)) / (cs2m1 * (ctp * ctp - F(1))) - dr;
                        record("sum_mixed", sc == rhs_c, where);
                    }
                    if (k + 1 < n && m.at[static_cast<std::size_t>(k)][si].equal) {
                        record("residue_product", en.e * m.at[static_cast<std::size_t>(k)][si].e == F(1), where);
                        // t ∼_{k+1} s and u ∼_k s with s_k t = s_{k+1} u
                        for (std::size_t ti : m.at[static_cast<std::size_t>(k)][si].neighbors) {
                            if (ti == si) continue;
                            const auto& tk = m.at[static_cast<std::size_t>(k - 1)][ti];
                            if (tk.equal || tk.partner < 0) continue;
                            for (std::size_t ui : en.neighbors) {
                                if (ui == si) continue;
                                const auto& uk1 = m.at[static_cast<std::size_t>(k)][ui];
                                if (uk1.equal || uk1.partner < 0 || uk1.partner != tk.partner) continue;
                                const F lhs = tk.bsq * m.at[static_cast<std::size_t>(k)][ti].e;
                                const F rhs = uk1.bsq * m.at[static_cast<std::size_t>(k - 1)][ui].e;
                                record("b_e_balance", lhs == rhs, where);
                            }
                        }
                    }
                } else {
                    const F ck1 = m.content[si][static_cast<std::size_t>(k)];
                    const F bsq = (ck1 - cs / (q * q)) * (ck1 - q * q * cs) / ((ck1 - cs) * (ck1 - cs));
                    record("b_square_factored", en.bsq == bsq, where);
                    if (en.partner >= 0) {
                        const auto& other = m.at[static_cast<std::size_t>(k - 1)][static_cast<std::size_t>(en.partner)];
                        record("a_swap", other.a == p.delta() - en.a, where);
                    } else {
                        record("a_blocked_swap", (en.a == q || en.a == F(-1) / q) && is_zero(en.bsq), where);
                    }
                }
            }
        }
    }
    for (const auto& name : order) rep.items.push_back(items[name]);
    return rep;
}

}  // namespace bmw
