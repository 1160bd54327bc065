#pragma once

#include "bmw/seminormal.hpp"

#include <functional>
#include <set>

namespace bmw {

enum class Br2Kind { OneDim, TwoDim, Big };

/// An irreducible module of the two-strand algebra. X_1 is diagonal in the
/// chosen basis.
template <class F>
struct Br2Module {
    Br2Kind kind = Br2Kind::OneDim;
    std::string label;
    std::vector<int> indices;  // which u_i appear, 1-based
    std::vector<F> v;          // eigenvalues of X_1 (big only)
    std::vector<F> gamma;      // big only
    F rho{};
    std::function<F(int)> omega;
    Matrix<F> T, E, X1, X2;

    std::size_t dim() const { return T.rows(); }
};

template <class F>
Matrix<F> diag_matrix(const std::vector<F>& d) {
    Matrix<F> m(d.size(), d.size(), F(0));
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

/// ε = q for sign +1, ε = −q^{-1} for sign −1.
template <class F>
Br2Module<F> br2_onedim(const GroundParams<F>& p, int sign, int i) {
    if (i < 1 || i > p.r()) throw std::invalid_argument("br2_onedim: index out of range");
    const F eps = sign > 0 ? p.q() : F(0) - F(1) / p.q();
    Br2Module<F> m;
    m.kind = Br2Kind::OneDim;
    m.label = std::string("onedim(") + (sign > 0 ? "q" : "-1/q") + "," + std::to_string(i) + ")";
    m.indices = {i};
    m.rho = p.rho();
    m.omega = [p](int a) { return p.omega(a); };
    m.T = diag_matrix(std::vector<F>{eps});
    m.E = diag_matrix(std::vector<F>{F(0)});
    m.X1 = diag_matrix(std::vector<F>{p.u(i)});
    m.X2 = diag_matrix(std::vector<F>{eps * eps * p.u(i)});
    return m;
}

template <class F>
Br2Module<F> br2_twodim(const GroundParams<F>& p, int i, int j) {
    if (i == j || i < 1 || j < 1 || i > p.r() || j > p.r()) throw std::invalid_argument("br2_twodim: need distinct indices in range");
    const F ui = p.u(i);
    const F uj = p.u(j);
    const F q = p.q();
    const F qi = F(1) / q;
    const F c = uj / (uj - ui);
    Br2Module<F> m;
    m.kind = Br2Kind::TwoDim;
    m.label = "twodim(" + std::to_string(i) + "," + std::to_string(j) + ")";
    m.indices = {i, j};
    m.rho = p.rho();
    m.omega = [p](int a) { return p.omega(a); };
    m.T = Matrix<F>(2, 2, F(0));
    m.T(0, 0) = c * p.delta();
    m.T(0, 1) = c * (q - ui * qi / uj);
    m.T(1, 0) = c * (qi - q * ui / uj);
    m.T(1, 1) = c * (F(0) - p.delta() * ui / uj);
    m.E = Matrix<F>(2, 2, F(0));
    m.X1 = diag_matrix(std::vector<F>{ui, uj});
    m.X2 = diag_matrix(std::vector<F>{uj, ui});
    return m;
}

/// ρ^{-1} = α Π v with α ∈ {1, −1} for odd d and α ∈ {q^{-1}, −q} for even d;
/// `sign` picks the first or second choice.
template <class F>
F br2_big_rho(const std::vector<F>& v, const F& q, int sign) {
    F prod(1);
    for (const F& x : v) prod = prod * x;
    F alpha = v.size() % 2 == 1 ? F(sign > 0 ? 1 : -1) : (sign > 0 ? F(1) / q : F(0) - q);
    return F(1) / (alpha * prod);
}

/// γ_i from the closed form; γ_d(z) = 1 for odd d and −z for even d.
template <class F>
std::vector<F> br2_gamma(const std::vector<F>& v, const F& dinv_rho) {
    const std::size_t d = v.size();
    std::vector<F> out;
    for (std::size_t i = 0; i < d; ++i) {
        F others(1);
        F frac(1);
        for (std::size_t j = 0; j < d; ++j) {
            if (j == i) continue;
            others = others * v[j];
            frac = frac * (v[i] * v[j] - F(1)) / (v[i] - v[j]);
        }
        const F gd = d % 2 == 1 ? F(1) : F(0) - v[i];
        out.push_back((gd + dinv_rho * (v[i] * v[i] - F(1)) * others) * frac);
    }
    return out;
}

/// Σ_k γ_k/(v_j v_k − 1) − δ^{-1}ρ − 1/(v_j² − 1) for each j.
template <class F>
std::vector<F> uniquesolution_residual(const std::vector<F>& v, const std::vector<F>& gamma, const F& dinv_rho) {
    std::vector<F> out;
    for (std::size_t j = 0; j < v.size(); ++j) {
        F s(0);
        for (std::size_t k = 0; k < v.size(); ++k) s = s + gamma[k] / (v[j] * v[k] - F(1));
        out.push_back(s - dinv_rho - F(1) / (v[j] * v[j] - F(1)));
    }
    return out;
}

template <class F>
Matrix<F> cauchy_like_matrix(const std::vector<F>& v) {
    Matrix<F> a(v.size(), v.size(), F(0));
    for (std::size_t i = 0; i < v.size(); ++i)
        for (std::size_t j = 0; j < v.size(); ++j) {
            const F den = v[i] * v[j] - F(1);
            if (den == F(0)) throw std::domain_error("det_Ad: v_i v_j = 1");
            a(i, j) = F(1) / den;
        }
    return a;
}

/// Closed form of det[(v_i v_j − 1)^{-1}].
template <class F>
F det_Ad(const std::vector<F>& v) {
    F num(1);
    F den(1);
    for (std::size_t k = 0; k < v.size(); ++k) {
        for (std::size_t j = 0; j < v.size(); ++j) {
            const F x = v[k] * v[j] - F(1);
            if (x == F(0)) throw std::domain_error("det_Ad: v_i v_j = 1");
            den = den * x;
        }
        for (std::size_t j = k + 1; j < v.size(); ++j) num = num * (v[k] - v[j]) * (v[k] - v[j]);
    }
    return num / den;
}

template <class F>
F det_Ad_brute(const std::vector<F>& v) {
    return determinant(cauchy_like_matrix(v), F(1));
}

/// The module with E_1 ≠ 0 on the u_i listed in `indices`. Its own ρ and ω_a
/// are fixed by the v-subset.
template <class F>
Br2Module<F> br2_big(const GroundParams<F>& p, const std::vector<int>& indices, int sign) {
    if (indices.empty()) throw std::invalid_argument("br2_big: empty v-subset");
    if (std::set<int>(indices.begin(), indices.end()).size() != indices.size())
        throw std::invalid_argument("br2_big: repeated v_i");
    Br2Module<F> m;
    m.kind = Br2Kind::Big;
    m.indices = indices;
    for (int i : indices) {
        if (i < 1 || i > p.r()) throw std::invalid_argument("br2_big: index out of range");
        m.v.push_back(p.u(i));
    }
    const std::size_t d = m.v.size();
    m.label = "big(" + std::to_string(d) + ")";
    m.rho = br2_big_rho(m.v, p.q(), sign);
    const F dinv_rho = m.rho / p.delta();
    m.gamma = br2_gamma(m.v, dinv_rho);
    m.omega = [v = m.v, g = m.gamma](int a) {
        F s(0);
        for (std::size_t i = 0; i < v.size(); ++i) s = s + ipow(v[i], a) * g[i];
        return s;
    };
    m.T = Matrix<F>(d, d, F(0));
    m.E = Matrix<F>(d, d, F(0));
    std::vector<F> vinv;
    for (std::size_t i = 0; i < d; ++i) {
        vinv.push_back(F(1) / m.v[i]);
        for (std::size_t j = 0; j < d; ++j) {
            m.E(j, i) = m.gamma[i];
            const F kron = i == j ? F(1) : F(0);
            m.T(j, i) = p.delta() * (m.gamma[i] - kron) / (m.v[i] * m.v[j] - F(1));
        }
    }
    m.X1 = diag_matrix(m.v);
    m.X2 = diag_matrix(vinv);
    return m;
}

/// The module on all of u_1..u_r, which carries the ground ρ.
template <class F>
Br2Module<F> br2_big(const GroundParams<F>& p) {
    std::vector<int> all;
    for (int i = 1; i <= p.r(); ++i) all.push_back(i);
    return br2_big(p, all, p.alpha());
}

/// Two-strand relations, compared exactly.
template <class F>
std::vector<RelationResult> br2_relations(const Br2Module<F>& m, const GroundParams<F>& p) {
    std::vector<RelationResult> out;
    const std::size_t d = m.dim();
    const Matrix<F> I = Matrix<F>::identity(d, F(0), F(1));
    const F delta = p.delta();
    auto check = [&](const std::string& name, const Matrix<F>& diff, const std::string& inst) {
        RelationResult* r = nullptr;
        for (auto& x : out)
            if (x.name == name) r = &x;
        if (!r) {
            out.push_back(RelationResult{name, 0, true, true, 0, ""});
            r = &out.back();
        }
        ++r->instances;
        for (const F& x : diff.data())
            if (!(x == F(0))) {
                if (r->pass) r->detail = inst;
                r->pass = false;
                break;
            }
    };
    auto xpow = [&](int a) {
        std::vector<F> dg;
        for (std::size_t i = 0; i < d; ++i) dg.push_back(ipow(m.X1(i, i), a));
        return diag_matrix(dg);
    };
    std::vector<F> x2inv;
    for (std::size_t i = 0; i < d; ++i) x2inv.push_back(F(1) / m.X2(i, i));
    const Matrix<F>& T = m.T;
    const Matrix<F>& E = m.E;
    const Matrix<F>& X1 = m.X1;
    const Matrix<F>& X2 = m.X2;

    check("inverse", X1 * xpow(-1) - I, "X_1");
    check("inverse", X2 * diag_matrix(x2inv) - I, "X_2");
    check("inverse", T * (T - I.scaled(delta) + E.scaled(delta)) - I, "T_1");
    check("kauffman_skein", T * T - T.scaled(delta) + E.scaled(delta * m.rho) - I, "k=1");
    check("idempotent", E * E - E.scaled(m.omega(0)), "k=1");
    check("X_commute", X1 * X2 - X2 * X1, "i=1,j=2");
    check("skein_TX", T * X1 - X2 * T - (X2 * (E - I)).scaled(delta), "k=1");
    check("skein_XT", X1 * T - T * X2 - ((E - I) * X2).scaled(delta), "k=1");
    for (int a = -(p.r() + 1); a <= p.r() + 1; ++a)
        check("unwrapping", E * xpow(a) * E - E.scaled(m.omega(a)), "a=" + std::to_string(a));
    check("tangle_ET", E * T - E.scaled(m.rho), "left");
    check("tangle_ET", T * E - E.scaled(m.rho), "right");
    check("antisymmetry", E * X1 * X2 - E, "left");
    check("antisymmetry", X1 * X2 * E - E, "right");
    Matrix<F> cyc = I;
    for (const F& u : p.u()) cyc = cyc * (X1 - I.scaled(u));
    check("cyclotomic", cyc, "X_1");
    check("X_conjugation", X2 - T * X1 * T, "k=1");
    return out;
}

template <class F>
struct Br2Census {
    std::vector<Br2Module<F>> modules;
    std::vector<std::vector<RelationResult>> relations;
    std::size_t onedim = 0, twodim = 0, big = 0;
    std::size_t sum_dim_sq = 0;
    bool all_pass() const {
        for (const auto& rs : relations)
            for (const auto& r : rs)
                if (!r.pass) return false;
        return true;
    }
};

/// All 2r one-dimensional, C(r,2) two-dimensional and the r-dimensional
/// module, with their relation checks.
template <class F>
Br2Census<F> br2_census(const GroundParams<F>& p) {
    Br2Census<F> c;
    for (int i = 1; i <= p.r(); ++i)
        for (int sign : {1, -1}) {
            c.modules.push_back(br2_onedim(p, sign, i));
            ++c.onedim;
        }
    for (int i = 1; i <= p.r(); ++i)
        for (int j = i + 1; j <= p.r(); ++j) {
            c.modules.push_back(br2_twodim(p, i, j));
            ++c.twodim;
        }
    c.modules.push_back(br2_big(p));
    ++c.big;
    for (const auto& m : c.modules) {
        c.relations.push_back(br2_relations(m, p));
        c.sum_dim_sq += m.dim() * m.dim();
    }
    return c;
}

}  // namespace bmw
