#include "bmw/seminormal.hpp"

#include <cmath>
#include <limits>

namespace bmw {

Matrix<Ball> SeminormalModule::identity() const {
    return Matrix<Ball>::identity(dim(), Ball(precision), Ball(1L, precision));
}

Matrix<Ball> SeminormalModule::zero() const { return Matrix<Ball>(dim(), dim(), Ball(precision)); }

namespace {

Ball checked_sqrt(const Rational& x, mpfr_prec_t prec, const std::string& what) {
    if (x.sign() < 0) throw std::domain_error("be-real violated: " + what + " = " + x.to_string() + " < 0");
    return ball_sqrt(Ball(x, prec));
}

}  // namespace

SeminormalModule build_module(const ExactModule<Rational>& ex, const GroundParams<Rational>& p, mpfr_prec_t prec) {
    SeminormalModule m;
    m.shape = ex.shape;
    m.n = ex.n;
    m.precision = prec;
    m.basis = ex.basis;
    m.content = ex.content;
    const std::size_t d = ex.dim();
    const Ball zero(prec);
    for (int k = 1; k < ex.n; ++k) {
        Matrix<Ball> T(d, d, zero);
        Matrix<Ball> E(d, d, zero);
        const auto& row = ex.at[static_cast<std::size_t>(k - 1)];
        std::vector<Ball> root(d, zero);
        for (std::size_t s = 0; s < d; ++s) {
            if (row[s].equal)
                root[s] = checked_sqrt(row[s].e, prec, "E_ss(" + std::to_string(k) + ") at " + ex.basis[s].to_string());
        }
        for (std::size_t s = 0; s < d; ++s) {
            const auto& en = row[s];
            const Rational& cs = ex.content[s][static_cast<std::size_t>(k - 1)];
            if (en.equal) {
                for (std::size_t t : en.neighbors) {
                    if (t == s) {
                        E(s, s) = Ball(en.e, prec);
                        T(s, s) = Ball(p.delta() * (en.e - Rational(1)) / (cs * cs - Rational(1)), prec);
                    } else {
                        const Rational& ct = ex.content[t][static_cast<std::size_t>(k - 1)];
                        const Ball est = root[s] * root[t];
                        E(t, s) = est;
                        T(t, s) = Ball(p.delta() / (cs * ct - Rational(1)), prec) * est;
                    }
                }
            } else {
                T(s, s) = Ball(en.a, prec);
                if (en.partner >= 0) {
                    T(static_cast<std::size_t>(en.partner), s) =
                        checked_sqrt(en.bsq, prec, "b_s(" + std::to_string(k) + ")^2 at " + ex.basis[s].to_string());
                } else if (en.bsq.sign() < 0) {
                    throw std::domain_error("be-real violated: b_s(" + std::to_string(k) + ")^2 < 0 at " + ex.basis[s].to_string());
                }
            }
        }
        m.T.push_back(std::move(T));
        m.E.push_back(std::move(E));
    }
    for (int i = 1; i <= ex.n; ++i) {
        Matrix<Ball> X(d, d, zero);
        Matrix<Ball> Xi(d, d, zero);
        for (std::size_t s = 0; s < d; ++s) {
            const Rational& c = ex.content[s][static_cast<std::size_t>(i - 1)];
            X(s, s) = Ball(c, prec);
            Xi(s, s) = Ball(c.inv(), prec);
        }
        m.X.push_back(std::move(X));
        m.Xinv.push_back(std::move(Xi));
    }
    return m;
}

SeminormalModule build_module(const Shape& shape, int n, const GroundParams<Rational>& p, mpfr_prec_t prec) {
    return build_module(build_exact(shape, n, p), p, prec);
}

std::vector<SeminormalModule> build_all(int n, const GroundParams<Rational>& p, mpfr_prec_t prec) {
    std::vector<SeminormalModule> out;
    for (const Shape& sh : shapes(n, p.r())) out.push_back(build_module(sh, n, p, prec));
    return out;
}

bool RelationReport::all_pass() const {
    for (const auto& r : relations)
        if (!r.pass) return false;
    return true;
}

namespace {

class Verifier {
public:
    Verifier(const SeminormalModule& m, const GroundParams<Rational>& p) : m_(m), p_(p), prec_(m.precision) {}

    Ball ball(const Rational& x) const { return Ball(x, prec_); }

    const Matrix<Ball>& T(int k) const { return m_.T.at(static_cast<std::size_t>(k - 1)); }
    const Matrix<Ball>& E(int k) const { return m_.E.at(static_cast<std::size_t>(k - 1)); }
    const Matrix<Ball>& X(int i) const { return m_.X.at(static_cast<std::size_t>(i - 1)); }

    Matrix<Ball> I() const { return m_.identity(); }

    Matrix<Ball> Tinv(int k) const {
        return T(k) - I().scaled(ball(p_.delta())) + E(k).scaled(ball(p_.delta()));
    }

    /// X_i^e from the exact contents.
    Matrix<Ball> Xpow(int i, int e) const {
        Matrix<Ball> out = m_.zero();
        for (std::size_t s = 0; s < m_.dim(); ++s) out(s, s) = ball(m_.content[s][static_cast<std::size_t>(i - 1)].pow(e));
        return out;
    }

    void check(const std::string& name, const Matrix<Ball>& diff, const std::string& instance) {
        RelationResult& r = slot(name);
        ++r.instances;
        for (const Ball& b : diff.data()) {
            const double w = b.width_log2();
            if (w > r.worst_width_log2) r.worst_width_log2 = w;
            if (!b.contains_zero() || !b.width_below_pow2(-static_cast<long>(prec_ / 2))) {
                if (r.pass) r.detail = instance + ": residual " + b.to_string(12);
                r.pass = false;
            }
        }
    }

    void check_exact(const std::string& name, bool ok, const std::string& instance) {
        RelationResult& r = slot(name);
        r.exact = true;
        ++r.instances;
        if (!ok && r.pass) {
            r.pass = false;
            r.detail = instance;
        }
    }

    RelationReport finish() {
        RelationReport rep;
        rep.shape = m_.shape;
        rep.n = m_.n;
        rep.dim = m_.dim();
        rep.precision = prec_;
        rep.relations = std::move(results_);
        return rep;
    }

private:
    RelationResult& slot(const std::string& name) {
        for (auto& r : results_)
            if (r.name == name) return r;
        results_.push_back(RelationResult{name, 0, false, true, -std::numeric_limits<double>::infinity(), ""});
        return results_.back();
    }

    const SeminormalModule& m_;
    const GroundParams<Rational>& p_;
    mpfr_prec_t prec_;
    std::vector<RelationResult> results_;
};

std::string at_k(int k) { return "k=" + std::to_string(k); }
std::string at_ka(int k, int a) { return "k=" + std::to_string(k) + ",a=" + std::to_string(a); }

}  // namespace

RelationReport verify_relations(const SeminormalModule& m, const GroundParams<Rational>& p, int power_max) {
    Verifier v(m, p);
    const int n = m.n;
    const std::size_t d = m.dim();
    const Ball delta = v.ball(p.delta());
    const Ball rho = v.ball(p.rho());
    const Matrix<Ball> I = v.I();

    for (int i = 1; i <= n; ++i) {
        bool ok = true;
        for (std::size_t s = 0; s < d; ++s) {
            const Rational& c = m.content[s][static_cast<std::size_t>(i - 1)];
            ok = ok && (c * c.inv() == Rational(1));
        }
        v.check_exact("inverse", ok, "i=" + std::to_string(i));
    }
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) v.check_exact("X_commute", true, "i=" + std::to_string(i) + ",j=" + std::to_string(j));
    if (n >= 1) {
        bool ok = true;
        for (std::size_t s = 0; s < d; ++s) {
            Rational prod(1);
            for (const Rational& u : p.u()) prod = prod * (m.content[s][0] - u);
            ok = ok && prod.is_zero();
        }
        v.check_exact("cyclotomic", ok, "X_1");
    }

    for (int k = 1; k < n; ++k) {
        const auto& T = v.T(k);
        const auto& E = v.E(k);
        v.check("kauffman_skein", T * T - T.scaled(delta) + E.scaled(delta * rho) - I, at_k(k));
        v.check("idempotent", E * E - E.scaled(v.ball(p.omega(0))), at_k(k));
        v.check("skein_TX", T * v.X(k) - v.X(k + 1) * T - (v.X(k + 1) * (E - I)).scaled(delta), at_k(k));
        v.check("skein_XT", v.X(k) * T - T * v.X(k + 1) - ((E - I) * v.X(k + 1)).scaled(delta), at_k(k));
        v.check("tangle_ET", E * T - E.scaled(rho), at_k(k));
        v.check("tangle_ET", T * E - E.scaled(rho), at_k(k));
        const Matrix<Ball> XX = v.X(k) * v.X(k + 1);
        v.check("antisymmetry", E * XX - E, at_k(k));
        v.check("antisymmetry", XX * E - E, at_k(k));
        v.check("X_conjugation", v.X(k + 1) - T * v.X(k) * T, at_k(k));
        for (int j = 1; j <= n; ++j) {
            if (j == k || j == k + 1) continue;
            v.check("T_X_commute", T * v.X(j) - v.X(j) * T, at_k(k) + ",j=" + std::to_string(j));
        }
        for (int j = k + 2; j < n; ++j) v.check("braid_far", T * v.T(j) - v.T(j) * T, at_k(k) + ",j=" + std::to_string(j));
        if (k + 1 < n) {
            const auto& T1 = v.T(k + 1);
            const auto& E1 = v.E(k + 1);
            v.check("braid", T * T1 * T - T1 * T * T1, at_k(k));
            v.check("tangle_EE", E1 * E - E1 * T * T1, at_k(k));
            v.check("tangle_EE", E1 * E - T * T1 * E, at_k(k));
            v.check("untwist", E1 * E * E1 - E1, at_k(k));
            v.check("untwist", E * E1 * E - E, at_k(k));
            v.check("involution_compat", E * T1 * T - E * E1, at_k(k));
            v.check("involution_compat", T1 * T * E1 - E * E1, at_k(k));
        }

        // power identities
        const Matrix<Ball> Tinv = v.Tinv(k);
        v.check("T_inverse", T * Tinv - I, at_k(k));
        const Matrix<Ball> EmI = E - I;
        for (int a = 1; a <= power_max; ++a) {
            Matrix<Ball> s1 = m.zero();
            Matrix<Ball> s2 = m.zero();
            Matrix<Ball> s4 = m.zero();
            Matrix<Ball> s5 = m.zero();
            Matrix<Ball> s3a = m.zero();
            Matrix<Ball> s3b = m.zero();
            Matrix<Ball> s6a = m.zero();
            for (int i = 1; i <= a; ++i) {
                s1 = s1 + v.Xpow(k + 1, i) * EmI * v.Xpow(k, a - i);
                s2 = s2 + v.Xpow(k + 1, a - i) * EmI * v.Xpow(k, i);
                s4 = s4 + v.Xpow(k + 1, -a + i) * EmI * v.Xpow(k, -i);
                s5 = s5 + v.Xpow(k + 1, -i) * EmI * v.Xpow(k, -a + i);
                s3a = s3a + E * v.Xpow(k, a - i) * E * v.Xpow(k, -i);
                s3b = s3b + E * v.Xpow(k, a - 2 * i);
                s6a = s6a + E * v.Xpow(k, -i) * E * v.Xpow(k, a - i);
            }
            const auto Xa = v.Xpow(k, a);
            const auto Xma = v.Xpow(k, -a);
            const auto Ya = v.Xpow(k + 1, a);
            const auto Yma = v.Xpow(k + 1, -a);
            v.check("power_T_X", T * Xa - Ya * T - s1.scaled(delta), at_ka(k, a));
            v.check("power_Tinv_X", Tinv * Xa - Ya * Tinv - s2.scaled(delta), at_ka(k, a));
            v.check("power_E_X_T", E * Xa * T - (E * Xma).scaled(rho) - s3a.scaled(delta) + s3b.scaled(delta), at_ka(k, a));
            v.check("power_T_Xinv", T * Xma - Yma * T + s4.scaled(delta), at_ka(k, a));
            v.check("power_Tinv_Xinv", Tinv * Xma - Yma * Tinv + s5.scaled(delta), at_ka(k, a));
            v.check("power_E_Xinv_T", E * Xma * T - (E * Xa).scaled(rho) + s6a.scaled(delta) - s3b.scaled(delta), at_ka(k, a));
        }
    }
    if (n >= 2) {
        const int amax = p.r() + 1;
        for (int a = -amax; a <= amax; ++a)
            v.check("unwrapping", v.E(1) * v.Xpow(1, a) * v.E(1) - v.E(1).scaled(v.ball(p.omega(a))), "a=" + std::to_string(a));
    }
    return v.finish();
}

RelationReport verify_shape(const Shape& shape, int n, const GroundParams<Rational>& p, mpfr_prec_t precision,
                            mpfr_prec_t max_precision) {
    const ExactModule<Rational> ex = build_exact(shape, n, p);
    for (;;) {
        RelationReport rep = verify_relations(build_module(ex, p, precision), p);
        if (rep.all_pass() || precision * 2 > max_precision) return rep;
        precision *= 2;
    }
}

}  // namespace bmw
