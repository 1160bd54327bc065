#include "bmw/params.hpp"

#include <doctest.h>

using namespace bmw;

namespace {

// ω_a as Σ_i γ_i u_i^a, with γ_i read off from the partial fractions of the
// generating function.
template <class F>
F omega_oracle(const GroundParams<F>& p, int a) {
    const auto& u = p.u();
    F total(0);
    for (std::size_t i = 0; i < u.size(); ++i) {
        F others(1);
        F frac(1);
        for (std::size_t j = 0; j < u.size(); ++j) {
            if (j == i) continue;
            others = others * u[j];
            frac = frac * (u[i] * u[j] - F(1)) / (u[i] - u[j]);
        }
        const F gamma = (F(1) + p.dinv_rho() * (u[i] * u[i] - F(1)) * others) * frac;
        F power(1);
        const F base = a >= 0 ? u[i] : F(1) / u[i];
        for (int k = 0; k < (a >= 0 ? a : -a); ++k) power = power * base;
        total = total + gamma * power;
    }
    return total;
}

TruncSeries<Rational> zseries(int order, std::initializer_list<std::pair<int, Rational>> terms) {
    TruncSeries<Rational> s("1/y", order);
    for (const auto& [i, c] : terms) s[i] = c;
    return s;
}

}  // namespace

TEST_CASE("elementary symmetric polynomials") {
    const std::vector<Rational> u{2, 3, 5};
    CHECK(elem_symmetric(u, 0) == Rational(1));
    CHECK(elem_symmetric(u, 1) == Rational(10));
    CHECK(elem_symmetric(u, 2) == Rational(31));
    CHECK(elem_symmetric(u, 3) == Rational(30));
    CHECK_THROWS_AS(elem_symmetric(u, 4), std::out_of_range);
}

TEST_CASE("Q coefficients of a single factor") {
    const std::vector<Rational> u{3};
    const auto q = q_poly_series(u, 4, false);
    CHECK(q[0] == Rational(3));
    for (int k = 1; k <= 4; ++k) CHECK(q[k] == Rational(3).pow(k + 1) - Rational(3).pow(k - 1));
    const auto qp = q_poly_series(u, 4, true);
    const Rational third(BigInt(1), BigInt(3));
    CHECK(qp[0] == third);
    for (int k = 1; k <= 4; ++k) CHECK(qp[k] == third.pow(k + 1) - third.pow(k - 1));
}

TEST_CASE("primed coefficients are the coefficients at inverted arguments") {
    const auto p = generic_specialization(3, 2);
    std::vector<Rational> inv;
    for (const auto& x : p.u()) inv.push_back(x.inv());
    const auto direct = q_poly_series(inv, 6, false);
    for (int a = 0; a <= 6; ++a) CHECK(p.Qprime(a) == direct[a]);
    CHECK(q_poly(-3, p.u(), false) == Rational(0));
    CHECK(p.omega(4) == p.omega(4));
}

TEST_CASE("even r is rejected") {
    CHECK_THROWS_AS(GroundParams<Rational>({Rational(2), Rational(3)}, Rational(2)), std::invalid_argument);
    CHECK_THROWS_AS(generic_choice(2, 2), std::invalid_argument);
}

TEST_CASE("symbolic omega for r = 1 matches the partial-fraction oracle") {
    const auto p = symbolic_params(1);
    for (int a = -4; a <= 4; ++a) CHECK(p.omega(a) == omega_oracle(p, a));
    const auto m = symbolic_params(1, -1);
    for (int a = -3; a <= 3; ++a) CHECK(m.omega(a) == omega_oracle(m, a));
}

TEST_CASE("symbolic omega_0 closed form") {
    const auto p = symbolic_params(3);
    const RatFunc expected = RatFunc(1) - (p.rho() - RatFunc(1) / p.rho()) / p.delta();
    CHECK(p.omega(0) == expected);
}

TEST_CASE("symbolic admissibility for r = 1") {
    const auto p = symbolic_params(1);
    const auto rep = check_admissible(p, -3, 3, 3);
    CHECK(rep.all_pass);
    CHECK(rep.entries.size() == 11);
}

TEST_CASE("numeric omega matches the oracle and is admissible") {
    for (int r : {1, 3, 5}) {
        for (int alpha : {1, -1}) {
            const auto p = generic_specialization(r, 2, 1, alpha);
            for (int a = -3 * r; a <= 3 * r; ++a) CHECK(p.omega(a) == omega_oracle(p, a));
            const auto rep = check_admissible(p, -3 * r, 3 * r, 3 * r);
            CHECK(rep.all_pass);
        }
    }
}

TEST_CASE("unrelated u and q still give admissible omegas") {
    const GroundParams<Rational> p({Rational(3), Rational(BigInt(-2), BigInt(7)), Rational(5)}, Rational(BigInt(4), BigInt(3)));
    for (int a = -5; a <= 5; ++a) CHECK(p.omega(a) == omega_oracle(p, a));
    CHECK(check_admissible(p, -6, 6, 6).all_pass);
}

TEST_CASE("perturbing omega_1 breaks the first window that contains it") {
    const auto p = generic_specialization(3, 2);
    const auto rep = check_admissible<Rational>(p, -6, 6, 6, [&p](int a) {
        return a == 1 ? p.omega(a) + Rational(1) : p.omega(a);
    });
    REQUIRE_FALSE(rep.all_pass);
    REQUIRE(rep.first_failure.has_value());
    CHECK(rep.first_failure->family == 1);
    CHECK(rep.first_failure->index == 1 - 3);
    CHECK(rep.first_failure->defect != "0");
}

TEST_CASE("closed generating series agree with omega") {
    for (int alpha : {1, -1}) {
        const auto p = generic_specialization(3, 2, 0, alpha);
        const int N = 12;
        CHECK(wtilde_closed(p, +1, N) == omega_series(p, +1, N));
        CHECK(wtilde_closed(p, -1, N) == omega_series(p, -1, N));
    }
    const auto s = symbolic_params(1);
    CHECK(wtilde_closed(s, +1, 5) == omega_series(s, +1, 5));
    CHECK(wtilde_closed(s, -1, 5) == omega_series(s, -1, 5));
}

TEST_CASE("product identity of the two generating series") {
    const auto p = generic_specialization(5, 2, 3);
    const int N = 14;
    const auto c = [&](const Rational& v) { return TruncSeries<Rational>::constant("1/y", N, v); };
    TruncSeries<Rational> even("1/y", N);
    for (int i = 0; i <= N; i += 2) even[i] = Rational(1);
    const auto y2 = zseries(N, {{2, Rational(1)}});
    const auto lhs = (omega_series(p, +1, N) - even + c(p.dinv_rho())) * (omega_series(p, -1, N) - y2 * even - c(p.dinv_rho()));
    // z^2/(1-z^2)^2 = sum over odd powers squared: coefficient of z^{2m} is m
    TruncSeries<Rational> rhs("1/y", N);
    for (int m = 1; 2 * m <= N; ++m) rhs[2 * m] = Rational(m);
    rhs[0] = -(p.delta() * p.delta()).inv();
    CHECK(lhs == rhs);
}

TEST_CASE("generic specialization examples") {
    const auto c1 = generic_choice(1, 2);
    CHECK(c1.q == Rational(2));
    CHECK(c1.k == std::vector<long>{2});
    CHECK(make_params(c1).u(1) == Rational(16));

    const auto c3 = generic_choice(3, 2);
    CHECK(c3.k == std::vector<long>{10, -6, 2});
    const auto m3 = generic_choice(3, 2, 1, -1);
    CHECK(m3.q == Rational(BigInt(1), BigInt(3)));
    CHECK(m3.k == std::vector<long>{-10, 6, -2});

    const auto p = generic_specialization(5, 3, 2);
    CHECK(is_generic(p.u(), p.q(), 3));
    CHECK(p.rho() * p.prod_u() == Rational(1));
}

TEST_CASE("genericity check rejects collisions") {
    const Rational q(2);
    CHECK_FALSE(is_generic({q.pow(4), q.pow(2)}, q, 2));
    CHECK_FALSE(is_generic({q.pow(3)}, q, 2));
    CHECK_FALSE(is_generic({Rational(5)}, Rational(1), 2));
    CHECK(is_generic({q.pow(4)}, q, 2));
}

TEST_CASE("preset parsing") {
    const auto c = parse_preset("# example\nr = 3\nq = 5/2\nk = 10, -6, 2\nalpha = -1\n");
    CHECK(c.q == Rational(BigInt(5), BigInt(2)));
    CHECK(c.k == std::vector<long>{10, -6, 2});
    CHECK(c.alpha == -1);
    CHECK_THROWS_AS(parse_preset("r=3\nq=2\nk=1,2\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_preset("q=2\nk=1\nfoo=3\n"), std::invalid_argument);
    CHECK_THROWS_AS(parse_preset("k=1\n"), std::invalid_argument);
}
