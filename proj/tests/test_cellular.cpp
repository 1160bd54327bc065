#include "bmw/cellular.hpp"

#include <doctest.h>

using namespace bmw;

namespace {

std::vector<Matrix<Ball>> product(const std::vector<Matrix<Ball>>& a, const std::vector<Matrix<Ball>>& b) {
    std::vector<Matrix<Ball>> out;
    for (std::size_t i = 0; i < a.size(); ++i) out.push_back(a[i] * b[i]);
    return out;
}

std::vector<Matrix<Ball>> identity_blocks(const FaithfulRep& rep) {
    std::vector<Matrix<Ball>> out;
    for (const auto& m : rep.blocks) out.push_back(m.identity());
    return out;
}

}  // namespace

TEST_CASE("m_word examples") {
    const RPartition lambda{{1}, {}, {}};
    const auto tabs = std_tableaux(lambda);
    REQUIRE(tabs.size() == 1);
    const GenWord w = m_word(tabs[0], tabs[0]);
    CHECK(w == GenWord{tok_XminusU(1, 2), tok_XminusU(1, 3)});

    const RPartition empty(3);
    const auto e = std_tableaux(empty);
    REQUIRE(e.size() == 1);
    CHECK(m_word(e[0], e[0]).empty());

    const RPartition other{{2, 1}};
    const auto t3 = std_tableaux(other);
    REQUIRE(t3.size() == 2);
    CHECK(m_word(t3[1], t3[0]) == star(m_word(t3[0], t3[1])));
    CHECK_THROWS_AS(m_word(t3[0], tabs[0]), std::invalid_argument);
}

TEST_CASE("row stabiliser sizes") {
    CHECK(row_stabilizer_words(RPartition{{3}}).size() == 6);
    CHECK(row_stabilizer_words(RPartition{{2, 2}}).size() == 4);
    CHECK(row_stabilizer_words(RPartition{{1}, {2}}).size() == 2);
    CHECK(row_stabilizer_words(RPartition{{1, 1}}).size() == 1);
}

TEST_CASE("cell_word examples") {
    const Shape s0{0, RPartition{{1}}};
    const auto idx0 = cell_indices(s0, 1, 1);
    REQUIRE(idx0.size() == 1);
    CHECK(cell_word(s0, 1, idx0[0], idx0[0]).empty());

    const Shape s1{1, RPartition(3)};
    CellIndex left{std_tableaux(RPartition(3))[0], KappaVector{0, 0}, enumerate_cosets(1, 2)[0]};
    CellIndex right = left;
    right.kappa = KappaVector{1, 0};
    CHECK(cell_word(s1, 2, left, right) == GenWord{tok_E(1), tok_X(1, 1)});

    const GenWord w{tok_T(1), tok_E(2), tok_X(3, -1), tok_XminusU(2, 1)};
    CHECK(star(star(w)) == w);
}

TEST_CASE("basis counts sum to r^n (2n-1)!!") {
    for (auto [r, n] : {std::pair{1, 2}, std::pair{1, 5}, std::pair{3, 2}, std::pair{3, 4}, std::pair{5, 3}}) {
        long long total = 0;
        for (const auto& c : basis_counts(n, r)) {
            CHECK(c.delta == static_cast<long long>(cell_indices(c.shape, n, r).size()));
            total += c.delta * c.delta;
        }
        CHECK(total == bmw_dimension(n, r));
    }
    CHECK(bmw_dimension(2, 3) == 27);
}

TEST_CASE("evaluation of simple words") {
    const auto p = generic_specialization(1, 2);
    const FaithfulRep rep = build_faithful(2, p, 256);
    CHECK(rep.total_dim() == 3);
    CHECK(blocks_agree(eval_word({}, rep), identity_blocks(rep)));

    const auto e = eval_word({tok_E(1)}, rep);
    for (std::size_t b = 0; b < rep.blocks.size(); ++b) {
        const Rational expect = rep.blocks[b].shape.f == 1 ? p.omega(0) : Rational(0);
        CHECK(e[b](0, 0).contains(expect));
    }
    const auto xx = eval_word({tok_X(1), tok_X(2)}, rep);
    for (std::size_t b = 0; b < rep.blocks.size(); ++b)
        if (rep.blocks[b].shape.f == 1) CHECK(xx[b](0, 0).contains(Rational(1)));
    CHECK_THROWS_AS(eval_word({tok_E(2)}, rep), std::out_of_range);
    CHECK_THROWS_AS(eval_word({tok_X(3)}, rep), std::out_of_range);
}

TEST_CASE("evaluation is a homomorphism; E^f X^kappa and M_st commutations") {
    const auto p = generic_specialization(3, 3);
    const FaithfulRep rep = build_faithful(3, p, 256);
    const std::vector<GenWord> ws = {
        {tok_T(1), tok_E(2)}, {tok_Tinv(2), tok_X(3, 2)}, {tok_XminusU(1, 2), tok_T(2), tok_T(1)}, {tok_E(1), tok_X(1, -1)}};
    for (const auto& a : ws)
        for (const auto& b : ws) CHECK(blocks_agree(eval_word(concat(a, b), rep), product(eval_word(a, rep), eval_word(b, rep))));

    CHECK(blocks_agree(eval_word({tok_T(1), tok_Tinv(1)}, rep), identity_blocks(rep)));

    // E_1 and X_1 do not commute, so E^f X^kappa is only central for the lower strands
    const FaithfulRep two = build_faithful(2, generic_specialization(3, 2), 256);
    CHECK_FALSE(blocks_agree(eval_word({tok_E(1), tok_X(1)}, two), eval_word({tok_X(1), tok_E(1)}, two)));

    for (const Shape& sh : shapes(3, 3)) {
        const GenWord ef = e_power(sh.f, 3);
        for (const auto& kappa : enumerate_kappa(sh.f, 3, 3)) {
            const GenWord xk = x_kappa(kappa);
            const GenWord efx = concat(ef, xk);
            const int m = 3 - 2 * sh.f;
            std::vector<Token> lower = {tok_X(1)};
            for (int i = 1; i < m; ++i) {
                lower.push_back(tok_T(i));
                lower.push_back(tok_E(i));
            }
            for (const Token& g : lower)
                CHECK(blocks_agree(eval_word(concat(efx, {g}), rep), eval_word(concat({g}, efx), rep)));
            for (const auto& s : std_tableaux(sh.lambda))
                for (const auto& t : std_tableaux(sh.lambda)) {
                    const GenWord m = m_word(s, t);
                    CHECK(blocks_agree(eval_word(concat(ef, m), rep), eval_word(concat(m, ef), rep)));
                    CHECK(blocks_agree(eval_word(concat(m, xk), rep), eval_word(concat(xk, m), rep)));
                }
        }
    }
}

TEST_CASE("rank certification for small cases") {
    for (auto [r, n, d] : {std::tuple{1, 2, 3LL}, std::tuple{1, 3, 15LL}, std::tuple{3, 2, 27LL}}) {
        const auto p = generic_specialization(r, n);
        const RankReport rep = rank_certify(n, p, 256);
        INFO("r=", r, " n=", n, " ", rep.detail);
        CHECK(rep.D == d);
        CHECK(rep.words == d);
        CHECK(rep.certified);
    }
}

TEST_CASE("certified rank detects dependence") {
    const mpfr_prec_t prec = 128;
    std::vector<std::vector<Ball>> rows = {{Ball(Rational(1), prec), Ball(Rational(2), prec)},
                                           {Ball(Rational(2), prec), Ball(Rational(4), prec)}};
    CHECK(certified_rank(rows) == 1);
    rows[1][1] = Ball(Rational(5), prec);
    CHECK(certified_rank(rows) == 2);
}

TEST_CASE("gram values") {
    const auto p = generic_specialization(3, 4);
    const auto g2 = gram_half(2, 0, p);
    CHECK(g2.value == p.omega(0));
    CHECK(g2.cross_checked);
    CHECK(g2.cross_check_pass);
    for (int ell = -2; ell <= 2; ++ell) {
        const auto g4 = gram_half(4, ell, p);
        CHECK(g4.value == p.omega(ell) * p.omega(ell));
        CHECK(g4.cross_check_pass);
        CHECK_FALSE(g4.vanishes);
    }
    const auto z = gram_half(4, 1, p, [](int) { return Rational(0); });
    CHECK(z.value == Rational(0));
    CHECK(z.vanishes);
    CHECK_FALSE(z.cross_checked);
    CHECK_THROWS_AS(gram_half(3, 0, p), std::invalid_argument);
}

TEST_CASE("classify") {
    const auto p = generic_specialization(3, 3);
    const auto om = [&p](int a) { return p.omega(a); };
    CHECK(classify(3, 3, om).size() == shapes(3, 3).size());
    const auto with = classify(2, 3, om);
    CHECK(std::find(with.begin(), with.end(), Shape{1, RPartition(3)}) != with.end());
    const auto without = classify(2, 3, [](int) { return Rational(0); });
    CHECK(std::find(without.begin(), without.end(), Shape{1, RPartition(3)}) == without.end());
    CHECK(without.size() + 1 == with.size());
}
