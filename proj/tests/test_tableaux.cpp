#include "bmw/cosets.hpp"
#include "bmw/tableaux.hpp"

#include <doctest.h>

#include <map>
#include <random>
#include <set>

using namespace bmw;

namespace {

long long double_factorial(int m) {
    long long v = 1;
    for (int i = m; i > 1; i -= 2) v *= i;
    return v;
}

long long ipow_ll(long long b, int e) {
    long long v = 1;
    while (e-- > 0) v *= b;
    return v;
}

// Scan a bounding box for nodes whose addition (removal) keeps a partition.
std::pair<std::vector<Node>, std::vector<Node>> brute_nodes(const RPartition& lam) {
    std::vector<Node> add;
    std::vector<Node> rem;
    const int bound = lam.size() + 2;
    for (int s = 1; s <= lam.r(); ++s) {
        for (int i = 1; i <= bound; ++i) {
            for (int j = 1; j <= bound; ++j) {
                auto comps = lam.components();
                auto& c = comps[static_cast<std::size_t>(s - 1)];
                const Node b{s, i, j};
                if (!lam.has_box(b)) {
                    if (static_cast<int>(c.size()) < i - 1) continue;
                    if (static_cast<int>(c.size()) == i - 1) c.push_back(0);
                    if (c[static_cast<std::size_t>(i - 1)] != j - 1) continue;
                    ++c[static_cast<std::size_t>(i - 1)];
                    bool ok = true;
                    for (std::size_t t = 1; t < c.size(); ++t) ok = ok && c[t] <= c[t - 1];
                    if (ok) add.push_back(b);
                } else {
                    if (c[static_cast<std::size_t>(i - 1)] != j) continue;
                    --c[static_cast<std::size_t>(i - 1)];
                    bool ok = true;
                    for (std::size_t t = 1; t < c.size(); ++t) ok = ok && (c[t] <= c[t - 1]);
                    if (ok) rem.push_back(b);
                }
            }
        }
    }
    return {add, rem};
}

RPartition random_rpartition(std::mt19937_64& rng, int r, int m) {
    const auto all = multipartitions(m, r);
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    return all[pick(rng)];
}

Node N(int s, int i, int j) { return Node{s, i, j}; }

}  // namespace

TEST_CASE("addable and removable nodes") {
    const RPartition empty(3);
    CHECK(empty.addable() == std::vector<Node>{N(1, 1, 1), N(2, 1, 1), N(3, 1, 1)});
    CHECK(empty.removable().empty());

    const RPartition lam({{2}, {}, {}});
    CHECK(lam.addable() == std::vector<Node>{N(1, 1, 3), N(1, 2, 1), N(2, 1, 1), N(3, 1, 1)});
    CHECK(lam.removable() == std::vector<Node>{N(1, 1, 2)});

    std::mt19937_64 rng(3);
    for (int iter = 0; iter < 40; ++iter) {
        const int r = 1 + 2 * static_cast<int>(rng() % 3);
        const RPartition mu = random_rpartition(rng, r, static_cast<int>(rng() % 7));
        const auto [add, rem] = brute_nodes(mu);
        CHECK(mu.addable() == add);
        CHECK(mu.removable() == rem);
        CHECK(add.size() == rem.size() + static_cast<std::size_t>(r));
    }
}

TEST_CASE("contents of nodes and the product identity") {
    const auto p = symbolic_params(3);
    const RatFunc q = RatFunc::var("q");
    CHECK(node_content(N(2, 1, 3), true, p) == RatFunc::var("u2") * ipow(q, 4));
    CHECK(node_content(N(1, 1, 1), true, p) == RatFunc::var("u1"));
    CHECK(node_content(N(1, 2, 1), false, p) == q * q / RatFunc::var("u1"));

    const auto g = generic_specialization(3, 4);
    std::mt19937_64 rng(9);
    for (int iter = 0; iter < 30; ++iter) {
        const RPartition mu = random_rpartition(rng, 3, static_cast<int>(rng() % 6));
        Rational prod(1);
        for (const Step& st : exits(mu)) prod = prod * step_content(st, g);
        CHECK(prod == g.prod_u());
    }
    // symbolic version on one shape
    RatFunc prod(1);
    for (const Step& st : exits(RPartition({{2, 1}, {1}, {}}))) prod = prod * step_content(st, p);
    CHECK(prod == p.prod_u());
}

TEST_CASE("content sequences") {
    const auto p = symbolic_params(1);
    const RatFunc u = RatFunc::var("u1");
    const RatFunc q = RatFunc::var("q");
    const UpDownTableau t(1, {{+1, N(1, 1, 1)}, {-1, N(1, 1, 1)}});
    CHECK(content_seq(t, p) == std::vector<RatFunc>{u, RatFunc(1) / u});
    const UpDownTableau s(1, {{+1, N(1, 1, 1)}, {+1, N(1, 1, 2)}});
    CHECK(content_seq(s, p) == std::vector<RatFunc>{u, u * q * q});

    const auto g = generic_specialization(3, 3);
    for (int f = 0; f <= 1; ++f) {
        for (const auto& lam : multipartitions(3 - 2 * f, 3)) {
            std::set<std::vector<Rational>> seen;
            const auto tabs = enumerate_updown(3, lam);
            for (const auto& tab : tabs) seen.insert(content_seq(tab, g));
            CHECK(seen.size() == tabs.size());
        }
    }
}

TEST_CASE("up-down enumeration examples") {
    CHECK(enumerate_updown(2, RPartition(3)).size() == 3);
    CHECK(enumerate_updown(2, RPartition({{2}, {}, {}})).size() == 1);
    CHECK_THROWS_AS(enumerate_updown(3, RPartition(3)), std::invalid_argument);
    long long total = 0;
    for (const auto& sh : shapes(2, 3)) {
        const long long c = static_cast<long long>(enumerate_updown(2, sh.lambda).size());
        total += c * c;
    }
    CHECK(total == 27);
}

TEST_CASE("up-down counts satisfy the branching rule and the dimension formula") {
    for (auto [r, nmax] : std::vector<std::pair<int, int>>{{1, 6}, {3, 4}, {5, 3}}) {
        std::map<std::pair<int, RPartition>, long long> count;
        for (int n = 0; n <= nmax; ++n) {
            long long total = 0;
            for (const auto& sh : shapes(n, r)) {
                const auto tabs = enumerate_updown(n, sh.lambda);
                const long long c = static_cast<long long>(tabs.size());
                count[{n, sh.lambda}] = c;
                total += c * c;
                if (n > 0) {
                    long long branch = 0;
                    for (const Step& st : exits(sh.lambda)) {
                        const RPartition mu = st.sign > 0 ? sh.lambda.added(st.node) : sh.lambda.removed(st.node);
                        auto it = count.find({n - 1, mu});
                        if (it != count.end()) branch += it->second;
                    }
                    CHECK(branch == c);
                }
                std::set<UpDownTableau> distinct(tabs.begin(), tabs.end());
                CHECK(distinct.size() == tabs.size());
            }
            CHECK(total == ipow_ll(r, n) * double_factorial(2 * n - 1));
        }
    }
}

TEST_CASE("neighbors under the k-equivalence") {
    const UpDownTableau t1(1, {{+1, N(1, 1, 1)}, {-1, N(1, 1, 1)}});
    CHECK(neighbors_k(t1, 1) == std::vector<UpDownTableau>{t1});

    const UpDownTableau t3(3, {{+1, N(1, 1, 1)}, {-1, N(1, 1, 1)}});
    const auto nb = neighbors_k(t3, 1);
    CHECK(nb.size() == 3);
    // oracle: filter the full enumeration
    std::vector<UpDownTableau> filtered;
    for (const auto& s : enumerate_updown(2, RPartition(3)))
        if (s.step(2).sign == -1) filtered.push_back(s);
    CHECK(nb == filtered);

    const UpDownTableau t(3, {{+1, N(1, 1, 1)}, {+1, N(2, 1, 1)}, {-1, N(2, 1, 1)}});
    CHECK(neighbors_k(t, 1) == std::vector<UpDownTableau>{t});
    const UpDownTableau other(3, {{+1, N(1, 1, 1)}, {+1, N(2, 1, 1)}, {-1, N(1, 1, 1)}});
    CHECK(neighbors_k(other, 2) == std::vector<UpDownTableau>{other});
    const auto nb2 = neighbors_k(t, 2);
    CHECK(nb2.size() == 5);  // ((1),∅,∅) has 4 addable nodes and 1 removable
    for (const auto& s : nb2) {
        CHECK(s.shape(1) == t.shape(1));
        CHECK(s.shape(3) == t.shape(3));
    }
}

TEST_CASE("s_k action") {
    const UpDownTableau row(3, {{+1, N(1, 1, 1)}, {+1, N(1, 1, 2)}});
    CHECK_FALSE(sk_action(row, 1).has_value());
    const UpDownTableau col(1, {{+1, N(1, 1, 1)}, {+1, N(1, 2, 1)}});
    CHECK_FALSE(sk_action(col, 1).has_value());
    const UpDownTableau diff(3, {{+1, N(1, 1, 1)}, {+1, N(2, 1, 1)}});
    const auto sw = sk_action(diff, 1);
    REQUIRE(sw.has_value());
    CHECK(*sw == UpDownTableau(3, {{+1, N(2, 1, 1)}, {+1, N(1, 1, 1)}}));
    CHECK_THROWS_AS(sk_action(UpDownTableau(1, {{+1, N(1, 1, 1)}, {-1, N(1, 1, 1)}}), 1), std::invalid_argument);

    for (const auto& sh : shapes(4, 3)) {
        for (const auto& t : enumerate_updown(4, sh.lambda)) {
            for (int k = 1; k < 4; ++k) {
                if (t.shape(k - 1) == t.shape(k + 1)) continue;
                const auto s = sk_action(t, k);
                if (!s) continue;
                CHECK(*s != t);
                const auto back = sk_action(*s, k);
                REQUIRE(back.has_value());
                CHECK(*back == t);
            }
        }
    }
}

TEST_CASE("coset representatives") {
    CHECK(enumerate_cosets(1, 4).size() == 6);
    CHECK(enumerate_cosets(2, 4).size() == 3);
    const auto id = enumerate_cosets(0, 5);
    REQUIRE(id.size() == 1);
    CHECK(id[0].word.empty());
    for (int n = 0; n <= 8; ++n) {
        for (int f = 0; 2 * f <= n; ++f) {
            long long fact_n = 1;
            for (int i = 2; i <= n; ++i) fact_n *= i;
            long long fact_m = 1;
            for (int i = 2; i <= n - 2 * f; ++i) fact_m *= i;
            long long fact_f = 1;
            for (int i = 2; i <= f; ++i) fact_f *= i;
            const long long expected = fact_n / (fact_m * fact_f * ipow_ll(2, f));
            const auto reps = enumerate_cosets(f, n);
            CHECK(static_cast<long long>(reps.size()) == expected);
            CHECK(coset_count(f, n) == expected);
            std::set<Perm> perms;
            for (const auto& c : reps) {
                perms.insert(c.perm);
                CHECK(inversions(c.perm) == static_cast<int>(c.word.size()));
            }
            CHECK(perms.size() == reps.size());
        }
    }
}

TEST_CASE("permutation words") {
    const Perm w = perm_from_word({1, 2, 1}, 3);
    CHECK(w == Perm{0, 3, 2, 1});
    CHECK(perm_from_word(reduced_word(w), 3) == w);
    std::mt19937_64 rng(4);
    for (int iter = 0; iter < 50; ++iter) {
        Perm p = identity_perm(6);
        std::shuffle(p.begin() + 1, p.end(), rng);
        const auto word = reduced_word(p);
        CHECK(static_cast<int>(word.size()) == inversions(p));
        CHECK(perm_from_word(word, 6) == p);
    }
    CHECK(s_range(4, 1) == std::vector<int>{3, 2, 1});
    CHECK(s_range(2, 2).empty());
    CHECK(s_range(1, 3) == std::vector<int>{1, 2});
}

TEST_CASE("kappa vectors") {
    const auto k = enumerate_kappa(1, 2, 3);
    CHECK(k == std::vector<KappaVector>{{-1, 0}, {0, 0}, {1, 0}});
    CHECK(enumerate_kappa(2, 5, 1) == std::vector<KappaVector>{{0, 0, 0, 0, 0}});
    const auto k9 = enumerate_kappa(2, 5, 3);
    CHECK(k9.size() == 9);
    for (const auto& v : k9) {
        CHECK(v[0] == 0);
        CHECK(v[2] == 0);
        CHECK(v[4] == 0);
    }
}

TEST_CASE("standard tableaux") {
    CHECK(std_tableaux(RPartition({{1}, {1}, {}})).size() == 2);
    CHECK(std_tableaux(RPartition({{2}, {}, {}})).size() == 1);
    CHECK(std_tableaux(RPartition(3)).size() == 1);
    CHECK(std_tableaux(RPartition({{2, 1}})).size() == 2);
    CHECK(std_tableaux(RPartition({{3, 2}})).size() == 5);
    const RPartition lam({{2, 1}, {1}});
    const auto sup = superstandard(lam);
    CHECK(tableau_perm(sup) == identity_perm(4));
    for (const auto& t : std_tableaux(lam)) {
        const Perm d = tableau_perm(t);
        for (std::size_t e = 0; e < sup.node_of.size(); ++e) CHECK(t.node_of[static_cast<std::size_t>(d[e + 1] - 1)] == sup.node_of[e]);
    }
}

TEST_CASE("dominance order") {
    CHECK(dominates(RPartition({{2}, {}, {}}), RPartition({{1, 1}, {}, {}})));
    CHECK_FALSE(dominates(RPartition({{1, 1}, {}, {}}), RPartition({{2}, {}, {}})));
    CHECK(dominates(RPartition({{1}, {1}, {}}), RPartition({{}, {2}, {}})));
    CHECK_FALSE(dominates(RPartition({{}, {2}, {}}), RPartition({{1}, {1}, {}})));
    CHECK(dominates(Shape{1, RPartition(1)}, Shape{0, RPartition({{2}})}));
    CHECK_FALSE(dominates(Shape{0, RPartition({{2}})}, Shape{1, RPartition(1)}));
}
