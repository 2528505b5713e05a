#include <catch2/catch_amalgamated.hpp>

#include <map>
#include <random>
#include <vector>

#include <coinv/characters.hpp>
#include <coinv/oracle.hpp>

using namespace coinv;

TEST_CASE("rational and fraction-free ranks") {
    IntMatrix id3{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
    CHECK(rank_checked(id3) == 3);

    IntMatrix sing{{1, 2, 3}, {2, 4, 6}, {1, 1, 1}};
    CHECK(rank_checked(sing) == 2);

    IntMatrix wide{{0, 0, 1, 4}, {0, 0, 2, 8}, {5, 0, 0, 0}};
    CHECK(rank_checked(wide) == 2);

    IntMatrix empty;
    CHECK(rank_checked(empty) == 0);

    RatMatrix rm{{Rational(2), Rational(4)}, {Rational(1), Rational(2)}};
    CHECK(rref(rm) == 1);
    CHECK(rm[0][0] == Rational(1));
    CHECK(rm[0][1] == Rational(2));
    CHECK(rm[1][0].is_zero());
    CHECK(rm[1][1].is_zero());

    std::mt19937 rng(71);
    std::uniform_int_distribution<int> d(-4, 4);
    for (int trial = 0; trial < 40; ++trial) {
        IntMatrix m(4, std::vector<BigInt>(5));
        for (auto& row : m)
            for (auto& v : row) v = d(rng);
        CHECK(rank_bareiss(m) == rank_rational(m));
    }
}

TEST_CASE("signed permutation group") {
    auto g2 = all_signed_perms(2);
    CHECK(g2.size() == 8);
    CHECK(all_signed_perms(3).size() == 48);
    CHECK_THROWS_AS(all_signed_perms(5), limit_error);
    CHECK_THROWS_AS(all_signed_perms(0), domain_error);

    SignedPerm e = identity_perm(2);
    for (const auto& w : g2) {
        CHECK(compose(w, inverse(w)) == e);
        CHECK(compose(inverse(w), w) == e);
    }

    std::mt19937 rng(7);
    std::uniform_int_distribution<int> pick(0, 7);
    for (int trial = 0; trial < 50; ++trial) {
        const auto& v = g2[pick(rng)];
        const auto& w = g2[pick(rng)];
        auto vw = compose(v, w);
        for (BChar ch : all_bchars)
            CHECK(evaluate(ch, vw) == evaluate(ch, v) * evaluate(ch, w));
    }

    SignedPerm swap12{{1, 0}, {1, 1}};
    SignedPerm zeta1{{0, 1}, {-1, 1}};
    CHECK(evaluate(BChar::chi, swap12) == -1);
    CHECK(evaluate(BChar::chi, zeta1) == 1);
    CHECK(evaluate(BChar::chi_prime, swap12) == 1);
    CHECK(evaluate(BChar::chi_prime, zeta1) == -1);
    CHECK(evaluate(BChar::determinant, swap12) == -1);
    CHECK(evaluate(BChar::determinant, zeta1) == -1);
    CHECK(evaluate(BChar::trivial, zeta1) == 1);
}

TEST_CASE("monomial action") {
    SignedPerm swap12{{1, 0}, {1, 1}};
    Monomial x1{{1, 0}, {0, 0}};
    auto [c1, m1] = act(swap12, x1);
    CHECK(c1 == 1);
    CHECK(m1 == Monomial{{0, 1}, {0, 0}});

    SignedPerm zeta1{{0, 1}, {-1, 1}};
    auto [c2, m2] = act(zeta1, x1);
    CHECK(c2 == -1);
    CHECK(m2 == x1);

    Monomial x1y1{{1, 0}, {1, 0}};
    auto [c3, m3] = act(zeta1, x1y1);
    CHECK(c3 == 1);
    CHECK(m3 == x1y1);

    auto g2 = all_signed_perms(2);
    Monomial probe{{2, 1}, {0, 3}};
    for (const auto& v : g2)
        for (const auto& w : g2) {
            auto [cw, mw] = act(w, probe);
            auto [cv, mv] = act(v, mw);
            auto [cc, mc] = act(compose(v, w), probe);
            CHECK(cc == cw * cv);
            CHECK(mc == mv);
        }

    CHECK(monomials_of_bidegree(2, 2, 1).size() == 6);
    CHECK(monomials_of_bidegree(1, 3, 2).size() == 1);
    CHECK(monomials_of_bidegree(3, 2, 0).size() == 6);
}

TEST_CASE("reynolds rows") {
    auto g1 = all_signed_perms(1);
    std::map<Monomial, int> idx1;
    auto deg1 = monomials_of_bidegree(1, 1, 0);
    for (std::size_t i = 0; i < deg1.size(); ++i) idx1[deg1[i]] = static_cast<int>(i);
    auto row = reynolds_row(g1, deg1[0], idx1);
    CHECK(row == std::vector<BigInt>{0});

    auto deg2 = monomials_of_bidegree(1, 2, 0);
    std::map<Monomial, int> idx2;
    for (std::size_t i = 0; i < deg2.size(); ++i) idx2[deg2[i]] = static_cast<int>(i);
    CHECK(reynolds_row(g1, deg2[0], idx2) == std::vector<BigInt>{2});
}

TEST_CASE("rank 1 quotient") {
    EpsilonReport r = epsilon_report(1);
    CHECK(r.dim == 3);
    CHECK(r.principal == 3);
    CHECK(r.eps == 0);
    CHECK(r.det_dim == 2);
    CHECK(r.graded.complete);
    CHECK(r.graded.top_degree == 1);
    CHECK(r.graded.degree_dim(0) == 1);
    CHECK(r.graded.degree_dim(1) == 2);
    CHECK(r.graded.isotypic_dim(BChar::trivial) == 1);
}

TEST_CASE("rank 2 quotient against recorded ground truth") {
    EpsilonReport r = epsilon_report(2);
    CHECK(r.dim == 25);
    CHECK(r.principal == 25);
    CHECK(r.eps == 0);
    CHECK(r.graded.complete);
    CHECK(r.graded.top_degree == 4);
    std::vector<long long> by_degree{1, 4, 7, 8, 5};
    for (int d = 0; d <= 4; ++d) CHECK(r.graded.degree_dim(d) == by_degree[d]);

    CHECK(r.det_dim == 6);
    CHECK(r.chi_prime_dim == 3);
    CHECK(r.eps_chi == 0);
    CHECK(r.graded.isotypic_dim(BChar::trivial) == 1);
    CHECK(r.graded.isotypic_dim(BChar::chi) == 3);

    std::map<int, long long> chip = r.graded.euler_isotypic(BChar::chi_prime);
    std::map<int, long long> want{{-2, 1}, {0, 1}, {2, 1}};
    CHECK(chip == want);

    std::map<int, long long> det_euler =
        r.graded.euler_isotypic(BChar::determinant);
    std::map<int, long long> want_det{{-4, 1}, {-2, 1}, {0, 2}, {2, 1}, {4, 1}};
    CHECK(det_euler == want_det);
}

TEST_CASE("rank 2 quotient dominates the single-row module profile") {
    EpsilonReport r = epsilon_report(2);
    std::map<int, long long> module_side = gordon_chi_euler_profile(2);
    std::map<int, long long> ring_side = r.graded.euler_isotypic(BChar::chi_prime);
    for (const auto& [e, d] : module_side) {
        INFO("euler degree " << e);
        CHECK(ring_side[e] >= d);
    }
    CHECK(r.chi_prime_dim >= 3);
    CHECK(r.dim >= 25);
}
