#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <set>
#include <vector>

#include <coinv/characters.hpp>

using namespace coinv;

namespace {

std::set<QFilling> occurring(const std::vector<CandidateOutcome>& cands) {
    std::set<QFilling> s;
    for (const auto& c : cands)
        if (c.occurs) s.insert(c.q);
    return s;
}

}  // namespace

TEST_CASE("parity patterns and strip lists") {
    CHECK(required_parity(LinearChar::determinant, 0) == 1);
    CHECK(required_parity(LinearChar::determinant, 1) == 0);
    CHECK(required_parity(LinearChar::chi, 0) == 0);
    CHECK(required_parity(LinearChar::chi, 1) == 1);
    CHECK(required_list(LinearChar::determinant) == 1);
    CHECK(required_list(LinearChar::chi) == 0);
    CHECK(to_string(LinearChar::determinant) == "det");
    CHECK(to_string(LinearChar::chi) == "chi");
}

TEST_CASE("row strictness check") {
    Bipartition r({2, 2}, {});
    ConstraintSet cs = resolve_constraints(r, rect_params({2, 2}, 5));
    CHECK(is_row_strict(cs, {0, 2, 0, 2}));
    CHECK(is_row_strict(cs, {0, 1, 0, 1}));
    CHECK(!is_row_strict(cs, {0, 0, 0, 2}));
    CHECK(!is_row_strict(cs, {0, 2, 2, 2}));
}

TEST_CASE("single row scenario multiplicities") {
    for (int n : {2, 3, 4}) {
        ConstraintSet cs = resolve_constraints(gordon_shape(n), gordon_params(n));
        Params par = gordon_params(n);

        auto det = linear_candidates(cs, par, LinearChar::determinant);
        REQUIRE(det.size() == 1);
        CHECK(det[0].generic);
        CHECK(det[0].occurs);
        QFilling odd_chain;
        for (int i = 0; i < n; ++i) odd_chain.push_back(2 * i + 1);
        CHECK(det[0].q == odd_chain);

        auto chi = linear_candidates(cs, par, LinearChar::chi);
        CHECK(chi.size() == static_cast<std::size_t>(n) + 1);
        for (const auto& c : chi) {
            CHECK(c.generic);
            CHECK(c.occurs);
        }

        LinearMult dm = multiplicity_linear(cs, par, LinearChar::determinant);
        LinearMult cm = multiplicity_linear(cs, par, LinearChar::chi);
        CHECK(dm.total == 1);
        CHECK(cm.total == n + 1);
        CHECK(cm.generic == n + 1);
    }

    ConstraintSet cs2 = resolve_constraints(gordon_shape(2), gordon_params(2));
    auto chi2 = occurring(linear_candidates(cs2, gordon_params(2), LinearChar::chi));
    std::set<QFilling> want{{0, 2}, {0, 4}, {2, 4}};
    CHECK(chi2 == want);
}

TEST_CASE("square 2x2 at target 5") {
    ConstraintSet cs = resolve_constraints(Bipartition({2, 2}, {}),
                                           rect_params({2, 2}, 5));
    Params par = rect_params({2, 2}, 5);

    auto det = occurring(linear_candidates(cs, par, LinearChar::determinant));
    std::set<QFilling> want_det{{1, 3, 1, 3}};
    CHECK(det == want_det);

    auto chi = occurring(linear_candidates(cs, par, LinearChar::chi));
    std::set<QFilling> want_chi{{0, 2, 0, 2}, {0, 2, 0, 4}, {0, 2, 2, 4},
                                {0, 4, 0, 4}, {0, 4, 2, 4}, {2, 4, 2, 4}};
    CHECK(chi == want_chi);

    for (const auto& c : linear_candidates(cs, par, LinearChar::chi))
        CHECK(c.generic);

    BoundReport r = rect_report({2, 2}, 5);
    CHECK(r.n == 4);
    CHECK(r.scenario == "rect 2,2 t=5");
    CHECK(r.det_mult == 1);
    CHECK(r.coinvariant_type);
    CHECK(r.chi_generic == 6);
    CHECK(r.chi_total == 6);
    CHECK(r.eps_chi_lower == 1);
    CHECK(r.theorem == 1);
}

TEST_CASE("square 3x3 at target 7") {
    BoundReport r = rect_report({3, 3}, 7);
    CHECK(r.n == 6);
    CHECK(r.det_mult == 1);
    CHECK(r.coinvariant_type);
    CHECK(r.chi_total == 10);
    CHECK(r.chi_generic == 10);
    CHECK(r.eps_chi_lower == 3);
    CHECK(r.theorem == 3);

    ConstraintSet cs = resolve_constraints(Bipartition({3, 3}, {}),
                                           rect_params({3, 3}, 7));
    auto det = occurring(
        linear_candidates(cs, rect_params({3, 3}, 7), LinearChar::determinant));
    std::set<QFilling> want_det{{1, 3, 5, 1, 3, 5}};
    CHECK(det == want_det);
}

TEST_CASE("hook scenario at rank 5") {
    ConstraintSet cs = resolve_constraints(hook_shape(5), hook_params(5));
    Params par = hook_params(5);

    auto det = linear_candidates(cs, par, LinearChar::determinant);
    REQUIRE(det.size() == 3);
    int occ = 0, tight = 0;
    for (const auto& c : det) {
        if (c.occurs) {
            ++occ;
            CHECK(c.generic);
            CHECK(c.q == QFilling{1, 3, 5, 1, 1});
        } else {
            ++tight;
            CHECK(c.reconstructed);
            CHECK(!c.strip);
            CHECK(c.q[2] == 7);
        }
    }
    CHECK(occ == 1);
    CHECK(tight == 2);

    LinearMult cm = multiplicity_linear(cs, par, LinearChar::chi);
    CHECK(cm.generic == 8);
    CHECK(cm.total == 8);

    BoundReport r = hook_report(5);
    CHECK(r.scenario == "hook k=3");
    CHECK(r.det_mult == 1);
    CHECK(r.coinvariant_type);
    CHECK(r.eps_chi_lower == 2);
    CHECK(r.theorem == 2);
}

TEST_CASE("non-generic det candidates rebuild with a repeated row") {
    for (int n : {5, 6, 7, 8}) {
        int k = hook_k(n);
        ConstraintSet cs = resolve_constraints(hook_shape(n), hook_params(n));
        auto det = linear_candidates(cs, hook_params(n), LinearChar::determinant);
        CHECK(det.size() == static_cast<std::size_t>(k));
        int tight = 0;
        for (const auto& c : det) {
            if (c.generic) continue;
            ++tight;
            CHECK(c.reconstructed);
            CHECK(!c.strip);
            CHECK(!c.occurs);
        }
        CHECK(tight == k - 1);
    }
}

TEST_CASE("piecewise and theorem bounds") {
    CHECK(piecewise_bound(4) == 0);
    CHECK(piecewise_bound(5) == 2);
    CHECK(piecewise_bound(6) == 0);
    CHECK(piecewise_bound(7) == 6);
    CHECK(piecewise_bound(8) == 8);
    CHECK(piecewise_bound(9) == 12);
    CHECK(piecewise_bound(10) == 10);
    CHECK(piecewise_bound(12) == 24);
    CHECK(piecewise_bound(16) == 48);
    CHECK(theorem_bound(4) == 1);
    CHECK(theorem_bound(6) == 3);
    CHECK(theorem_bound(5) == 2);
    CHECK(theorem_bound(10) == 10);
}

TEST_CASE("hook formula dominates the piecewise bound") {
    for (int n = 4; n <= 64; ++n) {
        int k = hook_k(n);
        long long hb = hook_formula_bound(n, k);
        INFO("n=" << n << " k=" << k);
        CHECK(hb >= piecewise_bound(n));
        if (n % 2 == 1 || n % 4 == 0) CHECK(hb == piecewise_bound(n));
    }
}

TEST_CASE("scenario table tracks the best bound per rank") {
    for (int n = 2; n <= 8; ++n) {
        BoundReport r = eps_chi_bound(n);
        INFO("n=" << n << " scenario " << r.scenario);
        CHECK(r.coinvariant_type);
        CHECK(r.eps_chi_lower >= r.theorem);
    }
    CHECK(eps_chi_bound(3).scenario == "gordon");
    CHECK(eps_chi_bound(4).scenario == "rect 2,2 t=5");
    CHECK(eps_chi_bound(6).scenario == "rect 3,3 t=7");
    CHECK(eps_chi_bound(5).scenario == "hook k=3");
    CHECK(eps_chi_bound(8).scenario == "hook k=5");
}
