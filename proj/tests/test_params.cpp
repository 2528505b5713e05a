#include <catch2/catch_amalgamated.hpp>

#include <numeric>

#include <coinv/params.hpp>

using namespace coinv;

namespace {

ParamScalar q(long long num, long long den = 1) {
    return ParamScalar(Rational(num, den));
}

}  // namespace

TEST_CASE("one-row parameter family") {
    CHECK(gordon_params(1).c == q(3, 2));
    CHECK(gordon_params(1).d == q(3, 2));
    CHECK(gordon_params(2).c == q(5, 4));
    CHECK(gordon_params(4).c == q(9, 8));
    CHECK(gordon_params(10).d == q(21, 20));
    CHECK_THROWS_AS(gordon_params(0), domain_error);

    CHECK(gordon_shape(3) == Bipartition({3}, {}));
    CHECK(boxes(gordon_shape(3)).size() == 3);

    Params p = gordon_params(2);
    CHECK(p.charged_content({1, 1, 0}) == q(5, 4));
    CHECK(p.charged_content({1, 2, 0}) == q(15, 4));
    CHECK(p.d_alt(0) == q(5, 4));
    CHECK(p.d_alt(1) == q(-5, 4));
}

TEST_CASE("rectangle parameter family") {
    Params r22 = rect_params({2, 2}, 5);
    CHECK(r22.c == ParamScalar::tau());
    CHECK(r22.d == q(5, 2));
    CHECK(q(2) * r22.d + q(2 * content(BBox{2, 2, 0})) * r22.c == q(5));

    Params r33 = rect_params({3, 3}, 7);
    CHECK(r33.c == ParamScalar::tau());
    CHECK(r33.d == q(7, 2) - ParamScalar::tau());
    CHECK(q(2) * r33.d + q(2 * content(BBox{2, 3, 0})) * r33.c == q(7));

    CHECK(rect_params({4}, 9).d == q(9, 2) - q(3) * ParamScalar::tau());

    CHECK_THROWS_AS(rect_params({2, 1}, 5), domain_error);
    CHECK_THROWS_AS(rect_params({}, 5), domain_error);
    CHECK_THROWS_AS(rect_params({2, 2}, 4), domain_error);
    CHECK_THROWS_AS(rect_params({2, 2}, -3), domain_error);
}

TEST_CASE("hook arm choice is coprime across ranks") {
    CHECK(hook_k(4) == 3);
    CHECK(hook_k(5) == 3);
    CHECK(hook_k(7) == 4);
    CHECK(hook_k(8) == 5);
    CHECK(hook_k(9) == 5);
    CHECK(hook_k(10) == 7);
    CHECK(hook_k(12) == 7);
    CHECK(hook_k(16) == 9);
    for (int n = 4; n <= 64; ++n) {
        int k = hook_k(n);
        CHECK(k >= 1);
        CHECK(k <= n);
        CHECK(std::gcd(k, n) == 1);
    }
    CHECK_THROWS_AS(hook_k(1), domain_error);
}

TEST_CASE("hook parameter family") {
    Params h5 = hook_params(5);
    CHECK(h5.c == q(3, 5));
    CHECK(h5.d == q(27, 10));

    Params h74 = hook_params(7, 4);
    CHECK(h74.c == q(4, 7));
    CHECK(h74.d == q(45, 14));
    CHECK(hook_params(7).c == q(4, 7));

    CHECK(hook_shape(5) == Bipartition({3, 1, 1}, {}));
    CHECK(hook_shape(7, 4) == Bipartition({4, 1, 1, 1}, {}));
    CHECK(hook_shape(4) == Bipartition({3, 1}, {}));

    // charged contents along the hook at n = 5
    CHECK(h5.charged_content({1, 1, 0}) == q(27, 10));
    CHECK(h5.charged_content({1, 2, 0}) == q(39, 10));
    CHECK(h5.charged_content({1, 3, 0}) == q(51, 10));
    CHECK(h5.charged_content({2, 1, 0}) == q(3, 2));
    CHECK(h5.charged_content({3, 1, 0}) == q(3, 10));

    CHECK_THROWS_AS(hook_params(6, 3), domain_error);
    CHECK_THROWS_AS(hook_params(6, 8), domain_error);
    CHECK_THROWS_AS(hook_params(1, 1), domain_error);
}

TEST_CASE("parameter struct guards") {
    CHECK_THROWS_AS(Params(q(0), q(1)), domain_error);
    CHECK_NOTHROW(Params(ParamScalar::tau(), q(0)));
}
