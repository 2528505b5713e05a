#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <vector>

#include <coinv/partitions.hpp>
#include <coinv/skew.hpp>

using namespace coinv;

namespace {

ParamScalar q(long long num, long long den = 1) {
    return ParamScalar(Rational(num, den));
}

SkewComponent comp(std::vector<Cell> cells, ParamScalar base) {
    SkewComponent sc(std::move(cells), std::move(base));
    sc.canonicalize();
    return sc;
}

std::size_t count_with_parts(const std::vector<std::vector<SkewComponent>>& cfgs,
                             std::size_t parts) {
    std::size_t n = 0;
    for (const auto& cfg : cfgs)
        if (cfg.size() == parts) ++n;
    return n;
}

}  // namespace

TEST_CASE("partition validation and parsing") {
    CHECK_NOTHROW(validate_partition({3, 1, 1}));
    CHECK_NOTHROW(validate_partition({}));
    CHECK_THROWS_AS(validate_partition({1, 3}), domain_error);
    CHECK_THROWS_AS(validate_partition({3, 0}), domain_error);
    CHECK_THROWS_AS(validate_partition({-2}), domain_error);

    CHECK(parse_partition("3,1,1") == Partition{3, 1, 1});
    CHECK(parse_partition("") == Partition{});
    CHECK(parse_partition("-") == Partition{});
    CHECK_THROWS_AS(parse_partition("3,,1"), parse_error);
    CHECK_THROWS_AS(parse_partition("3,x"), parse_error);
    CHECK_THROWS_AS(parse_partition("1,3"), domain_error);

    Bipartition b = parse_bipartition("3,1/2");
    CHECK(b.p0 == Partition{3, 1});
    CHECK(b.p1 == Partition{2});
    CHECK(parse_bipartition("4").p1.empty());
    CHECK(parse_bipartition("2,2/-").p0 == Partition{2, 2});
    CHECK(parse_bipartition("/1").p0.empty());
    CHECK(to_string(parse_bipartition("3,1/2")) == "3,1/2");
    CHECK(to_string(parse_bipartition("4")) == "4/-");

    CHECK(partition_size({3, 1, 1}) == 5);
    CHECK(is_rectangle({2, 2}));
    CHECK(is_rectangle({4}));
    CHECK(!is_rectangle({3, 1}));
}

TEST_CASE("box enumeration, content, componentwise order") {
    Bipartition lam({2, 1}, {1});
    auto bs = boxes(lam);
    REQUIRE(bs.size() == 4);
    CHECK(bs[0] == BBox{1, 1, 0});
    CHECK(bs[1] == BBox{1, 2, 0});
    CHECK(bs[2] == BBox{2, 1, 0});
    CHECK(bs[3] == BBox{1, 1, 1});

    CHECK(content(BBox{1, 2, 0}) == 1);
    CHECK(content(BBox{2, 1, 0}) == -1);
    CHECK(content(BBox{3, 1, 0}) == -2);
    CHECK(content(BBox{1, 3, 0}) == 2);

    CHECK(box_leq(BBox{1, 1, 0}, BBox{2, 1, 0}));
    CHECK(box_leq(BBox{1, 1, 0}, BBox{1, 1, 0}));
    CHECK(!box_leq(BBox{1, 2, 0}, BBox{2, 1, 0}));
    CHECK(!box_leq(BBox{1, 1, 0}, BBox{1, 1, 1}));

    CHECK(removable_boxes({3, 1, 1}) ==
          std::vector<std::pair<int, int>>{{1, 3}, {3, 1}});
    CHECK(removable_boxes({2, 2}) == std::vector<std::pair<int, int>>{{2, 2}});
    CHECK(removable_boxes({4, 2, 2, 1}) ==
          std::vector<std::pair<int, int>>{{1, 4}, {3, 2}, {4, 1}});
    CHECK(removable_boxes({}).empty());
}

TEST_CASE("skew cell-set validity") {
    CHECK(cells_valid_skew({{0, 0}, {0, 1}}));
    CHECK(cells_valid_skew({{0, 0}, {1, 0}}));
    CHECK(cells_valid_skew({{0, 1}, {1, 0}, {1, 1}}));
    CHECK(cells_valid_skew({{0, 1}, {0, 2}, {1, 1}}));
    CHECK(cells_valid_skew({{0, 2}, {1, 1}, {1, 2}}));
    CHECK(cells_valid_skew({{0, 0}, {0, 1}, {1, 0}, {1, 1}}));
    CHECK(cells_valid_skew({{5, 5}}));

    CHECK(!cells_valid_skew({}));
    CHECK(!cells_valid_skew({{0, 0}, {1, 1}}));
    CHECK(!cells_valid_skew({{0, 0}, {0, 2}}));
    CHECK(!cells_valid_skew({{0, 0}, {2, 2}}));
    CHECK(!cells_valid_skew({{0, 1}, {1, 0}}));
    CHECK(!cells_valid_skew({{0, 0}, {0, 0}}));
}

TEST_CASE("component canonical form preserves contents") {
    SkewComponent a({{5, 6}, {6, 6}}, q(3));
    CHECK(a.content_of({5, 6}) == q(4));
    CHECK(a.content_of({6, 6}) == q(3));
    a.canonicalize();
    CHECK(a.cells == std::vector<Cell>{{0, 1}, {1, 1}});
    CHECK(a.base_content == q(3));
    CHECK(a.content_of({0, 1}) == q(4));

    SkewComponent b({{3, 10}, {4, 10}}, q(0));
    b.canonicalize();
    CHECK(b.cells == std::vector<Cell>{{0, 1}, {1, 1}});
    CHECK(b.base_content == q(6));

    SkewComponent c({{2, 2}, {1, 3}, {1, 2}}, q(1, 2));
    c.canonicalize();
    CHECK(c.cells == std::vector<Cell>{{0, 1}, {0, 2}, {1, 1}});
    CHECK(c.base_content == q(1, 2));
    CHECK(c.is_valid());
}

TEST_CASE("mergeability of same-coset components") {
    ParamScalar g = ParamScalar::tau();

    auto s0 = comp({{0, 0}}, g);
    auto s1 = comp({{0, 0}}, g + q(1));
    auto s2 = comp({{0, 0}}, g + q(2));
    auto s3 = comp({{0, 0}}, g + q(3));

    CHECK(!mergeable(s0, s0));
    CHECK(mergeable(s0, s1));
    CHECK(mergeable(s1, s0));
    CHECK(!mergeable(s0, s2));
    CHECK(!mergeable(s0, s3));

    auto col3 = comp({{0, 2}, {1, 2}, {2, 2}}, g);
    CHECK(mergeable(col3, s3));
    CHECK(mergeable(s3, col3));
    CHECK(!mergeable(col3, comp({{0, 0}}, g + q(4))));

    auto row2 = comp({{0, 0}, {0, 1}}, g);
    CHECK(!mergeable(row2, s1));
    CHECK(mergeable(row2, s2));

    auto off_coset = comp({{0, 0}}, g + q(1, 2));
    CHECK(!mergeable(s0, off_coset));

    CHECK(components_separated({s0, s2}));
    CHECK(!components_separated({s0, s1}));
    CHECK(components_separated({s0, off_coset}));
    CHECK(!components_separated({s0, s2, s3}));
}

TEST_CASE("raw shape enumeration for content multisets") {
    auto cfg01 = enumerate_skew_shapes({q(0), q(1)});
    CHECK(cfg01.size() == 3);
    CHECK(count_with_parts(cfg01, 1) == 2);
    CHECK(count_with_parts(cfg01, 2) == 1);
    bool saw_row = false, saw_col = false;
    for (const auto& cfg : cfg01)
        if (cfg.size() == 1) {
            if (cfg[0].cells == std::vector<Cell>{{0, 0}, {0, 1}}) saw_row = true;
            if (cfg[0].cells == std::vector<Cell>{{0, 1}, {1, 1}}) saw_col = true;
        }
    CHECK(saw_row);
    CHECK(saw_col);

    auto cfg00 = enumerate_skew_shapes({q(0), q(0)});
    REQUIRE(cfg00.size() == 1);
    CHECK(cfg00[0].size() == 2);

    auto cfg012 = enumerate_skew_shapes({q(0), q(1), q(2)});
    CHECK(cfg012.size() == 9);
    CHECK(count_with_parts(cfg012, 1) == 4);
    CHECK(count_with_parts(cfg012, 2) == 4);
    CHECK(count_with_parts(cfg012, 3) == 1);

    auto mixed = enumerate_skew_shapes({q(0), ParamScalar::tau()});
    REQUIRE(mixed.size() == 1);
    CHECK(mixed[0].size() == 2);

    auto half = enumerate_skew_shapes({q(0), q(1, 2)});
    REQUIRE(half.size() == 1);
    CHECK(half[0].size() == 2);

    std::vector<ParamScalar> big(9, q(0));
    CHECK_THROWS_AS(enumerate_skew_shapes(big), limit_error);

    for (const auto& cfg : cfg012)
        for (const auto& sc : cfg) CHECK(sc.is_valid());
}

TEST_CASE("standard filling enumeration") {
    ParamScalar g = q(0);
    auto row2 = comp({{0, 0}, {0, 1}}, g);
    auto col2 = comp({{0, 1}, {1, 1}}, g);
    auto hook = comp({{0, 1}, {0, 2}, {1, 1}}, g);
    auto square = comp({{0, 0}, {0, 1}, {1, 0}, {1, 1}}, q(-1));
    auto s0 = comp({{0, 0}}, g);
    auto s5 = comp({{0, 0}}, q(5));

    CHECK(enumerate_standard_tableaux({row2}).size() == 1);
    CHECK(enumerate_standard_tableaux({col2}).size() == 1);
    CHECK(enumerate_standard_tableaux({hook}).size() == 2);
    CHECK(enumerate_standard_tableaux({square}).size() == 2);
    CHECK(enumerate_standard_tableaux({s0, s5}).size() == 2);
    CHECK(enumerate_standard_tableaux({s0, s0}).size() == 1);
    CHECK(enumerate_standard_tableaux({row2, s5}).size() == 3);

    for (const auto& placed : enumerate_standard_tableaux({hook, s5})) {
        SkewTableau st;
        st.d0 = placed;
        CHECK(st.is_standard());
    }

    auto big = comp({{0, 0}, {0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5},
                     {0, 6}, {0, 7}, {0, 8}, {0, 9}, {0, 10}},
                    g);
    CHECK_THROWS_AS(enumerate_standard_tableaux({big}), limit_error);
}

TEST_CASE("pair structure: canonical form, strips, separateness") {
    ParamScalar g = ParamScalar::tau();
    SkewPair sp;
    sp.d0.push_back(comp({{4, 4}}, g + q(2)));
    sp.d0.push_back(comp({{7, 7}}, g));
    sp.d1.push_back(comp({{0, 1}, {1, 1}}, g));
    sp.canonical_form();
    CHECK(sp.d0[0].base_content == g);
    CHECK(sp.d0[1].base_content == g + q(2));
    CHECK(sp.validate());
    CHECK(sp.is_vertical_strip(0));
    CHECK(sp.is_vertical_strip(1));
    CHECK(sp.size() == 4);

    SkewPair bad;
    bad.d0.push_back(comp({{0, 0}}, g));
    bad.d0.push_back(comp({{0, 0}}, g + q(1)));
    CHECK(!bad.validate());

    SkewPair rowpair;
    rowpair.d1.push_back(comp({{0, 0}, {0, 1}}, g));
    CHECK(!rowpair.is_vertical_strip(1));
    CHECK(rowpair.is_vertical_strip(0));
}

TEST_CASE("filled tableau standardness and canonical form") {
    ParamScalar g = q(0);
    SkewTableau st;
    st.d0.push_back({comp({{0, 0}, {0, 1}}, g), {1, 3}});
    st.d1.push_back({comp({{0, 0}}, q(5)), {2}});
    CHECK(st.is_standard());
    CHECK(st.size() == 3);
    CHECK(st.shape().size() == 3);

    SkewTableau bad = st;
    bad.d0[0].entries = {3, 1};
    CHECK(!bad.is_standard());

    SkewTableau dup = st;
    dup.d1[0].entries = {3};
    CHECK(!dup.is_standard());

    SkewTableau moved;
    moved.d0.push_back({SkewComponent({{6, 8}, {6, 9}}, q(-2)), {1, 3}});
    moved.d1.push_back({SkewComponent({{9, 9}}, q(5)), {2}});
    moved.canonical_form();
    SkewTableau canon = st;
    canon.canonical_form();
    CHECK(moved == canon);
}
