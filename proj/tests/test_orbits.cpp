#include <doctest.h>

#include "wf/orbits.hpp"

using namespace wf;

TEST_CASE("closure order on classical labels") {
    RootSystem rs(parse_type_spec("C2"));
    auto zero = OrbitLabel::of(make_typed(Partition{1, 1, 1, 1}, Series::C, 2));
    auto sub = OrbitLabel::of(make_typed(Partition{2, 1, 1}, Series::C, 2));
    auto mid = OrbitLabel::of(make_typed(Partition{2, 2}, Series::C, 2));
    auto reg = OrbitLabel::of(make_typed(Partition{4}, Series::C, 2));
    CHECK(closure_leq(zero, sub, rs));
    CHECK(closure_leq(sub, mid, rs));
    CHECK(closure_leq(mid, reg, rs));
    CHECK_FALSE(closure_leq(reg, mid, rs));
    CHECK(closure_leq(mid, mid, rs));
}

TEST_CASE("max orbits") {
    RootSystem rs(parse_type_spec("C2"));
    auto zero = OrbitLabel::of(make_typed(Partition{1, 1, 1, 1}, Series::C, 2));
    auto reg = OrbitLabel::of(make_typed(Partition{4}, Series::C, 2));
    SUBCASE("single candidate") {
        auto m = max_orbits({zero}, rs);
        REQUIRE(m.size() == 1);
        CHECK(m[0] == zero);
    }
    SUBCASE("zero below regular") {
        auto m = max_orbits({zero, reg, zero}, rs);
        REQUIRE(m.size() == 1);
        CHECK(m[0] == reg);
    }
    SUBCASE("incomparable pair in D4 stays an antichain") {
        RootSystem d4(parse_type_spec("D4"));
        auto a = OrbitLabel::of(make_typed(Partition{5, 1, 1, 1}, Series::D, 4));
        auto b = OrbitLabel::of(make_typed(Partition{4, 4}, Series::D, 4));
        auto m = max_orbits({a, b}, d4);
        CHECK(m.size() == 2);
    }
    SUBCASE("empty input is an error") {
        CHECK_THROWS_AS(max_orbits({}, rs), std::invalid_argument);
    }
}

TEST_CASE("ad jordan from weighted Dynkin diagrams") {
    SUBCASE("zero orbit: everything is a 1-string") {
        RootSystem rs(parse_type_spec("G2"));
        Partition j = ad_jordan(rs, {0, 0});
        CHECK(j == Partition(std::vector<long long>(14, 1)));
        CHECK(orbit_dim_from_wdd(rs, {0, 0}) == 0);
    }
    SUBCASE("regular orbit of G2 has dimension 12") {
        RootSystem rs(parse_type_spec("G2"));
        CHECK(orbit_dim_from_wdd(rs, {2, 2}) == 12);
    }
    SUBCASE("classical cross-check: dims match the partition formula") {
        RootSystem rs(parse_type_spec("C3"));
        // orbit (2,2,2) of sp_6: dim = 21 - dim z; dual = (3,3), sum sq = 18,
        // odd count 0 -> z = 9 -> dim 12
        auto wdd = wdd_classical(make_typed(Partition{2, 2, 2}, Series::C, 3));
        CHECK(orbit_dim_from_wdd(rs, wdd.labels) == 12);
    }
}

TEST_CASE("saturate_wdd solves and normalizes") {
    // B2 with pseudo-Levi D2 = {alpha_1, -theta}: factor orbits regular x zero
    RootSystem rs(parse_type_spec("B2"));
    Root a1{1, 0};
    Root mtheta{-1, -2};  // theta = e1+e2 = alpha_1 + 2 alpha_2
    SUBCASE("zero labels give the zero orbit") {
        auto out = saturate_wdd(rs, {a1, mtheta}, {0, 0});
        CHECK(out == std::vector<int>{0, 0});
    }
    SUBCASE("regular x regular saturates to (3,1,1)") {
        // sl2-regular on both factors: labels 2,2 -> h with a1(h)=2, -theta(h)=2
        auto out = saturate_wdd(rs, {a1, mtheta}, {2, 2});
        auto expect = wdd_classical(make_typed(Partition{3, 1, 1}, Series::B, 2));
        CHECK(out == expect.labels);
    }
    SUBCASE("zero orbit of the pseudo-Levi saturates to zero") {
        RootSystem c2(parse_type_spec("C2"));
        Root mth{-2, -1};  // theta(C2) = 2 alpha_1 + alpha_2
        Root a2{0, 1};
        auto out = saturate_wdd(c2, {mth, a2}, {0, 0});
        CHECK(out == std::vector<int>{0, 0});
    }
}
