#include "conifold/surfaces.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace conifold;

TEST_CASE("euler_char: built-in surface sums to 12, empty sums to 0") {
    CHECK(euler_char(beauville_surface()) == 12);
    SurfaceDesc empty;
    CHECK(euler_char(empty) == 0);
}

TEST_CASE("built-in surface is structurally sound") {
    auto v = surface_violations(beauville_surface());
    for (const auto& s : v) INFO(s);
    CHECK(v.empty());
    CHECK(beauville_surface().mw_torsion_order == 6);
    CHECK(beauville_surface().picard_rank == 10);
}

TEST_CASE("surface_violations catches a fiber/width mismatch") {
    SurfaceDesc s = beauville_surface();
    std::swap(s.fibers[0].b, s.fibers[1].b);  // I_3 over inf, I_6 over 0
    CHECK_FALSE(surface_violations(s).empty());
}

TEST_CASE("generic_fiber_picard_rank: the two bookkeeping cases") {
    CHECK(generic_fiber_picard_rank(10, 12, 3) == 1);
    CHECK(generic_fiber_picard_rank(7, 0, 0) == 7);
    // Threefold reading: total rank n, n divisor classes, 2 relations leave
    // the rank-2 generic Picard group.
    for (int n : {33, 36, 40, 48})
        CHECK(generic_fiber_picard_rank(n, n, 2) == 2);
    CHECK_THROWS_AS(generic_fiber_picard_rank(1, 12, 3), std::invalid_argument);
    CHECK_THROWS_AS(generic_fiber_picard_rank(5, 2, 4), std::invalid_argument);
}

TEST_CASE("moebius_from_permutation: the classical maps") {
    CHECK(moebius_from_permutation(MarkedPermutation::identity()) == MoebiusQ(1, 0, 0, 1));
    // swap 0 and 1, fix infinity: z -> 1 - z.
    CHECK(moebius_from_permutation(MarkedPermutation::swap01()) == MoebiusQ(-1, 1, 0, 1));
    // 3-cycle inf -> 0 -> 1 -> inf: z -> 1 / (1 - z).
    CHECK(moebius_from_permutation(MarkedPermutation::cycle()) == MoebiusQ(0, 1, -1, 1));
    // swap inf and 0, fix 1: z -> 1/z.
    CHECK(moebius_from_permutation(MarkedPermutation::swap_inf0()) == MoebiusQ(0, 1, 1, 0));
    for (const auto& perm : MarkedPermutation::all()) {
        MoebiusQ f = moebius_from_permutation(perm);
        for (int i = 0; i < 3; ++i)
            CHECK(moebius_apply(f, marked_point(i)) == marked_point(perm.image[i]));
    }
}

TEST_CASE("moebius_apply: evaluation cases") {
    MoebiusQ one_minus(-1, 1, 0, 1);
    CHECK(moebius_apply(one_minus, RatPoint(-8, 1)) == RatPoint(9, 1));
    CHECK(moebius_apply(MoebiusQ(1, 0, 0, 1), RatPoint::infinity()) == RatPoint::infinity());
    MoebiusQ inv_z(0, 1, 1, 0);
    CHECK(moebius_apply(inv_z, RatPoint(-8, 1)) == RatPoint(-1, 8));
    CHECK(moebius_apply(inv_z, RatPoint(-8, 1)) != RatPoint(-8, 1));
}

TEST_CASE("every non-identity marked permutation moves -8") {
    for (const auto& perm : MarkedPermutation::non_identity()) {
        MoebiusQ f = moebius_from_permutation(perm);
        CHECK(moebius_apply(f, RatPoint(-8, 1)) != RatPoint(-8, 1));
    }
}

TEST_CASE("moebius normalization gives unique equality") {
    CHECK(MoebiusQ(2, 0, 0, 2) == MoebiusQ(1, 0, 0, 1));
    CHECK(MoebiusQ(-3, 3, 0, 3) == MoebiusQ(-1, 1, 0, 1));
    CHECK(MoebiusQ(-1, 0, 0, -1) == MoebiusQ(1, 0, 0, 1));
    CHECK_THROWS_AS(MoebiusQ(1, 1, 1, 1), std::invalid_argument);
}

TEST_CASE("moebius group action on random points") {
    testing::Rng rng(17);
    std::uniform_int_distribution<long long> comp(-50, 50);
    for (int i = 0; i < 100; ++i) {
        MoebiusQ f(comp(rng), comp(rng), comp(rng), comp(rng) + 101);  // det != 0 likely
        MoebiusQ g = moebius_from_permutation(MarkedPermutation::cycle());
        Int p = comp(rng), q = comp(rng);
        if (p == 0 && q == 0) p = 1;
        RatPoint x(p, q);
        CHECK(moebius_apply(g, moebius_apply(f, x)) == moebius_apply(g * f, x));
        CHECK(moebius_apply(f.inverse(), moebius_apply(f, x)) == x);
    }
}

TEST_CASE("rational point normalization and parsing") {
    CHECK(P1Q(2, 4) == P1Q(1, 2));
    CHECK(P1Q(-3, -6) == P1Q(1, 2));
    CHECK(P1Q(3, -6) == P1Q(-1, 2));
    CHECK(P1Q(5, 0) == P1Q::infinity());
    CHECK(P1Q(-7, 0) == P1Q::infinity());
    CHECK(P1Q::parse("inf") == P1Q::infinity());
    CHECK(P1Q::parse("-8") == P1Q(-8, 1));
    CHECK(P1Q::parse("1/3") == P1Q(1, 3));
    CHECK(P1Q(22, 7).str() == "22/7");
    CHECK(P1Q(-8, 1).str() == "-8");
    CHECK_THROWS_AS(P1Q(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(P1Q::parse("abc"), std::invalid_argument);
}
