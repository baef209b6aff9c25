#include "conifold/monodromy.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <fstream>
#include <json.hpp>

using namespace conifold;

TEST_CASE("x16 tuple validates with widths (1, 2, 3, 6)") {
    TupleReport rep = validate_tuple(x16_tuple());
    CHECK(rep.valid());
    CHECK(rep.product_is_identity);
    CHECK(rep.widths == std::vector<Int>{1, 2, 3, 6});
    for (const auto& e : rep.entries) {
        CHECK(e.cls.kind == MatrixKind::Parabolic);
        CHECK(e.member);
    }
}

TEST_CASE("validate_tuple rejects a lone identity entry") {
    MonodromyTuple t{std::nullopt, {UniMat::identity()}, {}};
    TupleReport rep = validate_tuple(t);
    CHECK_FALSE(rep.valid());
    REQUIRE(!rep.violations.empty());
    CHECK(rep.violations.front().find("not parabolic") != std::string::npos);
    CHECK(rep.product_is_identity);  // the product itself is fine
}

TEST_CASE("validate_tuple rejects a reordered tuple: product != identity") {
    MonodromyTuple t = x16_tuple();
    std::swap(t.entries[0], t.entries[1]);  // (M6, M1, M2, M3)
    TupleReport rep = validate_tuple(t);
    CHECK_FALSE(rep.product_is_identity);
    CHECK_FALSE(rep.valid());
}

TEST_CASE("validate_tuple flags negative-width entries") {
    MonodromyTuple t{Level(6), {UniMat::translation(1), UniMat::translation(-1)}, {}};
    TupleReport rep = validate_tuple(t);
    CHECK(rep.product_is_identity);
    CHECK_FALSE(rep.valid());
    bool flagged = false;
    for (const auto& v : rep.violations)
        flagged |= v.find("width class not positive") != std::string::npos;
    CHECK(flagged);
}

TEST_CASE("validate_tuple flags non-members when a level is declared") {
    // Conjugating by a non-member keeps the algebra but breaks membership.
    MonodromyTuple t = conjugate_tuple(x16_tuple(), UniMat(1, 0, -1, 1));
    TupleReport rep = validate_tuple(t);
    CHECK(rep.product_is_identity);
    CHECK_FALSE(rep.valid());
    bool flagged = false;
    for (const auto& v : rep.violations)
        flagged |= v.find("not a member") != std::string::npos;
    CHECK(flagged);
}

TEST_CASE("conjugate_tuple preserves validity and widths") {
    CHECK(conjugate_tuple(x16_tuple(), UniMat::identity()).entries == x16_tuple().entries);
    MonodromyTuple t = conjugate_tuple(x16_tuple(), UniMat::translation(1));
    TupleReport rep = validate_tuple(t);
    CHECK(rep.product_is_identity);
    CHECK(rep.widths == std::vector<Int>{1, 2, 3, 6});
    testing::Rng rng(5);
    for (int i = 0; i < 30; ++i) {
        MonodromyTuple c = conjugate_tuple(x16_tuple(), testing::random_sl2(rng));
        // Membership can break under conjugation by a non-member, but the
        // algebra cannot.
        UniMat prod;
        for (const auto& m : c.entries) prod = prod * m;
        CHECK(prod == UniMat::identity());
    }
}

TEST_CASE("hurwitz_move: product and widths preserved, inverse undoes") {
    MonodromyTuple t = x16_tuple();
    MonodromyTuple moved = hurwitz_move(t, 0);
    TupleReport rep = validate_tuple(moved);
    CHECK(rep.product_is_identity);
    CHECK(rep.widths == std::vector<Int>{1, 2, 3, 6});
    CHECK(hurwitz_move_inverse(moved, 0).entries == t.entries);
    CHECK(hurwitz_move(hurwitz_move_inverse(t, 2), 2).entries == t.entries);
    CHECK_THROWS_AS(hurwitz_move(t, 3), std::out_of_range);
    CHECK_THROWS_AS(hurwitz_move(t, 17), std::out_of_range);
}

TEST_CASE("parabolic_family: shape, width, and bound") {
    for (long long w : {1, 2, 6, 9}) {
        auto fam = parabolic_family(w, 40);
        CHECK(!fam.empty());
        for (const auto& m : fam) {
            CHECK(m.trace() == 2);
            CHECK(parabolic_width_class(m) == w);
            CHECK(m.a <= 40); CHECK(m.a >= -40);
            CHECK(m.b <= 40); CHECK(m.b >= -40);
            CHECK(m.c <= 40); CHECK(m.c >= -40);
            CHECK(m.d <= 40); CHECK(m.d >= -40);
        }
        // No duplicates.
        std::set<UniMat> dedup(fam.begin(), fam.end());
        CHECK(dedup.size() == fam.size());
    }
    CHECK(parabolic_family(1, 40).size() > parabolic_family(9, 40).size());
}

TEST_CASE("beauville_search: known multisets at the minimum bound") {
    auto res = beauville_search(36, 2);
    REQUIRE(res.multisets.size() == 6);
    CHECK(res.multisets == std::vector<WidthMultiset>{{1, 1, 1, 9},
                                                      {1, 1, 2, 8},
                                                      {1, 1, 5, 5},
                                                      {1, 2, 3, 6},
                                                      {2, 2, 4, 4},
                                                      {3, 3, 3, 3}});
    for (const auto& m : res.multisets) {
        CHECK(m[0] + m[1] + m[2] + m[3] == 12);
        for (int w : m) CHECK(w >= 1);
    }
}

TEST_CASE("beauville_search: monotone in the bound and worker-independent") {
    auto r36 = beauville_search(36, 1);
    auto r60 = beauville_search(60, 3);
    for (const auto& m : r36.multisets)
        CHECK(std::find(r60.multisets.begin(), r60.multisets.end(), m) != r60.multisets.end());
    auto r36b = beauville_search(36, 4);
    CHECK(r36.multisets == r36b.multisets);
}

TEST_CASE("beauville_search rejects bounds below 36") {
    CHECK_THROWS_AS(beauville_search(35, 1), std::invalid_argument);
}

TEST_CASE("beauville fixture file matches a fresh search") {
    std::ifstream in(std::string(CONIFOLD_DATA_DIR) + "/beauville_multisets.json");
    REQUIRE(in.good());
    auto fixture = nlohmann::json::parse(in);
    auto res = beauville_search(fixture.at("entry_bound").get<long long>(), 4);
    std::vector<WidthMultiset> expected;
    for (const auto& m : fixture.at("multisets"))
        expected.push_back({m.at(0).get<int>(), m.at(1).get<int>(), m.at(2).get<int>(),
                            m.at(3).get<int>()});
    CHECK(res.multisets == expected);
}
