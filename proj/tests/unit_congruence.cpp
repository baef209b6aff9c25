#include "conifold/congruence.hpp"
#include "conifold/monodromy.hpp"
#include "test_support.hpp"

#include <doctest.h>

#include <map>

using namespace conifold;

TEST_CASE("is_member: level-6 cases") {
    CHECK(is_member(Level(6), x16_tuple().entries[2]));  // (-5, 2; -18, 7)
    CHECK(is_member(Level(6), x16_tuple().entries[1]));
    CHECK(is_member(Level(1), UniMat(0, -1, 1, 0)));
    CHECK_FALSE(is_member(Level(6), UniMat(0, -1, 1, 0)));
    CHECK_FALSE(is_member(Level(6), -UniMat::identity()));
    CHECK(is_member(Level(2), -UniMat::identity()));  // -1 == 1 (mod 2)
}

TEST_CASE("psl_index: small levels") {
    CHECK(psl_index(Level(6)) == 12);
    CHECK(psl_index(Level(1)) == 1);
    CHECK(psl_index(Level(5)) == 12);

    // Independent oracle: count +-classes of pairs (x, y) in (Z/N)^2 with
    // gcd(x, y, N) = 1 directly; the orbit of (1,0) is all of them.
    for (int n = 1; n <= 12; ++n) {
        std::set<std::pair<int, int>> classes;
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y) {
                if (std::gcd(std::gcd(x, y), n) != 1) continue;
                classes.insert(std::min(std::pair{x, y},
                                        std::pair{(n - x) % n, (n - y) % n}));
            }
        if (n == 1) classes.insert({0, 0});
        CHECK(psl_index(Level(n)) == static_cast<int>(classes.size()));
    }
}

TEST_CASE("level-6 transversal verifies; tampering is caught") {
    CosetTable table = gamma1_level6_transversal();
    auto rep = verify_transversal(table);
    CHECK(rep.ok);
    CHECK(rep.actual_count == 12);

    // Duplicating an entry must produce a reported collision.
    CosetTable broken = table;
    broken.representatives[3] = broken.representatives[7];
    broken.labels[3] = coset_label(broken.level, broken.representatives[3]);
    auto bad = verify_transversal(broken);
    CHECK_FALSE(bad.ok);
    CHECK(bad.collision_i == 3);
    CHECK(bad.collision_j == 7);
}

TEST_CASE("trivial transversal at level 1") {
    CosetTable table{Level(1), {UniMat::identity()}, {coset_label(Level(1), UniMat::identity())}};
    CHECK(verify_transversal(table).ok);
}

TEST_CASE("generated coset tables verify for all levels in range") {
    for (int n = 1; n <= 12; ++n) {
        CosetTable table = make_coset_table(Level(n));
        CHECK(verify_transversal(table).ok);
        CHECK(static_cast<int>(table.representatives.size()) == psl_index(Level(n)));
    }
}

TEST_CASE("cusp_classes: the level-6 classes and widths") {
    auto classes = cusp_classes(Level(6));
    REQUIRE(classes.size() == 4);
    std::map<std::string, long long> widths;
    for (const auto& c : classes) widths[c.cusp.str()] = c.width;
    CHECK(widths == std::map<std::string, long long>{
                        {"inf", 1}, {"0", 6}, {"1/3", 2}, {"1/2", 3}});
}

TEST_CASE("cusp_classes: level 1 has the single cusp of width 1") {
    auto classes = cusp_classes(Level(1));
    REQUIRE(classes.size() == 1);
    CHECK(classes[0].cusp == Cusp::infinity());
    CHECK(classes[0].width == 1);
}

TEST_CASE("cusp class counts match the classical table") {
    // 1, 2, 3, 4 are special; for N >= 5 the count is
    // (1/2) sum over d | N of phi(d) phi(N/d).
    std::map<int, int> expected{{1, 1}, {2, 2},  {3, 2},  {4, 3},
                                {5, 4}, {6, 4},  {7, 6},  {8, 6},
                                {9, 8}, {10, 8}, {11, 10}, {12, 10}};
    auto phi = [](int m) {
        int out = 0;
        for (int k = 1; k <= m; ++k)
            if (std::gcd(k, m) == 1) ++out;
        return out;
    };
    for (int n = 5; n <= 12; ++n) {
        int sum = 0;
        for (int d = 1; d <= n; ++d)
            if (n % d == 0) sum += phi(d) * phi(n / d);
        CHECK(expected[n] == sum / 2);
    }
    for (const auto& [n, count] : expected)
        CHECK(static_cast<int>(cusp_classes(Level(n)).size()) == count);
}

TEST_CASE("cusp equivalence: invariance under sampled members") {
    testing::Rng rng(23);
    for (int n : {2, 4, 6, 7, 12}) {
        Level level(n);
        auto classes = cusp_classes(level);
        for (const auto& cls : classes) {
            for (int i = 0; i < 25; ++i) {
                UniMat g = testing::random_member(rng, n, 8);
                Cusp image(g.a * cls.cusp.p + g.b * cls.cusp.q,
                           g.c * cls.cusp.p + g.d * cls.cusp.q);
                CHECK(cusp_equivalent(level, cls.cusp, image));
            }
        }
        // Distinct class representatives are inequivalent.
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = 0; j < i; ++j)
                CHECK_FALSE(cusp_equivalent(level, classes[i].cusp, classes[j].cusp));
    }
}

TEST_CASE("cusp_stabilizer_generator: level-6 generators are the tuple entries") {
    const auto& entries = x16_tuple().entries;
    CHECK(cusp_stabilizer_generator(Level(6), Cusp::infinity()) == entries[0]);
    CHECK(cusp_stabilizer_generator(Level(6), Cusp(0, 1)) == entries[1]);
    CHECK(cusp_stabilizer_generator(Level(6), Cusp(1, 3)) == entries[2]);
    CHECK(cusp_stabilizer_generator(Level(6), Cusp(1, 2)) == entries[3]);
}

TEST_CASE("cusp_stabilizer_generator: fixed point of the width-2 generator is 1/3") {
    UniMat g = cusp_stabilizer_generator(Level(6), Cusp(1, 3));
    CHECK(parabolic_width_class(g) == 2);
    CHECK(is_member(Level(6), g));
    // Fixed point of ((a, b), (c, d)) with trace 2 and c != 0 is (a - d) / 2c.
    CHECK(P1Q(g.a - g.d, 2 * g.c) == Cusp(1, 3));
}

TEST_CASE("irregular cusp at level 4: width 1 but unipotent exponent 2") {
    Level level(4);
    Cusp half(1, 2);
    CHECK(cusp_width(level, half) == 1);
    UniMat g = cusp_stabilizer_generator(level, half);
    CHECK(is_member(level, g));
    CHECK(parabolic_width_class(g) == 2);
}

TEST_CASE("coset labels ignore sign and right multiplication") {
    testing::Rng rng(31);
    for (int i = 0; i < 50; ++i) {
        UniMat g = testing::random_sl2(rng);
        UniMat gamma = testing::random_member(rng, 6, 8);
        CHECK(coset_label(Level(6), g) == coset_label(Level(6), g * gamma));
        CHECK(coset_label(Level(6), g) == coset_label(Level(6), -g));
    }
}
