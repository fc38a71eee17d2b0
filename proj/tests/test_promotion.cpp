#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>
#include <set>

#include "sieve/promotion.hpp"
#include "sieve/random.hpp"

using namespace sieve;

TEST_CASE("promote reproduces the worked example") {
    const StandardTableau t({{1, 2, 4, 8}, {3, 6, 7}, {5}});
    CHECK(promote(t) == StandardTableau({{1, 3, 6, 7}, {2, 5, 8}, {4}}));
    CHECK(promote(StandardTableau({{1}})) == StandardTableau({{1}}));
    CHECK(promote(ShiftedStandardTableau({{1, 2, 4, 5, 8}, {3, 6, 9}, {7}})) ==
          ShiftedStandardTableau({{1, 2, 3, 4, 7}, {5, 6, 8}, {9}}));
}

TEST_CASE("the size-3 square and shifted orbits") {
    const StandardTableau a({{1, 2, 5}, {3, 6, 8}, {4, 7, 9}});
    const StandardTableau b({{1, 4, 7}, {2, 5, 8}, {3, 6, 9}});
    const StandardTableau c({{1, 3, 6}, {2, 4, 7}, {5, 8, 9}});
    CHECK(promote(a) == b);
    CHECK(promote(b) == c);
    CHECK(promote(c) == a);

    const ShiftedStandardTableau s({{1, 2, 4, 5, 8}, {3, 6, 9}, {7}});
    const ShiftedStandardTableau u({{1, 2, 3, 4, 7}, {5, 6, 8}, {9}});
    const ShiftedStandardTableau v({{1, 2, 3, 6, 9}, {4, 5, 7}, {8}});
    CHECK(promote(s) == u);
    CHECK(promote(u) == v);
    CHECK(promote(v) == s);
}

TEST_CASE("promote_inverse") {
    CHECK(promote_inverse(StandardTableau({{1, 3, 6, 7}, {2, 5, 8}, {4}})) ==
          StandardTableau({{1, 2, 4, 8}, {3, 6, 7}, {5}}));
    CHECK(promote_inverse(StandardTableau({{1}})) == StandardTableau({{1}}));

    std::mt19937_64 rng(7);
    const auto all = enumerate_syt(square_shape(3));
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int i = 0; i < 100; ++i) {
        const auto& t = all[pick(rng)];
        CHECK(promote_inverse(promote(t)) == t);
        CHECK(promote(promote_inverse(t)) == t);
    }
    for (const auto& s : enumerate_shifted_syt(doubled_staircase(3))) {
        CHECK(promote_inverse(promote(s)) == s);
        CHECK(promote(promote_inverse(s)) == s);
    }
}

TEST_CASE("delta leaves the vacated corner empty") {
    const auto d = delta(StandardTableau({{1, 2, 4, 8}, {3, 6, 7}, {5}}));
    CHECK(d.remainder == StandardTableau({{1, 3, 6, 7}, {2, 5}, {4}}));
    CHECK(d.hole == Cell{2, 3});

    const auto one = delta(StandardTableau({{1}}));
    CHECK(one.remainder.size() == 0);
    CHECK(one.hole == Cell{1, 1});

    for (const auto& t : enumerate_syt(square_shape(3))) {
        const auto dt = delta(t);
        auto rows = dt.remainder.rows();
        rows.resize(std::max<std::size_t>(rows.size(), static_cast<std::size_t>(dt.hole.row)));
        REQUIRE(static_cast<int>(rows[dt.hole.row - 1].size()) == dt.hole.col - 1);
        rows[dt.hole.row - 1].push_back(t.size());
        REQUIRE(StandardTableau(rows) == promote(t));
    }

    const auto ds = delta(ShiftedStandardTableau({{1, 2, 4, 5, 8}, {3, 6, 9}, {7}}));
    CHECK(ds.remainder == ShiftedStandardTableau({{1, 2, 3, 4, 7}, {5, 6, 8}}));
    CHECK(ds.hole == Cell{3, 3});
}

TEST_CASE("embed_square") {
    const auto e = embed_square(StandardTableau({{1, 2, 5}, {3, 6, 8}, {4, 7, 9}}));
    CHECK(e.outer() == StrictPartition({5, 4, 3}));
    CHECK(e.inner() == std::vector<int>{2, 1, 0});
    for (int r = 1; r <= 3; ++r) CHECK(e.first_col(r) == 3);
    CHECK(e.rows() == Rows{{1, 2, 5}, {3, 6, 8}, {4, 7, 9}});

    const auto one = embed_square(StandardTableau({{1}}));
    CHECK(one.outer() == StrictPartition({1}));
    CHECK(one.inner() == std::vector<int>{0});

    const auto two = embed_square(StandardTableau({{1, 2}, {3, 4}}));
    CHECK(two.outer() == StrictPartition({3, 2}));
    CHECK(two.inner() == std::vector<int>{1, 0});
    CHECK(two.first_col(1) == 2);
    CHECK(two.first_col(2) == 2);

    CHECK_THROWS_AS(embed_square(StandardTableau({{1, 2}, {3}})), InvalidInput);
}

TEST_CASE("rectify") {
    CHECK(rectify(embed_square(StandardTableau({{1, 2, 5}, {3, 6, 8}, {4, 7, 9}}))) ==
          ShiftedStandardTableau({{1, 2, 4, 5, 8}, {3, 6, 9}, {7}}));
    const ShiftedStandardTableau straight({{1, 2, 4, 5, 8}, {3, 6, 9}, {7}});
    CHECK(rectify(SkewShiftedStandardTableau(straight.shape(), {}, straight.rows())) == straight);
}

TEST_CASE("rectification does not depend on the slide order") {
    std::mt19937_64 rng(11);
    const auto all = enumerate_syt(square_shape(3));
    std::uniform_int_distribution<std::size_t> pick(0, all.size() - 1);
    for (int i = 0; i < 100; ++i) {
        const auto e = embed_square(all[pick(rng)]);
        CHECK(rectify_random(e, rng) == rectify(e));
    }
}

TEST_CASE("rectify of the square embedding is a bijection onto the doubled staircase") {
    for (int n = 1; n <= 4; ++n) {
        std::set<ShiftedStandardTableau> image;
        const auto squares = enumerate_syt(square_shape(n));
        for (const auto& q : squares) {
            const auto s = rectify(embed_square(q));
            REQUIRE(s.shape() == doubled_staircase(n));
            image.insert(s);
        }
        CHECK(image.size() == squares.size());
    }
}

TEST_CASE("promotion orbits") {
    const auto squares = enumerate_syt(square_shape(3));
    const auto square_orbits = promotion_orbits<StandardTableau>(squares);
    CHECK(census(square_orbits) == OrbitCensus{{3, 2}, {9, 4}});
    for (const auto& o : square_orbits) {
        CHECK(promote(o.elements.back()) == o.elements.front());
        for (const auto& t : o.elements) CHECK(!(t < o.representative()));
    }

    const std::vector<StandardTableau> single{StandardTableau({{1}})};
    CHECK(census(promotion_orbits<StandardTableau>(single)) == OrbitCensus{{1, 1}});

    const auto staircases = enumerate_shifted_syt(StrictPartition({5, 3, 1}));
    CHECK(census(promotion_orbits<ShiftedStandardTableau>(staircases)) == OrbitCensus{{3, 2}, {9, 4}});

    const std::vector<StandardTableau> open{StandardTableau({{1, 2, 5}, {3, 6, 8}, {4, 7, 9}})};
    CHECK_THROWS_AS(promotion_orbits<StandardTableau>(open), InvalidInput);
}

TEST_CASE("promotion has order N on squares and staircases") {
    for (int n = 1; n <= 4; ++n) {
        for (const auto& t : enumerate_syt(square_shape(n))) REQUIRE(promote_power(t, n * n) == t);
    }
    for (int n = 1; n <= 4; ++n) {
        for (const auto& s : enumerate_shifted_syt(doubled_staircase(n))) REQUIRE(promote_power(s, n * n) == s);
    }
}

TEST_CASE("promotion preserves shape") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 50; ++i) {
        const auto t = random_syt(Partition({5, 3, 3, 1}), rng);
        CHECK(promote(t).shape() == t.shape());
        const auto s = random_shifted_syt(StrictPartition({6, 4, 1}), rng);
        CHECK(promote(s).shape() == s.shape());
    }
}
