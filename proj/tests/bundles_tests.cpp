#include <matchbox/bundles.hpp>

#include <doctest.h>

#include "test_support.hpp"

#include <random>
#include <vector>

using namespace matchbox;

namespace {

SurfaceGroupWord random_word(std::mt19937& rng, int genus) {
    std::uniform_int_distribution<int> len(0, 6);
    std::uniform_int_distribution<int> idx(1, genus);
    std::uniform_int_distribution<int> kind(0, 1);
    std::uniform_int_distribution<std::int64_t> exp(-4, 4);
    std::vector<SurfaceLetter> letters;
    const int k = len(rng);
    while (static_cast<int>(letters.size()) < k) {
        const std::int64_t e = exp(rng);
        if (e == 0) {
            continue;
        }
        letters.push_back(kind(rng) ? alpha(idx(rng), e) : beta(idx(rng), e));
    }
    return SurfaceGroupWord(genus, std::move(letters));
}

}  // namespace

TEST_SUITE("bundles") {

TEST_CASE("words validate genus, indices, and exponents") {
    CHECK_THROWS_AS(SurfaceGroupWord(0, {}), std::invalid_argument);
    CHECK_THROWS_AS(SurfaceGroupWord(2, {alpha(0)}), std::invalid_argument);
    CHECK_THROWS_AS(SurfaceGroupWord(2, {alpha(3)}), std::invalid_argument);
    CHECK_THROWS_AS(SurfaceGroupWord(2, {alpha(1, 0)}), std::invalid_argument);
    CHECK_THROWS_AS(SurfaceGroupWord(1, {alpha(1)}) * SurfaceGroupWord(2, {alpha(1)}),
                    std::invalid_argument);
    const SurfaceGroupWord empty(3, {});
    CHECK(empty.letters().empty());
    CHECK(winding_number(empty) == 0);
}

TEST_CASE("winding counts only the first alpha generator") {
    const SurfaceGroupWord w(2, {alpha(1, 3), beta(2), alpha(1, -1)});
    CHECK(winding_number(w) == 2);
    CHECK(winding_number(SurfaceGroupWord(2, {alpha(2, 5)})) == 0);
    CHECK(winding_number(SurfaceGroupWord(2, {beta(1, 5)})) == 0);
    CHECK(winding_number(SurfaceGroupWord(1, {alpha(1)})) == 1);
}

TEST_CASE("winding vanishes on the surface relator") {
    for (int g = 1; g <= 5; ++g) {
        const SurfaceGroupWord r = surface_relator(g);
        CHECK(r.genus() == g);
        CHECK(static_cast<int>(r.letters().size()) == 4 * g);
        CHECK(winding_number(r) == 0);
    }
}

TEST_CASE("winding is additive under concatenation") {
    std::mt19937 rng(41);
    std::uniform_int_distribution<int> genus(1, 5);
    for (int i = 0; i < 300; ++i) {
        const int g = genus(rng);
        const SurfaceGroupWord a = random_word(rng, g);
        const SurfaceGroupWord b = random_word(rng, g);
        CHECK(winding_number(a * b) == winding_number(a) + winding_number(b));
    }
}

TEST_CASE("euler characteristic of closed orientable surfaces") {
    CHECK(euler_characteristic(1) == 0);
    CHECK(euler_characteristic(2) == -2);
    CHECK(euler_characteristic(5) == -8);
    CHECK_THROWS_AS(euler_characteristic(0), std::invalid_argument);
    CHECK_THROWS_AS(euler_characteristic(-3), std::invalid_argument);
}

TEST_CASE("covers multiply the euler characteristic and fix the genus") {
    const CoveringDatum c = cover_of(2, 2);
    CHECK(c.euler_base == -2);
    CHECK(c.euler_cover == -4);
    CHECK(c.cover_genus == 3);

    CHECK(cover_of(2, 3).cover_genus == 4);
    CHECK(cover_of(3, 4).cover_genus == 9);
    // torus covers stay tori: the euler characteristic cannot leave zero
    for (std::int64_t d = 1; d <= 20; ++d) {
        CHECK(cover_of(1, d).cover_genus == 1);
        CHECK(cover_of(1, d).euler_cover == 0);
    }
    CHECK_THROWS_AS(cover_of(0, 2), std::invalid_argument);
    CHECK_THROWS_AS(cover_of(2, 0), std::invalid_argument);
}

TEST_CASE("covering data is consistent under composition of covers") {
    std::mt19937 rng(42);
    std::uniform_int_distribution<int> genus(1, 6);
    std::uniform_int_distribution<std::int64_t> degree(1, 9);
    for (int i = 0; i < 200; ++i) {
        const int g = genus(rng);
        const std::int64_t d1 = degree(rng);
        const std::int64_t d2 = degree(rng);
        const CoveringDatum once = cover_of(g, d1);
        const CoveringDatum twice = cover_of(static_cast<int>(once.cover_genus), d2);
        const CoveringDatum direct = cover_of(g, d1 * d2);
        CHECK(twice.cover_genus == direct.cover_genus);
        CHECK(twice.euler_cover == direct.euler_cover);
        CHECK(2 - 2 * once.cover_genus == once.euler_cover);
    }
}

TEST_CASE("holonomy steps the odometer by the winding number") {
    const TowerRef t = make_tower(BondingSequence({}, {2, 3}), 2);
    const TowerPoint start(t, 0);
    CHECK(holonomy(SurfaceGroupWord(1, {alpha(1, -1)}), start).residue() == 5);
    CHECK(holonomy(SurfaceGroupWord(1, {beta(1, 7)}), start) == start);
    CHECK(holonomy(SurfaceGroupWord(2, {alpha(1, 2), beta(2, 3), alpha(1)}), start).residue() ==
          3);
    CHECK(holonomy(surface_relator(4), TowerPoint(t, 5)) == TowerPoint(t, 5));

    std::mt19937 rng(43);
    std::uniform_int_distribution<int> genus(1, 4);
    for (int i = 0; i < 100; ++i) {
        const int g = genus(rng);
        const SurfaceGroupWord w = random_word(rng, g);
        const TowerPoint p(t, i % 6);
        TowerPoint stepped = p;
        const std::int64_t h = winding_number(w);
        for (std::int64_t k = 0; k < (h < 0 ? -h : h); ++k) {
            stepped = h > 0 ? add_one(stepped) : advance(stepped, -1);
        }
        CHECK(holonomy(w, p) == stepped);
    }
}

TEST_CASE("suspension orbits record the fiber point after each word") {
    const TowerRef t = make_tower(BondingSequence({}, {2, 3}), 2);
    const TowerPoint start(t, 0);
    const SurfaceGroupWord step(1, {alpha(1)});
    const SurfaceGroupWord back(1, {alpha(1, -1)});
    const SurfaceGroupWord idle(1, {beta(1, 2)});

    const std::vector<TowerPoint> walk = suspension_orbit({step, step, back, idle}, start);
    REQUIRE(walk.size() == 4);
    CHECK(walk[0].residue() == 1);
    CHECK(walk[1].residue() == 2);
    CHECK(walk[2].residue() == 1);
    CHECK(walk[3].residue() == 1);

    CHECK(suspension_orbit({}, start).empty());
}

TEST_CASE("adic surfaces pair a genus with a bonding sequence") {
    const AdicSurface s(2, BondingSequence({3}, {2}));
    CHECK(s.genus() == 2);
    CHECK(s.sequence().prefix() == std::vector<std::int64_t>{3});
    CHECK_THROWS_AS(AdicSurface(0, BondingSequence({}, {2})), std::invalid_argument);
    CHECK(s == AdicSurface(2, BondingSequence({3}, {2})));
    CHECK(s != AdicSurface(3, BondingSequence({3}, {2})));
}

}  // TEST_SUITE
