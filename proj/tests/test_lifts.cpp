#include <stratachi/lifts.hpp>
#include <stratachi/mixed_volume.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

#include <vector>

using namespace stratachi;

namespace {

RationalPoint pt(std::vector<long long> v) {
    Vec c;
    c.reserve(v.size());
    for (long long x : v) c.emplace_back(x);
    return RationalPoint(std::move(c));
}

Polytope seg(long long a, long long b) { return convex_hull({pt({a}), pt({b})}); }
Polytope point1(long long a) { return convex_hull({pt({a})}); }

}  // namespace

TEST_CASE("delta_star constructions") {
    REQUIRE(delta_star(point1(0), seg(0, 1), seg(0, 2)) == seg(0, 1));
    REQUIRE(delta_star(seg(0, 1), seg(0, 1), seg(0, 1)) == seg(0, 1));

    // Absorption: when delta1 already contains the half-sum.
    const Polytope big = seg(-3, 3);
    REQUIRE(delta_star(seg(0, 1), big, seg(0, 1)) == big);

    REQUIRE_THROWS_WITH(delta_star(seg(0, 1), seg(0, 1), convex_hull({pt({0, 0})})),
                        Catch::Matchers::ContainsSubstring("dimension mismatch"));
}

TEST_CASE("lift_shift embeds with constant extra coordinates") {
    REQUIRE(lift_shift(seg(0, 1), {2}) == convex_hull({pt({0, 2}), pt({1, 2})}));
    REQUIRE(lift_shift(point1(0), {0, 1}) == convex_hull({pt({0, 0, 1})}));
    const Polytope tri = convex_hull({pt({0, 0}), pt({1, 0}), pt({0, 1})});
    REQUIRE(lift_shift(tri, {}) == tri);
    REQUIRE_THROWS_AS(lift_shift(tri, {-1}), std::invalid_argument);
}

TEST_CASE("big_delta stacks the deltas along a new axis") {
    std::vector<Polytope> three{seg(0, 1), seg(0, 1), seg(0, 1)};
    const Polytope rect = big_delta(2, std::span<const Polytope>(three));
    REQUIRE(rect == convex_hull({pt({0, 0}), pt({1, 0}), pt({0, 2}), pt({1, 2})}));

    std::vector<Polytope> four{seg(0, 1), seg(0, 1), seg(0, 1), seg(0, 1)};
    const Polytope tall = big_delta(3, std::span<const Polytope>(four));
    REQUIRE(tall == convex_hull({pt({0, 0}), pt({1, 0}), pt({0, 3}), pt({1, 3})}));
    REQUIRE(tall.volume() == 3);

    std::vector<Polytope> points{point1(0), point1(0), point1(0)};
    const Polytope degenerate = big_delta(2, std::span<const Polytope>(points));
    REQUIRE(degenerate == convex_hull({pt({0, 0}), pt({0, 2})}));
    REQUIRE(degenerate.volume() == 0);

    REQUIRE_THROWS_WITH(big_delta(3, std::span<const Polytope>(three)),
                        Catch::Matchers::ContainsSubstring("arity mismatch"));
}

TEST_CASE("delta_123 lifts the tail coefficients") {
    REQUIRE(delta_123(seg(0, 1), seg(0, 1), seg(0, 1)) ==
            convex_hull({pt({0, 0}), pt({1, 0}), pt({0, 2}), pt({1, 2})}));
    REQUIRE(delta_123(seg(0, 1), seg(0, 1), seg(0, 1)).volume() == 2);

    const Polytope mixed = delta_123(point1(0), point1(0), seg(0, 1));
    REQUIRE(mixed == convex_hull({pt({0, 2}), pt({0, 1}), pt({0, 0}), pt({1, 0})}));
    REQUIRE(mixed.vertices() == std::vector<RationalPoint>{pt({0, 0}), pt({0, 2}), pt({1, 0})});

    const Polytope tri = delta_123(point1(1), point1(0), point1(0));
    REQUIRE(tri == convex_hull({pt({1, 2}), pt({0, 1}), pt({0, 0})}));
    REQUIRE(tri.affine_dim() == 2);
}

TEST_CASE("ddd joins the sigma apex with the shifted delta") {
    const Polytope s3 = ddd(3, point1(0));
    REQUIRE(s3 == convex_hull({pt({0, 0, 1}), pt({0, 0, 0})}));
    REQUIRE(s3.affine_dim() == 1);

    REQUIRE(ddd(0, seg(0, 1)) == convex_hull({pt({0, 0, 1}), pt({0, 3, 0}), pt({1, 3, 0})}));

    const Polytope square = convex_hull({pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1})});
    const Polytope lifted = ddd(1, square);
    REQUIRE(lifted.ambient_dim() == 4);
    REQUIRE(lifted.vertices().size() == 5);
    REQUIRE(lifted.affine_dim() == 3);

    REQUIRE_THROWS_AS(ddd(4, square), std::invalid_argument);
    REQUIRE_THROWS_AS(ddd(-1, square), std::invalid_argument);
}

TEST_CASE("lifted constructions are translation consistent") {
    Rng rng(140520);
    MixedVolumeCache cache;
    for (int rep = 0; rep < 6; ++rep) {
        const int n = 2;
        std::vector<Polytope> deltas;
        for (int i = 0; i < 3; ++i)
            deltas.push_back(testutil::random_lattice_polytope(n, 3, 3, 5, rng));
        const RationalPoint shift = pt({rng.int_in(-4, 4), rng.int_in(-4, 4)});
        std::vector<Polytope> moved;
        for (const auto& d : deltas) moved.push_back(d.translated(shift));

        const Polytope lifted = big_delta(2, std::span<const Polytope>(deltas));
        const Polytope lifted_moved = big_delta(2, std::span<const Polytope>(moved));
        RationalPoint lift_shifted = pt({shift[0].convert_to<long long>(),
                                         shift[1].convert_to<long long>(), 0});
        REQUIRE(lifted_moved == lifted.translated(lift_shifted));
        REQUIRE(lifted_moved.volume() == lifted.volume());

        REQUIRE(ddd(1, moved[1]).volume() == ddd(1, deltas[1]).volume());
        REQUIRE(qnk(2, 2, {moved[0], moved[1]}, cache) == qnk(2, 2, {deltas[0], deltas[1]}, cache));
    }
}

TEST_CASE("prism volume identity") {
    Rng rng(60901);
    MixedVolumeCache cache;
    for (int n = 1; n <= 3; ++n) {
        for (int rep = 0; rep < 8; ++rep) {
            const Polytope a = testutil::random_lattice_polytope(n, 3, n + 1, n + 4, rng);
            const Polytope b = testutil::random_lattice_polytope(n, 3, n + 1, n + 4, rng);
            const Polytope bottom = lift_shift(a, {0});
            const Polytope top = lift_shift(b, {1});
            std::vector<RationalPoint> pts = bottom.vertices();
            pts.insert(pts.end(), top.vertices().begin(), top.vertices().end());
            const Polytope prism = convex_hull(pts);

            REQUIRE(prism.project_out(n) == convex_hull([&] {
                        std::vector<RationalPoint> u = a.vertices();
                        u.insert(u.end(), b.vertices().begin(), b.vertices().end());
                        return u;
                    }()));

            const Rational rhs = (a.volume() + qnk(n, 2, {a, b}, cache) + b.volume()) / (n + 1);
            REQUIRE(prism.volume() == rhs);
        }
    }
}

TEST_CASE("lifted volume identity for the degree-2 stack") {
    Rng rng(81215);
    MixedVolumeCache cache;
    for (int n = 1; n <= 3; ++n) {
        for (int rep = 0; rep < 8; ++rep) {
            std::vector<Polytope> deltas;
            for (int i = 0; i < 3; ++i)
                deltas.push_back(testutil::random_lattice_polytope(n, 2, n + 1, n + 4, rng));
            const Polytope star = delta_star(deltas[0], deltas[1], deltas[2]);
            const Polytope lifted = big_delta(2, std::span<const Polytope>(deltas));
            const Rational rhs = (deltas[0].volume() + 2 * star.volume() + deltas[2].volume() +
                                  qnk(n, 2, {deltas[0], star}, cache) +
                                  qnk(n, 2, {star, deltas[2]}, cache)) /
                                 (n + 1);
            REQUIRE(lifted.volume() == rhs);
        }
    }
}
