#include <stratachi/polytope.hpp>

#include <catch2/catch_amalgamated.hpp>

#include "helpers.hpp"

#include <algorithm>
#include <vector>

using namespace stratachi;
using testutil::brute_force_vertices;
using testutil::monotone_chain;
using testutil::shoelace_area;

namespace {

RationalPoint pt(std::vector<long long> v) {
    Vec c;
    c.reserve(v.size());
    for (long long x : v) c.emplace_back(x);
    return RationalPoint(std::move(c));
}

Polytope box2(long long x0, long long x1, long long y0, long long y1) {
    return convex_hull({pt({x0, y0}), pt({x1, y0}), pt({x0, y1}), pt({x1, y1})});
}

Polytope segment1(long long a, long long b) { return convex_hull({pt({a}), pt({b})}); }

}  // namespace

TEST_CASE("convex hull drops interior and collinear points") {
    const Polytope square = convex_hull(
        {pt({0, 0}), pt({1, 0}), pt({0, 1}), pt({1, 1}),
         RationalPoint({Rational(1, 2), Rational(1, 2)})});
    REQUIRE(square.vertices().size() == 4);
    REQUIRE(square.volume() == 1);
    REQUIRE(square.affine_dim() == 2);

    const Polytope single = convex_hull({pt({0, 0})});
    REQUIRE(single.vertices().size() == 1);
    REQUIRE(single.affine_dim() == 0);
    REQUIRE(single.volume() == 0);

    const Polytope seg = convex_hull({pt({0, 0}), pt({2, 0}), pt({1, 0})});
    REQUIRE(seg.vertices() == std::vector<RationalPoint>{pt({0, 0}), pt({2, 0})});
    REQUIRE(seg.affine_dim() == 1);
    REQUIRE(seg.volume() == 0);
}

TEST_CASE("convex hull input validation") {
    REQUIRE_THROWS_WITH(convex_hull({}), Catch::Matchers::ContainsSubstring("empty point set"));
    REQUIRE_THROWS_WITH(convex_hull({pt({0, 0}), pt({1})}),
                        Catch::Matchers::ContainsSubstring("dimension mismatch"));
}

TEST_CASE("minkowski sum basics") {
    const Polytope unit = box2(0, 1, 0, 1);
    REQUIRE(minkowski_sum(unit, unit) == box2(0, 2, 0, 2));

    const Polytope shifted = minkowski_sum(unit, convex_hull({pt({3, -1})}));
    REQUIRE(shifted == box2(3, 4, -1, 0));

    REQUIRE_THROWS_WITH(minkowski_sum(unit, segment1(0, 1)),
                        Catch::Matchers::ContainsSubstring("dimension mismatch"));
}

TEST_CASE("minkowski sum of triangle and square is the expected pentagon") {
    const Polytope tri = convex_hull({pt({0, 0}), pt({1, 0}), pt({0, 1})});
    const Polytope sq = box2(0, 1, 0, 1);

    // Independent oracle: all 12 vertex sums reduced by a monotone chain.
    std::vector<RationalPoint> sums;
    for (const auto& a : tri.vertices())
        for (const auto& b : sq.vertices()) sums.push_back(a + b);
    const auto oracle = monotone_chain(sums);

    const Polytope sum = minkowski_sum(tri, sq);
    REQUIRE(sum.vertices().size() == oracle.size());
    for (const auto& v : oracle)
        REQUIRE(std::find(sum.vertices().begin(), sum.vertices().end(), v) != sum.vertices().end());
    REQUIRE(sum == convex_hull({pt({0, 0}), pt({2, 0}), pt({2, 1}), pt({1, 2}), pt({0, 2})}));
    REQUIRE(sum.volume() == shoelace_area(oracle));
}

TEST_CASE("scaling") {
    REQUIRE(scale(segment1(0, 2), Rational(1, 2)) == segment1(0, 1));

    const Polytope sq2 = scale(box2(0, 1, 0, 1), Rational(2));
    REQUIRE(sq2 == box2(0, 2, 0, 2));
    REQUIRE(sq2.volume() == 4);

    const Polytope tri = convex_hull({pt({0, 0}), pt({1, 0}), pt({0, 1})});
    REQUIRE(scale(tri, Rational(1)) == tri);
    REQUIRE(scale(tri, Rational(0)) == convex_hull({pt({0, 0})}));
    REQUIRE_THROWS_AS(scale(tri, Rational(-1)), std::invalid_argument);
}

TEST_CASE("volumes of reference bodies") {
    REQUIRE(box2(0, 1, 0, 1).volume() == 1);

    const Polytope simplex3 =
        convex_hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 1})});
    REQUIRE(simplex3.volume() == Rational(1, 6));

    const Polytope seg_in_plane = convex_hull({pt({0, 0}), pt({1, 0})});
    REQUIRE(seg_in_plane.volume() == 0);
}

TEST_CASE("membership tests") {
    const Polytope tri = convex_hull({pt({0, 0}), pt({2, 0}), pt({0, 2})});
    REQUIRE(tri.contains(RationalPoint({Rational(1, 2), Rational(1, 2)})));
    REQUIRE(tri.contains(pt({1, 1})));  // on the hypotenuse
    REQUIRE(tri.contains(pt({0, 0})));
    REQUIRE_FALSE(tri.contains(pt({2, 1})));

    const Polytope seg3 = convex_hull({pt({0, 0, 0}), pt({2, 2, 2})});
    REQUIRE(seg3.contains(pt({1, 1, 1})));
    REQUIRE_FALSE(seg3.contains(pt({1, 1, 0})));
    REQUIRE_FALSE(seg3.contains(pt({3, 3, 3})));
}

TEST_CASE("translation and projection") {
    const Polytope tri = convex_hull({pt({0, 0}), pt({1, 0}), pt({0, 1})});
    const Polytope moved = tri.translated(pt({5, 7}));
    REQUIRE(moved == convex_hull({pt({5, 7}), pt({6, 7}), pt({5, 8})}));
    REQUIRE(moved.volume() == tri.volume());

    const Polytope prism =
        convex_hull({pt({0, 0, 0}), pt({1, 0, 0}), pt({0, 1, 0}), pt({0, 0, 5}), pt({1, 0, 5}),
                     pt({0, 1, 5})});
    REQUIRE(prism.project_out(2) == tri);
}

TEST_CASE("hull idempotence on random rational point sets") {
    Rng rng(20240811);
    for (int dim = 1; dim <= 5; ++dim) {
        for (int rep = 0; rep < 20; ++rep) {
            const Polytope p = testutil::random_rational_polytope(dim, 3, 3, 2, dim + 4, rng);
            const Polytope again = convex_hull(p.vertices());
            REQUIRE(again == p);
            REQUIRE(again.volume() == p.volume());
        }
    }
}

TEST_CASE("volume monotone under inclusion certified by linear feasibility") {
    Rng rng(77001);
    for (int dim = 2; dim <= 3; ++dim) {
        for (int rep = 0; rep < 25; ++rep) {
            const Polytope b = testutil::random_lattice_polytope(dim, 4, dim + 2, dim + 5, rng);
            // Build a subset polytope from convex combinations of b's vertices.
            std::vector<RationalPoint> inside;
            for (const auto& v : b.vertices()) {
                if (rng.below(2) == 0) inside.push_back(v);
            }
            const auto& vs = b.vertices();
            for (int extra = 0; extra < 2; ++extra) {
                const auto& u = vs[rng.below(vs.size())];
                const auto& w = vs[rng.below(vs.size())];
                RationalPoint mid = (u + w).scaled(Rational(1, 2));
                inside.push_back(mid);
            }
            if (inside.empty()) inside.push_back(vs[0]);
            const Polytope a = convex_hull(inside);
            for (const auto& v : a.vertices()) REQUIRE(in_convex_hull(b.vertices(), v));
            REQUIRE(a.volume() <= b.volume());
        }
    }
}

TEST_CASE("vertex sets agree with brute-force extreme points") {
    Rng rng(550123);
    for (int dim = 2; dim <= 4; ++dim) {
        for (int rep = 0; rep < 30; ++rep) {
            // Degeneracy-rich inputs: small coordinate box, many points.
            std::vector<RationalPoint> pts;
            const int count = static_cast<int>(rng.int_in(dim + 1, dim + 7));
            for (int i = 0; i < count; ++i) pts.push_back(testutil::random_lattice_point(dim, 2, rng));
            const auto expected = brute_force_vertices(pts);
            const Polytope p = convex_hull(pts);
            REQUIRE(p.vertices() == expected);
        }
    }
}

TEST_CASE("minkowski sum vertex sets agree with brute-force extreme points") {
    Rng rng(990233);
    for (int dim = 2; dim <= 4; ++dim) {
        for (int rep = 0; rep < 12; ++rep) {
            const Polytope a = testutil::random_lattice_polytope(dim, 2, dim + 1, dim + 4, rng);
            const Polytope b = testutil::random_lattice_polytope(dim, 2, dim + 1, dim + 4, rng);
            std::vector<RationalPoint> sums;
            for (const auto& x : a.vertices())
                for (const auto& y : b.vertices()) sums.push_back(x + y);
            const Polytope sum = minkowski_sum(a, b);
            REQUIRE(sum.vertices() == brute_force_vertices(sums));
        }
    }
}

TEST_CASE("minkowski sum is associative and commutative up to equality") {
    Rng rng(431);
    for (int rep = 0; rep < 10; ++rep) {
        const Polytope a = testutil::random_lattice_polytope(3, 3, 3, 6, rng);
        const Polytope b = testutil::random_lattice_polytope(3, 3, 3, 6, rng);
        const Polytope c = testutil::random_lattice_polytope(3, 3, 3, 6, rng);
        REQUIRE(minkowski_sum(a, b) == minkowski_sum(b, a));
        REQUIRE(minkowski_sum(minkowski_sum(a, b), c) == minkowski_sum(a, minkowski_sum(b, c)));
    }
}
