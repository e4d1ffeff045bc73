#pragma once

#include <stratachi/polytope.hpp>
#include <stratachi/rng.hpp>

#include <vector>

namespace stratachi {

/// Hull of 3..6 lattice points from the box [-box, box]^dim. Small
/// coordinates keep exact volumes fast while still exercising degenerate and
/// full-dimensional shapes.
inline Polytope random_lattice_polytope(int dim, long long box, Rng& rng) {
    const int count = static_cast<int>(rng.int_in(3, 6));
    std::vector<RationalPoint> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Vec c;
        c.reserve(static_cast<std::size_t>(dim));
        for (int j = 0; j < dim; ++j) c.emplace_back(rng.int_in(-box, box));
        pts.emplace_back(std::move(c));
    }
    return convex_hull(pts);
}

/// Same box, rational coordinates with denominators up to max_den.
inline Polytope random_rational_polytope(int dim, long long box, long long max_den, Rng& rng) {
    const int count = static_cast<int>(rng.int_in(3, 6));
    std::vector<RationalPoint> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) {
        Vec c;
        c.reserve(static_cast<std::size_t>(dim));
        for (int j = 0; j < dim; ++j) {
            const long long den = rng.int_in(1, max_den);
            c.emplace_back(Rational(rng.int_in(-box * den, box * den)) / Rational(den));
        }
        pts.emplace_back(std::move(c));
    }
    return convex_hull(pts);
}

/// Integer Newton segment [a, b] inside [lo, hi]; single points allowed.
inline Polytope random_segment(long long lo, long long hi, Rng& rng) {
    long long a = rng.int_in(lo, hi);
    long long b = rng.int_in(lo, hi);
    if (a > b) std::swap(a, b);
    return convex_hull({RationalPoint({Rational(a)}), RationalPoint({Rational(b)})});
}

}  // namespace stratachi
