// Test-only oracles, deliberately independent of the hull implementation:
// a 2-d monotone chain, the shoelace area, brute-force extreme points via
// linear feasibility, and mixed-volume extraction by exact interpolation.
#pragma once

#include <stratachi/feasibility.hpp>
#include <stratachi/mixed_volume.hpp>
#include <stratachi/polytope.hpp>
#include <stratachi/rng.hpp>

#include <algorithm>
#include <vector>

namespace testutil {

using stratachi::Mat;
using stratachi::MixedVolumeCache;
using stratachi::Polytope;
using stratachi::Rational;
using stratachi::RationalPoint;
using stratachi::Rng;
using stratachi::Vec;

inline Rational cross2(const RationalPoint& o, const RationalPoint& a, const RationalPoint& b) {
    return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain; returns hull vertices in counter-clockwise order.
inline std::vector<RationalPoint> monotone_chain(std::vector<RationalPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() <= 2) return pts;
    std::vector<RationalPoint> hull(2 * pts.size());
    std::size_t k = 0;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        while (k >= 2 && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = pts.size() - 1; i-- > 0;) {
        while (k >= lower && cross2(hull[k - 2], hull[k - 1], pts[i]) <= 0) --k;
        hull[k++] = pts[i];
    }
    hull.resize(k - 1);
    return hull;
}

inline Rational shoelace_area(const std::vector<RationalPoint>& ccw) {
    Rational twice = 0;
    for (std::size_t i = 0; i < ccw.size(); ++i) {
        const auto& a = ccw[i];
        const auto& b = ccw[(i + 1) % ccw.size()];
        twice += a[0] * b[1] - b[0] * a[1];
    }
    return (twice < 0 ? -twice : twice) / 2;
}

// Ground-truth vertex set: a point is extreme iff it is not a convex
// combination of the others.
inline std::vector<RationalPoint> brute_force_vertices(std::vector<RationalPoint> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    std::vector<RationalPoint> out;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        std::vector<RationalPoint> others;
        others.reserve(pts.size() - 1);
        for (std::size_t j = 0; j < pts.size(); ++j)
            if (j != i) others.push_back(pts[j]);
        if (!stratachi::in_convex_hull(others, pts[i])) out.push_back(pts[i]);
    }
    return out;
}

inline RationalPoint random_lattice_point(int dim, long long box, Rng& rng) {
    Vec c;
    c.reserve(static_cast<std::size_t>(dim));
    for (int j = 0; j < dim; ++j) c.emplace_back(rng.int_in(-box, box));
    return RationalPoint(std::move(c));
}

inline Polytope random_lattice_polytope(int dim, long long box, int min_pts, int max_pts, Rng& rng) {
    const int count = static_cast<int>(rng.int_in(min_pts, max_pts));
    std::vector<RationalPoint> pts;
    pts.reserve(static_cast<std::size_t>(count));
    for (int i = 0; i < count; ++i) pts.push_back(random_lattice_point(dim, box, rng));
    return stratachi::convex_hull(pts);
}

inline Polytope random_rational_polytope(int dim, long long box, long long max_den, int min_pts,
                                         int max_pts, Rng& rng) {
    const int count = static_cast<int>(rng.int_in(min_pts, max_pts));
    std::vector<RationalPoint> pts;
    for (int i = 0; i < count; ++i) {
        Vec c;
        for (int j = 0; j < dim; ++j) {
            const long long den = rng.int_in(1, max_den);
            c.emplace_back(Rational(rng.int_in(-box * den, box * den)) / Rational(den));
        }
        pts.emplace_back(std::move(c));
    }
    return stratachi::convex_hull(pts);
}

// Coefficient of lambda_1*...*lambda_d in Vol(lambda_1 S_1 + ... +
// lambda_d S_d), extracted by exact interpolation on the grid {0..d}^d. An
// independent route to d! * MV(S_1,...,S_d) that shares only the volume
// primitive with the implementation.
inline Rational interpolated_mixed_coefficient(const std::vector<Polytope>& bodies) {
    const int d = bodies[0].ambient_dim();
    const int nodes = d + 1;
    std::vector<int> radix(static_cast<std::size_t>(d), 0);
    const auto tensor_index = [&](const std::vector<int>& idx) {
        std::size_t flat = 0;
        for (int j = 0; j < d; ++j)
            flat = flat * static_cast<std::size_t>(nodes) + static_cast<std::size_t>(idx[static_cast<std::size_t>(j)]);
        return flat;
    };

    std::size_t total = 1;
    for (int j = 0; j < d; ++j) total *= static_cast<std::size_t>(nodes);
    std::vector<Rational> values(total);
    while (true) {
        Polytope sum = bodies[0].scaled(Rational(radix[0]));
        for (int j = 1; j < d; ++j)
            sum = stratachi::minkowski_sum(sum, bodies[static_cast<std::size_t>(j)].scaled(Rational(radix[static_cast<std::size_t>(j)])));
        values[tensor_index(radix)] = sum.volume();
        int j = d - 1;
        while (j >= 0 && radix[static_cast<std::size_t>(j)] == nodes - 1) radix[static_cast<std::size_t>(j--)] = 0;
        if (j < 0) break;
        ++radix[static_cast<std::size_t>(j)];
    }

    // Inverse Vandermonde at nodes 0..d, applied along each axis in turn.
    Mat vand(static_cast<std::size_t>(nodes), Vec(static_cast<std::size_t>(nodes)));
    for (int r = 0; r < nodes; ++r)
        for (int c = 0; c < nodes; ++c) vand[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = stratachi::pow_rational(Rational(r), c);
    Mat inv(static_cast<std::size_t>(nodes), Vec(static_cast<std::size_t>(nodes), Rational(0)));
    for (int i = 0; i < nodes; ++i) inv[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 1;
    for (int col = 0; col < nodes; ++col) {
        int pivot = col;
        while (vand[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(col)] == 0) ++pivot;
        std::swap(vand[static_cast<std::size_t>(pivot)], vand[static_cast<std::size_t>(col)]);
        std::swap(inv[static_cast<std::size_t>(pivot)], inv[static_cast<std::size_t>(col)]);
        const Rational s = Rational(1) / vand[static_cast<std::size_t>(col)][static_cast<std::size_t>(col)];
        for (int j = 0; j < nodes; ++j) {
            vand[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] *= s;
            inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)] *= s;
        }
        for (int row = 0; row < nodes; ++row) {
            if (row == col) continue;
            const Rational f = vand[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
            if (f == 0) continue;
            for (int j = 0; j < nodes; ++j) {
                vand[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -= f * vand[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
                inv[static_cast<std::size_t>(row)][static_cast<std::size_t>(j)] -= f * inv[static_cast<std::size_t>(col)][static_cast<std::size_t>(j)];
            }
        }
    }

    // values -> coefficient tensor, one axis at a time.
    std::vector<Rational> coeffs = values;
    std::size_t stride = total / static_cast<std::size_t>(nodes);
    for (int axis = 0; axis < d; ++axis) {
        std::vector<Rational> next(total, Rational(0));
        for (std::size_t block = 0; block < total / static_cast<std::size_t>(nodes); ++block) {
            // Decompose block into (prefix, suffix) around the axis position.
            const std::size_t suffix = block % stride;
            const std::size_t prefix = block / stride;
            for (int out_i = 0; out_i < nodes; ++out_i) {
                Rational acc = 0;
                for (int in_i = 0; in_i < nodes; ++in_i) {
                    const std::size_t flat =
                        (prefix * static_cast<std::size_t>(nodes) + static_cast<std::size_t>(in_i)) * stride + suffix;
                    acc += inv[static_cast<std::size_t>(out_i)][static_cast<std::size_t>(in_i)] * coeffs[flat];
                }
                const std::size_t flat_out =
                    (prefix * static_cast<std::size_t>(nodes) + static_cast<std::size_t>(out_i)) * stride + suffix;
                next[flat_out] = acc;
            }
        }
        coeffs = std::move(next);
        stride = (axis + 1 < d) ? stride / static_cast<std::size_t>(nodes) : stride;
    }

    std::vector<int> ones(static_cast<std::size_t>(d), 1);
    return coeffs[tensor_index(ones)];
}

}  // namespace testutil
