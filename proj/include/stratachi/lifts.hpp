#pragma once

#include <stratachi/polytope.hpp>
#include <stratachi/rational.hpp>

#include <span>
#include <stdexcept>
#include <vector>

namespace stratachi {

/// Hull of delta1 together with the half Minkowski sum (delta0 + delta2)/2.
inline Polytope delta_star(const Polytope& delta0, const Polytope& delta1, const Polytope& delta2) {
    if (delta0.ambient_dim() != delta1.ambient_dim() || delta1.ambient_dim() != delta2.ambient_dim())
        throw std::invalid_argument("dimension mismatch");
    const Polytope half = minkowski_sum(delta0, delta2).scaled(Rational(1, 2));
    std::vector<RationalPoint> pts = delta1.vertices();
    pts.insert(pts.end(), half.vertices().begin(), half.vertices().end());
    return convex_hull(pts);
}

/// Embeds a polytope into a higher-dimensional space by appending constant
/// extra coordinates to every vertex.
inline Polytope lift_shift(const Polytope& a, const std::vector<int>& extra_coords) {
    if (extra_coords.empty()) return a;
    for (int c : extra_coords)
        if (c < 0) throw std::invalid_argument("lift coordinates must be nonnegative");
    std::vector<RationalPoint> pts;
    pts.reserve(a.vertices().size());
    for (const auto& v : a.vertices()) {
        Vec coords = v.coords;
        for (int c : extra_coords) coords.emplace_back(c);
        pts.emplace_back(std::move(coords));
    }
    return convex_hull(pts);
}

/// Newton polytope of sum_i p_i t^{k-i} given the polytopes of the p_i: the
/// hull of the deltas shifted to heights k, k-1, ..., 0 along a new axis.
inline Polytope big_delta(int k, std::span<const Polytope> deltas) {
    if (k < 2 || k > 3) throw std::invalid_argument("degree must be 2 or 3");
    if (static_cast<int>(deltas.size()) != k + 1) throw std::invalid_argument("arity mismatch");
    const int n = deltas[0].ambient_dim();
    std::vector<RationalPoint> pts;
    for (int i = 0; i <= k; ++i) {
        const auto& d = deltas[static_cast<std::size_t>(i)];
        if (d.ambient_dim() != n) throw std::invalid_argument("dimension mismatch");
        const Polytope lifted = lift_shift(d, {k - i});
        pts.insert(pts.end(), lifted.vertices().begin(), lifted.vertices().end());
    }
    return convex_hull(pts);
}

inline Polytope big_delta(int k, std::initializer_list<Polytope> deltas) {
    std::vector<Polytope> v(deltas);
    return big_delta(k, std::span<const Polytope>(v));
}

/// Newton polytope of p_1 t^2 + p_2 t + p_3 in one extra variable.
inline Polytope delta_123(const Polytope& delta1, const Polytope& delta2, const Polytope& delta3) {
    std::vector<Polytope> v{delta1, delta2, delta3};
    return big_delta(2, std::span<const Polytope>(v));
}

/// Newton polytope of sigma + p_i t^{3-i} in two extra variables: the hull of
/// the sigma unit point with the delta lifted to height 3-i on the t axis.
inline Polytope ddd(int i, const Polytope& delta_i) {
    if (i < 0 || i > 3) throw std::invalid_argument("index out of range");
    const int n = delta_i.ambient_dim();
    const Polytope lifted = lift_shift(delta_i, {3 - i, 0});
    std::vector<RationalPoint> pts = lifted.vertices();
    Vec apex(static_cast<std::size_t>(n + 2), Rational(0));
    apex[static_cast<std::size_t>(n + 1)] = 1;
    pts.emplace_back(std::move(apex));
    return convex_hull(pts);
}

}  // namespace stratachi
