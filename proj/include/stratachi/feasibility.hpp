#pragma once

#include <stratachi/point.hpp>
#include <stratachi/rational.hpp>

#include <cstddef>
#include <vector>

namespace stratachi {

/// Exact linear feasibility: is q a convex combination of the given points?
/// Phase-1 simplex over rationals with Bland's rule, so termination is
/// guaranteed and the answer is exact.
inline bool in_convex_hull(const std::vector<RationalPoint>& points, const RationalPoint& q) {
    if (points.empty()) return false;
    const std::size_t d = q.coords.size();
    const std::size_t rows = d + 1;           // coordinates + convexity row
    const std::size_t m = points.size();      // lambda variables
    const std::size_t cols = m + rows;        // + artificials

    // Tableau rows: sum_j lambda_j * p_j = q, sum_j lambda_j = 1.
    std::vector<std::vector<Rational>> t(rows, std::vector<Rational>(cols + 1, Rational(0)));
    for (std::size_t i = 0; i < rows; ++i) {
        for (std::size_t j = 0; j < m; ++j)
            t[i][j] = (i < d) ? points[j].coords[i] : Rational(1);
        t[i][cols] = (i < d) ? q.coords[i] : Rational(1);
        if (t[i][cols] < 0)
            for (auto& x : t[i]) x = -x;
        t[i][m + i] = 1;  // artificial basis
    }

    std::vector<std::size_t> basis(rows);
    for (std::size_t i = 0; i < rows; ++i) basis[i] = m + i;

    // Phase-1 objective: minimize the sum of artificials.
    std::vector<Rational> cost(cols + 1, Rational(0));
    for (std::size_t i = 0; i < rows; ++i)
        for (std::size_t j = 0; j <= cols; ++j) cost[j] -= t[i][j];
    for (std::size_t i = 0; i < rows; ++i) cost[m + i] = 0;

    while (true) {
        std::size_t enter = cols;
        for (std::size_t j = 0; j < cols; ++j) {
            if (cost[j] < 0) {  // Bland: first improving column
                enter = j;
                break;
            }
        }
        if (enter == cols) break;

        std::size_t leave = rows;
        Rational best_ratio = 0;
        for (std::size_t i = 0; i < rows; ++i) {
            if (t[i][enter] <= 0) continue;
            const Rational ratio = t[i][cols] / t[i][enter];
            if (leave == rows || ratio < best_ratio ||
                (ratio == best_ratio && basis[i] < basis[leave])) {
                leave = i;
                best_ratio = ratio;
            }
        }
        if (leave == rows) return false;  // unbounded; cannot occur in phase 1

        const Rational inv = Rational(1) / t[leave][enter];
        for (auto& x : t[leave]) x *= inv;
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == leave || t[i][enter] == 0) continue;
            const Rational f = t[i][enter];
            for (std::size_t j = 0; j <= cols; ++j) t[i][j] -= f * t[leave][j];
        }
        const Rational fc = cost[enter];
        if (fc != 0)
            for (std::size_t j = 0; j <= cols; ++j) cost[j] -= fc * t[leave][j];
        basis[leave] = enter;
    }
    return -cost[cols] == 0;  // optimum zero <=> feasible
}

}  // namespace stratachi
