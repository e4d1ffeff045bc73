#pragma once

#include <stratachi/point.hpp>
#include <stratachi/rational.hpp>

#include <optional>
#include <vector>

namespace stratachi {

using Vec = std::vector<Rational>;
using Mat = std::vector<Vec>;  // row-major

/// Exact determinant by Gaussian elimination with exact pivoting.
inline Rational determinant(Mat a) {
    const std::size_t n = a.size();
    Rational det = 1;
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        const Rational inv = Rational(1) / a[col][col];
        for (std::size_t row = col + 1; row < n; ++row) {
            if (a[row][col] == 0) continue;
            const Rational f = a[row][col] * inv;
            for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
        }
    }
    return det;
}

/// Solves a square system exactly; nullopt when singular.
inline std::optional<Vec> solve_square(Mat a, Vec b) {
    const std::size_t n = a.size();
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t pivot = col;
        while (pivot < n && a[pivot][col] == 0) ++pivot;
        if (pivot == n) return std::nullopt;
        std::swap(a[pivot], a[col]);
        std::swap(b[pivot], b[col]);
        const Rational inv = Rational(1) / a[col][col];
        for (std::size_t row = 0; row < n; ++row) {
            if (row == col || a[row][col] == 0) continue;
            const Rational f = a[row][col] * inv;
            for (std::size_t j = col; j < n; ++j) a[row][j] -= f * a[col][j];
            b[row] -= f * b[col];
        }
    }
    Vec x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / a[i][i];
    return x;
}

/// Generalized cross product: the vector orthogonal to d-1 vectors in R^d,
/// computed from signed maximal minors.
inline Vec cross_normal(const std::vector<Vec>& rows) {
    const std::size_t d = rows.empty() ? 1 : rows[0].size();
    Vec n(d);
    for (std::size_t j = 0; j < d; ++j) {
        Mat minor;
        minor.reserve(rows.size());
        for (const auto& r : rows) {
            Vec mr;
            mr.reserve(d - 1);
            for (std::size_t c = 0; c < d; ++c)
                if (c != j) mr.push_back(r[c]);
            minor.push_back(std::move(mr));
        }
        const Rational m = minor.empty() ? Rational(1) : determinant(std::move(minor));
        n[j] = (j % 2 == 0) ? m : -m;
    }
    return n;
}

/// Rescales to a primitive integer vector with the same direction. Keeps the
/// numbers small across many repeated dot products.
inline void make_primitive(Vec& v) {
    BigInt lcm_den = 1;
    for (const auto& x : v) {
        const BigInt d = boost::multiprecision::denominator(x);
        lcm_den = boost::multiprecision::lcm(lcm_den, d);
    }
    BigInt gcd_num = 0;
    std::vector<BigInt> scaled(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        scaled[i] = boost::multiprecision::numerator(v[i]) *
                    (lcm_den / boost::multiprecision::denominator(v[i]));
        gcd_num = boost::multiprecision::gcd(gcd_num, scaled[i]);
    }
    if (gcd_num == 0) return;
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = Rational(scaled[i] / gcd_num);
}

/// Incremental echelon basis of a linear span; reports which added vectors
/// enlarged the span. Drives affine-dimension and initial-simplex selection.
class EchelonBasis {
public:
    explicit EchelonBasis(int dim) : dim_(dim) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    /// Returns true when v was independent of the current span.
    bool add(Vec v) {
        reduce(v);
        for (int j = 0; j < dim_; ++j) {
            if (v[static_cast<std::size_t>(j)] != 0) {
                const Rational inv = Rational(1) / v[static_cast<std::size_t>(j)];
                for (auto& x : v) x *= inv;
                rows_.push_back(std::move(v));
                pivot_cols_.push_back(j);
                return true;
            }
        }
        return false;
    }

    bool contains(Vec v) const {
        reduce(v);
        for (const auto& x : v)
            if (x != 0) return false;
        return true;
    }

private:
    void reduce(Vec& v) const {
        for (std::size_t r = 0; r < rows_.size(); ++r) {
            const auto c = static_cast<std::size_t>(pivot_cols_[r]);
            if (v[c] == 0) continue;
            const Rational f = v[c];
            for (int j = 0; j < dim_; ++j)
                v[static_cast<std::size_t>(j)] -= f * rows_[r][static_cast<std::size_t>(j)];
        }
    }

    int dim_;
    std::vector<Vec> rows_;
    std::vector<int> pivot_cols_;
};

}  // namespace stratachi
