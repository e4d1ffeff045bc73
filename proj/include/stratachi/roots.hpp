#pragma once

#include <stratachi/unipoly.hpp>

#include <Eigen/Eigenvalues>
#include <boost/multiprecision/cpp_complex.hpp>

#include <cmath>
#include <complex>
#include <vector>

namespace stratachi {

using ComplexLD = std::complex<long double>;

/// 113-bit binary floats for the per-event classification work. A double
/// t-root located from a quad-polished parameter point splits by roughly the
/// square root of the residual, which quad precision keeps far below the
/// clustering tolerance.
using QuadComplex = boost::multiprecision::cpp_complex_quad;
using QuadFloat = QuadComplex::value_type;

namespace detail {

/// Coefficients rescaled by the largest magnitude, for stable numeric work;
/// roots are unchanged.
inline std::vector<long double> scaled_ld_coeffs(const UniPoly& f) {
    std::vector<long double> c;
    c.reserve(f.coeffs().size());
    long double max_abs = 0;
    for (const auto& x : f.coeffs()) {
        const long double v = x.convert_to<long double>();
        c.push_back(v);
        max_abs = std::max(max_abs, std::abs(v));
    }
    if (max_abs > 0)
        for (auto& v : c) v /= max_abs;
    return c;
}

inline ComplexLD horner(const std::vector<long double>& c, const ComplexLD& z) {
    ComplexLD acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

inline ComplexLD horner(const std::vector<ComplexLD>& c, const ComplexLD& z) {
    ComplexLD acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

}  // namespace detail

/// All complex roots of an exact polynomial: companion-matrix eigenvalues in
/// double precision, then Newton polishing in long double against the exact
/// coefficients. Intended for squarefree inputs, where every root is simple
/// and the polish converges quadratically.
inline std::vector<ComplexLD> polynomial_roots(const UniPoly& f) {
    const int deg = f.degree();
    if (deg <= 0) return {};
    const auto c = detail::scaled_ld_coeffs(f);

    std::vector<ComplexLD> roots;
    if (deg == 1) {
        roots.push_back(ComplexLD(-c[0] / c[1], 0.0L));
    } else {
        Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
        for (int i = 0; i < deg; ++i) {
            companion(i, deg - 1) = -static_cast<double>(c[static_cast<std::size_t>(i)]) /
                                    static_cast<double>(c[static_cast<std::size_t>(deg)]);
            if (i + 1 < deg) companion(i + 1, i) = 1.0;
        }
        const Eigen::EigenSolver<Eigen::MatrixXd> solver(companion);
        roots.reserve(static_cast<std::size_t>(deg));
        for (int i = 0; i < deg; ++i)
            roots.emplace_back(static_cast<long double>(solver.eigenvalues()(i).real()),
                               static_cast<long double>(solver.eigenvalues()(i).imag()));
    }

    std::vector<long double> dc(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) dc[i - 1] = c[i] * static_cast<long double>(i);
    for (auto& r : roots) {
        for (int iter = 0; iter < 12; ++iter) {
            const ComplexLD fv = detail::horner(c, r);
            const ComplexLD dv = detail::horner(dc, r);
            if (std::abs(dv) == 0.0L) break;
            const ComplexLD step = fv / dv;
            r -= step;
            if (std::abs(step) <= 1e-21L * std::max(1.0L, std::abs(r))) break;
        }
    }
    return roots;
}

/// Roots of a low-degree polynomial with complex coefficients
/// (leading-first), via Durand-Kerner in long double.
inline std::vector<ComplexLD> complex_poly_roots(const std::vector<ComplexLD>& leading_first) {
    std::vector<ComplexLD> c(leading_first.rbegin(), leading_first.rend());  // ascending
    while (c.size() > 1 && std::abs(c.back()) == 0.0L) c.pop_back();
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg <= 0) return {};
    long double scale = 0;
    for (const auto& x : c) scale = std::max(scale, std::abs(x));
    for (auto& x : c) x /= scale;

    long double radius = 0;
    for (int i = 0; i < deg; ++i)
        radius = std::max(radius, std::abs(c[static_cast<std::size_t>(i)] / c[static_cast<std::size_t>(deg)]));
    radius = 1.0L + radius;

    std::vector<ComplexLD> w(static_cast<std::size_t>(deg));
    const ComplexLD seed(0.4L, 0.9L);
    ComplexLD rot = 1;
    for (int i = 0; i < deg; ++i) {
        rot *= seed;
        w[static_cast<std::size_t>(i)] = radius * rot / std::abs(rot);
    }
    for (int iter = 0; iter < 200; ++iter) {
        long double worst = 0;
        for (int i = 0; i < deg; ++i) {
            ComplexLD denom = c[static_cast<std::size_t>(deg)];
            for (int j = 0; j < deg; ++j)
                if (j != i) denom *= (w[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(j)]);
            if (std::abs(denom) == 0.0L) continue;
            const ComplexLD step = detail::horner(c, w[static_cast<std::size_t>(i)]) / denom;
            w[static_cast<std::size_t>(i)] -= step;
            worst = std::max(worst, std::abs(step) / std::max(1.0L, std::abs(w[static_cast<std::size_t>(i)])));
        }
        if (worst < 1e-24L) break;
    }
    return w;
}

namespace detail {

inline QuadFloat to_quad(const Rational& x) {
    return QuadFloat(boost::multiprecision::numerator(x)) /
           QuadFloat(boost::multiprecision::denominator(x));
}

inline std::vector<QuadFloat> quad_coeffs(const UniPoly& f) {
    std::vector<QuadFloat> c;
    c.reserve(f.coeffs().size());
    for (const auto& x : f.coeffs()) c.push_back(to_quad(x));
    return c;
}

inline QuadComplex horner(const std::vector<QuadFloat>& c, const QuadComplex& z) {
    QuadComplex acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

inline QuadComplex horner(const std::vector<QuadComplex>& c, const QuadComplex& z) {
    QuadComplex acc = 0;
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * z + c[i];
    return acc;
}

inline ComplexLD to_ld(const QuadComplex& z) {
    return ComplexLD(z.real().convert_to<long double>(), z.imag().convert_to<long double>());
}

}  // namespace detail

/// Newton polish against the exact coefficients in quad precision. Intended
/// for simple roots, where convergence is quadratic.
inline QuadComplex newton_polish_quad(const UniPoly& f, QuadComplex z, int iters = 10) {
    const auto c = detail::quad_coeffs(f);
    std::vector<QuadFloat> dc;
    dc.reserve(c.size() - 1);
    for (std::size_t i = 1; i < c.size(); ++i) dc.push_back(c[i] * static_cast<int>(i));
    for (int it = 0; it < iters; ++it) {
        const QuadComplex fv = detail::horner(c, z);
        const QuadComplex dv = detail::horner(dc, z);
        if (abs(dv) == 0) break;
        const QuadComplex step = fv / dv;
        z -= step;
        if (abs(step) <= QuadFloat(1e-36) * (1 + abs(z))) break;
    }
    return z;
}

/// Durand-Kerner in quad precision for the low-degree t-polynomials built at
/// an event point (coefficients leading-first).
inline std::vector<QuadComplex> complex_poly_roots_quad(const std::vector<QuadComplex>& leading_first) {
    std::vector<QuadComplex> c(leading_first.rbegin(), leading_first.rend());
    while (c.size() > 1 && abs(c.back()) == 0) c.pop_back();
    const int deg = static_cast<int>(c.size()) - 1;
    if (deg <= 0) return {};
    QuadFloat scale = 0;
    for (const auto& x : c) scale = (std::max)(scale, QuadFloat(abs(x)));
    for (auto& x : c) x /= scale;

    QuadFloat radius = 0;
    for (int i = 0; i < deg; ++i)
        radius = (std::max)(radius, QuadFloat(abs(c[static_cast<std::size_t>(i)] / c[static_cast<std::size_t>(deg)])));
    radius += 1;

    std::vector<QuadComplex> w(static_cast<std::size_t>(deg));
    const QuadComplex seed(QuadFloat("0.4"), QuadFloat("0.9"));
    QuadComplex rot = 1;
    for (int i = 0; i < deg; ++i) {
        rot *= seed;
        w[static_cast<std::size_t>(i)] = rot * (radius / abs(rot));
    }
    for (int iter = 0; iter < 120; ++iter) {
        QuadFloat worst = 0;
        for (int i = 0; i < deg; ++i) {
            QuadComplex denom = c[static_cast<std::size_t>(deg)];
            for (int j = 0; j < deg; ++j)
                if (j != i) denom *= (w[static_cast<std::size_t>(i)] - w[static_cast<std::size_t>(j)]);
            if (abs(denom) == 0) continue;
            const QuadComplex step = detail::horner(c, w[static_cast<std::size_t>(i)]) / denom;
            w[static_cast<std::size_t>(i)] -= step;
            worst = (std::max)(worst, QuadFloat(abs(step) / (1 + abs(w[static_cast<std::size_t>(i)]))));
        }
        if (worst < QuadFloat(1e-45)) break;
    }
    return w;
}

/// Clustering with a guard band. Two points at relative distance <= tol
/// coincide; anything landing inside (tol, 10*tol) is neither clearly equal
/// nor clearly distinct and poisons the classification.
struct Clusters {
    std::vector<std::vector<int>> groups;
    bool ambiguous = false;
};

inline Clusters cluster_points(const std::vector<ComplexLD>& pts, long double tol) {
    Clusters out;
    const int n = static_cast<int>(pts.size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    const auto find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const long double s =
                std::max({1.0L, std::abs(pts[static_cast<std::size_t>(i)]), std::abs(pts[static_cast<std::size_t>(j)])});
            const long double d = std::abs(pts[static_cast<std::size_t>(i)] - pts[static_cast<std::size_t>(j)]);
            if (d <= tol * s)
                parent[static_cast<std::size_t>(find(i))] = find(j);
            else if (d < 10.0L * tol * s)
                out.ambiguous = true;
        }
    }
    std::vector<int> rep(static_cast<std::size_t>(n), -1);
    for (int i = 0; i < n; ++i) {
        const int r = find(i);
        if (rep[static_cast<std::size_t>(r)] < 0) {
            rep[static_cast<std::size_t>(r)] = static_cast<int>(out.groups.size());
            out.groups.emplace_back();
        }
        out.groups[static_cast<std::size_t>(rep[static_cast<std::size_t>(r)])].push_back(i);
    }
    return out;
}

}  // namespace stratachi
