#pragma once

#include <stratachi/rational.hpp>

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace stratachi {

/// Dense univariate polynomial with exact rational coefficients, ascending
/// by degree and trimmed so the leading coefficient is nonzero.
class UniPoly {
public:
    UniPoly() = default;
    explicit UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }
    static UniPoly constant(const Rational& v) { return UniPoly({v}); }
    static UniPoly monomial(int degree, const Rational& coeff) {
        std::vector<Rational> c(static_cast<std::size_t>(degree) + 1, Rational(0));
        c.back() = coeff;
        return UniPoly(std::move(c));
    }

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for the zero polynomial

    const Rational& coeff(int i) const {
        static const Rational zero(0);
        if (i < 0 || i >= static_cast<int>(c_.size())) return zero;
        return c_[static_cast<std::size_t>(i)];
    }
    const std::vector<Rational>& coeffs() const { return c_; }

    bool operator==(const UniPoly& o) const { return c_ == o.c_; }

    UniPoly operator+(const UniPoly& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
        return UniPoly(std::move(r));
    }

    UniPoly operator-(const UniPoly& o) const {
        std::vector<Rational> r(std::max(c_.size(), o.c_.size()), Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
        for (std::size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
        return UniPoly(std::move(r));
    }

    UniPoly operator*(const UniPoly& o) const {
        if (is_zero() || o.is_zero()) return UniPoly();
        std::vector<Rational> r(c_.size() + o.c_.size() - 1, Rational(0));
        for (std::size_t i = 0; i < c_.size(); ++i)
            for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
        return UniPoly(std::move(r));
    }

    UniPoly operator*(const Rational& s) const {
        if (s == 0) return UniPoly();
        std::vector<Rational> r = c_;
        for (auto& x : r) x *= s;
        return UniPoly(std::move(r));
    }

    UniPoly operator-() const { return *this * Rational(-1); }

    UniPoly derivative() const {
        if (c_.size() <= 1) return UniPoly();
        std::vector<Rational> r(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) r[i - 1] = c_[i] * Rational(static_cast<int>(i));
        return UniPoly(std::move(r));
    }

    Rational eval(const Rational& x) const {
        Rational acc = 0;
        for (std::size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
        return acc;
    }

    /// Quotient and remainder; the divisor must be nonzero.
    std::pair<UniPoly, UniPoly> divmod(const UniPoly& div) const {
        if (div.is_zero()) throw std::invalid_argument("division by zero polynomial");
        std::vector<Rational> rem = c_;
        const int dd = div.degree();
        if (degree() < dd) return {UniPoly(), *this};
        std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1, Rational(0));
        const Rational inv = Rational(1) / div.c_.back();
        for (int i = degree(); i >= dd; --i) {
            const Rational f = rem[static_cast<std::size_t>(i)] * inv;
            if (f == 0) continue;
            quot[static_cast<std::size_t>(i - dd)] = f;
            for (int j = 0; j <= dd; ++j)
                rem[static_cast<std::size_t>(i - dd + j)] -= f * div.c_[static_cast<std::size_t>(j)];
        }
        return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
    }

    /// Rescales to integer coefficients with content 1 and positive leading
    /// coefficient; keeps Euclidean chains from blowing up.
    UniPoly primitive() const {
        if (is_zero()) return *this;
        BigInt lcm_den = 1;
        for (const auto& x : c_)
            lcm_den = boost::multiprecision::lcm(lcm_den, boost::multiprecision::denominator(x));
        BigInt content = 0;
        std::vector<BigInt> scaled(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) {
            scaled[i] = boost::multiprecision::numerator(c_[i]) *
                        (lcm_den / boost::multiprecision::denominator(c_[i]));
            content = boost::multiprecision::gcd(content, scaled[i]);
        }
        if (scaled.back() < 0) content = -content;
        std::vector<Rational> out(c_.size());
        for (std::size_t i = 0; i < c_.size(); ++i) out[i] = Rational(scaled[i] / content);
        return UniPoly(std::move(out));
    }

    /// Factors out the largest power of the variable: poly = x^m * rest with
    /// rest(0) != 0. Roots away from zero are unchanged.
    std::pair<int, UniPoly> strip_power() const {
        if (is_zero()) throw std::invalid_argument("zero polynomial");
        std::size_t m = 0;
        while (m < c_.size() && c_[m] == 0) ++m;
        return {static_cast<int>(m), UniPoly(std::vector<Rational>(c_.begin() + static_cast<long>(m), c_.end()))};
    }

    std::string str() const {
        if (is_zero()) return "0";
        std::string s;
        for (std::size_t i = c_.size(); i-- > 0;) {
            if (c_[i] == 0) continue;
            if (!s.empty()) s += (c_[i] > 0) ? " + " : " - ";
            else if (c_[i] < 0)
                s += "-";
            const Rational a = (c_[i] < 0) ? -c_[i] : c_[i];
            if (a != 1 || i == 0) s += a.str();
            if (i > 0) {
                if (a != 1) s += "*";
                s += "z";
                if (i > 1) s += "^" + std::to_string(i);
            }
        }
        return s;
    }

private:
    void trim() {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rational> c_;
};

/// Monic gcd via the Euclidean chain, with primitive rescaling at each step.
inline UniPoly gcd(UniPoly a, UniPoly b) {
    if (a.is_zero()) std::swap(a, b);
    while (!b.is_zero()) {
        UniPoly r = a.divmod(b).second;
        a = std::move(b);
        b = r.is_zero() ? UniPoly() : r.primitive();
    }
    if (a.is_zero()) return a;
    return a * (Rational(1) / a.coeff(a.degree()));
}

inline UniPoly gcd(const std::vector<UniPoly>& polys) {
    UniPoly g;
    for (const auto& p : polys) g = gcd(g, p);
    return g;
}

/// Product of the distinct irreducible factors: f / gcd(f, f').
inline UniPoly squarefree_part(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    if (f.degree() == 0) return UniPoly::constant(Rational(1));
    const UniPoly g = gcd(f, f.derivative());
    auto [q, r] = f.divmod(g);
    if (!r.is_zero()) throw std::runtime_error("internal error: inexact squarefree division");
    return q.primitive();
}

/// Number of distinct roots in C \ {0}: strip the power of z, then count the
/// degree of the squarefree part.
inline int distinct_roots_cstar(const UniPoly& f) {
    if (f.is_zero()) throw std::invalid_argument("zero polynomial");
    const auto [m, rest] = f.strip_power();
    if (rest.degree() == 0) return 0;
    return squarefree_part(rest).degree();
}

namespace detail {

inline UniPoly poly_det(std::vector<std::vector<UniPoly>>& m, std::vector<int>& cols, int row) {
    const int n = static_cast<int>(m.size());
    if (row == n) return UniPoly::constant(Rational(1));
    UniPoly acc;
    for (std::size_t ci = 0; ci < cols.size(); ++ci) {
        const int col = cols[ci];
        const UniPoly& entry = m[static_cast<std::size_t>(row)][static_cast<std::size_t>(col)];
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        rest.reserve(cols.size() - 1);
        for (std::size_t cj = 0; cj < cols.size(); ++cj)
            if (cj != ci) rest.push_back(cols[cj]);
        UniPoly sub = poly_det(m, rest, row + 1);
        if (sub.is_zero()) continue;
        UniPoly term = entry * sub;
        acc = (ci % 2 == 0) ? acc + term : acc - term;
    }
    return acc;
}

}  // namespace detail

/// Resultant in t of two polynomials whose t-coefficients are themselves
/// univariate polynomials. Coefficients are leading-first; formal degrees are
/// taken from the list lengths. Sign convention: the Sylvester determinant
/// with the f rows first.
inline UniPoly resultant(const std::vector<UniPoly>& f, const std::vector<UniPoly>& g) {
    const auto all_zero = [](const std::vector<UniPoly>& p) {
        for (const auto& c : p)
            if (!c.is_zero()) return false;
        return true;
    };
    if (f.empty() || g.empty() || all_zero(f) || all_zero(g))
        throw std::invalid_argument("zero input polynomial");
    const int m = static_cast<int>(f.size()) - 1;
    const int l = static_cast<int>(g.size()) - 1;
    const int n = m + l;
    if (n == 0) return UniPoly::constant(Rational(1));
    std::vector<std::vector<UniPoly>> syl(static_cast<std::size_t>(n),
                                          std::vector<UniPoly>(static_cast<std::size_t>(n)));
    for (int r = 0; r < l; ++r)
        for (int j = 0; j <= m; ++j) syl[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + j)] = f[static_cast<std::size_t>(j)];
    for (int r = 0; r < m; ++r)
        for (int j = 0; j <= l; ++j)
            syl[static_cast<std::size_t>(l + r)][static_cast<std::size_t>(r + j)] = g[static_cast<std::size_t>(j)];
    std::vector<int> cols(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) cols[static_cast<std::size_t>(i)] = i;
    return detail::poly_det(syl, cols, 0);
}

/// Discriminant-type locus of a degree-k polynomial in t with polynomial
/// coefficients (leading-first). Degree 2 uses the closed form; degree 3 the
/// resultant with the t-derivative, leading coefficient left in place.
inline UniPoly discriminant_t(const std::vector<UniPoly>& p, int k) {
    if (k < 2 || k > 3) throw std::invalid_argument("degree must be 2 or 3");
    if (static_cast<int>(p.size()) != k + 1) throw std::invalid_argument("coefficient count mismatch");
    if (p[0].is_zero()) throw std::invalid_argument("zero leading coefficient");
    if (k == 2) return p[1] * p[1] - p[0] * p[2] * Rational(4);
    std::vector<UniPoly> dp(3);
    dp[0] = p[0] * Rational(3);
    dp[1] = p[1] * Rational(2);
    dp[2] = p[2];
    return resultant(p, dp);
}

}  // namespace stratachi
