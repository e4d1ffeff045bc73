#pragma once

#include <stratachi/rational.hpp>

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace stratachi {

/// A point with exact rational coordinates. Length equals the ambient
/// dimension of the polytope that owns it.
struct RationalPoint {
    std::vector<Rational> coords;

    RationalPoint() = default;
    explicit RationalPoint(std::vector<Rational> c) : coords(std::move(c)) {}
    RationalPoint(std::initializer_list<Rational> c) : coords(c) {}

    int dim() const { return static_cast<int>(coords.size()); }

    const Rational& operator[](std::size_t i) const { return coords[i]; }
    Rational& operator[](std::size_t i) { return coords[i]; }

    bool operator==(const RationalPoint& o) const { return coords == o.coords; }

    // Lexicographic; used for canonical vertex ordering and deduplication.
    bool operator<(const RationalPoint& o) const {
        const std::size_t n = std::min(coords.size(), o.coords.size());
        for (std::size_t i = 0; i < n; ++i) {
            if (coords[i] != o.coords[i]) return coords[i] < o.coords[i];
        }
        return coords.size() < o.coords.size();
    }

    RationalPoint operator+(const RationalPoint& o) const {
        check_dim(o);
        RationalPoint r = *this;
        for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] += o.coords[i];
        return r;
    }

    RationalPoint operator-(const RationalPoint& o) const {
        check_dim(o);
        RationalPoint r = *this;
        for (std::size_t i = 0; i < coords.size(); ++i) r.coords[i] -= o.coords[i];
        return r;
    }

    RationalPoint scaled(const Rational& s) const {
        RationalPoint r = *this;
        for (auto& c : r.coords) c *= s;
        return r;
    }

    bool all_integer() const {
        for (const auto& c : coords)
            if (!is_integer(c)) return false;
        return true;
    }

    std::string str() const {
        std::string s = "(";
        for (std::size_t i = 0; i < coords.size(); ++i) {
            if (i) s += ",";
            s += coords[i].str();
        }
        return s + ")";
    }

private:
    void check_dim(const RationalPoint& o) const {
        if (coords.size() != o.coords.size()) throw std::invalid_argument("dimension mismatch");
    }
};

inline RationalPoint origin_point(int dim) {
    return RationalPoint(std::vector<Rational>(static_cast<std::size_t>(dim), Rational(0)));
}

inline Rational dot(const std::vector<Rational>& a, const std::vector<Rational>& b) {
    Rational s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
    return s;
}

}  // namespace stratachi
