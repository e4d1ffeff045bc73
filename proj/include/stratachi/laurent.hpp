#pragma once

#include <stratachi/polytope.hpp>
#include <stratachi/rational.hpp>
#include <stratachi/rng.hpp>

#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace stratachi {

/// Finite sum of monomials with integer (possibly negative) exponents and
/// nonzero exact rational coefficients.
class LaurentPolynomial {
public:
    explicit LaurentPolynomial(int num_vars) : num_vars_(num_vars) {
        if (num_vars < 1) throw std::invalid_argument("variable count must be positive");
    }

    int num_vars() const { return num_vars_; }
    bool is_zero() const { return terms_.empty(); }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    /// Merges with any existing coefficient; zero sums are dropped.
    void add_term(std::vector<int> exponents, const Rational& coeff) {
        if (static_cast<int>(exponents.size()) != num_vars_)
            throw std::invalid_argument("exponent arity mismatch");
        if (coeff == 0) return;
        auto [it, fresh] = terms_.try_emplace(std::move(exponents), coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

    LaurentPolynomial operator*(const LaurentPolynomial& o) const {
        if (num_vars_ != o.num_vars_) throw std::invalid_argument("dimension mismatch");
        LaurentPolynomial out(num_vars_);
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                std::vector<int> e = ea;
                for (int i = 0; i < num_vars_; ++i) e[static_cast<std::size_t>(i)] += eb[static_cast<std::size_t>(i)];
                out.add_term(std::move(e), ca * cb);
            }
        }
        return out;
    }

    LaurentPolynomial operator+(const LaurentPolynomial& o) const {
        if (num_vars_ != o.num_vars_) throw std::invalid_argument("dimension mismatch");
        LaurentPolynomial out = *this;
        for (const auto& [e, c] : o.terms_) out.add_term(e, c);
        return out;
    }

    bool operator==(const LaurentPolynomial& o) const {
        return num_vars_ == o.num_vars_ && terms_ == o.terms_;
    }

private:
    int num_vars_;
    std::map<std::vector<int>, Rational> terms_;
};

namespace detail {

class LaurentParser {
public:
    LaurentParser(const std::string& text, int num_vars) : text_(text), num_vars_(num_vars) {
        uses_sigma_ = scan_for_sigma();
    }

    LaurentPolynomial parse() {
        LaurentPolynomial out(num_vars_);
        skip_ws();
        bool first = true;
        while (pos_ < text_.size()) {
            int sign = 1;
            if (peek() == '+' || peek() == '-') {
                sign = (peek() == '-') ? -1 : 1;
                ++pos_;
                skip_ws();
            } else if (!first) {
                fail("expected '+' or '-' between terms");
            }
            auto [coeff, exponents] = parse_term();
            out.add_term(std::move(exponents), Rational(sign) * coeff);
            skip_ws();
            first = false;
        }
        if (first) fail("empty polynomial text");
        return out;
    }

private:
    std::pair<Rational, std::vector<int>> parse_term() {
        Rational coeff = 1;
        std::vector<int> exponents(static_cast<std::size_t>(num_vars_), 0);
        bool any_factor = false;
        while (true) {
            skip_ws();
            if (pos_ >= text_.size()) break;
            const char c = peek();
            if (std::isdigit(static_cast<unsigned char>(c))) {
                coeff *= parse_rational_token();
            } else if (c == 'z' || c == 't' || c == 's') {
                const int var = parse_variable();
                const int exp = parse_exponent();
                exponents[static_cast<std::size_t>(var)] += exp;
            } else {
                fail(std::string("unexpected character '") + c + "'");
            }
            any_factor = true;
            skip_ws();
            if (pos_ < text_.size() && peek() == '*') {
                ++pos_;
                continue;
            }
            break;
        }
        if (!any_factor) fail("empty term");
        return {coeff, std::move(exponents)};
    }

    Rational parse_rational_token() {
        const std::string num = parse_digits();
        if (pos_ < text_.size() && peek() == '/') {
            ++pos_;
            const std::string den = parse_digits();
            if (BigInt(den) == 0) fail("zero denominator");
            return Rational(BigInt(num)) / Rational(BigInt(den));
        }
        return Rational(BigInt(num));
    }

    // z<i>, or the axis aliases: with a sigma variable present, s is the last
    // variable and t the one before it; otherwise t is the last variable.
    int parse_variable() {
        const char c = peek();
        ++pos_;
        if (c == 't') {
            const int idx = uses_sigma_ ? num_vars_ - 2 : num_vars_ - 1;
            if (idx < 0) fail("unknown variable t");
            return idx;
        }
        if (c == 's') {
            if (!uses_sigma_ || num_vars_ < 1) fail("unknown variable s");
            return num_vars_ - 1;
        }
        if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(peek())))
            fail("variable index expected after 'z'");
        const std::string digits = parse_digits();
        long long idx = 0;
        for (char d : digits) {
            idx = idx * 10 + (d - '0');
            if (idx > num_vars_) fail("unknown variable z" + digits);
        }
        if (idx < 1 || idx > num_vars_) fail("unknown variable z" + digits);
        return static_cast<int>(idx) - 1;
    }

    int parse_exponent() {
        skip_ws();
        if (pos_ >= text_.size() || peek() != '^') return 1;
        ++pos_;
        skip_ws();
        int sign = 1;
        if (pos_ < text_.size() && (peek() == '-' || peek() == '+')) {
            sign = (peek() == '-') ? -1 : 1;
            ++pos_;
        }
        const std::string digits = parse_digits();
        long long e = 0;
        for (char d : digits) {
            e = e * 10 + (d - '0');
            if (e > kMaxExponent) fail("exponent overflow");
        }
        return static_cast<int>(sign * e);
    }

    std::string parse_digits() {
        skip_ws();
        std::size_t start = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (pos_ == start) fail("number expected");
        return text_.substr(start, pos_ - start);
    }

    bool scan_for_sigma() const {
        for (char c : text_)
            if (c == 's') return true;
        return false;
    }

    char peek() const { return text_[pos_]; }
    void skip_ws() {
        while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("parse error at position " + std::to_string(pos_) + ": " + what);
    }

    static constexpr long long kMaxExponent = 1000000;

    const std::string& text_;
    int num_vars_;
    std::size_t pos_ = 0;
    bool uses_sigma_ = false;
};

}  // namespace detail

/// Parses the term grammar "3*z1^2*z2^-1 - z2 + 1/2". Repeated monomials are
/// summed; terms that cancel are dropped.
inline LaurentPolynomial parse_laurent(const std::string& text, int num_vars) {
    return detail::LaurentParser(text, num_vars).parse();
}

/// Convex hull of the exponent vectors carrying nonzero coefficients.
inline Polytope newton_polytope(const LaurentPolynomial& p) {
    if (p.is_zero()) throw std::invalid_argument("zero polynomial has no Newton polytope");
    std::vector<RationalPoint> pts;
    pts.reserve(p.terms().size());
    for (const auto& [e, c] : p.terms()) {
        Vec coords;
        coords.reserve(e.size());
        for (int x : e) coords.emplace_back(x);
        pts.emplace_back(std::move(coords));
    }
    return convex_hull(pts);
}

/// All integer points of a polytope, ascending lexicographically. Bounding
/// box scan with the exact membership test.
inline std::vector<std::vector<int>> lattice_points(const Polytope& p) {
    const int d = p.ambient_dim();
    std::vector<long long> lo(static_cast<std::size_t>(d)), hi(static_cast<std::size_t>(d));
    for (int j = 0; j < d; ++j) {
        bool init = false;
        Rational mn = 0, mx = 0;
        for (const auto& v : p.vertices()) {
            const Rational& c = v.coords[static_cast<std::size_t>(j)];
            if (!init || c < mn) mn = c;
            if (!init || c > mx) mx = c;
            init = true;
        }
        using boost::multiprecision::denominator;
        using boost::multiprecision::numerator;
        const BigInt lo_i = (numerator(mn) >= 0) ? numerator(mn) / denominator(mn)
                                                 : -((-numerator(mn) + denominator(mn) - 1) / denominator(mn));
        const BigInt hi_i = (numerator(mx) >= 0) ? (numerator(mx) + denominator(mx) - 1) / denominator(mx)
                                                 : -((-numerator(mx)) / denominator(mx));
        lo[static_cast<std::size_t>(j)] = lo_i.convert_to<long long>();
        hi[static_cast<std::size_t>(j)] = hi_i.convert_to<long long>();
    }
    std::vector<std::vector<int>> out;
    std::vector<long long> cur = lo;
    while (true) {
        Vec coords;
        coords.reserve(static_cast<std::size_t>(d));
        for (long long x : cur) coords.emplace_back(x);
        if (p.contains(RationalPoint(coords))) {
            std::vector<int> pt;
            pt.reserve(static_cast<std::size_t>(d));
            for (long long x : cur) pt.push_back(static_cast<int>(x));
            out.push_back(std::move(pt));
        }
        int j = d - 1;
        while (j >= 0 && cur[static_cast<std::size_t>(j)] == hi[static_cast<std::size_t>(j)]) {
            cur[static_cast<std::size_t>(j)] = lo[static_cast<std::size_t>(j)];
            --j;
        }
        if (j < 0) break;
        ++cur[static_cast<std::size_t>(j)];
    }
    return out;
}

/// Prescription for drawing coefficient polynomials with fixed Newton
/// polytopes: supported on all lattice points, uniform nonzero integer
/// coefficients in [-coeff_bound, coeff_bound].
struct GenericSystemSpec {
    std::vector<Polytope> polytopes;
    int coeff_bound = 50;
    std::uint64_t seed = 0;
};

/// Draws one polynomial per prescribed polytope. Every lattice point of the
/// polytope receives an independent nonzero coefficient, so the Newton
/// polytope of each output equals its prescription.
inline std::vector<LaurentPolynomial> random_generic(const std::vector<Polytope>& polytopes,
                                                     int coeff_bound, Rng& rng) {
    if (coeff_bound < 2) throw std::invalid_argument("coefficient bound must be at least 2");
    std::vector<LaurentPolynomial> out;
    out.reserve(polytopes.size());
    for (const auto& poly : polytopes) {
        for (const auto& v : poly.vertices())
            if (!v.all_integer()) throw std::invalid_argument("non-integer vertices");
        LaurentPolynomial p(poly.ambient_dim());
        for (auto& pt : lattice_points(poly))
            p.add_term(std::move(pt), Rational(rng.nonzero_in(coeff_bound)));
        out.push_back(std::move(p));
    }
    return out;
}

inline std::vector<LaurentPolynomial> random_generic(const GenericSystemSpec& spec) {
    Rng rng(spec.seed);
    return random_generic(spec.polytopes, spec.coeff_bound, rng);
}

}  // namespace stratachi
