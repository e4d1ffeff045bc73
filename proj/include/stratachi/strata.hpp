#pragma once

#include <stratachi/lifts.hpp>
#include <stratachi/mixed_volume.hpp>
#include <stratachi/polytope.hpp>
#include <stratachi/rational.hpp>

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace stratachi {

/// Euler characteristics of the root-coincidence strata of the parameter
/// torus, one exact integer per stratum label. Labels are K,L,M,N,O for
/// degree 2 and H..O for degree 3; the values always sum to zero.
struct StrataChi {
    int degree = 2;
    std::map<char, Rational> values;

    Rational sum() const {
        Rational s = 0;
        for (const auto& [label, v] : values) s += v;
        return s;
    }
};

namespace detail {

inline void validate_strata(const StrataChi& chi) {
    for (const auto& [label, v] : chi.values) {
        if (!is_integer(v))
            throw std::runtime_error(std::string("internal error: non-integer stratum value for ") +
                                     label + " = " + v.str());
    }
    if (chi.sum() != 0)
        throw std::runtime_error("internal error: stratum values do not sum to zero");
}

inline void require_integer_vertices(const Polytope& p) {
    for (const auto& v : p.vertices())
        if (!v.all_integer()) throw std::invalid_argument("integer vertices required");
}

inline int common_dimension(std::span<const Polytope> deltas) {
    const int n = deltas[0].ambient_dim();
    for (const auto& d : deltas)
        if (d.ambient_dim() != n) throw std::invalid_argument("dimension mismatch");
    if (n < 1) throw std::invalid_argument("dimension must be at least 1");
    return n;
}

}  // namespace detail

/// Strata Euler characteristics for a degree-2 polynomial whose coefficients
/// have Newton polytopes delta0, delta1, delta2.
inline StrataChi chi_deg2(const Polytope& delta0, const Polytope& delta1, const Polytope& delta2,
                          MixedVolumeCache& cache) {
    std::vector<Polytope> deltas{delta0, delta1, delta2};
    const int n = detail::common_dimension(deltas);
    for (const auto& d : deltas) detail::require_integer_vertices(d);

    const Rational sgn = (n % 2 == 0) ? 1 : -1;
    const Rational nf(factorial(n));
    const Polytope star = delta_star(delta0, delta1, delta2);

    const Rational v0 = delta0.volume();
    const Rational vstar = star.volume();
    const Rational q_0s = qnk(n, 2, {delta0, star}, cache);
    const Rational q_s2 = qnk(n, 2, {star, delta2}, cache);
    const Rational q_01 = qnk(n, 2, {delta0, delta1}, cache);
    const Rational q_012 = qnk(n, 3, {delta0, delta1, delta2}, cache);

    StrataChi chi;
    chi.degree = 2;
    chi.values['K'] = sgn * nf * (v0 + 2 * vstar + q_0s + q_s2 + q_01 + q_012);
    chi.values['L'] = -sgn * nf * (2 * vstar + q_0s + q_s2 + q_01 + q_012);
    chi.values['M'] = -sgn * nf * (v0 + q_01);
    chi.values['N'] = sgn * nf * (q_01 + q_012);
    chi.values['O'] = -sgn * nf * q_012;
    detail::validate_strata(chi);
    return chi;
}

inline StrataChi chi_deg2(const Polytope& delta0, const Polytope& delta1, const Polytope& delta2) {
    MixedVolumeCache cache;
    return chi_deg2(delta0, delta1, delta2, cache);
}

namespace detail {

/// Shared geometric aggregates of the degree-3 formulas.
struct Deg3Terms {
    int n = 1;
    Rational sgn, nf;
    Rational v0, v3;        // volumes of delta0, delta3
    Rational vol_big;       // (n+1)-volume of the full lifted polytope
    Rational q2_lift;       // Q^{n+1}_2(delta0 at height 0, Delta_123)
    Rational q4_sigma;      // Q^{n+2}_4 of the four sigma lifts
    Rational q_01, q_03;    // Q^n_2 pairs
    Rational q_123, q_012;  // Q^n_3 triples
    Rational q4;            // Q^n_4 of all four deltas
};

inline Deg3Terms deg3_terms(std::span<const Polytope> deltas, MixedVolumeCache& cache) {
    Deg3Terms t;
    t.n = common_dimension(deltas);
    for (const auto& d : deltas) require_integer_vertices(d);
    const int n = t.n;
    t.sgn = (n % 2 == 0) ? 1 : -1;
    t.nf = Rational(factorial(n));

    const Polytope big = big_delta(3, deltas);
    const Polytope d123 = delta_123(deltas[1], deltas[2], deltas[3]);
    const Polytope d0_lift = lift_shift(deltas[0], {0});

    t.v0 = deltas[0].volume();
    t.v3 = deltas[3].volume();
    t.vol_big = big.volume();
    t.q2_lift = qnk(n + 1, 2, {d0_lift, d123}, cache);
    t.q4_sigma = qnk(n + 2, 4, {ddd(0, deltas[0]), ddd(1, deltas[1]), ddd(2, deltas[2]), ddd(3, deltas[3])}, cache);
    t.q_01 = qnk(n, 2, {deltas[0], deltas[1]}, cache);
    t.q_03 = qnk(n, 2, {deltas[0], deltas[3]}, cache);
    t.q_123 = qnk(n, 3, {deltas[1], deltas[2], deltas[3]}, cache);
    t.q_012 = qnk(n, 3, {deltas[0], deltas[1], deltas[2]}, cache);
    t.q4 = qnk(n, 4, {deltas[0], deltas[1], deltas[2], deltas[3]}, cache);
    return t;
}

}  // namespace detail

/// Strata Euler characteristics for degree 3.
inline StrataChi chi_deg3(const Polytope& delta0, const Polytope& delta1, const Polytope& delta2,
                          const Polytope& delta3, MixedVolumeCache& cache) {
    std::vector<Polytope> deltas{delta0, delta1, delta2, delta3};
    const auto t = detail::deg3_terms(deltas, cache);
    const int n = t.n;
    const Rational pair = Rational((n + 1) * (n + 2));
    const Rational lift_part = Rational(n + 1) * (t.vol_big + t.q2_lift);

    StrataChi chi;
    chi.degree = 3;
    chi.values['H'] = t.sgn * t.nf *
                      (pair * t.q4_sigma + lift_part - 2 * t.v0 - t.v3 - t.q_03 - t.q_123 - t.q4);
    chi.values['I'] = -t.sgn * t.nf *
                      (2 * pair * t.q4_sigma + lift_part - 3 * t.v0 - t.v3 - t.q_03 -
                       2 * t.q_123 - 2 * t.q4);
    chi.values['J'] = t.sgn * t.nf * (pair * t.q4_sigma - t.q_123 - t.q4);
    chi.values['K'] = -t.sgn * t.nf *
                      (Rational(n + 1) * t.q2_lift - t.v0 - t.q_03 + t.q_012 + t.q4);
    chi.values['L'] = t.sgn * t.nf *
                      (Rational(n + 1) * t.q2_lift - 2 * t.v0 - t.q_03 - t.q_01 + t.q_012 + t.q4);
    chi.values['M'] = t.sgn * t.nf * (t.q_01 + t.q_012);
    chi.values['N'] = -t.sgn * t.nf * (t.q_012 + t.q4);
    chi.values['O'] = t.sgn * t.nf * t.q4;
    detail::validate_strata(chi);
    return chi;
}

inline StrataChi chi_deg3(const Polytope& delta0, const Polytope& delta1, const Polytope& delta2,
                          const Polytope& delta3) {
    MixedVolumeCache cache;
    return chi_deg3(delta0, delta1, delta2, delta3, cache);
}

/// chi(L) for the reduced quadratic t^2 + p_1 t + p_2, first form: the star
/// polytope here is the hull of delta1 with half of delta2.
inline Rational chi_L_reduced_a(const Polytope& delta1, const Polytope& delta2,
                                MixedVolumeCache& cache) {
    std::vector<Polytope> deltas{delta1, delta2};
    const int n = detail::common_dimension(deltas);
    const Polytope origin = convex_hull({origin_point(n)});
    const Polytope star = delta_star(origin, delta1, delta2);
    const Rational sgn = (n % 2 == 0) ? -1 : 1;  // (-1)^(n-1)
    return sgn * Rational(factorial(n)) * (2 * star.volume() + qnk(n, 2, {star, delta2}, cache));
}

/// Second form, via the doubled star polytope.
inline Rational chi_L_reduced_b(const Polytope& delta1, const Polytope& delta2,
                                MixedVolumeCache& cache) {
    std::vector<Polytope> deltas{delta1, delta2};
    const int n = detail::common_dimension(deltas);
    const Polytope origin = convex_hull({origin_point(n)});
    const Polytope star2 = delta_star(origin, delta1, delta2).scaled(Rational(2));
    const Rational sgn = (n % 2 == 0) ? -1 : 1;
    return sgn * Rational(factorial(n)) *
           (star2.volume() - qnk(n, 2, {star2, delta1}, cache) + qnk(n, 2, {delta1, delta2}, cache));
}

/// Residual of the combinatorial identity tying a pair of convex bodies to
/// the hull of their union; exactly zero for every valid input. Assembled as
/// a formal homogeneous polynomial and evaluated through mixed volumes.
inline Rational r_residual(const Polytope& s1, const Polytope& s2, MixedVolumeCache& cache) {
    std::vector<Polytope> pair{s1, s2};
    const int n = detail::common_dimension(pair);
    std::vector<RationalPoint> pts = s1.vertices();
    pts.insert(pts.end(), s2.vertices().begin(), s2.vertices().end());
    const Polytope s0 = convex_hull(pts);

    HomogeneousPoly r(3, n);
    r.add_term(std::vector<int>{n, 0, 0}, pow_rational(Rational(2), n) - 2);
    for (int i = 1; i <= n - 1; ++i) {
        r.add_term({0, i, n - i}, pow_rational(Rational(2), n - i));   // Q^n_2(x1, 2*x2)
        r.add_term({i, n - i, 0}, -pow_rational(Rational(2), i));      // -Q^n_2(2*x0, x1)
        r.add_term({i, 0, n - i}, -pow_rational(Rational(2), n - i));  // -Q^n_2(x0, 2*x2)
    }
    if (r.terms().empty()) return Rational(0);  // n = 1 collapses identically

    std::vector<Polytope> bodies{s0, s1, s2};
    return eval_homogeneous(r, std::span<const Polytope>(bodies), cache);
}

/// One linear relation of the degree-3 system: an aggregate of stratum values
/// against an independently recomputed volume combination.
struct RelationCheck {
    std::string name;
    Rational lhs;
    Rational rhs;
    Rational residual() const { return lhs - rhs; }
};

struct ConsistencyReport {
    StrataChi chi;
    std::vector<RelationCheck> relations;

    bool all_zero() const {
        for (const auto& r : relations)
            if (r.residual() != 0) return false;
        return true;
    }
};

/// Evaluates the eight linear relations satisfied by the degree-3 strata
/// values; every residual is expected to be exactly zero.
inline ConsistencyReport consistency_deg3(const Polytope& delta0, const Polytope& delta1,
                                          const Polytope& delta2, const Polytope& delta3,
                                          MixedVolumeCache& cache) {
    std::vector<Polytope> deltas{delta0, delta1, delta2, delta3};
    const auto t = detail::deg3_terms(deltas, cache);
    ConsistencyReport report;
    report.chi = chi_deg3(delta0, delta1, delta2, delta3, cache);
    const auto& chi = report.chi.values;
    const auto chi_at = [&](char c) { return chi.at(c); };
    const Rational pair = Rational((t.n + 1) * (t.n + 2));

    report.relations.push_back({"1equat1", report.chi.sum(), Rational(0)});
    report.relations.push_back({"1equat2a", chi_at('O'), t.sgn * t.nf * t.q4});
    report.relations.push_back({"1equat2b", chi_at('N') + chi_at('O'), -t.sgn * t.nf * t.q_012});
    report.relations.push_back({"1equat2c", chi_at('M') + chi_at('N') + chi_at('O'),
                                t.sgn * t.nf * t.q_01});
    report.relations.push_back({"1equat2d",
                                chi_at('K') + chi_at('L') + chi_at('M') + chi_at('N') + chi_at('O'),
                                -t.sgn * t.nf * t.v0});
    report.relations.push_back({"1equat3",
                                chi_at('O') + chi_at('M') + chi_at('L') + 2 * chi_at('K'),
                                -t.sgn * t.nf * (Rational(t.n + 1) * t.q2_lift - t.q_03)});
    report.relations.push_back({"1equat4",
                                chi_at('O') + chi_at('M') + chi_at('L') + 2 * chi_at('K') +
                                    chi_at('J') + 2 * chi_at('I') + 3 * chi_at('H'),
                                t.sgn * t.nf * (Rational(t.n + 1) * t.vol_big - t.v3)});
    report.relations.push_back({"1chi_W", chi_at('O') + chi_at('J'),
                                t.sgn * t.nf * (pair * t.q4_sigma - t.q_123)});
    return report;
}

}  // namespace stratachi
