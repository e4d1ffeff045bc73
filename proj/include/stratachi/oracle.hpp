#pragma once

#include <stratachi/laurent.hpp>
#include <stratachi/polytope.hpp>
#include <stratachi/rng.hpp>
#include <stratachi/roots.hpp>
#include <stratachi/strata.hpp>
#include <stratachi/unipoly.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace stratachi {

/// Finite-stratum point counts from one classified coefficient draw. The
/// open stratum is not counted directly; its Euler characteristic is minus
/// the total since chi(C*) = 0.
struct StrataCounts {
    std::map<char, long long> counts;
    bool ambiguous = false;
};

namespace detail {

struct EvalResult {
    QuadComplex value;
    QuadFloat scale;  // magnitude bound sum |c_j| |z|^j, floored at 1
};

inline EvalResult eval_with_scale(const UniPoly& p, const QuadComplex& z) {
    const auto c = quad_coeffs(p);
    EvalResult r{horner(c, z), QuadFloat(0)};
    const QuadFloat az = abs(z);
    QuadFloat zpow = 1;
    for (std::size_t i = 0; i < c.size(); ++i) {
        r.scale += abs(c[i]) * zpow;
        zpow *= az;
    }
    r.scale = (std::max)(r.scale, QuadFloat(1));
    return r;
}

enum class ZeroTest { kZero, kNonzero, kAmbiguous };

inline ZeroTest zero_test(const EvalResult& e, long double tol) {
    const long double ratio = QuadFloat(abs(e.value) / e.scale).convert_to<long double>();
    if (ratio <= tol) return ZeroTest::kZero;
    if (ratio < 10.0L * tol) return ZeroTest::kAmbiguous;
    return ZeroTest::kNonzero;
}

/// Multiset of cluster sizes of the roots of a t-polynomial with the given
/// complex coefficients (leading-first). Empty on ambiguity.
inline std::vector<int> t_root_pattern(const std::vector<QuadComplex>& coeffs, long double tol,
                                       bool& ambiguous) {
    const auto roots = complex_poly_roots_quad(coeffs);
    std::vector<ComplexLD> ld;
    ld.reserve(roots.size());
    for (const auto& r : roots) ld.push_back(to_ld(r));
    const Clusters cl = cluster_points(ld, tol);
    if (cl.ambiguous) {
        ambiguous = true;
        return {};
    }
    std::vector<int> sizes;
    sizes.reserve(cl.groups.size());
    for (const auto& g : cl.groups) sizes.push_back(static_cast<int>(g.size()));
    std::sort(sizes.begin(), sizes.end());
    return sizes;
}

}  // namespace detail

namespace detail {

/// Flags, per event point, whether a given exact polynomial vanishes there.
/// Every event is a root of the squarefree event polynomial FE, so p
/// vanishes at an event iff the event matches a root of gcd(FE, p); the
/// match is sound because the event certification guarantees pairwise
/// separations above the guard band. A root that matches nothing signals a
/// numeric failure and poisons the trial.
inline std::vector<char> vanishing_flags(const UniPoly& fe, const UniPoly& factor,
                                         const std::vector<ComplexLD>& events, long double tol,
                                         bool& ambiguous) {
    std::vector<char> flags(events.size(), 0);
    if (factor.is_zero()) {
        std::fill(flags.begin(), flags.end(), 1);
        return flags;
    }
    const UniPoly stripped = factor.strip_power().second;
    if (stripped.degree() == 0) return flags;
    const UniPoly g = gcd(fe, stripped);
    if (g.degree() <= 0) return flags;
    for (const auto& r : polynomial_roots(g)) {
        bool found = false;
        for (std::size_t i = 0; i < events.size(); ++i) {
            const long double s = std::max({1.0L, std::abs(r), std::abs(events[i])});
            const long double d = std::abs(r - events[i]);
            if (d <= tol * s) {
                flags[i] = 1;
                found = true;
                break;
            }
            if (d < 10.0L * tol * s) {
                ambiguous = true;
                return flags;
            }
        }
        if (!found) {
            ambiguous = true;
            return flags;
        }
    }
    return flags;
}

}  // namespace detail

/// Classifies the finite strata of C* for one draw of integer coefficient
/// polynomials p[0..k] (leading-first). Event points are located numerically
/// as the roots of the squarefree part of p_0 * disc (plus p_1 for the
/// degree-drop chain). Whether a coefficient vanishes at an event is decided
/// exactly through gcd factors; root multiplicities of P_z(t) come from
/// clustered numeric t-roots computed at a quad-polished event point. The
/// distinct-root total is anchored by the exact gcd-based count, and any
/// decision inside the tolerance guard band marks the trial ambiguous.
inline StrataCounts classify_strata_1d(const std::vector<UniPoly>& p, int k, double tol) {
    if (k < 2 || k > 3) throw std::invalid_argument("degree must be 2 or 3");
    if (static_cast<int>(p.size()) != k + 1) throw std::invalid_argument("coefficient count mismatch");
    if (p[0].is_zero()) throw std::invalid_argument("zero leading coefficient");
    const long double ltol = static_cast<long double>(tol);

    StrataCounts out;
    const std::string finite_labels = (k == 2) ? "LMNO" : "IJKLMNO";
    for (char c : finite_labels) out.counts[c] = 0;

    const UniPoly disc = discriminant_t(p, k);
    if (disc.is_zero()) {
        out.ambiguous = true;  // degenerate draw: the coincidence locus is not finite
        return out;
    }
    const int exact_count = distinct_roots_cstar(p[0] * disc);

    UniPoly event_src = p[0] * disc;
    if (p[1].degree() > 0) event_src = event_src * p[1];
    const UniPoly stripped = event_src.strip_power().second;
    if (stripped.degree() == 0) {
        if (exact_count != 0) out.ambiguous = true;
        return out;
    }
    const UniPoly fe = squarefree_part(stripped);

    std::vector<ComplexLD> events = polynomial_roots(fe);
    {
        // Certification: every root simple and every pair separated beyond
        // the guard band, so distances to factor roots decide cleanly.
        const Clusters check = cluster_points(events, ltol);
        if (check.ambiguous || static_cast<int>(check.groups.size()) != fe.degree()) {
            out.ambiguous = true;
            return out;
        }
    }

    bool amb = false;
    std::vector<std::vector<char>> vanish;  // per coefficient polynomial
    for (int j = 0; j <= k; ++j) {
        vanish.push_back(detail::vanishing_flags(fe, p[static_cast<std::size_t>(j)], events, ltol, amb));
        if (amb) {
            out.ambiguous = true;
            return out;
        }
    }
    const std::vector<char> disc_flags = detail::vanishing_flags(fe, disc, events, ltol, amb);
    std::vector<char> quad_double_flags(events.size(), 0);
    if (!amb && k == 3) {
        // Double-root locus of the residual quadratic p1 t^2 + p2 t + p3.
        const UniPoly disc2 = p[2] * p[2] - p[1] * p[3] * Rational(4);
        quad_double_flags = detail::vanishing_flags(fe, disc2, events, ltol, amb);
    }
    if (amb) {
        out.ambiguous = true;
        return out;
    }

    // Anchor: numerically distinct events attributed to p_0 * disc must
    // agree with the exact count.
    int anchored = 0;
    for (std::size_t i = 0; i < events.size(); ++i)
        if (vanish[0][i] || disc_flags[i]) ++anchored;
    if (anchored != exact_count) {
        out.ambiguous = true;
        return out;
    }

    for (std::size_t i = 0; i < events.size(); ++i) {
        const QuadComplex z0 = newton_polish_quad(
            fe, QuadComplex(QuadFloat(events[i].real()), QuadFloat(events[i].imag())));
        const auto value_at = [&](int j) {
            return detail::eval_with_scale(p[static_cast<std::size_t>(j)], z0).value;
        };

        if (!vanish[0][i]) {
            // Full degree here; a pure p_1 event with nonvanishing
            // discriminant lies in the open stratum and counts nothing.
            if (!disc_flags[i]) continue;
            std::vector<QuadComplex> coeffs;
            for (int j = 0; j <= k; ++j) coeffs.push_back(value_at(j));
            const auto pattern = detail::t_root_pattern(coeffs, ltol, amb);
            if (amb) {
                out.ambiguous = true;
                return out;
            }
            if (k == 2 && pattern == std::vector<int>{2}) {
                ++out.counts['L'];
            } else if (k == 3 && pattern == std::vector<int>{3}) {
                ++out.counts['J'];
            } else if (k == 3 && pattern == std::vector<int>{1, 2}) {
                ++out.counts['I'];
            } else {
                out.ambiguous = true;  // clustering disagrees with the exact locus
                return out;
            }
            continue;
        }

        // Leading coefficient vanishes: walk the degree-drop chain.
        if (k == 2) {
            if (!vanish[1][i])
                ++out.counts['M'];
            else if (!vanish[2][i])
                ++out.counts['N'];
            else
                ++out.counts['O'];
            continue;
        }
        if (vanish[1][i]) {
            if (!vanish[2][i])
                ++out.counts['M'];
            else if (!vanish[3][i])
                ++out.counts['N'];
            else
                ++out.counts['O'];
            continue;
        }
        // Residual quadratic: clustered t-roots cross-checked against the
        // exact double-root locus.
        const auto pattern =
            detail::t_root_pattern({value_at(1), value_at(2), value_at(3)}, ltol, amb);
        if (amb) {
            out.ambiguous = true;
            return out;
        }
        const bool exact_double = quad_double_flags[i] != 0;
        if (pattern == std::vector<int>{2} && exact_double) {
            ++out.counts['L'];
        } else if (pattern == std::vector<int>{1, 1} && !exact_double) {
            ++out.counts['K'];
        } else {
            out.ambiguous = true;
            return out;
        }
    }
    return out;
}

/// One oracle trial: the draw, its normalization, the observed counts and
/// both Euler-characteristic vectors.
struct OracleTrial {
    std::uint64_t seed = 0;
    int attempts = 1;
    std::vector<int> shifts;  // minimal exponent of each coefficient polynomial
    std::map<char, long long> stratum_counts;
    std::map<char, Rational> chi_observed;
    std::map<char, Rational> chi_predicted;
    std::string verdict;  // match | mismatch | ambiguous
};

struct OracleReport {
    int degree = 2;
    int trials = 0;
    int retries = 0;
    double tol = 1e-8;
    int coeff_bound = 50;
    std::uint64_t seed = 0;
    std::vector<OracleTrial> per_trial;
    int matches = 0;
    int mismatches = 0;
    int failed_ambiguous = 0;

    bool all_match() const { return mismatches == 0 && failed_ambiguous == 0; }
};

/// Draws `trials` random coefficient systems on the prescribed Newton
/// segments, classifies the actual strata of C* and compares with the
/// closed-form prediction. Ambiguous draws are redrawn up to `retry_cap`
/// times before counting as failed.
inline OracleReport verify_1d(const std::vector<Polytope>& segments, int degree, int trials,
                              std::uint64_t seed, double tol = 1e-8, int coeff_bound = 50,
                              int retry_cap = 5) {
    if (degree < 2 || degree > 3) throw std::invalid_argument("degree must be 2 or 3");
    if (static_cast<int>(segments.size()) != degree + 1)
        throw std::invalid_argument("segment count must be degree + 1");
    if (trials < 1) throw std::invalid_argument("trials must be positive");
    for (const auto& s : segments)
        if (s.ambient_dim() != 1) throw std::invalid_argument("segments must be one-dimensional");

    MixedVolumeCache cache;
    const StrataChi predicted =
        (degree == 2) ? chi_deg2(segments[0], segments[1], segments[2], cache)
                      : chi_deg3(segments[0], segments[1], segments[2], segments[3], cache);
    const char open_label = (degree == 2) ? 'K' : 'H';

    OracleReport report;
    report.degree = degree;
    report.trials = trials;
    report.tol = tol;
    report.coeff_bound = coeff_bound;
    report.seed = seed;

    for (int t = 0; t < trials; ++t) {
        OracleTrial trial;
        for (int attempt = 0;; ++attempt) {
            const std::uint64_t trial_seed =
                splitmix64(splitmix64(seed + 0x9e3779b97f4a7c15ULL * static_cast<std::uint64_t>(t + 1)) +
                           static_cast<std::uint64_t>(attempt));
            Rng rng(trial_seed);
            const auto polys = random_generic(segments, coeff_bound, rng);

            // Common monomial normalization z^M keeps the t-root structure at
            // every torus point and clears all negative exponents.
            int min_exp = 0;
            std::vector<int> mins;
            for (const auto& poly : polys) {
                const int me = poly.terms().begin()->first[0];
                mins.push_back(me);
                min_exp = std::min(min_exp, me);
            }
            std::vector<UniPoly> coeffs;
            for (const auto& poly : polys) {
                int max_exp = 0;
                for (const auto& [e, c] : poly.terms()) max_exp = std::max(max_exp, e[0]);
                std::vector<Rational> dense(static_cast<std::size_t>(max_exp - min_exp) + 1, Rational(0));
                for (const auto& [e, c] : poly.terms()) dense[static_cast<std::size_t>(e[0] - min_exp)] = c;
                coeffs.emplace_back(std::move(dense));
            }

            const StrataCounts counts = classify_strata_1d(coeffs, degree, tol);
            if (counts.ambiguous && attempt < retry_cap) {
                ++report.retries;
                continue;
            }

            trial.seed = trial_seed;
            trial.attempts = attempt + 1;
            trial.shifts = mins;
            trial.stratum_counts = counts.counts;
            trial.chi_predicted = predicted.values;
            if (counts.ambiguous) {
                trial.verdict = "ambiguous";
                ++report.failed_ambiguous;
            } else {
                long long total = 0;
                for (const auto& [label, c] : counts.counts) {
                    trial.chi_observed[label] = Rational(c);
                    total += c;
                }
                trial.chi_observed[open_label] = Rational(-total);
                trial.verdict = (trial.chi_observed == predicted.values) ? "match" : "mismatch";
                if (trial.verdict == "match")
                    ++report.matches;
                else
                    ++report.mismatches;
            }
            break;
        }
        report.per_trial.push_back(std::move(trial));
    }
    return report;
}

}  // namespace stratachi
