#pragma once

#include <stratachi/lifts.hpp>
#include <stratachi/mixed_volume.hpp>
#include <stratachi/sampling.hpp>
#include <stratachi/strata.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace stratachi {

/// Outcome of a randomized identity suite: how many trials ran and which
/// failed, with a short note per failure.
struct VerifySuiteReport {
    std::string name;
    int dim = 0;
    int trials = 0;
    std::uint64_t seed = 0;
    int failures = 0;
    std::vector<std::string> failure_notes;

    bool ok() const { return failures == 0; }
    std::string summary() const {
        return std::to_string(trials - failures) + "/" + std::to_string(trials) +
               (name == "prism" || name == "del" ? " identities hold" : " residuals zero");
    }
};

/// Hull-of-union residual on random rational pairs; expected exactly zero.
inline VerifySuiteReport verify_r_identity(int dim, int trials, std::uint64_t seed,
                                           long long box = 3) {
    VerifySuiteReport report{"r-identity", dim, trials, seed, 0, {}};
    Rng rng(seed);
    MixedVolumeCache cache;
    for (int t = 0; t < trials; ++t) {
        const Polytope s1 = random_rational_polytope(dim, box, 4, rng);
        const Polytope s2 = random_rational_polytope(dim, box, 4, rng);
        const Rational residual = r_residual(s1, s2, cache);
        if (residual != 0) {
            ++report.failures;
            if (report.failure_notes.size() < 5)
                report.failure_notes.push_back("trial " + std::to_string(t) + ": residual " +
                                               residual.str());
        }
    }
    return report;
}

/// Volume of the hull of two parallel slabs against the cross-term formula.
inline VerifySuiteReport verify_prism(int dim, int trials, std::uint64_t seed, long long box = 3) {
    VerifySuiteReport report{"prism", dim, trials, seed, 0, {}};
    Rng rng(seed);
    MixedVolumeCache cache;
    for (int t = 0; t < trials; ++t) {
        const Polytope a = random_lattice_polytope(dim, box, rng);
        const Polytope b = random_lattice_polytope(dim, box, rng);
        std::vector<RationalPoint> pts = lift_shift(a, {0}).vertices();
        const auto top = lift_shift(b, {1}).vertices();
        pts.insert(pts.end(), top.begin(), top.end());
        const Rational lhs = convex_hull(pts).volume();
        const Rational rhs =
            (a.volume() + qnk(dim, 2, {a, b}, cache) + b.volume()) / Rational(dim + 1);
        if (lhs != rhs) {
            ++report.failures;
            if (report.failure_notes.size() < 5)
                report.failure_notes.push_back("trial " + std::to_string(t) + ": " + lhs.str() +
                                               " vs " + rhs.str());
        }
    }
    return report;
}

/// Volume of the degree-2 lifted polytope against its star decomposition.
inline VerifySuiteReport verify_del(int dim, int trials, std::uint64_t seed, long long box = 3) {
    VerifySuiteReport report{"del", dim, trials, seed, 0, {}};
    Rng rng(seed);
    MixedVolumeCache cache;
    for (int t = 0; t < trials; ++t) {
        std::vector<Polytope> deltas;
        for (int i = 0; i < 3; ++i) deltas.push_back(random_lattice_polytope(dim, box, rng));
        const Polytope star = delta_star(deltas[0], deltas[1], deltas[2]);
        const Rational lhs = big_delta(2, std::span<const Polytope>(deltas)).volume();
        const Rational rhs = (deltas[0].volume() + 2 * star.volume() + deltas[2].volume() +
                              qnk(dim, 2, {deltas[0], star}, cache) +
                              qnk(dim, 2, {star, deltas[2]}, cache)) /
                             Rational(dim + 1);
        if (lhs != rhs) {
            ++report.failures;
            if (report.failure_notes.size() < 5)
                report.failure_notes.push_back("trial " + std::to_string(t) + ": " + lhs.str() +
                                               " vs " + rhs.str());
        }
    }
    return report;
}

/// The eight degree-3 linear relations on random integer quadruples.
inline VerifySuiteReport verify_consistency(int dim, int trials, std::uint64_t seed,
                                            long long box = 2) {
    VerifySuiteReport report{"consistency", dim, trials, seed, 0, {}};
    Rng rng(seed);
    MixedVolumeCache cache;
    for (int t = 0; t < trials; ++t) {
        std::vector<Polytope> deltas;
        for (int i = 0; i < 4; ++i) deltas.push_back(random_lattice_polytope(dim, box, rng));
        const ConsistencyReport rel =
            consistency_deg3(deltas[0], deltas[1], deltas[2], deltas[3], cache);
        for (const auto& r : rel.relations) {
            if (r.residual() != 0) {
                ++report.failures;
                if (report.failure_notes.size() < 5)
                    report.failure_notes.push_back("trial " + std::to_string(t) + ": " + r.name +
                                                   " residual " + r.residual().str());
                break;
            }
        }
    }
    return report;
}

}  // namespace stratachi
