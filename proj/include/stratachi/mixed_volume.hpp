#pragma once

#include <stratachi/polytope.hpp>
#include <stratachi/rational.hpp>

#include <algorithm>
#include <map>
#include <mutex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace stratachi {

/// Memo table for mixed volumes and volumes of Minkowski combinations, keyed
/// by multisets of canonical polytope forms. Purely a cache: every stored
/// value equals the value recomputed from scratch. Safe for concurrent use;
/// racing recomputations of the same key are allowed and store equal values.
class MixedVolumeCache {
public:
    std::optional<Rational> find(const std::string& key) const {
        std::lock_guard lock(mu_);
        auto it = entries_.find(key);
        if (it == entries_.end()) return std::nullopt;
        return it->second;
    }

    void store(const std::string& key, const Rational& value) {
        std::lock_guard lock(mu_);
        entries_.emplace(key, value);
    }

    std::size_t size() const {
        std::lock_guard lock(mu_);
        return entries_.size();
    }

private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, Rational> entries_;
};

namespace detail {

/// Volume of j_1*S_1 + ... + j_m*S_m for nonnegative integer weights, with
/// the result memoized by the multiset of scaled summands.
inline Rational weighted_sum_volume(const std::vector<const Polytope*>& bodies,
                                    const std::vector<int>& weights, MixedVolumeCache& cache) {
    std::vector<Polytope> scaled;
    for (std::size_t i = 0; i < bodies.size(); ++i) {
        if (weights[i] == 0) continue;
        scaled.push_back(weights[i] == 1 ? *bodies[i] : bodies[i]->scaled(Rational(weights[i])));
    }
    std::vector<std::string> keys;
    keys.reserve(scaled.size());
    for (const auto& s : scaled) keys.push_back(s.canonical_key());
    std::sort(keys.begin(), keys.end());
    std::string key = "vol";
    for (const auto& k : keys) key += "|" + k;
    if (auto hit = cache.find(key)) return *hit;

    Polytope sum = scaled[0];
    for (std::size_t i = 1; i < scaled.size(); ++i) sum = minkowski_sum(sum, scaled[i]);
    const Rational v = sum.volume();
    cache.store(key, v);
    return v;
}

}  // namespace detail

/// Mixed volume of d bodies in R^d, normalized so that the diagonal gives the
/// ordinary volume: the alternating sum over Minkowski sums of subfamilies,
/// divided by d!. Symmetric, translation-invariant in each argument, and
/// multilinear with respect to Minkowski addition.
inline Rational mixed_volume(std::span<const Polytope> bodies, MixedVolumeCache& cache) {
    if (bodies.empty()) throw std::invalid_argument("arity must equal dimension");
    const int d = bodies[0].ambient_dim();
    for (const auto& b : bodies)
        if (b.ambient_dim() != d) throw std::invalid_argument("dimension mismatch");
    if (static_cast<int>(bodies.size()) != d)
        throw std::invalid_argument("arity must equal dimension");

    // Collapse repeated arguments; equal bodies only multiply the subset
    // counts, so the 2^d inclusion-exclusion shrinks to prod(m_i + 1) terms.
    std::map<std::string, std::pair<const Polytope*, int>> grouped;
    for (const auto& b : bodies) {
        auto [it, fresh] = grouped.try_emplace(b.canonical_key(), &b, 0);
        ++it->second.second;
    }
    std::string key = "mv|d" + std::to_string(d);
    for (const auto& [k, body_mult] : grouped)
        key += "|" + std::to_string(body_mult.second) + "*" + k;
    if (auto hit = cache.find(key)) return *hit;

    std::vector<const Polytope*> distinct;
    std::vector<int> mult;
    for (const auto& [k, body_mult] : grouped) {
        distinct.push_back(body_mult.first);
        mult.push_back(body_mult.second);
    }

    Rational total = 0;
    std::vector<int> j(distinct.size(), 0);
    while (true) {
        // Odometer over 0 <= j_i <= m_i.
        std::size_t pos = 0;
        while (pos < j.size() && j[pos] == mult[pos]) {
            j[pos] = 0;
            ++pos;
        }
        if (pos == j.size()) break;
        ++j[pos];

        int chosen = 0;
        BigInt ways = 1;
        for (std::size_t i = 0; i < j.size(); ++i) {
            chosen += j[i];
            ways *= binomial(mult[i], j[i]);
        }
        const Rational vol = detail::weighted_sum_volume(distinct, j, cache);
        const Rational term = Rational(ways) * vol;
        total += ((d - chosen) % 2 == 0) ? term : -term;
    }
    total /= Rational(factorial(d));
    cache.store(key, total);
    return total;
}

inline Rational mixed_volume(std::initializer_list<Polytope> bodies, MixedVolumeCache& cache) {
    std::vector<Polytope> v(bodies);
    return mixed_volume(std::span<const Polytope>(v), cache);
}

/// Formal homogeneous polynomial with rational coefficients, evaluated on
/// convex bodies by sending each monomial to the mixed volume of the bodies
/// repeated per its exponents.
class HomogeneousPoly {
public:
    HomogeneousPoly(int num_vars, int degree) : num_vars_(num_vars), degree_(degree) {
        if (num_vars < 1 || degree < 1) throw std::invalid_argument("degree and arity must be positive");
    }

    int num_vars() const { return num_vars_; }
    int degree() const { return degree_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }

    void add_term(std::vector<int> exponents, const Rational& coeff) {
        if (static_cast<int>(exponents.size()) != num_vars_)
            throw std::invalid_argument("monomial arity mismatch");
        int total = 0;
        for (int e : exponents) {
            if (e < 0) throw std::invalid_argument("negative exponent in homogeneous polynomial");
            total += e;
        }
        if (total != degree_) throw std::invalid_argument("non-homogeneous term");
        auto [it, fresh] = terms_.try_emplace(std::move(exponents), coeff);
        if (!fresh) {
            it->second += coeff;
            if (it->second == 0) terms_.erase(it);
        }
    }

private:
    int num_vars_;
    int degree_;
    std::map<std::vector<int>, Rational> terms_;
};

inline Rational eval_homogeneous(const HomogeneousPoly& poly, std::span<const Polytope> bodies,
                                 MixedVolumeCache& cache) {
    if (static_cast<int>(bodies.size()) != poly.num_vars())
        throw std::invalid_argument("body count must match polynomial arity");
    if (bodies.empty()) throw std::invalid_argument("empty body list");
    const int d = bodies[0].ambient_dim();
    if (poly.degree() != d)
        throw std::invalid_argument("polynomial degree must equal ambient dimension");
    Rational total = 0;
    for (const auto& [exponents, coeff] : poly.terms()) {
        std::vector<Polytope> args;
        args.reserve(static_cast<std::size_t>(d));
        for (std::size_t i = 0; i < exponents.size(); ++i)
            for (int rep = 0; rep < exponents[i]; ++rep) args.push_back(bodies[i]);
        total += coeff * mixed_volume(std::span<const Polytope>(args), cache);
    }
    return total;
}

namespace detail {

inline void compositions_rec(int remaining, int parts, std::vector<int>& acc,
                             std::vector<std::vector<int>>& out) {
    if (parts == 1) {
        if (remaining >= 1) {
            acc.push_back(remaining);
            out.push_back(acc);
            acc.pop_back();
        }
        return;
    }
    for (int first = 1; first <= remaining - (parts - 1); ++first) {
        acc.push_back(first);
        compositions_rec(remaining - first, parts - 1, acc, out);
        acc.pop_back();
    }
}

}  // namespace detail

/// All compositions of n into k positive parts, in lexicographic order.
inline std::vector<std::vector<int>> compositions(int n, int k) {
    std::vector<std::vector<int>> out;
    std::vector<int> acc;
    detail::compositions_rec(n, k, acc, out);
    return out;
}

/// Q^n_k evaluated on k bodies in R^n: the sum over all compositions
/// (i_1,...,i_k) of n with every part >= 1 of the mixed volume taking body j
/// with multiplicity i_j. Zero when n < k.
inline Rational qnk(int n, int k, std::span<const Polytope> bodies, MixedVolumeCache& cache) {
    if (n <= 0 || k <= 0) throw std::invalid_argument("qnk arguments must be positive");
    if (static_cast<int>(bodies.size()) != k) throw std::invalid_argument("arity mismatch");
    for (const auto& b : bodies)
        if (b.ambient_dim() != n) throw std::invalid_argument("dimension mismatch");
    if (n < k) return Rational(0);
    Rational total = 0;
    for (const auto& comp : compositions(n, k)) {
        std::vector<Polytope> args;
        args.reserve(static_cast<std::size_t>(n));
        for (int j = 0; j < k; ++j)
            for (int rep = 0; rep < comp[static_cast<std::size_t>(j)]; ++rep)
                args.push_back(bodies[static_cast<std::size_t>(j)]);
        total += mixed_volume(std::span<const Polytope>(args), cache);
    }
    return total;
}

inline Rational qnk(int n, int k, std::initializer_list<Polytope> bodies, MixedVolumeCache& cache) {
    std::vector<Polytope> v(bodies);
    return qnk(n, k, std::span<const Polytope>(v), cache);
}

}  // namespace stratachi
