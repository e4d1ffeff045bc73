#pragma once

#include <stratachi/laurent.hpp>
#include <stratachi/oracle.hpp>
#include <stratachi/polytope.hpp>
#include <stratachi/strata.hpp>

#include <json.hpp>

#include <stdexcept>
#include <string>
#include <vector>

namespace stratachi {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json rational_to_json(const Rational& x) {
    if (is_integer(x)) {
        const BigInt n = boost::multiprecision::numerator(x);
        if (n >= std::numeric_limits<long long>::min() && n <= std::numeric_limits<long long>::max())
            return Json(n.convert_to<long long>());
    }
    return Json(x.str());
}

inline Rational rational_from_json(const Json& j) {
    if (j.is_number_integer()) return Rational(static_cast<long long>(j.get<long long>()));
    if (j.is_string()) return parse_rational(j.get<std::string>());
    throw std::invalid_argument("expected an integer or a \"p/q\" string");
}

}  // namespace detail

/// Polytope wire format: {"dim": d, "points": [[..], ..]} with coordinates as
/// integers or "p/q" strings. Emission lists the canonical vertices in
/// lexicographic order.
inline Json polytope_to_json(const Polytope& p) {
    Json out;
    out["dim"] = p.ambient_dim();
    Json pts = Json::array();
    for (const auto& v : p.vertices()) {
        Json row = Json::array();
        for (const auto& c : v.coords) row.push_back(detail::rational_to_json(c));
        pts.push_back(std::move(row));
    }
    out["points"] = std::move(pts);
    return out;
}

inline Polytope polytope_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("dim") || !j.contains("points"))
        throw std::invalid_argument("polytope JSON needs \"dim\" and \"points\"");
    const int dim = j.at("dim").get<int>();
    std::vector<RationalPoint> pts;
    for (const auto& row : j.at("points")) {
        Vec coords;
        for (const auto& c : row) coords.push_back(detail::rational_from_json(c));
        if (static_cast<int>(coords.size()) != dim) throw std::invalid_argument("dimension mismatch");
        pts.emplace_back(std::move(coords));
    }
    return convex_hull(pts);
}

/// Laurent polynomial wire format: {"vars": n, "terms": [{"coeff": "c",
/// "exp": [..]}]} with terms ordered by exponent vector.
inline Json laurent_to_json(const LaurentPolynomial& p) {
    Json out;
    out["vars"] = p.num_vars();
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json term;
        term["coeff"] = c.str();
        term["exp"] = e;
        terms.push_back(std::move(term));
    }
    out["terms"] = std::move(terms);
    return out;
}

inline LaurentPolynomial laurent_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw std::invalid_argument("laurent JSON needs \"vars\" and \"terms\"");
    LaurentPolynomial p(j.at("vars").get<int>());
    for (const auto& term : j.at("terms"))
        p.add_term(term.at("exp").get<std::vector<int>>(),
                   detail::rational_from_json(term.at("coeff")));
    return p;
}

/// Strata report: {"degree": k, "chi": {..}, "relations": [{"name": ..,
/// "residual": ".."}]}. chi values are exact integers.
inline Json strata_to_json(const StrataChi& chi) {
    Json out;
    out["degree"] = chi.degree;
    Json values;
    for (const auto& [label, v] : chi.values)
        values[std::string(1, label)] = detail::rational_to_json(v);
    out["chi"] = std::move(values);
    return out;
}

inline Json consistency_to_json(const ConsistencyReport& report) {
    Json out = strata_to_json(report.chi);
    Json relations = Json::array();
    for (const auto& r : report.relations) {
        Json rel;
        rel["name"] = r.name;
        rel["residual"] = r.residual().str();
        relations.push_back(std::move(rel));
    }
    out["relations"] = std::move(relations);
    return out;
}

inline Json oracle_to_json(const OracleReport& report) {
    Json out;
    out["degree"] = report.degree;
    out["trials"] = report.trials;
    out["seed"] = report.seed;
    out["tol"] = report.tol;
    out["coeff_bound"] = report.coeff_bound;
    out["retries"] = report.retries;
    out["matches"] = report.matches;
    out["mismatches"] = report.mismatches;
    out["failed_ambiguous"] = report.failed_ambiguous;
    Json trials = Json::array();
    for (const auto& t : report.per_trial) {
        Json trial;
        trial["seed"] = t.seed;
        trial["attempts"] = t.attempts;
        trial["normalization"] = t.shifts;
        Json counts;
        for (const auto& [label, c] : t.stratum_counts) counts[std::string(1, label)] = c;
        trial["stratum_counts"] = std::move(counts);
        Json predicted;
        for (const auto& [label, v] : t.chi_predicted)
            predicted[std::string(1, label)] = detail::rational_to_json(v);
        trial["chi_predicted"] = std::move(predicted);
        Json observed;
        for (const auto& [label, v] : t.chi_observed)
            observed[std::string(1, label)] = detail::rational_to_json(v);
        trial["chi_observed"] = std::move(observed);
        trial["verdict"] = t.verdict;
        trials.push_back(std::move(trial));
    }
    out["per_trial"] = std::move(trials);
    return out;
}

}  // namespace stratachi
