#pragma once

#include <json.hpp>

#include "werner/decomposition.hpp"
#include "werner/rational.hpp"

namespace werner {

using Json = nlohmann::ordered_json;

namespace detail {

inline Json matrix_json(const DenseMatrix& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.dim(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.dim(); ++j) {
            row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

}  // namespace detail

/// Full certificate document: exact weights, labels, factor matrices as
/// rows of [re, im] pairs, and the assembly deviation.
inline Json certificate_json(const CertificateReport& report) {
    Json doc;
    doc["d"] = report.d;
    doc["epsilon_c"] = fraction_string(report.epsilon_c);
    doc["epsilon_c_decimal"] = to_double(report.epsilon_c);
    doc["term_count"] = report.terms.size();
    doc["max_deviation"] = report.max_deviation;
    Json terms = Json::array();
    for (const DecompositionTerm& term : report.terms) {
        Json entry;
        entry["weight"] = fraction_string(term.weight);
        entry["weight_decimal"] = to_double(term.weight);
        entry["label"] = term.label;
        Json factors = Json::array();
        for (const DenseMatrix& factor : term.factors) factors.push_back(detail::matrix_json(factor));
        entry["factors"] = std::move(factors);
        terms.push_back(std::move(entry));
    }
    doc["terms"] = std::move(terms);
    return doc;
}

/// Listing-only document for qubit counts beyond the assembly cap: labels
/// and exact weights, no factor matrices and no verification.
inline Json enumeration_json(int d) {
    const Rational eps_c = critical_epsilon(d);
    const Rational pole_weight = eps_c / 2;
    const Rational term_weight = eps_c / pow_int(2, d - 1);

    Json doc;
    doc["d"] = d;
    doc["epsilon_c"] = fraction_string(eps_c);
    doc["epsilon_c_decimal"] = to_double(eps_c);
    Json terms = Json::array();
    for (int axis : {3, -3}) {
        Json entry;
        entry["weight"] = fraction_string(pole_weight);
        entry["label"] = IndexTuple(static_cast<std::size_t>(d), axis);
        terms.push_back(std::move(entry));
    }
    for (const IndexTuple& tuple : enumerate_terms(d)) {
        Json entry;
        entry["weight"] = fraction_string(term_weight);
        entry["label"] = tuple;
        terms.push_back(std::move(entry));
    }
    doc["term_count"] = terms.size();
    doc["terms"] = std::move(terms);
    return doc;
}

}  // namespace werner
