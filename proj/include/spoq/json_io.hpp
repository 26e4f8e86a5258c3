#pragma once

#include <json.hpp>

#include "spoq/expr.hpp"

namespace spoq {

using Json = nlohmann::ordered_json;

Json rational_json(const Rational& r);
Json superfn_json(const SuperFn& f);

/// {"lambda": ..., "mu": ..., "terms": [{"l", "m", "n", "coeff"}...]},
/// terms sorted by (l, m, n), coefficient lists low-degree-first.
Json operator_json(const DiffOp& D);

Json symbol_json(const Symbol& S);
/// Parts listed by descending degree.
Json graded_json(const GradedSymbol& S);
Json vectorfield_json(const VectorField& X);
Json result_json(const QuantizationResult& r);
Json report_json(const EquivarianceReport& r);
Json critical_json(const std::set<Rational>& values);

/// Text renderings of the same payloads for --format text.
std::string result_text(const QuantizationResult& r);
std::string report_text(const EquivarianceReport& r);

}  // namespace spoq
