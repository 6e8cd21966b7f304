#pragma once

// JSON wire formats.  Rationals travel as "num/den" strings, angles in
// units of pi with an explicit marker, knots as {"tangles": [[p, q], ...],
// "e0": n}.

#include <string>

#include <json.hpp>

#include "montesinos/classifier.hpp"
#include "montesinos/gauss_bonnet.hpp"

namespace montesinos {

nlohmann::json rational_to_json(const Rational& r);
Rational rational_from_json(const nlohmann::json& j, const std::string& where);

nlohmann::json knot_to_json(const MontesinosKnot& knot);
MontesinosKnot knot_from_json(const nlohmann::json& j);

nlohmann::json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const nlohmann::json& j);

nlohmann::json farkas_to_json(const FarkasWitness& witness);
nlohmann::json violations_to_json(const std::vector<Violation>& violations);
nlohmann::json partial_fraction_to_json(const PartialFractionForm& form);

// {"knot": ..., "verdict": "certified"|"family"|"anomaly", "certificate":
//  {...}|null, "family": 1..5|null, "certificate_source":
//  "preset"|"solver"|null, "disclaimer": "assumes K hyperbolic"}
nlohmann::json classification_to_json(const MontesinosKnot& knot, const Classification& cls);

nlohmann::json cross_check_to_json(const MontesinosKnot& knot, const CrossCheckReport& report);

// Throws GraphError naming the offending field on schema violations.
GeneralizedGraph graph_from_json(const nlohmann::json& j);
nlohmann::json graph_to_json(const GeneralizedGraph& graph);

nlohmann::json graph_report_to_json(const GraphReport& report);

} // namespace montesinos
