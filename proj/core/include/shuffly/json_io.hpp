#pragma once

#include "shuffly/decompose.hpp"
#include "shuffly/element.hpp"
#include "shuffly/relations.hpp"

#include <json.hpp>

namespace shuffly {

// Element schema:
//   {"parities": "010", "degree": [2,1],
//    "numerator": [{"coeff": "-3/2", "exps": {"h": 1, "x1_1": 2}}]}
// Terms are emitted in canonical order with nonzero exponents only; input
// tolerates zero exponents. Mode is inferred: an element is trigonometric
// exactly when "v" occurs or some exponent is negative.
nlohmann::json element_to_json(const shuffle_element& f);
shuffle_element element_from_json(const nlohmann::json& j);

nlohmann::json poly_to_json(const poly& p);
poly poly_from_json(const nlohmann::json& j);

// Specialization results reuse the term schema with y-variables.
nlohmann::json specialization_to_json(const specialization_result& r);

// {"coefficients": [{"monomial": [["a1..1", 0], ...], "coeff": "3"}],
//  "residual": "0"}
nlohmann::json decomposition_to_json(const decomposition& dec);

nlohmann::json check_records_to_json(const std::vector<check_record>& records);

} // namespace shuffly
