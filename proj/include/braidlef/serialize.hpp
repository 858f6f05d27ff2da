#pragma once

// JSON serialization for the exchange types. Shapes are stable:
//   RingElem    {"terms": [{"word": "a1 a2^-1", "coeff": "-3"}, ...]}
//   NormalForm  {"mu": -1, "I": [4], "gamma": "1", "n": 3}
//   LaurentPoly {"-1": "2", "3": "-1"}       (exponent -> coefficient)
// Coefficients travel as strings because they are arbitrary-precision.
// Term order follows the canonical word order; Laurent keys are emitted in
// ascending exponent order.

#include "json.hpp"

#include "braidlef/burau.hpp"
#include "braidlef/groupring.hpp"
#include "braidlef/normalize.hpp"

namespace braidlef {

nlohmann::ordered_json ring_to_json(const RingElem& x);
RingElem ring_from_json(const nlohmann::ordered_json& j, int n);

nlohmann::ordered_json normal_form_to_json(const NormalForm& nf);
NormalForm normal_form_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json laurent_to_json(const LaurentPoly& p);
LaurentPoly laurent_from_json(const nlohmann::ordered_json& j);

nlohmann::ordered_json laurent_matrix_to_json(const LaurentMatrix& m);

}  // namespace braidlef
