#pragma once

// Exact JSON encodings.  Rationals are strings ("-3/4"), so values round-trip
// without loss.
//
//   ring:     {"mode": "generic"} or {"mode": "root_of_unity", "p": 7}
//   scalar:   ring fields plus "coefficients"; generic scalars add "low",
//             the exponent of the first coefficient
//   fraction: {"num": scalar, "den": [[d, e], ...]} for prod Phi_d(A^4)^e
//   matrix:   {"ring", "rows", "cols", "row_labels", "col_labels",
//              "entries": [[fraction, ...], ...]}

#include <json.hpp>

#include "tqft/fraction.hpp"
#include "tqft/ring_matrix.hpp"

namespace tqft {

nlohmann::json to_json(const RingSpec& ring);
RingSpec ring_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Scalar& s);
Scalar scalar_from_json(const nlohmann::json& j);

nlohmann::json to_json(const Fraction& f);
Fraction fraction_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RingMatrix& m);
RingMatrix matrix_from_json(const nlohmann::json& j);

}  // namespace tqft
