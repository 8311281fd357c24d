#pragma once

#include <json.hpp>

#include "caus/affine.hpp"
#include "caus/causal_set.hpp"
#include "caus/model.hpp"

namespace caus {

using Json = nlohmann::ordered_json;

/// Rationals are written as "p/q" strings; integers and "p" strings are accepted on input.
Json to_json(const Rational& q);
Rational rational_from_json(const Json& j);

Json to_json(const RationalVector& v);
RationalVector vector_from_json(const Json& j);

Json to_json(const RationalMatrix& m);
RationalMatrix matrix_from_json(const Json& j);

/// {"basepoint": [...], "directions": [[...], ...]} or {"empty": true, "ambient": n}.
Json to_json(const AffineSubspace& s);
/// The ambient dimension is needed when the subspace has no basepoint to infer it from.
AffineSubspace subspace_from_json(const Json& j);

/// {"kind": "classical", "dim": n} or {"kind": "quantum", "blocks": [[2], [2, 2], []]}.
/// Tensor products of multi-block objects also carry "slots".
Json to_json(const ModelObject& o);
/// Also accepts an integer (classical dimension) or a list of block dimensions.
ModelObject object_from_json(const Json& j, Backend backend);

/// backend, object, body and derived stats.
Json to_json(const CausalSet& c);
CausalSet causal_set_from_json(const Json& j);

/// {"backend", "src", "dst", "matrix"}.
Json to_json(const Morphism& f);
Morphism morphism_from_json(const Json& j);

/// {"vector": [...]} or {"blocks": [{"re": [[...]], "im": [[...]]}, ...]}; "im" may be omitted.
RationalVector state_from_json(const Json& j, const ModelObject& o);

}  // namespace caus
