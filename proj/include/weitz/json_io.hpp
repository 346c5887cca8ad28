#pragma once

#include <json.hpp>

#include "weitz/curvature.hpp"
#include "weitz/reps.hpp"

namespace weitz {

inline constexpr const char* kSchema = "weitzenboeck/1";

/// Curvature tensors serialize with a canonical index set only: 1-based
/// indices, i < j, k < l, (i,j) <= (k,l), values as exact rational strings.
nlohmann::json curvature_to_json(const AlgebraicCurvature& R);

/// Rebuilds the full tensor from the canonical entries and validates the
/// symmetries and the Bianchi identity.
AlgebraicCurvature curvature_from_json(const nlohmann::json& doc);

/// Realizations serialize with entries "a/b+c/d*i"; import validates every
/// realization invariant before returning.
nlohmann::json rep_to_json(const RepRealization& rep);
RepRealization rep_from_json(const nlohmann::json& doc);

}  // namespace weitz
