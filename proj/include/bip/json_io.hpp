#pragma once

#include <json.hpp>

#include "bip/intpoly.hpp"
#include "bip/polytope.hpp"
#include "bip/retraction.hpp"

namespace bip {

using ordered_json = nlohmann::ordered_json;

// {"vertices": [[ints]], "facets": [{"normal": [...], "offset": o}], "fvector": [...]}
ordered_json polytope_to_json(const LatticePolytope& P);

// Rebuilds the hull from "vertices"; optional "facets"/"fvector" entries are
// cross-checked against the recomputed polytope.
LatticePolytope polytope_from_json(const ordered_json& j, const HullLimits& lim = {});

ordered_json polynomial_to_json(const IntPolynomial& p);

// Ordered steps with vertex coordinates, face vertex-sets and step_dim.
ordered_json retraction_to_json(const LatticePolytope& P, const RetractionSequence& rs);

}  // namespace bip
