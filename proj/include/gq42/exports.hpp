#pragma once

#include <string>

#include "json.hpp"

#include "gq42/covers.hpp"
#include "gq42/hermitian.hpp"
#include "gq42/hyperplanes.hpp"
#include "gq42/symmetry.hpp"
#include "gq42/veldkamp.hpp"

namespace gq42 {

/// points: [{id, coords: [4 tags]}], lines: [{id, points: [5 ids]}].
/// Coordinate tags: 0, 1, 2 = w, 3 = w^2.
nlohmann::json geometry_to_json(const HermitianGeometry& geom);

/// [{id, kind, center? | plane? | triads?, points: [...]}].
nlohmann::json hyperplanes_to_json(const HyperplaneCatalog& cat);

/// [{members, size, composition, core}].
nlohmann::json vlines_to_json(const VeldkampCensus& census);

/// {order, generators: [[45 ids]]}.
nlohmann::json group_to_json(const AutomorphismGroup& group);

/// Collinearity graph in DOT form, edges annotated with their line ids.
std::string geometry_to_dot(const HermitianGeometry& geom);

/// Round-trip import of the geometry schema.
struct ImportedGeometry {
  std::vector<Vec4> point_coords;
  IncidenceStructure structure;
};
ImportedGeometry geometry_from_json(const nlohmann::json& j);

/// Round-trip import of the hyperplane schema (point sets and kinds).
std::vector<std::pair<std::string, PointSet>> hyperplanes_from_json(
    const nlohmann::json& j);

}  // namespace gq42
