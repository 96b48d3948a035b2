#pragma once

#include <memory>
#include <optional>
#include <vector>

#include "gq42/covers.hpp"
#include "gq42/hermitian.hpp"
#include "gq42/hyperplanes.hpp"
#include "gq42/incidence.hpp"
#include "gq42/pg34.hpp"
#include "gq42/subquads.hpp"
#include "gq42/symmetry.hpp"
#include "gq42/veldkamp.hpp"

namespace gq42 {

/// Builds the geometry and its derived catalogs on demand and caches them.
/// Everything is deterministic; a workspace is bound to one Gram choice.
class Workspace {
 public:
  explicit Workspace(GramKind gram = GramKind::SymplecticJ) : gram_(gram) {}

  GramKind gram() const { return gram_; }

  const ProjectiveSpace& pg();
  const HermitianGeometry& geometry();
  const Incidence& gq();
  const HyperplaneCatalog& hyperplanes();
  const FanCatalog& fans();
  const AutomorphismGroup& group();
  const VeldkampCensus& veldkamp();

  /// The 36 GQ(2,2) copies. For the symplectic-j gram the canonical
  /// (GF(2)-rational) copy is placed first as copy 0; the rest follow in
  /// canonical set order.
  const std::vector<PointSet>& copies();
  /// Independent Baer-frame enumeration, for cross-checking.
  const std::vector<PointSet>& copies_by_frames();

  /// The copy anchoring tri-/uni-tripod classification (default copy 0).
  PointSet reference_copy(int index = 0);

 private:
  GramKind gram_;
  std::optional<ProjectiveSpace> pg_;
  std::optional<HermitianGeometry> geom_;
  std::optional<Incidence> gq_;
  std::optional<HyperplaneCatalog> cat_;
  std::optional<FanCatalog> fans_;
  std::optional<AutomorphismGroup> group_;
  std::optional<VeldkampCensus> census_;
  std::optional<std::vector<PointSet>> copies_;
  std::optional<std::vector<PointSet>> frame_copies_;
};

}  // namespace gq42
