#include "gq42/workspace.hpp"

#include <algorithm>
#include <stdexcept>

namespace gq42 {

const ProjectiveSpace& Workspace::pg() {
  if (!pg_) pg_.emplace();
  return *pg_;
}

const HermitianGeometry& Workspace::geometry() {
  if (!geom_) geom_.emplace(pg(), gram_);
  return *geom_;
}

const Incidence& Workspace::gq() {
  if (!gq_) gq_.emplace(geometry().gq_structure());
  return *gq_;
}

const HyperplaneCatalog& Workspace::hyperplanes() {
  if (!cat_) cat_.emplace(geometry(), gq());
  return *cat_;
}

const FanCatalog& Workspace::fans() {
  if (!fans_) fans_.emplace(hyperplanes());
  return *fans_;
}

const AutomorphismGroup& Workspace::group() {
  if (!group_) group_ = automorphism_group(gq());
  return *group_;
}

const VeldkampCensus& Workspace::veldkamp() {
  if (!census_) census_.emplace(hyperplanes());
  return *census_;
}

const std::vector<PointSet>& Workspace::copies_by_frames() {
  if (!frame_copies_) frame_copies_ = gq22_copies_by_frames(geometry(), gq());
  return *frame_copies_;
}

const std::vector<PointSet>& Workspace::copies() {
  if (!copies_) {
    PointSet seed;
    bool canonical_first = false;
    if (gram_ == GramKind::SymplecticJ) {
      seed = geometry().canonical_gq22();
      canonical_first = true;
    } else {
      const auto& found = copies_by_frames();
      if (found.empty()) throw std::logic_error("no GQ(2,2) copies found");
      seed = found.front();
    }
    auto orbit = gq22_copies_by_orbit(seed, group().generators);
    if (canonical_first) {
      auto it = std::find(orbit.begin(), orbit.end(), seed);
      if (it == orbit.end()) throw std::logic_error("seed copy missing from its orbit");
      std::rotate(orbit.begin(), it, it + 1);
    }
    copies_ = std::move(orbit);
  }
  return *copies_;
}

PointSet Workspace::reference_copy(int index) {
  const auto& list = copies();
  if (index < 0 || index >= static_cast<int>(list.size())) {
    throw std::invalid_argument("reference_copy: index out of range");
  }
  return list[static_cast<std::size_t>(index)];
}

}  // namespace gq42
