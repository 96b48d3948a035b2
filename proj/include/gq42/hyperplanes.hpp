#pragma once

#include <array>
#include <unordered_map>
#include <vector>

#include "gq42/bitset.hpp"
#include "gq42/hermitian.hpp"
#include "gq42/incidence.hpp"

namespace gq42 {

enum class HyperplaneKind { Perp, PlaneOvoid, Tripod };

const char* kind_name(HyperplaneKind k);

/// A geometric hyperplane of GQ(4,2): a proper point subset met by every
/// line in exactly 1 or all 5 points. Perps carry their center, plane ovoids
/// their secant plane, tripods their unique decomposition into three
/// tricentric triads.
struct Hyperplane {
  int id{-1};
  PointSet points;
  HyperplaneKind kind{HyperplaneKind::Perp};
  int center{-1};                  // Perp: GQ point id
  int plane{-1};                   // PlaneOvoid: PG plane id
  std::array<PointSet, 3> triads;  // Tripod: the decomposition
};

enum class TripodRel { Tri, Uni };

/// The complete catalog of the 245 geometric hyperplanes, enumerated two
/// independent ways (line DFS and perps + exact-cover ovoids) which must
/// agree. Ids follow the lexicographic order of the point sets.
class HyperplaneCatalog {
 public:
  HyperplaneCatalog(const HermitianGeometry& geom, const Incidence& inc);

  const std::vector<Hyperplane>& all() const { return all_; }
  const Hyperplane& operator[](int id) const {
    return all_[static_cast<std::size_t>(id)];
  }
  int size() const { return static_cast<int>(all_.size()); }

  const std::vector<int>& perps() const { return perps_; }
  const std::vector<int>& plane_ovoids() const { return plane_ovoids_; }
  const std::vector<int>& tripods() const { return tripods_; }
  /// All 200 ovoid ids (plane ovoids and tripods), ascending.
  const std::vector<int>& ovoids() const { return ovoids_; }

  /// Id of the hyperplane with the given point set, or -1.
  int id_of(const PointSet& points) const;
  int perp_of_center(int gq_point) const {
    return perp_by_center_[static_cast<std::size_t>(gq_point)];
  }
  /// Hyperplane id of a plane's section (perp for tangent planes, plane
  /// ovoid for secant planes).
  int of_plane(int pg_plane) const {
    return by_plane_[static_cast<std::size_t>(pg_plane)];
  }

  const HermitianGeometry& geometry() const { return *geom_; }
  const Incidence& incidence() const { return *inc_; }

  /// Complete hyperplane enumeration by depth-first search over lines, each
  /// taken either fully inside or meeting in one point, with propagation.
  static std::vector<PointSet> enumerate_by_line_dfs(const Incidence& inc);

  /// Independent ovoid enumeration: exact cover of the 27 lines by points.
  static std::vector<PointSet> enumerate_ovoids(const Incidence& inc);

  /// All partitions of an ovoid's 9 points into three pairwise disjoint
  /// tricentric triads (1 for a tripod, 4 for a plane ovoid).
  std::vector<std::array<PointSet, 3>> triad_partitions(
      const PointSet& ovoid) const;

  /// (P \ {x,y}^perp-perp) union {x,y}^perp for distinct x, y in a plane
  /// ovoid P; the result is always an ovoid (in fact a tripod).
  PointSet derive_tripod(const Hyperplane& plane_ovoid, int x, int y) const;

  /// Classifies a tripod against a GQ(2,2) copy by the centricity of their
  /// common triad; throws when the intersection is not a triad.
  TripodRel classify_rel(const Hyperplane& tripod, const PointSet& copy) const;

 private:
  const HermitianGeometry* geom_;
  const Incidence* inc_;
  std::vector<Hyperplane> all_;
  std::vector<int> perps_, plane_ovoids_, tripods_, ovoids_;
  std::array<int, 45> perp_by_center_{};
  std::array<int, 85> by_plane_{};
  std::unordered_map<std::uint64_t, int> index_;
};

}  // namespace gq42
