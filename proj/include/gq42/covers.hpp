#pragma once

#include <array>
#include <map>
#include <vector>

#include "gq42/bitset.hpp"
#include "gq42/hyperplanes.hpp"

namespace gq42 {

/// Five pairwise disjoint ovoids partitioning the 45 points.
struct Fan {
  std::array<int, 5> members{};  // hyperplane ids, ascending
};

/// All 520 fans, found by exact cover of the point set by ovoids.
class FanCatalog {
 public:
  explicit FanCatalog(const HyperplaneCatalog& cat);

  const std::vector<Fan>& fans() const { return fans_; }
  int size() const { return static_cast<int>(fans_.size()); }

  /// Mask of fan indices containing the given hyperplane.
  const SmallBitset<520>& fans_of(int hyperplane_id) const {
    return by_hyperplane_[static_cast<std::size_t>(hyperplane_id)];
  }
  int index_of(const std::array<int, 5>& members) const;

  /// Number of fans containing both ovoids.
  int pair_multiplicity(int h1, int h2) const {
    return (fans_of(h1) & fans_of(h2)).count();
  }

 private:
  std::vector<Fan> fans_;
  std::vector<SmallBitset<520>> by_hyperplane_;
  std::map<std::array<int, 5>, int> index_;
};

/// Four ovoids through a base point partitioning the points noncollinear
/// with it.
struct Rosette {
  int base{-1};
  std::array<int, 4> members{};  // hyperplane ids, ascending
};

/// The rosettes on a point (26 in GQ(4,2): 2 all-plane, 24 all-tripod).
std::vector<Rosette> rosettes_at(const HyperplaneCatalog& cat, int point);

/// Kind of an ovoid relative to a GQ(2,2) copy.
enum class OvoidRel { Plane, TriTripod, UniTripod };

OvoidRel ovoid_rel(const HyperplaneCatalog& cat, int hyperplane_id,
                   const PointSet& copy);

/// Fan composition relative to a copy: (plane ovoids, tri-tripods,
/// uni-tripods); always (1,1,3).
std::array<int, 3> fan_composition_rel(const HyperplaneCatalog& cat,
                                       const Fan& fan, const PointSet& copy);

/// The unique partitions of a plane ovoid into three disjoint tricentric
/// triads (there are four), delegated to the catalog.
std::vector<std::array<PointSet, 3>> triad_partitions(
    const HyperplaneCatalog& cat, int plane_ovoid_id);

/// The distinguished fan of a plane ovoid: for each of its four triad
/// partitions, the nine triad centers form a tripod; the plane ovoid plus
/// the four center tripods is a fan. Returns the fan index.
int distinguished_fan(const FanCatalog& fans, const HyperplaneCatalog& cat,
                      int plane_ovoid_id);

/// Structure of the 13 fans through an ovoid, relative to a copy.
struct FanConfigReport {
  int ovoid{-1};
  OvoidRel ovoid_kind{OvoidRel::Plane};
  // Ovoids disjoint from the base, by kind.
  int disjoint_plane{0}, disjoint_tri{0}, disjoint_uni{0};
  // (partner hyperplane id, kind, number of common fans) for each disjoint
  // partner, ascending by id.
  struct Partner {
    int id;
    OvoidRel kind;
    int multiplicity;
  };
  std::vector<Partner> partners;
  int multiplicity_sum{0};  // = 13 fans x 4 partners each = 52
  std::vector<int> fan_indices;  // the 13 fans through the ovoid
  int distinguished{-1};         // the unique fan sharing >= 2 ovoids with all others
  // Classes of the 12 remaining fans: fans grouped by the set of shared
  // high-multiplicity partners; `shared` lists those partner ids.
  struct FanClass {
    std::vector<int> fan_indices;
    std::vector<int> shared;
    std::vector<OvoidRel> shared_kinds;
  };
  std::vector<FanClass> classes;
};

FanConfigReport fan_configuration(const FanCatalog& fans,
                                  const HyperplaneCatalog& cat,
                                  const PointSet& copy, int ovoid_id);

}  // namespace gq42
