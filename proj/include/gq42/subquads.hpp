#pragma once

#include <string>
#include <vector>

#include "gq42/hermitian.hpp"
#include "gq42/hyperplanes.hpp"
#include "gq42/incidence.hpp"
#include "gq42/symmetry.hpp"

namespace gq42 {

/// Orbit of a seed GQ(2,2) copy under the automorphism group.
std::vector<PointSet> gq22_copies_by_orbit(const PointSet& seed,
                                           const std::vector<Permutation>& gens);

/// Independent enumeration: PG(3,2) subgeometries spanned by frames of five
/// isotropic points in general position, kept when all 15 points land on the
/// surface and the induced substructure is a GQ(2,2).
std::vector<PointSet> gq22_copies_by_frames(const HermitianGeometry& geom,
                                            const Incidence& inc);

/// Splits the 45 points into three 9-point grids and three 6-point dual
/// grids such that one distinguished dual grid forms a GQ(2,2) with each of
/// the three grids. `full_pairing` reports whether every dual grid pairs
/// with every grid that way.
struct PartitionWitness {
  bool found{false};
  std::array<PointSet, 3> grids{};
  std::array<PointSet, 3> dual_grids{};
  int paired_dual{-1};  // index into dual_grids of the distinguished one
  bool full_pairing{false};
  std::string note;
};

PartitionWitness find_partition_witness(const Incidence& inc,
                                        const std::vector<PointSet>& copies);

/// Checks whether the 12-point symmetric difference of two ovoids sharing a
/// tricentric triad splits into two dual grids.
struct SymDiffSplit {
  bool ok{false};
  PointSet half1, half2;
};

SymDiffSplit symmetric_difference_split(const Incidence& inc, const PointSet& o1,
                                        const PointSet& o2);

/// Exhaustive scan over ovoid pairs meeting in exactly a tricentric triad,
/// tabulated by kind pair.
struct SymDiffCensus {
  int plane_plane_pairs{0}, plane_plane_split{0};
  int plane_tripod_pairs{0}, plane_tripod_split{0};
  int tripod_tripod_pairs{0}, tripod_tripod_split{0};
  // Examples (hyperplane id pairs), -1 when none exists.
  std::array<int, 2> plane_plane_example{-1, -1};
  std::array<int, 2> with_tri_tripod_example{-1, -1};  // vs the canonical copy
};

SymDiffCensus symmetric_difference_census(const HyperplaneCatalog& cat,
                                          const PointSet& canonical_copy);

}  // namespace gq42
