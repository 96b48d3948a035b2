#pragma once

#include <array>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "gq42/bitset.hpp"
#include "gq42/covers.hpp"
#include "gq42/hyperplanes.hpp"

namespace gq42 {

using VMask = SmallBitset<245>;

/// Shape of the common core H1 ^ H2 shared by all members of a V-line.
enum class CoreKind {
  Line,             // a full 5-point line
  TricentricTriad,
  UnicentricTriad,
  AcentricTriad,
  Point,
  SixPoints,
  Empty,
  Other,
  Mixed,  // distinct generating pairs with distinct cores
};

const char* core_name(CoreKind k);

/// A Veldkamp line: the collection of all hyperplanes H with
/// H ^ H1 = H ^ H2 = H1 ^ H2, together with H1 and H2, deduplicated by
/// member set. Distinct generating pairs can produce the same collection;
/// they are all retained.
struct VLine {
  VMask members;
  std::vector<int> member_ids;                  // ascending
  std::vector<std::pair<int, int>> gen_pairs;   // all generating pairs
  PointSet core;                                // core of the first pair
  bool uniform_core{true};                      // all pairs share one core
  std::array<int, 3> composition{};             // perps, plane ovoids, tripods
  CoreKind core_kind{CoreKind::Other};
};

/// The complete V-line census over all C(245,2) hyperplane pairs.
class VeldkampCensus {
 public:
  VeldkampCensus(const HyperplaneCatalog& cat);

  const std::vector<VLine>& vlines() const { return vlines_; }
  int size() const { return static_cast<int>(vlines_.size()); }

  /// Index of the V-line with the given member set, or -1.
  int index_of(const VMask& members) const;

  /// The collection generated by one pair (recomputed scan).
  VLine vline_of_pair(int h1, int h2) const;

  /// Census rows: (size, composition, core kind) -> number of V-lines.
  using TableKey = std::tuple<int, std::array<int, 3>, CoreKind>;
  const std::map<TableKey, int>& table() const { return table_; }

  /// V-lines through a given hyperplane.
  const std::vector<int>& through(int hyperplane_id) const {
    return through_[static_cast<std::size_t>(hyperplane_id)];
  }

  const HyperplaneCatalog& catalog() const { return *cat_; }

 private:
  const HyperplaneCatalog* cat_;
  std::vector<VLine> vlines_;
  std::unordered_map<VMask, int, VMask::Hash> index_;
  std::map<TableKey, int> table_;
  std::vector<std::vector<int>> through_;
};

/// Verification that the 45 perps and 40 plane ovoids with the 357 plane
/// pencils form a linear space isomorphic to PG(3,4).
struct SubspaceReport {
  bool ok{false};
  std::string detail;
  int v_points{0};
  int type1{0};  // five perps on a line
  int type2{0};  // three perps + two plane ovoids on a tricentric triad
  int type34{0};  // a perp + four plane ovoids of a rosette at its center
  bool pencils_in_census{false};
  bool unique_joins{false};
};

SubspaceReport pg34_subspace_check(const VeldkampCensus& census);

/// Witnesses that the Veldkamp space is not a (partial) linear space.
struct NonlinearityWitnesses {
  // (a) two V-lines sharing exactly three V-points (the three perps of a
  // tricentric triad), one with two plane ovoids, one with two tripods.
  bool found_triple_share{false};
  int vline_planes{-1}, vline_tripods{-1};
  PointSet shared_triad;
  // (b) >= 3 V-lines through a common (perp, tripod) pair, each one a perp
  // plus a rosette of four tripods at its center.
  bool found_rosette_bundle{false};
  int rosette_perp{-1}, rosette_tripod{-1};
  std::vector<int> rosette_vlines;
  // (c) V-lines through a common (plane ovoid, tripod) pair that are fans.
  // Four fans pass through every such high-multiplicity pair, but at most
  // three of them occur as collections generated by a hyperplane pair: the
  // fourth is always the distinguished fan, whose 5-set is a proper subset
  // of every collection its member pairs generate. `found_fan_bundle`
  // therefore requires >= 4 and is expected to stay false; the fields below
  // document the discrepancy.
  bool found_fan_bundle{false};
  int fan_plane{-1}, fan_tripod{-1};
  std::vector<int> fan_vlines;         // census V-lines through the pair that are fans
  int fans_through_pair{0};            // fans through the pair (4)
  int missing_fan{-1};                 // fan through the pair that is no V-line
  bool missing_fan_is_distinguished{false};
  bool missing_fan_proper_subset{false};  // every pair collection strictly contains it
  bool not_partial_linear{false};
};

NonlinearityWitnesses nonlinearity_witnesses(const VeldkampCensus& census,
                                             const FanCatalog& fans);

}  // namespace gq42
