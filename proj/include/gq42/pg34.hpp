#pragma once

#include <array>
#include <cstdint>
#include <vector>

#include "gq42/bitset.hpp"
#include "gq42/gf4.hpp"

namespace gq42 {

/// PG(3,4): 85 points, 357 lines, 85 planes, with stable ids. Points are
/// numbered by the lexicographic order of their canonical coordinate tuples;
/// lines by the lexicographic order of their sorted point-id tuples; planes
/// by the lexicographic order of their canonical dual vectors.
class ProjectiveSpace {
 public:
  static constexpr int kPoints = 85;
  static constexpr int kLines = 357;
  static constexpr int kPlanes = 85;
  static constexpr int kPlanesPerLine = 5;

  struct Line {
    std::array<int, 5> points{};
    PgSet mask;
  };

  struct Plane {
    Vec4 dual{};  // canonical; the plane is { x : dual . x = 0 }
    PgSet mask;
    std::vector<int> lines;  // the 21 lines inside the plane
  };

  ProjectiveSpace();

  const Vec4& point(int id) const { return points_[id]; }
  int point_id(const Vec4& canonical_rep) const {
    return point_index_[pack(canonical_rep)];
  }
  /// Id of normalize(v); throws on the zero vector.
  int point_id_of(const Vec4& v) const { return point_id(normalize(v)); }

  const std::vector<Line>& lines() const { return lines_; }
  const std::vector<Plane>& planes() const { return planes_; }

  int line_through(int p, int q) const {
    return line_through_[p * kPoints + q];
  }
  int plane_id(const Vec4& canonical_dual) const {
    return plane_index_[pack(canonical_dual)];
  }
  /// The unique plane spanned by three points of rank 3; throws otherwise.
  int plane_through(int p, int q, int r) const;

  /// The 5 planes through a line, sorted by plane id.
  const std::array<int, 5>& pencil(int line_id) const {
    return pencils_[line_id];
  }

 private:
  std::vector<Vec4> points_;
  std::array<int, 256> point_index_{};
  std::vector<Line> lines_;
  std::vector<int> line_through_;
  std::vector<Plane> planes_;
  std::array<int, 256> plane_index_{};
  std::vector<std::array<int, 5>> pencils_;
};

}  // namespace gq42
