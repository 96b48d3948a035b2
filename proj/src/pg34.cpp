#include "gq42/pg34.hpp"

#include <algorithm>
#include <stdexcept>

namespace gq42 {

ProjectiveSpace::ProjectiveSpace() {
  // Points: all canonical representatives (first nonzero coordinate = 1),
  // generated in lexicographic order of the coordinate tuple.
  point_index_.fill(-1);
  points_.reserve(kPoints);
  for (int a0 = 0; a0 < 4; ++a0) {
    for (int a1 = 0; a1 < 4; ++a1) {
      for (int a2 = 0; a2 < 4; ++a2) {
        for (int a3 = 0; a3 < 4; ++a3) {
          Vec4 v{Gf4(a0), Gf4(a1), Gf4(a2), Gf4(a3)};
          if (is_zero(v)) continue;
          bool canonical = false;
          for (int i = 0; i < 4; ++i) {
            if (!v[i].is_zero()) {
              canonical = (v[i] == Gf4::one());
              break;
            }
          }
          if (!canonical) continue;
          point_index_[pack(v)] = static_cast<int>(points_.size());
          points_.push_back(v);
        }
      }
    }
  }
  if (static_cast<int>(points_.size()) != kPoints) {
    throw std::logic_error("ProjectiveSpace: expected 85 points");
  }

  // Lines: span of each point pair, deduplicated by point mask.
  line_through_.assign(kPoints * kPoints, -1);
  std::vector<Line> raw;
  for (int p = 0; p < kPoints; ++p) {
    for (int q = p + 1; q < kPoints; ++q) {
      if (line_through_[p * kPoints + q] >= 0) continue;
      Line line;
      line.points[0] = p;
      line.points[1] = q;
      for (int k = 1; k <= 3; ++k) {
        Vec4 v = add(points_[p], scale(Gf4(k), points_[q]));
        line.points[static_cast<std::size_t>(k) + 1] = point_id_of(v);
      }
      std::sort(line.points.begin(), line.points.end());
      for (int x : line.points) line.mask.set(x);
      int id = static_cast<int>(raw.size());
      raw.push_back(line);
      for (int i = 0; i < 5; ++i) {
        for (int j = 0; j < 5; ++j) {
          if (i != j) {
            line_through_[line.points[static_cast<std::size_t>(i)] * kPoints +
                          line.points[static_cast<std::size_t>(j)]] = id;
          }
        }
      }
    }
  }
  if (static_cast<int>(raw.size()) != kLines) {
    throw std::logic_error("ProjectiveSpace: expected 357 lines");
  }
  // Re-id lines in lexicographic order of their sorted point tuples.
  std::vector<int> order(raw.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return raw[static_cast<std::size_t>(a)].points <
           raw[static_cast<std::size_t>(b)].points;
  });
  lines_.resize(raw.size());
  for (std::size_t new_id = 0; new_id < order.size(); ++new_id) {
    lines_[new_id] = raw[static_cast<std::size_t>(order[new_id])];
  }
  for (std::size_t id = 0; id < lines_.size(); ++id) {
    const auto& pts = lines_[id].points;
    for (int i = 0; i < 5; ++i) {
      for (int j = 0; j < 5; ++j) {
        if (i != j) {
          line_through_[pts[static_cast<std::size_t>(i)] * kPoints +
                        pts[static_cast<std::size_t>(j)]] =
              static_cast<int>(id);
        }
      }
    }
  }

  // Planes: one per canonical dual vector, in the same lex order as points.
  plane_index_.fill(-1);
  planes_.reserve(kPlanes);
  for (int d = 0; d < kPoints; ++d) {
    Plane plane;
    plane.dual = points_[d];
    for (int p = 0; p < kPoints; ++p) {
      Gf4 s = Gf4::zero();
      for (int i = 0; i < 4; ++i) s = s + plane.dual[i] * points_[p][i];
      if (s.is_zero()) plane.mask.set(p);
    }
    if (plane.mask.count() != 21) {
      throw std::logic_error("ProjectiveSpace: plane is not 21 points");
    }
    plane_index_[pack(plane.dual)] = static_cast<int>(planes_.size());
    planes_.push_back(plane);
  }

  // Line/plane incidence: each line lies in exactly 5 planes and each plane
  // carries exactly 21 lines.
  pencils_.assign(lines_.size(), {});
  std::vector<int> fill(lines_.size(), 0);
  for (int pl = 0; pl < kPlanes; ++pl) {
    for (int ln = 0; ln < kLines; ++ln) {
      if (planes_[static_cast<std::size_t>(pl)].mask.contains(
              lines_[static_cast<std::size_t>(ln)].mask)) {
        planes_[static_cast<std::size_t>(pl)].lines.push_back(ln);
        int& k = fill[static_cast<std::size_t>(ln)];
        if (k >= kPlanesPerLine) {
          throw std::logic_error("ProjectiveSpace: line in > 5 planes");
        }
        pencils_[static_cast<std::size_t>(ln)][static_cast<std::size_t>(k++)] =
            pl;
      }
    }
    if (planes_[static_cast<std::size_t>(pl)].lines.size() != 21) {
      throw std::logic_error("ProjectiveSpace: plane does not carry 21 lines");
    }
  }
  for (int k : fill) {
    if (k != kPlanesPerLine) {
      throw std::logic_error("ProjectiveSpace: line not in exactly 5 planes");
    }
  }
}

int ProjectiveSpace::plane_through(int p, int q, int r) const {
  std::array<Vec4, 3> rows{points_[p], points_[q], points_[r]};
  Vec4 dual = normalize(nullspace_of_rank3(rows));
  int id = plane_id(dual);
  if (id < 0) throw std::logic_error("plane_through: dual vector not found");
  return id;
}

}  // namespace gq42
