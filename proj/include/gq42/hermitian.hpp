#pragma once

#include <array>
#include <string>
#include <vector>

#include "gq42/bitset.hpp"
#include "gq42/gf4.hpp"
#include "gq42/incidence.hpp"
#include "gq42/pg34.hpp"

namespace gq42 {

/// Choice of Hermitian Gram matrix. Both give a nondegenerate surface with
/// 45 isotropic points; SymplecticJ has GF(2) entries and zero diagonal, so
/// its GF(2)-restriction is alternating and all 15 GF(2)-rational points are
/// isotropic, which supplies the canonical GQ(2,2) copy. Diagonal is the
/// x0^3 + x1^3 + x2^3 + x3^3 = 0 surface, used for cross-validation.
enum class GramKind { SymplecticJ, Diagonal };

using Gram = std::array<Vec4, 4>;

Gram make_gram(GramKind kind);
const char* gram_name(GramKind kind);

enum class PgLineClass { Generator, Tangent, Secant3 };

/// The Hermitian surface H(3,4) for a chosen Gram matrix, together with the
/// GQ(4,2) it carries: the 45 isotropic points (re-indexed 0..44 in the lex
/// order inherited from PG), the 27 generator lines (ids 0..26 by sorted
/// point tuples), the unitary polarity, and the plane sections.
class HermitianGeometry {
 public:
  HermitianGeometry(const ProjectiveSpace& pg, GramKind kind);

  const ProjectiveSpace& pg() const { return *pg_; }
  GramKind gram_kind() const { return kind_; }
  const Gram& gram() const { return gram_; }

  /// h(x,y) = sum_ij A(i,j) x_i conj(y_j) on PG point ids.
  Gf4 herm(int x, int y) const {
    return herm_[static_cast<std::size_t>(x * ProjectiveSpace::kPoints + y)];
  }

  bool isotropic(int pg_point) const {
    return gq_index_[static_cast<std::size_t>(pg_point)] >= 0;
  }
  int n_gq_points() const { return 45; }
  int gq_point(int pg_point) const {
    return gq_index_[static_cast<std::size_t>(pg_point)];
  }
  int pg_point(int gq_point) const {
    return iso_ids_[static_cast<std::size_t>(gq_point)];
  }
  const PgSet& isotropic_mask() const { return iso_mask_; }

  /// The 27 generator lines as GQ point sets, canonical order.
  const std::vector<PointSet>& gq_lines() const { return gq_lines_; }
  /// PG line id of GQ line i.
  int gq_line_pg_id(int i) const {
    return gq_line_pg_[static_cast<std::size_t>(i)];
  }
  IncidenceStructure gq_structure() const;

  PgLineClass line_class(int pg_line) const {
    return line_class_[static_cast<std::size_t>(pg_line)];
  }
  /// Isotropic section of a PG line, as a GQ point set.
  PointSet line_section(int pg_line) const;

  /// The unitary polarity on all 85 point ids: x -> plane {y : h(x,y)=0}.
  int polarity_plane(int pg_point) const {
    return polar_plane_[static_cast<std::size_t>(pg_point)];
  }
  int polarity_point(int pg_plane) const {
    return polar_point_[static_cast<std::size_t>(pg_plane)];
  }
  /// Tangent plane at an isotropic point; throws on non-isotropic input.
  int tangent_plane_at(int gq_point) const;

  bool plane_tangent(int pg_plane) const {
    return plane_tangent_[static_cast<std::size_t>(pg_plane)];
  }
  /// Isotropic section of a plane: 13 points (tangent) or 9 (secant).
  const PointSet& plane_section(int pg_plane) const {
    return plane_section_[static_cast<std::size_t>(pg_plane)];
  }
  const std::vector<int>& tangent_planes() const { return tangent_planes_; }
  const std::vector<int>& secant_planes() const { return secant_planes_; }

  /// The 15 GQ points whose canonical coordinates lie in GF(2). Throws
  /// unless exactly 15 such points are isotropic (wrong Gram choice).
  PointSet canonical_gq22() const;

 private:
  const ProjectiveSpace* pg_;
  GramKind kind_;
  Gram gram_;
  std::vector<Gf4> herm_;
  std::vector<int> iso_ids_;
  std::array<int, 85> gq_index_{};
  PgSet iso_mask_;
  std::vector<PointSet> gq_lines_;
  std::vector<int> gq_line_pg_;
  std::vector<PgLineClass> line_class_;
  std::array<int, 85> polar_plane_{};
  std::array<int, 85> polar_point_{};
  std::vector<bool> plane_tangent_;
  std::vector<PointSet> plane_section_;
  std::vector<int> tangent_planes_;
  std::vector<int> secant_planes_;
};

}  // namespace gq42
