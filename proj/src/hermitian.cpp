#include "gq42/hermitian.hpp"

#include <algorithm>
#include <stdexcept>

namespace gq42 {

Gram make_gram(GramKind kind) {
  Gram g{};
  switch (kind) {
    case GramKind::SymplecticJ:
      g[0][1] = Gf4::one();
      g[1][0] = Gf4::one();
      g[2][3] = Gf4::one();
      g[3][2] = Gf4::one();
      return g;
    case GramKind::Diagonal:
      for (int i = 0; i < 4; ++i) g[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = Gf4::one();
      return g;
  }
  throw std::invalid_argument("make_gram: unknown kind");
}

const char* gram_name(GramKind kind) {
  return kind == GramKind::SymplecticJ ? "symplectic-j" : "diagonal";
}

HermitianGeometry::HermitianGeometry(const ProjectiveSpace& pg, GramKind kind)
    : pg_(&pg), kind_(kind), gram_(make_gram(kind)) {
  // Gram sanity: Hermitian and nondegenerate.
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] !=
          conj(gram_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)])) {
        throw std::logic_error("gram matrix is not Hermitian");
      }
    }
  }
  if (rank_of(std::span<const Vec4>(gram_.data(), 4)) != 4) {
    throw std::logic_error("gram matrix is degenerate");
  }

  const int np = ProjectiveSpace::kPoints;
  herm_.resize(static_cast<std::size_t>(np) * np);
  for (int x = 0; x < np; ++x) {
    const Vec4& vx = pg.point(x);
    // c_j = sum_i A(i,j) x_i, so h(x,y) = sum_j c_j conj(y_j).
    Vec4 c{};
    for (int j = 0; j < 4; ++j) {
      Gf4 s = Gf4::zero();
      for (int i = 0; i < 4; ++i) {
        s = s + gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * vx[static_cast<std::size_t>(i)];
      }
      c[static_cast<std::size_t>(j)] = s;
    }
    for (int y = 0; y < np; ++y) {
      const Vec4& vy = pg.point(y);
      Gf4 s = Gf4::zero();
      for (int j = 0; j < 4; ++j) s = s + c[static_cast<std::size_t>(j)] * conj(vy[static_cast<std::size_t>(j)]);
      herm_[static_cast<std::size_t>(x * np + y)] = s;
    }
  }

  gq_index_.fill(-1);
  for (int x = 0; x < np; ++x) {
    if (herm(x, x).is_zero()) {
      gq_index_[static_cast<std::size_t>(x)] = static_cast<int>(iso_ids_.size());
      iso_ids_.push_back(x);
      iso_mask_.set(x);
    }
  }
  if (static_cast<int>(iso_ids_.size()) != 45) {
    throw std::logic_error("Hermitian surface does not have 45 points");
  }

  // Classify every PG line by the size of its isotropic section.
  line_class_.resize(pg.lines().size());
  for (std::size_t ln = 0; ln < pg.lines().size(); ++ln) {
    int k = (pg.lines()[ln].mask & iso_mask_).count();
    switch (k) {
      case 5:
        line_class_[ln] = PgLineClass::Generator;
        break;
      case 3:
        line_class_[ln] = PgLineClass::Secant3;
        break;
      case 1:
        line_class_[ln] = PgLineClass::Tangent;
        break;
      default:
        throw std::logic_error("line meets surface in " + std::to_string(k) +
                               " points");
    }
  }

  // Generator lines, renumbered canonically over the 45 GQ points.
  for (std::size_t ln = 0; ln < pg.lines().size(); ++ln) {
    if (line_class_[ln] != PgLineClass::Generator) continue;
    gq_lines_.push_back(line_section(static_cast<int>(ln)));
    gq_line_pg_.push_back(static_cast<int>(ln));
  }
  std::vector<int> order(gq_lines_.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return lex_less(gq_lines_[static_cast<std::size_t>(a)],
                    gq_lines_[static_cast<std::size_t>(b)]);
  });
  std::vector<PointSet> sorted_lines;
  std::vector<int> sorted_pg;
  for (int idx : order) {
    sorted_lines.push_back(gq_lines_[static_cast<std::size_t>(idx)]);
    sorted_pg.push_back(gq_line_pg_[static_cast<std::size_t>(idx)]);
  }
  gq_lines_ = std::move(sorted_lines);
  gq_line_pg_ = std::move(sorted_pg);

  // Polarity x -> {y : h(x,y) = 0}. With c as above, h(x,y) = 0 iff
  // sum_j conj(c_j) y_j = 0, a plane with dual vector conj(c).
  for (int x = 0; x < np; ++x) {
    Vec4 c{};
    for (int j = 0; j < 4; ++j) {
      Gf4 s = Gf4::zero();
      for (int i = 0; i < 4; ++i) {
        s = s + gram_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * pg.point(x)[static_cast<std::size_t>(i)];
      }
      c[static_cast<std::size_t>(j)] = conj(s);
    }
    polar_plane_[static_cast<std::size_t>(x)] = pg.plane_id(normalize(c));
    if (polar_plane_[static_cast<std::size_t>(x)] < 0) {
      throw std::logic_error("polarity image plane not found");
    }
  }
  polar_point_.fill(-1);
  for (int x = 0; x < np; ++x) {
    polar_point_[static_cast<std::size_t>(polar_plane_[static_cast<std::size_t>(x)])] = x;
  }
  for (int pl = 0; pl < np; ++pl) {
    if (polar_point_[static_cast<std::size_t>(pl)] < 0) {
      throw std::logic_error("polarity is not onto the planes");
    }
  }

  // Plane sections: 13 points for the 45 tangent planes, 9 for the 40 others.
  plane_tangent_.resize(pg.planes().size());
  plane_section_.resize(pg.planes().size());
  for (std::size_t pl = 0; pl < pg.planes().size(); ++pl) {
    PointSet sec;
    for (int p : pg.planes()[pl].mask & iso_mask_) sec.set(gq_point(p));
    plane_section_[pl] = sec;
    switch (sec.count()) {
      case 13:
        plane_tangent_[pl] = true;
        tangent_planes_.push_back(static_cast<int>(pl));
        break;
      case 9:
        plane_tangent_[pl] = false;
        secant_planes_.push_back(static_cast<int>(pl));
        break;
      default:
        throw std::logic_error("plane section of unexpected size " +
                               std::to_string(sec.count()));
    }
  }
  if (tangent_planes_.size() != 45 || secant_planes_.size() != 40) {
    throw std::logic_error("tangent/secant plane split is not 45/40");
  }
}

PointSet HermitianGeometry::line_section(int pg_line) const {
  PointSet s;
  for (int p : pg_->lines()[static_cast<std::size_t>(pg_line)].points) {
    int g = gq_point(p);
    if (g >= 0) s.set(g);
  }
  return s;
}

IncidenceStructure HermitianGeometry::gq_structure() const {
  return IncidenceStructure{45, gq_lines_};
}

int HermitianGeometry::tangent_plane_at(int gq_pt) const {
  if (gq_pt < 0 || gq_pt >= 45) {
    throw std::invalid_argument("tangent_plane_at: bad point id");
  }
  return polarity_plane(pg_point(gq_pt));
}

PointSet HermitianGeometry::canonical_gq22() const {
  PointSet s;
  for (int g = 0; g < 45; ++g) {
    const Vec4& v = pg_->point(pg_point(g));
    bool rational = true;
    for (int i = 0; i < 4; ++i) rational &= (v[static_cast<std::size_t>(i)].v <= 1);
    if (rational) s.set(g);
  }
  if (s.count() != 15) {
    throw std::logic_error(
        "canonical_gq22: " + std::to_string(s.count()) +
        " GF(2)-rational points are isotropic, want 15 (wrong Gram choice)");
  }
  return s;
}

}  // namespace gq42
