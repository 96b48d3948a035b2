#pragma once

#include <array>
#include <string>
#include <vector>

#include "gq42/bitset.hpp"

namespace gq42 {

/// A point-line incidence structure on at most 45 points. Lines are point
/// sets; two distinct points lie on at most one common line.
struct IncidenceStructure {
  int n_points{0};
  std::vector<PointSet> lines;
};

struct GqCheck {
  bool ok{false};
  std::string detail;  // first violated axiom and a witness when !ok
};

/// Checks the generalized-quadrangle axioms for order (s,t), plus the point
/// and line counts (s+1)(st+1) and (t+1)(st+1).
GqCheck validate_gq(const IncidenceStructure& s, int s_order, int t_order);

enum class TriadKind { Acentric, Unicentric, Tricentric };

struct TriadClass {
  TriadKind kind;
  PointSet centers;
};

struct TriadCensus {
  long long triples{0};
  long long with_collinear_pair{0};
  long long acentric{0};
  long long unicentric{0};
  long long tricentric{0};
  std::array<int, 45> tricentric_per_point{};
};

/// Precomputed collinearity queries over an incidence structure.
class Incidence {
 public:
  explicit Incidence(IncidenceStructure s);

  int n() const { return s_.n_points; }
  const IncidenceStructure& structure() const { return s_; }
  const std::vector<PointSet>& lines() const { return s_.lines; }

  bool collinear(int x, int y) const {
    return x != y && perp_[static_cast<std::size_t>(x)].test(y);
  }
  /// Line id through two distinct collinear points, else -1.
  int line_through(int x, int y) const {
    return line_through_[static_cast<std::size_t>(x * s_.n_points + y)];
  }
  const std::vector<int>& lines_of(int x) const {
    return lines_of_[static_cast<std::size_t>(x)];
  }

  /// x together with everything collinear with x.
  const PointSet& perp(int x) const { return perp_[static_cast<std::size_t>(x)]; }

  /// Intersection of the perps of all members of A; A must be nonempty.
  PointSet perp_of_set(PointSet a) const;

  /// {x,y}^perp-perp for a noncollinear pair; throws on collinear input.
  PointSet hyperbolic_line(int x, int y) const;

  /// Classifies a triple of pairwise noncollinear points by its number of
  /// centers (0, 1 or 3); any other center count is a structural error.
  TriadClass classify_triad(PointSet t) const;

  bool is_triad(PointSet t) const;

  TriadCensus triad_census() const;
  /// All tricentric triads, sorted by member tuple.
  std::vector<PointSet> tricentric_triads() const;

 private:
  IncidenceStructure s_;
  std::vector<PointSet> perp_;
  std::vector<int> line_through_;
  std::vector<std::vector<int>> lines_of_;
};

/// Substructure induced on A: points of A renumbered by rank, lines being the
/// intersections with A of size at least 2.
IncidenceStructure induced_structure(const IncidenceStructure& s, PointSet a);

/// True when |A| = 9 and A induces a 3x3 grid, i.e. a GQ(2,1) whose six
/// 3-point rows and columns are segments of lines of the host structure.
bool is_grid(const Incidence& inc, PointSet a);

/// True when |A| = 6 and the induced collinearity graph on A is K_{3,3}
/// (a GQ(1,2), the dual grid).
bool is_dual_grid(const Incidence& inc, PointSet a);

}  // namespace gq42
