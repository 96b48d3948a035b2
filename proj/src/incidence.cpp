#include "gq42/incidence.hpp"

#include <algorithm>
#include <stdexcept>

namespace gq42 {

namespace {

std::string point_line_witness(int x, int line) {
  return "point " + std::to_string(x) + ", line " + std::to_string(line);
}

}  // namespace

GqCheck validate_gq(const IncidenceStructure& s, int s_order, int t_order) {
  const int np = s.n_points;
  const long long expect_points =
      static_cast<long long>(s_order + 1) * (s_order * t_order + 1);
  const long long expect_lines =
      static_cast<long long>(t_order + 1) * (s_order * t_order + 1);

  // Axiom (ii): 1+s points per line, two lines share at most one point.
  for (std::size_t i = 0; i < s.lines.size(); ++i) {
    if (s.lines[i].count() != s_order + 1) {
      return {false, "axiom (ii): line " + std::to_string(i) + " has " +
                         std::to_string(s.lines[i].count()) + " points, want " +
                         std::to_string(s_order + 1)};
    }
    for (std::size_t j = i + 1; j < s.lines.size(); ++j) {
      if ((s.lines[i] & s.lines[j]).count() > 1) {
        return {false, "axiom (ii): lines " + std::to_string(i) + " and " +
                           std::to_string(j) + " share two points"};
      }
    }
  }

  // Axiom (i): 1+t lines per point (pairwise point condition follows from
  // the line condition above).
  std::vector<int> degree(static_cast<std::size_t>(np), 0);
  for (const auto& line : s.lines) {
    for (int p : line) ++degree[static_cast<std::size_t>(p)];
  }
  for (int p = 0; p < np; ++p) {
    if (degree[static_cast<std::size_t>(p)] != t_order + 1) {
      return {false, "axiom (i): point " + std::to_string(p) + " lies on " +
                         std::to_string(degree[static_cast<std::size_t>(p)]) +
                         " lines, want " + std::to_string(t_order + 1)};
    }
  }

  // Axiom (iii): for x not on L there is exactly one point of L collinear
  // with x.
  std::vector<PointSet> perp(static_cast<std::size_t>(np));
  for (int p = 0; p < np; ++p) perp[static_cast<std::size_t>(p)].set(p);
  for (const auto& line : s.lines) {
    for (int p : line) perp[static_cast<std::size_t>(p)] |= line;
  }
  for (int x = 0; x < np; ++x) {
    for (std::size_t li = 0; li < s.lines.size(); ++li) {
      const auto& line = s.lines[li];
      if (line.test(x)) continue;
      int hits = (line & perp[static_cast<std::size_t>(x)]).count();
      if (hits != 1) {
        return {false, "axiom (iii): " +
                           point_line_witness(x, static_cast<int>(li)) +
                           " see " + std::to_string(hits) +
                           " collinear points, want 1"};
      }
    }
  }

  if (np != expect_points) {
    return {false, "|P| = " + std::to_string(np) + ", want " +
                       std::to_string(expect_points)};
  }
  if (static_cast<long long>(s.lines.size()) != expect_lines) {
    return {false, "|B| = " + std::to_string(s.lines.size()) + ", want " +
                       std::to_string(expect_lines)};
  }
  return {true, "ok"};
}

Incidence::Incidence(IncidenceStructure s) : s_(std::move(s)) {
  const int np = s_.n_points;
  perp_.assign(static_cast<std::size_t>(np), PointSet{});
  for (int p = 0; p < np; ++p) perp_[static_cast<std::size_t>(p)].set(p);
  line_through_.assign(static_cast<std::size_t>(np) * np, -1);
  lines_of_.assign(static_cast<std::size_t>(np), {});
  for (std::size_t li = 0; li < s_.lines.size(); ++li) {
    const auto& line = s_.lines[li];
    for (int p : line) {
      perp_[static_cast<std::size_t>(p)] |= line;
      lines_of_[static_cast<std::size_t>(p)].push_back(static_cast<int>(li));
      for (int q : line) {
        if (p != q) {
          line_through_[static_cast<std::size_t>(p * np + q)] =
              static_cast<int>(li);
        }
      }
    }
  }
}

PointSet Incidence::perp_of_set(PointSet a) const {
  if (a.empty()) throw std::invalid_argument("perp_of_set: empty set");
  PointSet r = PointSet::first_n(n());
  for (int p : a) r &= perp(p);
  return r;
}

PointSet Incidence::hyperbolic_line(int x, int y) const {
  if (x == y || collinear(x, y)) {
    throw std::invalid_argument("hyperbolic_line: points must be noncollinear");
  }
  return perp_of_set(perp_of_set(PointSet{x, y}));
}

bool Incidence::is_triad(PointSet t) const {
  if (t.count() != 3) return false;
  auto v = t.to_vector();
  return !collinear(v[0], v[1]) && !collinear(v[0], v[2]) &&
         !collinear(v[1], v[2]);
}

TriadClass Incidence::classify_triad(PointSet t) const {
  if (!is_triad(t)) {
    throw std::invalid_argument("classify_triad: not a triad");
  }
  PointSet centers = perp_of_set(t);
  switch (centers.count()) {
    case 0:
      return {TriadKind::Acentric, centers};
    case 1:
      return {TriadKind::Unicentric, centers};
    case 3:
      return {TriadKind::Tricentric, centers};
    default:
      throw std::logic_error("classify_triad: |T.perp| not in {0,1,3}");
  }
}

TriadCensus Incidence::triad_census() const {
  TriadCensus c{};
  const int np = n();
  for (int a = 0; a < np; ++a) {
    for (int b = a + 1; b < np; ++b) {
      bool ab = collinear(a, b);
      for (int d = b + 1; d < np; ++d) {
        ++c.triples;
        if (ab || collinear(a, d) || collinear(b, d)) {
          ++c.with_collinear_pair;
          continue;
        }
        PointSet centers = perp(a) & perp(b) & perp(d);
        switch (centers.count()) {
          case 0:
            ++c.acentric;
            break;
          case 1:
            ++c.unicentric;
            break;
          case 3:
            ++c.tricentric;
            ++c.tricentric_per_point[static_cast<std::size_t>(a)];
            ++c.tricentric_per_point[static_cast<std::size_t>(b)];
            ++c.tricentric_per_point[static_cast<std::size_t>(d)];
            break;
          default:
            throw std::logic_error("triad_census: |T.perp| not in {0,1,3}");
        }
      }
    }
  }
  return c;
}

std::vector<PointSet> Incidence::tricentric_triads() const {
  std::vector<PointSet> out;
  const int np = n();
  for (int a = 0; a < np; ++a) {
    for (int b = a + 1; b < np; ++b) {
      if (collinear(a, b)) continue;
      for (int d = b + 1; d < np; ++d) {
        if (collinear(a, d) || collinear(b, d)) continue;
        if ((perp(a) & perp(b) & perp(d)).count() == 3) {
          out.push_back(PointSet{a, b, d});
        }
      }
    }
  }
  std::sort(out.begin(), out.end(),
            [](const PointSet& x, const PointSet& y) { return lex_less(x, y); });
  return out;
}

IncidenceStructure induced_structure(const IncidenceStructure& s, PointSet a) {
  std::vector<int> local(45, -1);
  int n = 0;
  for (int p : a) local[static_cast<std::size_t>(p)] = n++;
  IncidenceStructure out;
  out.n_points = n;
  for (const auto& line : s.lines) {
    PointSet cut = line & a;
    if (cut.count() < 2) continue;
    PointSet relabeled;
    for (int p : cut) relabeled.set(local[static_cast<std::size_t>(p)]);
    out.lines.push_back(relabeled);
  }
  return out;
}

bool is_grid(const Incidence& inc, PointSet a) {
  if (a.count() != 9) {
    throw std::invalid_argument("is_grid: set must have 9 points");
  }
  IncidenceStructure sub = induced_structure(inc.structure(), a);
  for (const auto& line : sub.lines) {
    if (line.count() != 3) return false;
  }
  if (sub.lines.size() != 6) return false;
  return validate_gq(sub, 2, 1).ok;
}

bool is_dual_grid(const Incidence& inc, PointSet a) {
  if (a.count() != 6) {
    throw std::invalid_argument("is_dual_grid: set must have 6 points");
  }
  // K_{3,3} collinearity: every point sees exactly three others, and the
  // two non-neighbors of any point are mutually non-collinear.
  auto pts = a.to_vector();
  for (int x : pts) {
    PointSet nb = (inc.perp(x) & a) - PointSet::single(x);
    if (nb.count() != 3) return false;
  }
  int x0 = pts[0];
  PointSet side1 = (a - inc.perp(x0)) | PointSet::single(x0);
  PointSet side2 = a - side1;
  if (side1.count() != 3 || side2.count() != 3) return false;
  for (int p : side1) {
    for (int q : side1) {
      if (p < q && inc.collinear(p, q)) return false;
    }
  }
  for (int p : side2) {
    for (int q : side2) {
      if (p < q && inc.collinear(p, q)) return false;
    }
  }
  for (int p : side1) {
    for (int q : side2) {
      if (!inc.collinear(p, q)) return false;
    }
  }
  return true;
}

}  // namespace gq42
