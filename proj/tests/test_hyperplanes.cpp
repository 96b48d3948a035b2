#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "gq42/exact_cover.hpp"
#include "gq42/hyperplanes.hpp"

using namespace gq42;

namespace {
const HermitianGeometry& geom() {
  static ProjectiveSpace space;
  static HermitianGeometry g(space, GramKind::SymplecticJ);
  return g;
}
const Incidence& gq() {
  static Incidence inc(geom().gq_structure());
  return inc;
}
const HyperplaneCatalog& cat() {
  static HyperplaneCatalog c(geom(), gq());
  return c;
}
}  // namespace

TEST_CASE("exact cover on a small hand-checked instance") {
  // Universe {0..3}; candidates: {0,1}, {2,3}, {0,2}, {1,3}, {0,1,2,3}, {3}.
  std::vector<std::uint64_t> cand{0b0011, 0b1100, 0b0101, 0b1010, 0b1111,
                                  0b1000};
  ExactCover ec(0b1111, cand);
  auto sols = ec.all_solutions();
  // {0,1}+{2,3}, {0,2}+{1,3}, {0,1,2,3}, {0,2}... plus {0,1}? with {3}? no:
  // {0,1} and {3} leave 2 uncovered unless {2,3} overlaps. Valid covers:
  // {0}+{1}, {2}+{3}, {4}.
  std::vector<std::vector<int>> want{{0, 1}, {2, 3}, {4}};
  CHECK(sols == want);
}

TEST_CASE("line DFS finds exactly the 245 hyperplanes") {
  auto sets = HyperplaneCatalog::enumerate_by_line_dfs(gq());
  CHECK(sets.size() == 245);
  // Every line meets every hyperplane in 1 or 5 points; complements in 0 or 4.
  for (const auto& h : sets) {
    for (const auto& line : gq().lines()) {
      int k = (h & line).count();
      CHECK((k == 1 || k == 5));
      CHECK((5 - k == 4 || 5 - k == 0));
    }
  }
}

TEST_CASE("exact-cover ovoids: 200, meeting every line once, 40 through each point") {
  auto ovoids = HyperplaneCatalog::enumerate_ovoids(gq());
  CHECK(ovoids.size() == 200);
  std::array<int, 45> through{};
  for (const auto& o : ovoids) {
    CHECK(o.count() == 9);
    for (const auto& line : gq().lines()) {
      CHECK((o & line).count() == 1);
    }
    for (int p : o) ++through[static_cast<std::size_t>(p)];
  }
  for (int t : through) CHECK(t == 40);  // 200 * 9 / 45
}

TEST_CASE("catalog: 45 perps + 40 plane ovoids + 160 tripods") {
  CHECK(cat().size() == 245);
  CHECK(cat().perps().size() == 45);
  CHECK(cat().plane_ovoids().size() == 40);
  CHECK(cat().tripods().size() == 160);
  CHECK(cat().ovoids().size() == 200);

  // Ids follow set order and the index is consistent.
  for (const auto& h : cat().all()) {
    CHECK(cat().id_of(h.points) == h.id);
  }
  // Hyperplanes containing a full line are exactly the perps.
  for (const auto& h : cat().all()) {
    bool has_full_line = false;
    for (const auto& line : gq().lines()) {
      if (h.points.contains(line)) has_full_line = true;
    }
    CHECK(has_full_line == (h.kind == HyperplaneKind::Perp));
  }
}

TEST_CASE("perps map onto the 45 tangent planes, plane ovoids onto the 40 secant planes") {
  std::set<int> planes;
  for (int id : cat().perps()) {
    const auto& h = cat()[id];
    CHECK(h.points == gq().perp(h.center));
    int pl = geom().tangent_plane_at(h.center);
    CHECK(geom().plane_section(pl) == h.points);
    planes.insert(pl);
  }
  for (int id : cat().plane_ovoids()) {
    const auto& h = cat()[id];
    CHECK(geom().plane_section(h.plane).count() == 9);
    CHECK(geom().plane_section(h.plane) == h.points);
    CHECK(!geom().plane_tangent(h.plane));
    planes.insert(h.plane);
  }
  CHECK(planes.size() == 85);
  // Every 9-point non-tangent section appears as a plane ovoid.
  for (int pl : geom().secant_planes()) {
    int id = cat().of_plane(pl);
    REQUIRE(id >= 0);
    CHECK(cat()[id].kind == HyperplaneKind::PlaneOvoid);
  }
}

TEST_CASE("tripods decompose uniquely into three tricentric triads") {
  for (int id : cat().tripods()) {
    const auto& h = cat()[id];
    auto parts = cat().triad_partitions(h.points);
    REQUIRE(parts.size() == 1);
    PointSet uni;
    for (const auto& t : parts[0]) {
      CHECK(t.count() == 3);
      CHECK(gq().classify_triad(t).kind == TriadKind::Tricentric);
      CHECK(!uni.intersects(t));
      uni |= t;
    }
    CHECK(uni == h.points);
    CHECK(parts[0][0] == h.triads[0]);
  }
}

TEST_CASE("tripod triads lie on three secant lines through one common point") {
  const auto& pg = geom().pg();
  for (int id : cat().tripods()) {
    const auto& h = cat()[id];
    // Each triad spans a 3-secant PG line; the three lines are concurrent
    // at a non-isotropic point.
    PgSet common;
    bool first = true;
    for (const auto& t : h.triads) {
      auto v = t.to_vector();
      int ln = pg.line_through(geom().pg_point(v[0]), geom().pg_point(v[1]));
      CHECK(geom().line_class(ln) == PgLineClass::Secant3);
      if (first) {
        common = pg.lines()[static_cast<std::size_t>(ln)].mask;
        first = false;
      } else {
        common &= pg.lines()[static_cast<std::size_t>(ln)].mask;
      }
    }
    REQUIRE(common.count() == 1);
    CHECK(!geom().isotropic(common.first()));
  }
}

TEST_CASE("plane ovoids contain 12 tricentric triads and admit 4 partitions") {
  for (int id : cat().plane_ovoids()) {
    const auto& h = cat()[id];
    auto pts = h.points.to_vector();
    int tricount = 0;
    for (std::size_t i = 0; i < 9; ++i) {
      for (std::size_t j = i + 1; j < 9; ++j) {
        for (std::size_t k = j + 1; k < 9; ++k) {
          PointSet t{pts[i], pts[j], pts[k]};
          if (gq().perp_of_set(t).count() == 3) ++tricount;
        }
      }
    }
    CHECK(tricount == 12);
    CHECK(cat().triad_partitions(h.points).size() == 4);
  }
}

TEST_CASE("hyperbolic lines through plane-ovoid pairs stay inside, and derived tripods cover all 160") {
  std::set<int> derived;
  for (int id : cat().plane_ovoids()) {
    const auto& p = cat()[id];
    auto pts = p.points.to_vector();
    for (std::size_t i = 0; i < pts.size(); ++i) {
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        CHECK(p.points.contains(gq().hyperbolic_line(pts[i], pts[j])));
        PointSet t = cat().derive_tripod(p, pts[i], pts[j]);
        int tid = cat().id_of(t);
        REQUIRE(tid >= 0);
        CHECK(cat()[tid].kind == HyperplaneKind::Tripod);
        derived.insert(tid);
      }
    }
  }
  CHECK(derived.size() == 160);
}

TEST_CASE("relative classification against the canonical copy: 40 tri, 120 uni") {
  PointSet copy = geom().canonical_gq22();
  int tri = 0, uni = 0;
  for (int id : cat().tripods()) {
    PointSet shared = cat()[id].points & copy;
    CHECK(shared.count() == 3);
    if (cat().classify_rel(cat()[id], copy) == TripodRel::Tri) ++tri;
    else ++uni;
  }
  CHECK(tri == 40);
  CHECK(uni == 120);

  // Plane ovoids always share a tricentric triad with the copy.
  for (int id : cat().plane_ovoids()) {
    PointSet shared = cat()[id].points & copy;
    REQUIRE(shared.count() == 3);
    CHECK(gq().classify_triad(shared).kind == TriadKind::Tricentric);
  }
}

TEST_CASE("no spreads: the 27 lines admit no partition of the 45 points") {
  std::vector<std::uint64_t> cand;
  for (const auto& line : gq().lines()) cand.push_back(line.words()[0]);
  std::uint64_t universe = (std::uint64_t{1} << 45) - 1;
  ExactCover ec(universe, cand);
  CHECK(ec.count_solutions() == 0);
}

TEST_CASE("ovoids sharing a tricentric triad: 2 plane + 2 tripods each") {
  auto triads = gq().tricentric_triads();
  for (const auto& t : triads) {
    int planes = 0, tripods = 0;
    for (int id : cat().ovoids()) {
      if (!cat()[id].points.contains(t)) continue;
      if (cat()[id].kind == HyperplaneKind::PlaneOvoid) ++planes;
      else ++tripods;
    }
    CHECK(planes == 2);
    CHECK(tripods == 2);
  }
}
