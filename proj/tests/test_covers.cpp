#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <map>
#include <set>

#include "gq42/covers.hpp"
#include "gq42/subquads.hpp"
#include "gq42/symmetry.hpp"

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
const FanCatalog& fans() {
  static FanCatalog f(cat());
  return f;
}
PointSet copy0() { return geom().canonical_gq22(); }
}  // namespace

TEST_CASE("520 fans, each a plane ovoid and four tripods") {
  CHECK(fans().size() == 520);
  for (const auto& f : fans().fans()) {
    PointSet uni;
    int planes = 0, tripods = 0;
    for (int id : f.members) {
      CHECK(!uni.intersects(cat()[id].points));
      uni |= cat()[id].points;
      if (cat()[id].kind == HyperplaneKind::PlaneOvoid) ++planes;
      if (cat()[id].kind == HyperplaneKind::Tripod) ++tripods;
    }
    CHECK(uni.count() == 45);
    CHECK(planes == 1);
    CHECK(tripods == 4);
  }
}

TEST_CASE("every ovoid lies in exactly 13 fans") {
  for (int id : cat().ovoids()) {
    CHECK(fans().fans_of(id).count() == 13);  // 520 * 5 / 200
  }
}

TEST_CASE("fan composition relative to every copy is (1,1,3)") {
  static AutomorphismGroup group = automorphism_group(gq());
  auto copies = gq22_copies_by_orbit(copy0(), group.generators);
  REQUIRE(copies.size() == 36);
  for (const auto& copy : copies) {
    for (const auto& f : fans().fans()) {
      CHECK(fan_composition_rel(cat(), f, copy) == std::array<int, 3>{1, 1, 3});
    }
  }
  // Double count: 520 fans with one tri-tripod each = 40 tri-tripods x 13.
  int tri_count = 0;
  for (int id : cat().tripods()) {
    if (ovoid_rel(cat(), id, copy0()) == OvoidRel::TriTripod) ++tri_count;
  }
  CHECK(tri_count == 40);
  CHECK(520 * 1 == tri_count * 13);
}

TEST_CASE("26 rosettes per point: 2 all-plane and 24 all-tripod") {
  for (int x = 0; x < 45; ++x) {
    auto rs = rosettes_at(cat(), x);
    CHECK(rs.size() == 26);
    int all_plane = 0, all_tripod = 0;
    for (const auto& r : rs) {
      PointSet uni = PointSet::single(x);
      int planes = 0;
      for (int id : r.members) {
        CHECK(cat()[id].points.test(x));
        CHECK((cat()[id].points & uni).count() == 1);  // pairwise meet = base
        uni |= cat()[id].points;
        if (cat()[id].kind == HyperplaneKind::PlaneOvoid) ++planes;
      }
      CHECK(uni == ((PointSet::first_n(45) - gq().perp(x)) | PointSet::single(x)));
      if (planes == 4) ++all_plane;
      if (planes == 0) ++all_tripod;
    }
    CHECK(all_plane == 2);
    CHECK(all_tripod == 24);
  }
}

TEST_CASE("plane ovoid triad partitions: 4 partitions using its 12 triads once each") {
  for (int id : cat().plane_ovoids()) {
    auto parts = triad_partitions(cat(), id);
    REQUIRE(parts.size() == 4);
    std::set<std::vector<int>> used;
    for (const auto& part : parts) {
      PointSet uni;
      for (const auto& t : part) {
        CHECK(gq().classify_triad(t).kind == TriadKind::Tricentric);
        CHECK(!uni.intersects(t));
        uni |= t;
        used.insert(t.to_vector());
      }
      CHECK(uni == cat()[id].points);
    }
    CHECK(used.size() == 12);  // each of the 12 triads in exactly one partition
  }
}

TEST_CASE("distinguished fans: one per plane ovoid, 40 distinct, sharing >= 2 with the other 12") {
  std::set<int> distinct;
  for (int id : cat().plane_ovoids()) {
    int fi = distinguished_fan(fans(), cat(), id);
    distinct.insert(fi);
    SmallBitset<245> fset;
    for (int m : fans().fans()[static_cast<std::size_t>(fi)].members) fset.set(m);
    CHECK(fset.test(id));
    for (int other : fans().fans_of(id)) {
      if (other == fi) continue;
      int common = 0;
      for (int m : fans().fans()[static_cast<std::size_t>(other)].members) {
        if (fset.test(m)) ++common;
      }
      CHECK(common >= 2);
    }
  }
  CHECK(distinct.size() == 40);
}

TEST_CASE("fan orbits are {480, 40} and the 40-orbit is the distinguished set") {
  static AutomorphismGroup group = automorphism_group(gq());
  // Act on fans through their member point sets.
  std::map<std::array<int, 5>, int> fan_index;
  for (int i = 0; i < fans().size(); ++i) {
    fan_index[fans().fans()[static_cast<std::size_t>(i)].members] = i;
  }
  auto orbit = orbit_partition(
      fans().size(), static_cast<int>(group.generators.size()),
      [&](int g, int i) {
        std::array<int, 5> image{};
        for (std::size_t k = 0; k < 5; ++k) {
          PointSet im = group.generators[static_cast<std::size_t>(g)].apply(
              cat()[fans().fans()[static_cast<std::size_t>(i)].members[k]].points);
          image[k] = cat().id_of(im);
        }
        std::sort(image.begin(), image.end());
        return fan_index.at(image);
      });
  auto sizes = orbit_sizes_from_partition(orbit);
  CHECK(sizes == std::vector<int>{40, 480});

  std::set<int> distinguished;
  for (int id : cat().plane_ovoids()) {
    distinguished.insert(distinguished_fan(fans(), cat(), id));
  }
  // Which orbit id has size 40?
  std::map<int, int> orbit_count;
  for (int o : orbit) ++orbit_count[o];
  std::set<int> small_orbit;
  for (int i = 0; i < fans().size(); ++i) {
    if (orbit_count[orbit[static_cast<std::size_t>(i)]] == 40) small_orbit.insert(i);
  }
  CHECK(small_orbit == distinguished);
}

TEST_CASE("fan configuration around a plane ovoid: spider profile") {
  int id = cat().plane_ovoids()[0];
  auto rep = fan_configuration(fans(), cat(), copy0(), id);
  CHECK(rep.disjoint_plane == 0);
  CHECK(rep.disjoint_tri == 10);
  CHECK(rep.disjoint_uni == 30);
  CHECK(rep.multiplicity_sum == 52);
  CHECK(rep.fan_indices.size() == 13);
  REQUIRE(rep.distinguished >= 0);

  // One tri-tripod and three uni-tripods carry multiplicity 4; rest 1.
  int mult4_tri = 0, mult4_uni = 0, mult1 = 0;
  for (const auto& p : rep.partners) {
    if (p.multiplicity == 4) {
      if (p.kind == OvoidRel::TriTripod) ++mult4_tri;
      else ++mult4_uni;
    } else if (p.multiplicity == 1) {
      ++mult1;
    }
  }
  CHECK(mult4_tri == 1);
  CHECK(mult4_uni == 3);
  CHECK(mult1 == 36);

  // Classes: three of size 3 keyed by a uni-tripod, one keyed by the
  // tri-tripod; the distinguished fan stands alone.
  REQUIRE(rep.classes.size() == 4);
  int uni_classes = 0, tri_classes = 0;
  for (const auto& cls : rep.classes) {
    CHECK(cls.fan_indices.size() == 3);
    REQUIRE(cls.shared.size() == 1);
    if (cls.shared_kinds[0] == OvoidRel::UniTripod) ++uni_classes;
    if (cls.shared_kinds[0] == OvoidRel::TriTripod) ++tri_classes;
  }
  CHECK(uni_classes == 3);
  CHECK(tri_classes == 1);
}

TEST_CASE("fan configuration around a tri-tripod: bee profile") {
  int id = -1;
  for (int t : cat().tripods()) {
    if (ovoid_rel(cat(), t, copy0()) == OvoidRel::TriTripod) {
      id = t;
      break;
    }
  }
  REQUIRE(id >= 0);
  auto rep = fan_configuration(fans(), cat(), copy0(), id);
  CHECK(rep.disjoint_plane == 10);
  CHECK(rep.disjoint_tri == 0);
  CHECK(rep.disjoint_uni == 21);
  CHECK(rep.multiplicity_sum == 52);
  REQUIRE(rep.distinguished >= 0);

  int mult4_plane = 0, mult7_uni = 0, mult1 = 0;
  for (const auto& p : rep.partners) {
    if (p.multiplicity == 4 && p.kind == OvoidRel::Plane) ++mult4_plane;
    else if (p.multiplicity == 7 && p.kind == OvoidRel::UniTripod) ++mult7_uni;
    else if (p.multiplicity == 1) ++mult1;
  }
  CHECK(mult4_plane == 1);
  CHECK(mult7_uni == 3);
  CHECK(mult1 == 27);

  // Three classes share the base plus two uni-tripods, one class shares the
  // plane ovoid.
  REQUIRE(rep.classes.size() == 4);
  int pair_classes = 0, plane_classes = 0;
  for (const auto& cls : rep.classes) {
    CHECK(cls.fan_indices.size() == 3);
    if (cls.shared.size() == 2) {
      CHECK(cls.shared_kinds[0] == OvoidRel::UniTripod);
      CHECK(cls.shared_kinds[1] == OvoidRel::UniTripod);
      ++pair_classes;
      // Fans inside the class share exactly the base and these two.
      for (std::size_t i = 0; i < cls.fan_indices.size(); ++i) {
        for (std::size_t j = i + 1; j < cls.fan_indices.size(); ++j) {
          const auto& fa = fans().fans()[static_cast<std::size_t>(cls.fan_indices[i])];
          const auto& fb = fans().fans()[static_cast<std::size_t>(cls.fan_indices[j])];
          std::set<int> ma(fa.members.begin(), fa.members.end());
          int common = 0;
          for (int m : fb.members) common += ma.count(m);
          CHECK(common == 3);
        }
      }
    } else if (cls.shared.size() == 1) {
      CHECK(cls.shared_kinds[0] == OvoidRel::Plane);
      ++plane_classes;
    }
  }
  CHECK(pair_classes == 3);
  CHECK(plane_classes == 1);
}

TEST_CASE("fan configuration around a uni-tripod: frog profile") {
  int id = -1;
  for (int t : cat().tripods()) {
    if (ovoid_rel(cat(), t, copy0()) == OvoidRel::UniTripod) {
      id = t;
      break;
    }
  }
  REQUIRE(id >= 0);
  auto rep = fan_configuration(fans(), cat(), copy0(), id);
  CHECK(rep.disjoint_plane == 10);
  CHECK(rep.disjoint_tri == 7);
  CHECK(rep.disjoint_uni == 14);
  CHECK(rep.multiplicity_sum == 52);
  REQUIRE(rep.distinguished >= 0);

  int mult4_plane = 0, mult7_tri = 0, mult7_uni = 0, mult1 = 0;
  for (const auto& p : rep.partners) {
    if (p.multiplicity == 4 && p.kind == OvoidRel::Plane) ++mult4_plane;
    else if (p.multiplicity == 7 && p.kind == OvoidRel::TriTripod) ++mult7_tri;
    else if (p.multiplicity == 7 && p.kind == OvoidRel::UniTripod) ++mult7_uni;
    else if (p.multiplicity == 1) ++mult1;
  }
  CHECK(mult4_plane == 1);
  CHECK(mult7_tri == 1);
  CHECK(mult7_uni == 2);
  CHECK(mult1 == 27);

  // Classes: two sharing {tri, uni}, one sharing {uni, uni}, one sharing
  // the plane ovoid.
  REQUIRE(rep.classes.size() == 4);
  int mixed = 0, uniuni = 0, plane = 0;
  for (const auto& cls : rep.classes) {
    CHECK(cls.fan_indices.size() == 3);
    std::multiset<OvoidRel> kinds(cls.shared_kinds.begin(), cls.shared_kinds.end());
    if (kinds == std::multiset<OvoidRel>{OvoidRel::TriTripod, OvoidRel::UniTripod}) ++mixed;
    else if (kinds == std::multiset<OvoidRel>{OvoidRel::UniTripod, OvoidRel::UniTripod}) ++uniuni;
    else if (kinds == std::multiset<OvoidRel>{OvoidRel::Plane}) ++plane;
  }
  CHECK(mixed == 2);
  CHECK(uniuni == 1);
  CHECK(plane == 1);
}
