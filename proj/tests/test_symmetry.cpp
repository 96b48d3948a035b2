#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <set>

#include "gq42/hermitian.hpp"
#include "gq42/hyperplanes.hpp"
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
const AutomorphismGroup& group() {
  static AutomorphismGroup g = automorphism_group(gq());
  return g;
}
const HyperplaneCatalog& cat() {
  static HyperplaneCatalog c(geom(), gq());
  return c;
}
}  // namespace

TEST_CASE("collinearity graph is strongly regular (45,12,3,3)") {
  for (int v = 0; v < 45; ++v) {
    PointSet nb = gq().perp(v) - PointSet::single(v);
    CHECK(nb.count() == 12);
    for (int w = v + 1; w < 45; ++w) {
      PointSet nw = gq().perp(w) - PointSet::single(w);
      int common = (nb & nw - PointSet::single(v)).count();
      CHECK(common == 3);
    }
  }
}

TEST_CASE("group is transitive on points and closed under composition") {
  CHECK(group().order() > 0);
  std::set<int> images_of_0;
  for (const auto& g : group().elements) images_of_0.insert(g(0));
  CHECK(images_of_0.size() == 45);

  // Closure spot-check on generators.
  std::set<std::array<std::uint8_t, 45>> element_set;
  for (const auto& g : group().elements) element_set.insert(g.img);
  for (const auto& a : group().generators) {
    CHECK(element_set.count(a.inverse().img) == 1);
    for (const auto& b : group().generators) {
      CHECK(element_set.count(compose(a, b).img) == 1);
    }
  }
}

TEST_CASE("orbit-stabilizer consistency at a point") {
  std::uint64_t stab0 = 0;
  for (const auto& g : group().elements) {
    if (g(0) == 0) ++stab0;
  }
  CHECK(group().order() == 45 * stab0);
}

TEST_CASE("generators are few and preserve the line set") {
  CHECK(group().generators.size() <= 5);
  std::set<std::uint64_t> lines;
  for (const auto& line : gq().lines()) lines.insert(line.words()[0]);
  for (const auto& g : group().generators) {
    for (const auto& line : gq().lines()) {
      CHECK(lines.count(g.apply(line).words()[0]) == 1);
    }
  }
}

TEST_CASE("ovoid orbits have sizes 40 and 160 and match the span classification") {
  std::vector<PointSet> ovoids;
  std::vector<bool> is_plane;
  for (int id : cat().ovoids()) {
    ovoids.push_back(cat()[id].points);
    is_plane.push_back(cat()[id].kind == HyperplaneKind::PlaneOvoid);
  }
  auto orbit = orbits_of_sets(ovoids, group().generators);
  auto sizes = orbit_sizes_from_partition(orbit);
  CHECK(sizes == std::vector<int>{40, 160});
  // Orbit membership coincides with the coordinate-free invariant.
  for (std::size_t i = 0; i < ovoids.size(); ++i) {
    for (std::size_t j = 0; j < ovoids.size(); ++j) {
      if (orbit[i] == orbit[j]) CHECK(is_plane[i] == is_plane[j]);
    }
  }
}

TEST_CASE("stabilizer of the canonical copy splits tripods 40/120 as tri/uni") {
  PointSet copy = geom().canonical_gq22();
  auto stab = setwise_stabilizer(group(), copy);
  CHECK(group().order() % stab.size() == 0);

  std::vector<PointSet> tripods;
  std::vector<TripodRel> rel;
  for (int id : cat().tripods()) {
    tripods.push_back(cat()[id].points);
    rel.push_back(cat().classify_rel(cat()[id], copy));
  }
  auto orbit = orbits_of_sets(tripods, stab);
  auto sizes = orbit_sizes_from_partition(orbit);
  CHECK(sizes == std::vector<int>{40, 120});
  for (std::size_t i = 0; i < tripods.size(); ++i) {
    for (std::size_t j = 0; j < tripods.size(); ++j) {
      if (orbit[i] == orbit[j]) CHECK(rel[i] == rel[j]);
    }
  }
}

TEST_CASE("orbit sizes divide the group order and sum to the object count") {
  std::vector<PointSet> perp_sets;
  for (int x = 0; x < 45; ++x) perp_sets.push_back(gq().perp(x));
  auto orbit = orbits_of_sets(perp_sets, group().generators);
  auto sizes = orbit_sizes_from_partition(orbit);
  int total = 0;
  for (int s : sizes) {
    CHECK(group().order() % static_cast<std::uint64_t>(s) == 0);
    total += s;
  }
  CHECK(total == 45);
  CHECK(sizes == std::vector<int>{45});
}
