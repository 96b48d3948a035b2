#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "gq42/bitset.hpp"
#include "gq42/incidence.hpp"

namespace gq42 {

/// A point permutation of the 45-point structure that maps lines onto lines.
struct Permutation {
  std::array<std::uint8_t, 45> img{};

  static Permutation identity() {
    Permutation p;
    for (int i = 0; i < 45; ++i) p.img[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>(i);
    return p;
  }

  int operator()(int x) const { return img[static_cast<std::size_t>(x)]; }

  PointSet apply(const PointSet& s) const {
    PointSet r;
    for (int p : s) r.set(img[static_cast<std::size_t>(p)]);
    return r;
  }

  friend Permutation compose(const Permutation& g, const Permutation& h) {
    Permutation r;  // r = g after h
    for (int i = 0; i < 45; ++i) {
      r.img[static_cast<std::size_t>(i)] = g.img[h.img[static_cast<std::size_t>(i)]];
    }
    return r;
  }

  Permutation inverse() const {
    Permutation r;
    for (int i = 0; i < 45; ++i) r.img[img[static_cast<std::size_t>(i)]] = static_cast<std::uint8_t>(i);
    return r;
  }

  friend bool operator==(const Permutation& a, const Permutation& b) {
    return a.img == b.img;
  }
  friend bool operator<(const Permutation& a, const Permutation& b) {
    return a.img < b.img;
  }
};

/// The full line-preserving permutation group, stored elementwise (it is
/// small), plus a short generating set.
struct AutomorphismGroup {
  std::vector<Permutation> elements;
  std::vector<Permutation> generators;
  std::uint64_t order() const { return elements.size(); }
};

/// Finds all automorphisms of the collinearity graph by backtracking over a
/// breadth-first vertex order (candidates must match the adjacency pattern
/// of every already-mapped vertex). Lines are the maximal 5-cliques, so
/// graph automorphisms preserve lines; this is still asserted per element.
AutomorphismGroup automorphism_group(const Incidence& inc);

/// Orbit partition of abstract items under generators; `image` maps
/// (generator index, item) to item. Returns the orbit id per item, with
/// orbits numbered by their least member.
std::vector<int> orbit_partition(
    int n_items, int n_generators,
    const std::function<int(int, int)>& image);

/// Orbits of point sets under a permutation list; sets must be distinct.
std::vector<int> orbits_of_sets(const std::vector<PointSet>& objects,
                                const std::vector<Permutation>& perms);

std::vector<int> orbit_sizes_from_partition(const std::vector<int>& orbit_ids);

/// Elements fixing `fixed` setwise.
std::vector<Permutation> setwise_stabilizer(const AutomorphismGroup& group,
                                            const PointSet& fixed);

}  // namespace gq42
