#include "gq42/subquads.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

namespace gq42 {

std::vector<PointSet> gq22_copies_by_orbit(
    const PointSet& seed, const std::vector<Permutation>& gens) {
  std::unordered_set<std::uint64_t> seen{seed.words()[0]};
  std::vector<PointSet> frontier{seed}, out{seed};
  while (!frontier.empty()) {
    std::vector<PointSet> next;
    for (const auto& s : frontier) {
      for (const auto& g : gens) {
        PointSet im = g.apply(s);
        if (seen.insert(im.words()[0]).second) {
          next.push_back(im);
          out.push_back(im);
        }
      }
    }
    frontier = std::move(next);
  }
  std::sort(out.begin(), out.end(),
            [](const PointSet& a, const PointSet& b) { return lex_less(a, b); });
  return out;
}

std::vector<PointSet> gq22_copies_by_frames(const HermitianGeometry& geom,
                                            const Incidence& inc) {
  const auto& pg = geom.pg();
  std::array<Vec4, 45> rep{};
  for (int g = 0; g < 45; ++g) rep[static_cast<std::size_t>(g)] = pg.point(geom.pg_point(g));

  std::unordered_set<std::uint64_t> seen;
  std::vector<PointSet> out;

  // A PG(3,2) subgeometry is fixed by a frame: four independent points plus
  // a fifth with all basis coefficients nonzero. Restricting the fifth point
  // to come after the basis still reaches every subgeometry.
  for (int a = 0; a < 45; ++a) {
    for (int b = a + 1; b < 45; ++b) {
      for (int c = b + 1; c < 45; ++c) {
        for (int d = c + 1; d < 45; ++d) {
          std::array<Vec4, 4> basis{rep[static_cast<std::size_t>(a)], rep[static_cast<std::size_t>(b)],
                                    rep[static_cast<std::size_t>(c)], rep[static_cast<std::size_t>(d)]};
          if (rank_of(std::span<const Vec4>(basis.data(), 4)) != 4) continue;
          for (int e = d + 1; e < 45; ++e) {
            Vec4 coeff{};
            if (!solve_in_basis(basis, rep[static_cast<std::size_t>(e)], coeff)) continue;
            if (coeff[0].is_zero() || coeff[1].is_zero() || coeff[2].is_zero() ||
                coeff[3].is_zero()) {
              continue;
            }
            // Scale the basis so the fifth point is the coordinate sum; the
            // GF(2) combinations of the scaled basis form the subgeometry.
            std::array<Vec4, 4> w{scale(coeff[0], basis[0]), scale(coeff[1], basis[1]),
                                  scale(coeff[2], basis[2]), scale(coeff[3], basis[3])};
            PointSet copy;
            bool all_isotropic = true;
            for (int m = 1; m < 16 && all_isotropic; ++m) {
              Vec4 v{};
              for (int i = 0; i < 4; ++i) {
                if (m & (1 << i)) v = add(v, w[static_cast<std::size_t>(i)]);
              }
              int pid = pg.point_id(normalize(v));
              int gid = geom.gq_point(pid);
              if (gid < 0) {
                all_isotropic = false;
              } else {
                copy.set(gid);
              }
            }
            if (!all_isotropic || copy.count() != 15) continue;
            if (seen.insert(copy.words()[0]).second) out.push_back(copy);
          }
        }
      }
    }
  }

  // Keep only genuine GQ(2,2) substructures.
  std::vector<PointSet> valid;
  for (const auto& copy : out) {
    if (validate_gq(induced_structure(inc.structure(), copy), 2, 2).ok) {
      valid.push_back(copy);
    }
  }
  std::sort(valid.begin(), valid.end(),
            [](const PointSet& a, const PointSet& b) { return lex_less(a, b); });
  return valid;
}

namespace {

// Grids inside a copy: 9-point subsets inducing a GQ(2,1). Every point of a
// grid has induced degree 4, which prunes most of the C(15,9) candidates.
std::vector<PointSet> grids_inside(const Incidence& inc, const PointSet& copy) {
  auto pts = copy.to_vector();
  std::vector<PointSet> out;
  std::array<int, 9> idx{};
  // Enumerate 9-subsets of the 15 points.
  std::function<void(int, int)> rec = [&](int start, int chosen) {
    if (chosen == 9) {
      PointSet a;
      for (int k = 0; k < 9; ++k) a.set(pts[static_cast<std::size_t>(idx[static_cast<std::size_t>(k)])]);
      bool degrees_ok = true;
      for (int p : a) {
        if (((inc.perp(p) & a) - PointSet::single(p)).count() != 4) {
          degrees_ok = false;
          break;
        }
      }
      if (degrees_ok && is_grid(inc, a)) out.push_back(a);
      return;
    }
    for (int i = start; i <= 15 - (9 - chosen); ++i) {
      idx[static_cast<std::size_t>(chosen)] = i;
      rec(i + 1, chosen + 1);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

PartitionWitness find_partition_witness(const Incidence& inc,
                                        const std::vector<PointSet>& copies) {
  PartitionWitness w;

  // Candidate (grid, dual grid) pairs arise from splitting a copy into a
  // grid and its 6-point complement.
  std::unordered_map<std::uint64_t, std::vector<std::pair<PointSet, PointSet>>>
      by_dual;  // dual grid -> list of (grid, copy)
  for (const auto& copy : copies) {
    for (const auto& grid : grids_inside(inc, copy)) {
      PointSet dual = copy - grid;
      if (!is_dual_grid(inc, dual)) continue;
      by_dual[dual.words()[0]].push_back({grid, copy});
    }
  }

  PointSet everything = PointSet::first_n(45);
  for (const auto& [dual_key, pairs] : by_dual) {
    if (pairs.size() < 3) continue;
    PointSet dual = pairs[0].second - pairs[0].first;
    // Three pairwise disjoint grids compatible with this dual grid.
    for (std::size_t i = 0; i < pairs.size(); ++i) {
      for (std::size_t j = i + 1; j < pairs.size(); ++j) {
        if (pairs[i].first.intersects(pairs[j].first)) continue;
        for (std::size_t k = j + 1; k < pairs.size(); ++k) {
          if (pairs[i].first.intersects(pairs[k].first) ||
              pairs[j].first.intersects(pairs[k].first)) {
            continue;
          }
          PointSet rest = everything - dual - pairs[i].first - pairs[j].first -
                          pairs[k].first;
          if (rest.count() != 12) continue;
          // Split the remaining 12 points into two more dual grids.
          auto rv = rest.to_vector();
          bool done = false;
          for (int mask = 0; mask < (1 << 12) && !done; ++mask) {
            if (__builtin_popcount(static_cast<unsigned>(mask)) != 6) continue;
            if (!(mask & 1)) continue;  // fix point rv[0] in the first half
            PointSet h1;
            for (int t = 0; t < 12; ++t) {
              if (mask & (1 << t)) h1.set(rv[static_cast<std::size_t>(t)]);
            }
            PointSet h2 = rest - h1;
            if (!is_dual_grid(inc, h1) || !is_dual_grid(inc, h2)) continue;
            w.found = true;
            w.grids = {pairs[i].first, pairs[j].first, pairs[k].first};
            w.dual_grids = {dual, h1, h2};
            w.paired_dual = 0;
            done = true;
          }
          if (done) {
            // Does every dual grid form a GQ(2,2) with every grid?
            w.full_pairing = true;
            for (const auto& dg : w.dual_grids) {
              for (const auto& g : w.grids) {
                auto check = validate_gq(
                    induced_structure(inc.structure(), dg | g), 2, 2);
                w.full_pairing = w.full_pairing && check.ok;
              }
            }
            w.note = w.full_pairing
                         ? "every dual grid pairs with every grid"
                         : "only the distinguished dual grid pairs with all three grids";
            return w;
          }
        }
      }
    }
  }
  w.note = "no witness found";
  return w;
}

SymDiffSplit symmetric_difference_split(const Incidence& inc, const PointSet& o1,
                                        const PointSet& o2) {
  PointSet diff = o1 ^ o2;
  if (diff.count() != 12) {
    throw std::invalid_argument("symmetric_difference_split: |O1 xor O2| != 12");
  }
  auto pts = diff.to_vector();
  for (int mask = 0; mask < (1 << 12); ++mask) {
    if (__builtin_popcount(static_cast<unsigned>(mask)) != 6) continue;
    if (!(mask & 1)) continue;  // fix pts[0] in the first half
    PointSet h1;
    for (int t = 0; t < 12; ++t) {
      if (mask & (1 << t)) h1.set(pts[static_cast<std::size_t>(t)]);
    }
    PointSet h2 = diff - h1;
    if (is_dual_grid(inc, h1) && is_dual_grid(inc, h2)) {
      return {true, h1, h2};
    }
  }
  return {false, {}, {}};
}

SymDiffCensus symmetric_difference_census(const HyperplaneCatalog& cat,
                                          const PointSet& canonical_copy) {
  const Incidence& inc = cat.incidence();
  SymDiffCensus c;
  const auto& ov = cat.ovoids();
  for (std::size_t i = 0; i < ov.size(); ++i) {
    const auto& a = cat[ov[i]];
    for (std::size_t j = i + 1; j < ov.size(); ++j) {
      const auto& b = cat[ov[j]];
      PointSet shared = a.points & b.points;
      if (shared.count() != 3 || !inc.is_triad(shared)) continue;
      if (inc.classify_triad(shared).kind != TriadKind::Tricentric) continue;
      bool split = symmetric_difference_split(inc, a.points, b.points).ok;

      int planes = (a.kind == HyperplaneKind::PlaneOvoid) +
                   (b.kind == HyperplaneKind::PlaneOvoid);
      if (planes == 2) {
        ++c.plane_plane_pairs;
        if (split) {
          ++c.plane_plane_split;
          if (c.plane_plane_example[0] < 0) c.plane_plane_example = {a.id, b.id};
        }
      } else if (planes == 1) {
        ++c.plane_tripod_pairs;
        if (split) ++c.plane_tripod_split;
      } else {
        ++c.tripod_tripod_pairs;
        if (split) ++c.tripod_tripod_split;
      }

      if (split && c.with_tri_tripod_example[0] < 0) {
        bool involves_tri = false;
        for (const Hyperplane* h : {&a, &b}) {
          if (h->kind == HyperplaneKind::Tripod &&
              cat.classify_rel(*h, canonical_copy) == TripodRel::Tri) {
            involves_tri = true;
          }
        }
        if (involves_tri) c.with_tri_tripod_example = {a.id, b.id};
      }
    }
  }
  return c;
}

}  // namespace gq42
