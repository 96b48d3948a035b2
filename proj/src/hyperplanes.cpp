#include "gq42/hyperplanes.hpp"

#include <algorithm>
#include <stdexcept>

#include "gq42/exact_cover.hpp"

namespace gq42 {

const char* kind_name(HyperplaneKind k) {
  switch (k) {
    case HyperplaneKind::Perp:
      return "perp";
    case HyperplaneKind::PlaneOvoid:
      return "plane_ovoid";
    case HyperplaneKind::Tripod:
      return "tripod";
  }
  return "?";
}

namespace {

// Point states for the line DFS.
constexpr std::int8_t kUnknown = 0;
constexpr std::int8_t kIn = 1;
constexpr std::int8_t kOut = 2;

struct DfsContext {
  const std::vector<PointSet>* lines;
  std::vector<std::array<int, 5>> line_pts;
  std::vector<PointSet> results;
};

// Enforce |L ∩ H| in {1,5} on every line; returns false on contradiction.
bool propagate(DfsContext& ctx, std::array<std::int8_t, 45>& state) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& pts : ctx.line_pts) {
      int in = 0, out = 0;
      for (int p : pts) {
        if (state[static_cast<std::size_t>(p)] == kIn) ++in;
        else if (state[static_cast<std::size_t>(p)] == kOut) ++out;
      }
      if (out == 5) return false;
      if (in >= 2) {
        if (out > 0) return false;
        if (in < 5) {
          for (int p : pts) {
            if (state[static_cast<std::size_t>(p)] == kUnknown) {
              state[static_cast<std::size_t>(p)] = kIn;
              changed = true;
            }
          }
        }
      } else if (out == 4 && in == 0) {
        for (int p : pts) {
          if (state[static_cast<std::size_t>(p)] == kUnknown) {
            state[static_cast<std::size_t>(p)] = kIn;
            changed = true;
          }
        }
      }
    }
  }
  return true;
}

void dfs(DfsContext& ctx, std::array<std::int8_t, 45> state) {
  if (!propagate(ctx, state)) return;

  // Find a line not yet settled (settled: full, or one in + four out).
  int branch_line = -1;
  for (std::size_t li = 0; li < ctx.line_pts.size(); ++li) {
    int in = 0, out = 0;
    for (int p : ctx.line_pts[li]) {
      if (state[static_cast<std::size_t>(p)] == kIn) ++in;
      else if (state[static_cast<std::size_t>(p)] == kOut) ++out;
    }
    if (in == 5 || (in == 1 && out == 4)) continue;
    branch_line = static_cast<int>(li);
    break;
  }

  if (branch_line < 0) {
    PointSet h;
    for (int p = 0; p < 45; ++p) {
      if (state[static_cast<std::size_t>(p)] == kUnknown) {
        throw std::logic_error("line DFS left a point undecided");
      }
      if (state[static_cast<std::size_t>(p)] == kIn) h.set(p);
    }
    ctx.results.push_back(h);
    return;
  }

  const auto& pts = ctx.line_pts[static_cast<std::size_t>(branch_line)];
  int in = 0, out = 0;
  for (int p : pts) {
    if (state[static_cast<std::size_t>(p)] == kIn) ++in;
    else if (state[static_cast<std::size_t>(p)] == kOut) ++out;
  }

  if (out == 0) {  // option: take the line fully inside
    auto s = state;
    for (int p : pts) s[static_cast<std::size_t>(p)] = kIn;
    dfs(ctx, s);
  }
  if (in == 1) {  // option: keep the single chosen point
    auto s = state;
    for (int p : pts) {
      if (s[static_cast<std::size_t>(p)] == kUnknown) s[static_cast<std::size_t>(p)] = kOut;
    }
    dfs(ctx, s);
  } else if (in == 0) {  // option: pick each unknown point as the single one
    for (int pick : pts) {
      if (state[static_cast<std::size_t>(pick)] != kUnknown) continue;
      auto s = state;
      for (int p : pts) {
        s[static_cast<std::size_t>(p)] = (p == pick) ? kIn : kOut;
      }
      dfs(ctx, s);
    }
  }
}

std::uint64_t mask_key(const PointSet& s) { return s.words()[0]; }

}  // namespace

std::vector<PointSet> HyperplaneCatalog::enumerate_by_line_dfs(
    const Incidence& inc) {
  DfsContext ctx;
  ctx.lines = &inc.lines();
  for (const auto& line : inc.lines()) {
    std::array<int, 5> pts{};
    int k = 0;
    for (int p : line) pts[static_cast<std::size_t>(k++)] = p;
    if (k != 5) throw std::invalid_argument("line DFS expects 5-point lines");
    ctx.line_pts.push_back(pts);
  }
  dfs(ctx, std::array<std::int8_t, 45>{});

  // Distinct complete assignments; drop the full point set (not proper).
  std::vector<PointSet> out;
  for (const auto& h : ctx.results) {
    if (h.count() == 45) continue;
    out.push_back(h);
  }
  std::sort(out.begin(), out.end(),
            [](const PointSet& a, const PointSet& b) { return lex_less(a, b); });
  if (std::adjacent_find(out.begin(), out.end()) != out.end()) {
    throw std::logic_error("line DFS produced duplicate hyperplanes");
  }
  return out;
}

std::vector<PointSet> HyperplaneCatalog::enumerate_ovoids(const Incidence& inc) {
  // Exact cover: universe = lines, a point covers the lines through it.
  const int nl = static_cast<int>(inc.lines().size());
  if (nl > 64) throw std::invalid_argument("too many lines for exact cover");
  std::vector<std::uint64_t> cand(static_cast<std::size_t>(inc.n()), 0);
  for (int p = 0; p < inc.n(); ++p) {
    for (int li : inc.lines_of(p)) {
      cand[static_cast<std::size_t>(p)] |= std::uint64_t{1} << li;
    }
  }
  std::uint64_t universe =
      nl == 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << nl) - 1);
  ExactCover ec(universe, cand);
  std::vector<PointSet> out;
  ec.solve([&](std::span<const int> sol) {
    PointSet o;
    for (int p : sol) o.set(p);
    out.push_back(o);
  });
  std::sort(out.begin(), out.end(),
            [](const PointSet& a, const PointSet& b) { return lex_less(a, b); });
  return out;
}

HyperplaneCatalog::HyperplaneCatalog(const HermitianGeometry& geom,
                                     const Incidence& inc)
    : geom_(&geom), inc_(&inc) {
  auto sets = enumerate_by_line_dfs(inc);

  // Cross-check against the independent route: perps + exact-cover ovoids.
  std::vector<PointSet> other;
  for (int x = 0; x < inc.n(); ++x) other.push_back(inc.perp(x));
  auto ovs = enumerate_ovoids(inc);
  other.insert(other.end(), ovs.begin(), ovs.end());
  std::sort(other.begin(), other.end(),
            [](const PointSet& a, const PointSet& b) { return lex_less(a, b); });
  if (sets != other) {
    throw std::logic_error(
        "hyperplane enumeration mismatch between line DFS and perps+ovoids");
  }

  perp_by_center_.fill(-1);
  by_plane_.fill(-1);

  // Secant plane lookup for plane-ovoid classification.
  std::unordered_map<std::uint64_t, int> section_to_plane;
  for (int pl : geom.secant_planes()) {
    section_to_plane[mask_key(geom.plane_section(pl))] = pl;
  }

  all_.reserve(sets.size());
  for (std::size_t i = 0; i < sets.size(); ++i) {
    Hyperplane h;
    h.id = static_cast<int>(i);
    h.points = sets[i];
    int sz = h.points.count();
    if (sz == 13) {
      h.kind = HyperplaneKind::Perp;
      for (int x : h.points) {
        if (inc.perp(x) == h.points) {
          h.center = x;
          break;
        }
      }
      if (h.center < 0) throw std::logic_error("13-point hyperplane without center");
      perps_.push_back(h.id);
      perp_by_center_[static_cast<std::size_t>(h.center)] = h.id;
      by_plane_[static_cast<std::size_t>(geom.tangent_plane_at(h.center))] = h.id;
    } else if (sz == 9) {
      // Rank of the coordinate span: 3 = plane ovoid, 4 = tripod.
      std::vector<Vec4> reps;
      for (int x : h.points) reps.push_back(geom.pg().point(geom.pg_point(x)));
      int rank = rank_of(reps);
      if (rank == 3) {
        h.kind = HyperplaneKind::PlaneOvoid;
        auto it = section_to_plane.find(mask_key(h.points));
        if (it == section_to_plane.end()) {
          throw std::logic_error("plane ovoid is not a secant plane section");
        }
        h.plane = it->second;
        plane_ovoids_.push_back(h.id);
        by_plane_[static_cast<std::size_t>(h.plane)] = h.id;
      } else if (rank == 4) {
        h.kind = HyperplaneKind::Tripod;
        auto parts = triad_partitions(h.points);
        if (parts.size() != 1) {
          throw std::logic_error("tripod with " + std::to_string(parts.size()) +
                                 " triad partitions, want 1");
        }
        h.triads = parts[0];
        tripods_.push_back(h.id);
      } else {
        throw std::logic_error("ovoid of rank " + std::to_string(rank));
      }
    } else {
      throw std::logic_error("hyperplane of size " + std::to_string(sz));
    }
    index_[mask_key(h.points)] = h.id;
    all_.push_back(std::move(h));
  }

  ovoids_ = plane_ovoids_;
  ovoids_.insert(ovoids_.end(), tripods_.begin(), tripods_.end());
  std::sort(ovoids_.begin(), ovoids_.end());

  if (perps_.size() != 45 || plane_ovoids_.size() != 40 ||
      tripods_.size() != 160) {
    throw std::logic_error("hyperplane kind split is not 45/40/160");
  }
}

int HyperplaneCatalog::id_of(const PointSet& points) const {
  auto it = index_.find(mask_key(points));
  return it == index_.end() ? -1 : it->second;
}

std::vector<std::array<PointSet, 3>> HyperplaneCatalog::triad_partitions(
    const PointSet& ovoid) const {
  if (ovoid.count() != 9) {
    throw std::invalid_argument("triad_partitions: ovoid must have 9 points");
  }
  auto pts = ovoid.to_vector();
  // Tricentric triples within the ovoid (all pairs are noncollinear).
  std::vector<PointSet> tritriads;
  for (int i = 0; i < 9; ++i) {
    for (int j = i + 1; j < 9; ++j) {
      for (int k = j + 1; k < 9; ++k) {
        PointSet t{pts[static_cast<std::size_t>(i)], pts[static_cast<std::size_t>(j)], pts[static_cast<std::size_t>(k)]};
        if (inc_->perp_of_set(t).count() == 3) tritriads.push_back(t);
      }
    }
  }
  std::vector<std::array<PointSet, 3>> out;
  // Fix the triad containing the least point, then the one containing the
  // least remaining point; this visits each unordered partition once.
  for (std::size_t a = 0; a < tritriads.size(); ++a) {
    if (!tritriads[a].test(ovoid.first())) continue;
    PointSet rest = ovoid - tritriads[a];
    for (std::size_t b = 0; b < tritriads.size(); ++b) {
      if (!rest.contains(tritriads[b]) || !tritriads[b].test(rest.first())) {
        continue;
      }
      PointSet last = rest - tritriads[b];
      for (std::size_t c = 0; c < tritriads.size(); ++c) {
        if (tritriads[c] == last) {
          out.push_back({tritriads[a], tritriads[b], tritriads[c]});
          break;
        }
      }
    }
  }
  return out;
}

PointSet HyperplaneCatalog::derive_tripod(const Hyperplane& plane_ovoid, int x,
                                          int y) const {
  if (plane_ovoid.kind != HyperplaneKind::PlaneOvoid) {
    throw std::invalid_argument("derive_tripod: first argument must be a plane ovoid");
  }
  if (x == y || !plane_ovoid.points.test(x) || !plane_ovoid.points.test(y)) {
    throw std::invalid_argument("derive_tripod: x, y must be distinct ovoid points");
  }
  PointSet hyp = inc_->hyperbolic_line(x, y);
  if (!plane_ovoid.points.contains(hyp)) {
    throw std::logic_error("derive_tripod: {x,y}^perp-perp not inside the plane ovoid");
  }
  return (plane_ovoid.points - hyp) | inc_->perp_of_set(PointSet{x, y});
}

TripodRel HyperplaneCatalog::classify_rel(const Hyperplane& tripod,
                                          const PointSet& copy) const {
  PointSet shared = tripod.points & copy;
  if (!inc_->is_triad(shared)) {
    throw std::logic_error("classify_rel: tripod and copy do not share a triad");
  }
  auto cls = inc_->classify_triad(shared);
  if (cls.kind == TriadKind::Tricentric) return TripodRel::Tri;
  if (cls.kind == TriadKind::Unicentric) return TripodRel::Uni;
  throw std::logic_error("classify_rel: shared triad is acentric");
}

}  // namespace gq42
