#include "gq42/veldkamp.hpp"

#include <algorithm>
#include <stdexcept>

namespace gq42 {

const char* core_name(CoreKind k) {
  switch (k) {
    case CoreKind::Line: return "line";
    case CoreKind::TricentricTriad: return "tricentric-triad";
    case CoreKind::UnicentricTriad: return "unicentric-triad";
    case CoreKind::AcentricTriad: return "acentric-triad";
    case CoreKind::Point: return "point";
    case CoreKind::SixPoints: return "six-points";
    case CoreKind::Empty: return "empty";
    case CoreKind::Other: return "other";
    case CoreKind::Mixed: return "mixed";
  }
  return "?";
}

namespace {

CoreKind classify_core(const Incidence& inc, const PointSet& core) {
  switch (core.count()) {
    case 0:
      return CoreKind::Empty;
    case 1:
      return CoreKind::Point;
    case 3: {
      if (!inc.is_triad(core)) return CoreKind::Other;
      switch (inc.classify_triad(core).kind) {
        case TriadKind::Tricentric: return CoreKind::TricentricTriad;
        case TriadKind::Unicentric: return CoreKind::UnicentricTriad;
        case TriadKind::Acentric: return CoreKind::AcentricTriad;
      }
      return CoreKind::Other;
    }
    case 5: {
      for (const auto& line : inc.lines()) {
        if (line == core) return CoreKind::Line;
      }
      return CoreKind::Other;
    }
    case 6:
      return CoreKind::SixPoints;
    default:
      return CoreKind::Other;
  }
}

}  // namespace

VeldkampCensus::VeldkampCensus(const HyperplaneCatalog& cat) : cat_(&cat) {
  const int n = cat.size();
  std::vector<PointSet> pts(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) pts[static_cast<std::size_t>(i)] = cat[i].points;

  // Scan every pair; collections with equal member sets are one V-line.
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      PointSet core = pts[static_cast<std::size_t>(i)] & pts[static_cast<std::size_t>(j)];
      VMask members;
      members.set(i);
      members.set(j);
      for (int k = 0; k < n; ++k) {
        if (k == i || k == j) continue;
        if ((pts[static_cast<std::size_t>(k)] & pts[static_cast<std::size_t>(i)]) == core &&
            (pts[static_cast<std::size_t>(k)] & pts[static_cast<std::size_t>(j)]) == core) {
          members.set(k);
        }
      }
      auto it = index_.find(members);
      if (it == index_.end()) {
        VLine v;
        v.members = members;
        v.member_ids = members.to_vector();
        v.gen_pairs.push_back({i, j});
        v.core = core;
        for (int id : v.member_ids) {
          switch (cat[id].kind) {
            case HyperplaneKind::Perp: ++v.composition[0]; break;
            case HyperplaneKind::PlaneOvoid: ++v.composition[1]; break;
            case HyperplaneKind::Tripod: ++v.composition[2]; break;
          }
        }
        index_.emplace(members, static_cast<int>(vlines_.size()));
        vlines_.push_back(std::move(v));
      } else {
        VLine& v = vlines_[static_cast<std::size_t>(it->second)];
        v.gen_pairs.push_back({i, j});
        if (core != v.core) v.uniform_core = false;
      }
    }
  }

  // Canonical order by member tuple; rebuild the index afterwards.
  std::sort(vlines_.begin(), vlines_.end(), [](const VLine& a, const VLine& b) {
    return a.member_ids < b.member_ids;
  });
  index_.clear();
  through_.assign(static_cast<std::size_t>(n), {});
  const Incidence& inc = cat.incidence();
  for (std::size_t vi = 0; vi < vlines_.size(); ++vi) {
    VLine& v = vlines_[vi];
    v.core_kind = v.uniform_core ? classify_core(inc, v.core) : CoreKind::Mixed;
    index_.emplace(v.members, static_cast<int>(vi));
    ++table_[{static_cast<int>(v.member_ids.size()), v.composition, v.core_kind}];
    for (int id : v.member_ids) {
      through_[static_cast<std::size_t>(id)].push_back(static_cast<int>(vi));
    }
  }
}

int VeldkampCensus::index_of(const VMask& members) const {
  auto it = index_.find(members);
  return it == index_.end() ? -1 : it->second;
}

VLine VeldkampCensus::vline_of_pair(int h1, int h2) const {
  if (h1 == h2) throw std::invalid_argument("vline_of_pair: need distinct hyperplanes");
  const HyperplaneCatalog& cat = *cat_;
  PointSet core = cat[h1].points & cat[h2].points;
  VLine v;
  v.members.set(h1);
  v.members.set(h2);
  for (int k = 0; k < cat.size(); ++k) {
    if (k == h1 || k == h2) continue;
    if ((cat[k].points & cat[h1].points) == core &&
        (cat[k].points & cat[h2].points) == core) {
      v.members.set(k);
    }
  }
  v.member_ids = v.members.to_vector();
  v.gen_pairs.push_back({std::min(h1, h2), std::max(h1, h2)});
  v.core = core;
  for (int id : v.member_ids) {
    switch (cat[id].kind) {
      case HyperplaneKind::Perp: ++v.composition[0]; break;
      case HyperplaneKind::PlaneOvoid: ++v.composition[1]; break;
      case HyperplaneKind::Tripod: ++v.composition[2]; break;
    }
  }
  v.core_kind = classify_core(cat.incidence(), core);
  return v;
}

SubspaceReport pg34_subspace_check(const VeldkampCensus& census) {
  const HyperplaneCatalog& cat = census.catalog();
  const HermitianGeometry& geom = cat.geometry();
  const ProjectiveSpace& pg = geom.pg();
  SubspaceReport rep;

  // V-points: one per plane (tangent -> perp, secant -> plane ovoid).
  std::array<int, 85> hid_of_plane{};
  for (int pl = 0; pl < 85; ++pl) {
    int hid = cat.of_plane(pl);
    if (hid < 0) {
      rep.detail = "plane " + std::to_string(pl) + " carries no hyperplane";
      return rep;
    }
    hid_of_plane[static_cast<std::size_t>(pl)] = hid;
  }
  rep.v_points = 45 + 40;

  // Every pencil of 5 planes must pull back to a census V-line.
  std::vector<VMask> pencil_sets;
  rep.pencils_in_census = true;
  for (int ln = 0; ln < ProjectiveSpace::kLines; ++ln) {
    VMask members;
    int perps = 0;
    for (int pl : pg.pencil(ln)) {
      int hid = hid_of_plane[static_cast<std::size_t>(pl)];
      members.set(hid);
      if (cat[hid].kind == HyperplaneKind::Perp) ++perps;
    }
    if (members.count() != 5) {
      rep.detail = "pencil of line " + std::to_string(ln) + " is degenerate";
      return rep;
    }
    switch (geom.line_class(ln)) {
      case PgLineClass::Generator:
        if (perps != 5) {
          rep.detail = "generator pencil is not five perps";
          return rep;
        }
        ++rep.type1;
        break;
      case PgLineClass::Secant3:
        if (perps != 3) {
          rep.detail = "secant pencil is not three perps + two ovoids";
          return rep;
        }
        ++rep.type2;
        break;
      case PgLineClass::Tangent:
        if (perps != 1) {
          rep.detail = "tangent pencil is not one perp + four ovoids";
          return rep;
        }
        ++rep.type34;
        break;
    }
    if (census.index_of(members) < 0) {
      rep.pencils_in_census = false;
      rep.detail = "pencil of line " + std::to_string(ln) +
                   " is not a V-line of the census";
      return rep;
    }
    pencil_sets.push_back(members);
  }

  // Linear-space axioms on the 85 V-points: two V-points lie on exactly one
  // of the 357 pencil V-lines, and two pencils never share two V-points.
  rep.unique_joins = true;
  std::vector<int> vpoints;
  for (int pl = 0; pl < 85; ++pl) vpoints.push_back(hid_of_plane[static_cast<std::size_t>(pl)]);
  std::sort(vpoints.begin(), vpoints.end());
  for (std::size_t a = 0; a < vpoints.size() && rep.unique_joins; ++a) {
    for (std::size_t b = a + 1; b < vpoints.size(); ++b) {
      int joins = 0;
      for (const auto& m : pencil_sets) {
        if (m.test(vpoints[a]) && m.test(vpoints[b])) ++joins;
      }
      if (joins != 1) {
        rep.unique_joins = false;
        rep.detail = "V-points " + std::to_string(vpoints[a]) + "," +
                     std::to_string(vpoints[b]) + " lie on " +
                     std::to_string(joins) + " pencil V-lines";
        break;
      }
    }
  }

  rep.ok = rep.pencils_in_census && rep.unique_joins && rep.type1 == 27 &&
           rep.type2 == 240 && rep.type34 == 90;
  if (rep.ok) rep.detail = "ok";
  return rep;
}

NonlinearityWitnesses nonlinearity_witnesses(const VeldkampCensus& census,
                                             const FanCatalog& fans) {
  const HyperplaneCatalog& cat = census.catalog();
  const Incidence& inc = cat.incidence();
  NonlinearityWitnesses w;

  // (a) On a tricentric triad: the {3 perps + 2 plane ovoids} collection and
  // the {3 perps + 2 tripods} collection, sharing exactly the three perps.
  for (const auto& triad : inc.tricentric_triads()) {
    PointSet centers = inc.perp_of_set(triad);
    VMask perps;
    for (int c : centers) perps.set(cat.perp_of_center(c));
    VMask with_planes = perps, with_tripods = perps;
    int planes = 0, tripods = 0;
    for (int id : cat.ovoids()) {
      if (!cat[id].points.contains(triad)) continue;
      if (cat[id].kind == HyperplaneKind::PlaneOvoid) {
        with_planes.set(id);
        ++planes;
      } else {
        with_tripods.set(id);
        ++tripods;
      }
    }
    if (planes != 2 || tripods != 2) continue;
    int vp = census.index_of(with_planes);
    int vt = census.index_of(with_tripods);
    if (vp >= 0 && vt >= 0) {
      w.found_triple_share = true;
      w.vline_planes = vp;
      w.vline_tripods = vt;
      w.shared_triad = triad;
      break;
    }
  }

  // (b) V-lines of shape {perp} + {4 tripods} are rosettes at the perp's
  // center; look for a (perp, tripod) pair on at least three of them.
  std::map<std::pair<int, int>, std::vector<int>> rosette_pairs;
  for (int vi = 0; vi < census.size(); ++vi) {
    const VLine& v = census.vlines()[static_cast<std::size_t>(vi)];
    if (v.member_ids.size() != 5 || v.composition != std::array<int, 3>{1, 0, 4}) {
      continue;
    }
    int perp_id = -1;
    for (int id : v.member_ids) {
      if (cat[id].kind == HyperplaneKind::Perp) perp_id = id;
    }
    int center = cat[perp_id].center;
    // Rosette test: all four tripods pass through the center and meet
    // pairwise exactly there.
    bool rosette = true;
    for (int id : v.member_ids) {
      if (id == perp_id) continue;
      if (!cat[id].points.test(center)) rosette = false;
      for (int jd : v.member_ids) {
        if (jd == perp_id || jd <= id) continue;
        if ((cat[id].points & cat[jd].points) != PointSet::single(center)) {
          rosette = false;
        }
      }
    }
    if (!rosette) continue;
    for (int id : v.member_ids) {
      if (id != perp_id) rosette_pairs[{perp_id, id}].push_back(vi);
    }
  }
  for (const auto& [pair, vls] : rosette_pairs) {
    if (vls.size() >= 3) {
      w.found_rosette_bundle = true;
      w.rosette_perp = pair.first;
      w.rosette_tripod = pair.second;
      w.rosette_vlines = vls;
      break;
    }
  }

  // (c) V-lines that are fans; look for the (plane ovoid, tripod) pair on
  // the largest number of them.
  std::map<std::pair<int, int>, std::vector<int>> fan_pairs;
  for (int vi = 0; vi < census.size(); ++vi) {
    const VLine& v = census.vlines()[static_cast<std::size_t>(vi)];
    if (v.member_ids.size() != 5 || v.composition != std::array<int, 3>{0, 1, 4}) {
      continue;
    }
    std::array<int, 5> members{};
    std::copy(v.member_ids.begin(), v.member_ids.end(), members.begin());
    if (fans.index_of(members) < 0) continue;
    int plane_id = -1;
    for (int id : v.member_ids) {
      if (cat[id].kind == HyperplaneKind::PlaneOvoid) plane_id = id;
    }
    for (int id : v.member_ids) {
      if (id != plane_id) fan_pairs[{plane_id, id}].push_back(vi);
    }
  }
  std::size_t best = 0;
  for (const auto& [pair, vls] : fan_pairs) {
    if (vls.size() > best) {
      best = vls.size();
      w.fan_plane = pair.first;
      w.fan_tripod = pair.second;
      w.fan_vlines = vls;
    }
  }
  w.found_fan_bundle = best >= 4;
  if (w.fan_plane >= 0) {
    // Account for every fan through the pair; any fan missing from the
    // census must have all its pair collections strictly larger than it.
    auto through_both = fans.fans_of(w.fan_plane) & fans.fans_of(w.fan_tripod);
    w.fans_through_pair = through_both.count();
    for (int fi : through_both) {
      const auto& f = fans.fans()[static_cast<std::size_t>(fi)];
      VMask fmask;
      for (int m : f.members) fmask.set(m);
      if (census.index_of(fmask) >= 0) continue;
      w.missing_fan = fi;
      w.missing_fan_proper_subset = true;
      for (std::size_t a = 0; a < 5; ++a) {
        for (std::size_t b = a + 1; b < 5; ++b) {
          VLine v = census.vline_of_pair(f.members[a], f.members[b]);
          bool strictly_contains =
              v.members.contains(fmask) && v.members != fmask;
          w.missing_fan_proper_subset &= strictly_contains;
        }
      }
      int plane_member = -1;
      for (int m : f.members) {
        if (cat[m].kind == HyperplaneKind::PlaneOvoid) plane_member = m;
      }
      w.missing_fan_is_distinguished =
          (fi == distinguished_fan(fans, cat, plane_member));
    }
  }

  w.not_partial_linear = false;
  if (w.found_triple_share) {
    w.not_partial_linear = true;  // two V-lines share three V-points
  } else {
    for (const auto& [pair, vls] : rosette_pairs) {
      if (vls.size() >= 2) w.not_partial_linear = true;
    }
  }
  return w;
}

}  // namespace gq42
