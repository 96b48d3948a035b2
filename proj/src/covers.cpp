#include "gq42/covers.hpp"

#include <algorithm>
#include <stdexcept>

#include "gq42/exact_cover.hpp"

namespace gq42 {

FanCatalog::FanCatalog(const HyperplaneCatalog& cat) {
  // Exact cover of the 45 points by the 200 ovoids.
  const auto& ids = cat.ovoids();
  std::vector<std::uint64_t> masks;
  for (int id : ids) masks.push_back(cat[id].points.words()[0]);
  std::uint64_t universe = (std::uint64_t{1} << 45) - 1;
  ExactCover ec(universe, masks);
  ec.solve([&](std::span<const int> sol) {
    if (sol.size() != 5) throw std::logic_error("fan with wrong member count");
    Fan f;
    for (std::size_t i = 0; i < 5; ++i) f.members[i] = ids[static_cast<std::size_t>(sol[i])];
    std::sort(f.members.begin(), f.members.end());
    fans_.push_back(f);
  });
  std::sort(fans_.begin(), fans_.end(),
            [](const Fan& a, const Fan& b) { return a.members < b.members; });

  by_hyperplane_.resize(245);
  for (std::size_t i = 0; i < fans_.size(); ++i) {
    index_[fans_[i].members] = static_cast<int>(i);
    for (int h : fans_[i].members) {
      by_hyperplane_[static_cast<std::size_t>(h)].set(static_cast<int>(i));
    }
  }
}

int FanCatalog::index_of(const std::array<int, 5>& members) const {
  auto sorted = members;
  std::sort(sorted.begin(), sorted.end());
  auto it = index_.find(sorted);
  return it == index_.end() ? -1 : it->second;
}

std::vector<Rosette> rosettes_at(const HyperplaneCatalog& cat, int point) {
  const Incidence& inc = cat.incidence();
  // Universe: points noncollinear with the base. Candidates: the ovoids
  // through the base, with the base removed.
  PointSet noncollinear = PointSet::first_n(45) - inc.perp(point);
  std::vector<int> ids;
  std::vector<std::uint64_t> masks;
  for (int id : cat.ovoids()) {
    if (!cat[id].points.test(point)) continue;
    ids.push_back(id);
    masks.push_back((cat[id].points - PointSet::single(point)).words()[0]);
  }
  ExactCover ec(noncollinear.words()[0], masks);
  std::vector<Rosette> out;
  ec.solve([&](std::span<const int> sol) {
    if (sol.size() != 4) throw std::logic_error("rosette with wrong member count");
    Rosette r;
    r.base = point;
    for (std::size_t i = 0; i < 4; ++i) r.members[i] = ids[static_cast<std::size_t>(sol[i])];
    std::sort(r.members.begin(), r.members.end());
    out.push_back(r);
  });
  std::sort(out.begin(), out.end(),
            [](const Rosette& a, const Rosette& b) { return a.members < b.members; });
  return out;
}

OvoidRel ovoid_rel(const HyperplaneCatalog& cat, int hyperplane_id,
                   const PointSet& copy) {
  const auto& h = cat[hyperplane_id];
  switch (h.kind) {
    case HyperplaneKind::PlaneOvoid:
      return OvoidRel::Plane;
    case HyperplaneKind::Tripod:
      return cat.classify_rel(h, copy) == TripodRel::Tri ? OvoidRel::TriTripod
                                                         : OvoidRel::UniTripod;
    case HyperplaneKind::Perp:
      break;
  }
  throw std::invalid_argument("ovoid_rel: hyperplane is a perp");
}

std::array<int, 3> fan_composition_rel(const HyperplaneCatalog& cat,
                                       const Fan& fan, const PointSet& copy) {
  std::array<int, 3> counts{};
  for (int id : fan.members) {
    switch (ovoid_rel(cat, id, copy)) {
      case OvoidRel::Plane: ++counts[0]; break;
      case OvoidRel::TriTripod: ++counts[1]; break;
      case OvoidRel::UniTripod: ++counts[2]; break;
    }
  }
  return counts;
}

std::vector<std::array<PointSet, 3>> triad_partitions(
    const HyperplaneCatalog& cat, int plane_ovoid_id) {
  const auto& h = cat[plane_ovoid_id];
  if (h.kind != HyperplaneKind::PlaneOvoid) {
    throw std::invalid_argument("triad_partitions: not a plane ovoid");
  }
  return cat.triad_partitions(h.points);
}

int distinguished_fan(const FanCatalog& fans, const HyperplaneCatalog& cat,
                      int plane_ovoid_id) {
  const Incidence& inc = cat.incidence();
  auto partitions = triad_partitions(cat, plane_ovoid_id);
  if (partitions.size() != 4) {
    throw std::logic_error("distinguished_fan: plane ovoid without 4 partitions");
  }
  std::array<int, 5> members{};
  members[0] = plane_ovoid_id;
  for (std::size_t k = 0; k < 4; ++k) {
    PointSet centers;
    for (const auto& triad : partitions[k]) {
      centers |= inc.perp_of_set(triad);
    }
    if (centers.count() != 9) {
      throw std::logic_error("distinguished_fan: centers do not form 9 points");
    }
    int id = cat.id_of(centers);
    if (id < 0 || cat[id].kind != HyperplaneKind::Tripod) {
      throw std::logic_error("distinguished_fan: centers are not a tripod");
    }
    members[k + 1] = id;
  }
  int idx = fans.index_of(members);
  if (idx < 0) {
    throw std::logic_error("distinguished_fan: member sets do not form a fan");
  }
  return idx;
}

FanConfigReport fan_configuration(const FanCatalog& fans,
                                  const HyperplaneCatalog& cat,
                                  const PointSet& copy, int ovoid_id) {
  FanConfigReport rep;
  rep.ovoid = ovoid_id;
  rep.ovoid_kind = ovoid_rel(cat, ovoid_id, copy);
  const PointSet& base = cat[ovoid_id].points;

  for (int id : cat.ovoids()) {
    if (id == ovoid_id || cat[id].points.intersects(base)) continue;
    FanConfigReport::Partner p;
    p.id = id;
    p.kind = ovoid_rel(cat, id, copy);
    p.multiplicity = fans.pair_multiplicity(ovoid_id, id);
    rep.multiplicity_sum += p.multiplicity;
    switch (p.kind) {
      case OvoidRel::Plane: ++rep.disjoint_plane; break;
      case OvoidRel::TriTripod: ++rep.disjoint_tri; break;
      case OvoidRel::UniTripod: ++rep.disjoint_uni; break;
    }
    rep.partners.push_back(p);
  }

  rep.fan_indices = fans.fans_of(ovoid_id).to_vector();

  // The distinguished fan through the ovoid: the unique one sharing at
  // least one further ovoid with each of the other twelve.
  for (int fi : rep.fan_indices) {
    SmallBitset<245> fset;
    for (int m : fans.fans()[static_cast<std::size_t>(fi)].members) fset.set(m);
    bool shares_with_all = true;
    for (int fj : rep.fan_indices) {
      if (fi == fj) continue;
      int common = 0;
      for (int m : fans.fans()[static_cast<std::size_t>(fj)].members) {
        if (fset.test(m)) ++common;
      }
      if (common < 2) {
        shares_with_all = false;
        break;
      }
    }
    if (shares_with_all) {
      if (rep.distinguished >= 0) {
        throw std::logic_error("fan_configuration: distinguished fan not unique");
      }
      rep.distinguished = fi;
    }
  }

  // Classes of the remaining fans, keyed by which high-multiplicity
  // partners they contain.
  std::vector<int> special;
  for (const auto& p : rep.partners) {
    if (p.multiplicity > 1) special.push_back(p.id);
  }
  std::map<std::vector<int>, FanConfigReport::FanClass> classes;
  for (int fi : rep.fan_indices) {
    if (fi == rep.distinguished) continue;
    std::vector<int> key;
    for (int m : fans.fans()[static_cast<std::size_t>(fi)].members) {
      if (std::find(special.begin(), special.end(), m) != special.end()) {
        key.push_back(m);
      }
    }
    std::sort(key.begin(), key.end());
    auto& cls = classes[key];
    cls.fan_indices.push_back(fi);
    cls.shared = key;
  }
  for (auto& [key, cls] : classes) {
    for (int id : cls.shared) {
      cls.shared_kinds.push_back(ovoid_rel(cat, id, copy));
    }
    rep.classes.push_back(cls);
  }
  return rep;
}

}  // namespace gq42
