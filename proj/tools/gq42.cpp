// Command-line front end: build the geometry, verify the claim suite, emit
// censuses, witnesses and machine-readable exports.
//
// Exit codes: 0 success, 1 failed verification / missing witness, 2 usage.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "gq42/checks.hpp"
#include "gq42/exports.hpp"
#include "gq42/workspace.hpp"

using namespace gq42;
using nlohmann::json;

namespace {

void write_output(const std::string& path, const std::string& content) {
  if (path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
    return;
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot open output file: " + path);
  out << content;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

json point_set_json(const PointSet& s) { return json(s.to_vector()); }

int cmd_verify(Workspace& ws, const std::string& name) {
  std::vector<CheckResult> results;
  if (name == "all") {
    results = run_all_checks(ws);
  } else {
    results.push_back(run_check(ws, name));
  }
  bool all_ok = true;
  std::printf("%-4s %-22s %-6s %s\n", "id", "check", "state", "detail");
  for (const auto& r : results) {
    all_ok &= r.passed;
    std::printf("%-4s %-22s %-6s %s\n", r.id.c_str(), r.alias.c_str(),
                r.passed ? "PASS" : "FAIL", r.detail.c_str());
  }
  return all_ok ? 0 : 1;
}

int cmd_census(Workspace& ws, const std::string& kind, const std::string& out) {
  std::ostringstream os;
  if (kind == "hyperplanes") {
    const auto& cat = ws.hyperplanes();
    os << "hyperplanes total " << cat.size() << "\n";
    os << "  perps        " << cat.perps().size() << " (size 13)\n";
    os << "  plane ovoids " << cat.plane_ovoids().size() << " (size 9, rank-3 span)\n";
    os << "  tripods      " << cat.tripods().size() << " (size 9, rank-4 span)\n";
  } else if (kind == "vlines") {
    const auto& census = ws.veldkamp();
    os << "distinct V-lines " << census.size() << " (from "
       << 245 * 244 / 2 << " hyperplane pairs)\n";
    os << "size  perps  planes  tripods  core               count\n";
    for (const auto& [key, count] : census.table()) {
      const auto& [size, comp, core] = key;
      char buf[96];
      std::snprintf(buf, sizeof(buf), "%-5d %-6d %-7d %-8d %-18s %d\n", size,
                    comp[0], comp[1], comp[2], core_name(core), count);
      os << buf;
    }
  } else if (kind == "fans") {
    const auto& fans = ws.fans();
    const auto& cat = ws.hyperplanes();
    os << "fans total " << fans.size() << "\n";
    std::set<int> distinguished;
    for (int id : cat.plane_ovoids()) {
      distinguished.insert(distinguished_fan(fans, cat, id));
    }
    os << "  distinguished " << distinguished.size() << "\n";
    os << "  per ovoid     " << fans.fans_of(cat.ovoids()[0]).count() << "\n";
  } else if (kind == "rosettes") {
    const auto& cat = ws.hyperplanes();
    int total = 0, all_plane = 0, all_tripod = 0;
    for (int x = 0; x < 45; ++x) {
      auto rs = rosettes_at(cat, x);
      total += static_cast<int>(rs.size());
      for (const auto& r : rs) {
        int planes = 0;
        for (int id : r.members) planes += cat[id].kind == HyperplaneKind::PlaneOvoid;
        all_plane += planes == 4;
        all_tripod += planes == 0;
      }
    }
    os << "rosettes total " << total << " (" << total / 45 << " per point)\n";
    os << "  all-plane  " << all_plane << " (" << all_plane / 45 << " per point)\n";
    os << "  all-tripod " << all_tripod << " (" << all_tripod / 45 << " per point)\n";
  } else if (kind == "triads") {
    auto census = ws.gq().triad_census();
    os << "point triples        " << census.triples << "\n";
    os << "  with collinear pair " << census.with_collinear_pair << "\n";
    os << "  acentric triads     " << census.acentric << "\n";
    os << "  unicentric triads   " << census.unicentric << "\n";
    os << "  tricentric triads   " << census.tricentric << " (16 per point)\n";
    // Derived counts used downstream.
    const auto& cat = ws.hyperplanes();
    auto triads = ws.gq().tricentric_triads();
    int on_first = 0;
    for (int id : cat.ovoids()) {
      if (cat[id].points.contains(triads[0])) ++on_first;
    }
    os << "  ovoids on a tricentric triad " << on_first << "\n";
    os << "automorphism group order " << ws.group().order() << "\n";
  } else {
    throw CLI::ValidationError("census", "unknown kind: " + kind);
  }
  write_output(out, os.str());
  return 0;
}

json vline_json(const VeldkampCensus& census, int vi) {
  const auto& v = census.vlines()[static_cast<std::size_t>(vi)];
  return {{"members", v.member_ids},
          {"composition",
           {{"perps", v.composition[0]},
            {"plane_ovoids", v.composition[1]},
            {"tripods", v.composition[2]}}},
          {"core", v.core.to_vector()},
          {"core_kind", core_name(v.core_kind)}};
}

json hyperplane_json(const HyperplaneCatalog& cat, int id) {
  const auto& h = cat[id];
  return {{"id", h.id},
          {"kind", kind_name(h.kind)},
          {"points", h.points.to_vector()}};
}

int cmd_witness(Workspace& ws, const std::string& which, int copy_index,
                const std::string& out) {
  const auto& cat = ws.hyperplanes();
  const auto& census = ws.veldkamp();
  json j;

  if (which == "fig3") {
    auto w = nonlinearity_witnesses(census, ws.fans());
    if (!w.found_triple_share) return 1;
    j["description"] =
        "two V-lines sharing exactly three V-points (the perps of a tricentric triad)";
    j["shared_triad"] = point_set_json(w.shared_triad);
    j["vline_with_plane_ovoids"] = vline_json(census, w.vline_planes);
    j["vline_with_tripods"] = vline_json(census, w.vline_tripods);
  } else if (which == "fig4") {
    auto w = nonlinearity_witnesses(census, ws.fans());
    if (!w.found_rosette_bundle) return 1;
    j["description"] =
        "three V-lines through a common perp/tripod pair, each a perp plus a rosette";
    j["perp"] = hyperplane_json(cat, w.rosette_perp);
    j["tripod"] = hyperplane_json(cat, w.rosette_tripod);
    json lines = json::array();
    for (int vi : w.rosette_vlines) lines.push_back(vline_json(census, vi));
    j["vlines"] = lines;
  } else if (which == "fig5") {
    auto w = nonlinearity_witnesses(census, ws.fans());
    if (w.fan_plane < 0) return 1;
    j["description"] =
        "fan V-lines through a common plane-ovoid/tripod pair; four fans pass "
        "through the pair but only three are V-lines, the fourth (the "
        "distinguished fan) is a proper subset of every collection generated "
        "by its member pairs";
    j["plane_ovoid"] = hyperplane_json(cat, w.fan_plane);
    j["tripod"] = hyperplane_json(cat, w.fan_tripod);
    json lines = json::array();
    for (int vi : w.fan_vlines) lines.push_back(vline_json(census, vi));
    j["vlines"] = lines;
    j["fans_through_pair"] = w.fans_through_pair;
    json missing = json::array();
    for (int m : ws.fans().fans()[static_cast<std::size_t>(w.missing_fan)].members) {
      missing.push_back(hyperplane_json(cat, m));
    }
    j["missing_fan"] = {{"members", missing},
                        {"is_distinguished", w.missing_fan_is_distinguished},
                        {"proper_subset_of_all_pair_collections",
                         w.missing_fan_proper_subset}};
  } else if (which == "fig6") {
    int found = -1;
    for (int vi = 0; vi < census.size(); ++vi) {
      const auto& v = census.vlines()[static_cast<std::size_t>(vi)];
      if (v.member_ids.size() == 3 && v.composition == std::array<int, 3>{1, 0, 2} &&
          v.core_kind == CoreKind::UnicentricTriad) {
        found = vi;
        break;
      }
    }
    if (found < 0) return 1;
    j["description"] = "a V-line of size three: a perp and two tripods on a unicentric triad";
    j["vline"] = vline_json(census, found);
  } else if (which == "fig7") {
    int found = -1;
    for (int vi = 0; vi < census.size(); ++vi) {
      const auto& v = census.vlines()[static_cast<std::size_t>(vi)];
      if (v.member_ids.size() == 2 && v.composition == std::array<int, 3>{0, 1, 1} &&
          v.core_kind == CoreKind::SixPoints) {
        found = vi;
        break;
      }
    }
    if (found < 0) return 1;
    j["description"] =
        "a V-line of size two: a plane ovoid and a tripod with six common points";
    j["vline"] = vline_json(census, found);
    const auto& v = census.vlines()[static_cast<std::size_t>(found)];
    j["common_points"] = point_set_json(cat[v.member_ids[0]].points &
                                        cat[v.member_ids[1]].points);
  } else if (which == "spider" || which == "bee" || which == "frog") {
    PointSet copy = ws.reference_copy(copy_index);
    OvoidRel want = which == "spider"  ? OvoidRel::Plane
                    : which == "bee"   ? OvoidRel::TriTripod
                                       : OvoidRel::UniTripod;
    int base = -1;
    for (int id : cat.ovoids()) {
      if (ovoid_rel(cat, id, copy) == want) {
        base = id;
        break;
      }
    }
    if (base < 0) return 1;
    auto rep = fan_configuration(ws.fans(), cat, copy, base);
    j["description"] = "the 13 fans through an ovoid and their intersection pattern";
    j["ovoid"] = hyperplane_json(cat, base);
    j["ovoid_kind"] = which == "spider" ? "plane_ovoid"
                      : which == "bee"  ? "tri_tripod"
                                        : "uni_tripod";
    j["disjoint_profile"] = {{"plane_ovoids", rep.disjoint_plane},
                             {"tri_tripods", rep.disjoint_tri},
                             {"uni_tripods", rep.disjoint_uni}};
    json partners = json::array();
    for (const auto& p : rep.partners) {
      if (p.multiplicity > 1) {
        partners.push_back({{"id", p.id},
                            {"kind", p.kind == OvoidRel::Plane       ? "plane_ovoid"
                                     : p.kind == OvoidRel::TriTripod ? "tri_tripod"
                                                                     : "uni_tripod"},
                            {"fans_through_both", p.multiplicity}});
      }
    }
    j["high_multiplicity_partners"] = partners;
    j["multiplicity_sum"] = rep.multiplicity_sum;
    json fans_json = json::array();
    for (int fi : rep.fan_indices) {
      json members = json::array();
      for (int m : ws.fans().fans()[static_cast<std::size_t>(fi)].members) {
        members.push_back(m);
      }
      fans_json.push_back({{"fan", fi},
                           {"members", members},
                           {"distinguished", fi == rep.distinguished}});
    }
    j["fans"] = fans_json;
    json classes = json::array();
    for (const auto& cls : rep.classes) {
      json kinds = json::array();
      for (auto k : cls.shared_kinds) {
        kinds.push_back(k == OvoidRel::Plane       ? "plane_ovoid"
                        : k == OvoidRel::TriTripod ? "tri_tripod"
                                                   : "uni_tripod");
      }
      classes.push_back({{"fans", cls.fan_indices},
                         {"shared_partners", cls.shared},
                         {"shared_kinds", kinds}});
    }
    j["classes"] = classes;
  } else if (which == "partition") {
    auto w = find_partition_witness(ws.gq(), ws.copies());
    if (!w.found) return 1;
    j["description"] =
        "a partition of the 45 points into three grids and three dual grids";
    json grids = json::array(), duals = json::array();
    for (const auto& g : w.grids) grids.push_back(point_set_json(g));
    for (const auto& d : w.dual_grids) duals.push_back(point_set_json(d));
    j["grids"] = grids;
    j["dual_grids"] = duals;
    j["paired_dual_grid"] = w.paired_dual;
    j["full_3x3_pairing"] = w.full_pairing;
    j["note"] = w.note;
  } else {
    throw CLI::ValidationError("witness", "unknown witness: " + which);
  }
  write_output(out, dump(j));
  return 0;
}

int cmd_export(Workspace& ws, const std::string& what, const std::string& format,
               const std::string& out) {
  if (format == "dot") {
    if (what != "geometry") {
      throw CLI::ValidationError("export", "dot export is only for the geometry");
    }
    write_output(out, geometry_to_dot(ws.geometry()));
    return 0;
  }
  json j;
  if (what == "geometry") j = geometry_to_json(ws.geometry());
  else if (what == "hyperplanes") j = hyperplanes_to_json(ws.hyperplanes());
  else if (what == "vlines") j = vlines_to_json(ws.veldkamp());
  else if (what == "group") j = group_to_json(ws.group());
  else throw CLI::ValidationError("export", "unknown export: " + what);
  write_output(out, dump(j));
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"GQ(4,2) as the Hermitian surface in PG(3,4): construction, "
               "hyperplane and Veldkamp-space censuses, witnesses, exports"};
  app.require_subcommand(1);

  std::string gram = "symplectic-j";
  int copy_index = 0;
  app.add_option("--gram", gram, "Hermitian form")
      ->check(CLI::IsMember({"symplectic-j", "diagonal"}))
      ->capture_default_str();
  app.add_option("--copy", copy_index,
                 "GQ(2,2) copy anchoring tri/uni classification")
      ->capture_default_str();

  auto* verify = app.add_subcommand("verify", "run verification checks");
  std::string check_name = "all";
  verify->add_option("check", check_name, "check id, alias, or 'all'");

  auto* census = app.add_subcommand("census", "print a census table");
  std::string census_kind;
  census->add_option("kind", census_kind, "what to tabulate")
      ->required()
      ->check(CLI::IsMember({"hyperplanes", "vlines", "fans", "rosettes", "triads"}));
  std::string census_out;
  census->add_option("--out", census_out, "write to file instead of stdout");

  auto* witness = app.add_subcommand("witness", "emit an explicit configuration");
  std::string witness_which;
  witness->add_option("which", witness_which, "configuration name")
      ->required()
      ->check(CLI::IsMember({"fig3", "fig4", "fig5", "fig6", "fig7", "spider",
                             "bee", "frog", "partition"}));
  std::string witness_out;
  witness->add_option("--out", witness_out, "write to file instead of stdout");

  auto* exportc = app.add_subcommand("export", "machine-readable exports");
  std::string export_what, export_format = "json", export_out;
  exportc->add_option("--what", export_what, "what to export")
      ->required()
      ->check(CLI::IsMember({"geometry", "hyperplanes", "vlines", "group"}));
  exportc->add_option("--format", export_format, "json or dot")
      ->check(CLI::IsMember({"json", "dot"}))
      ->capture_default_str();
  exportc->add_option("--out", export_out, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    Workspace ws(gram == "diagonal" ? GramKind::Diagonal : GramKind::SymplecticJ);
    if (verify->parsed()) {
      if (check_name != "all") {
        bool known = false;
        for (const auto& info : check_registry()) {
          known |= info.id == check_name || info.alias == check_name;
        }
        if (!known) {
          std::cerr << "unknown check: " << check_name << "\n";
          return 2;
        }
      }
      return cmd_verify(ws, check_name);
    }
    if (census->parsed()) return cmd_census(ws, census_kind, census_out);
    if (witness->parsed()) {
      int rc = cmd_witness(ws, witness_which, copy_index, witness_out);
      if (rc != 0) std::cerr << "witness not found: " << witness_which << "\n";
      return rc;
    }
    if (exportc->parsed()) return cmd_export(ws, export_what, export_format, export_out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
