#include "gq42/exports.hpp"

#include <sstream>

namespace gq42 {

using nlohmann::json;

json geometry_to_json(const HermitianGeometry& geom) {
  json points = json::array();
  for (int g = 0; g < 45; ++g) {
    const Vec4& v = geom.pg().point(geom.pg_point(g));
    points.push_back({{"id", g},
                      {"coords", {v[0].v, v[1].v, v[2].v, v[3].v}}});
  }
  json lines = json::array();
  for (std::size_t i = 0; i < geom.gq_lines().size(); ++i) {
    lines.push_back({{"id", static_cast<int>(i)},
                     {"points", geom.gq_lines()[i].to_vector()}});
  }
  return {{"points", points}, {"lines", lines}};
}

json hyperplanes_to_json(const HyperplaneCatalog& cat) {
  json out = json::array();
  for (const auto& h : cat.all()) {
    json rec{{"id", h.id},
             {"kind", kind_name(h.kind)},
             {"points", h.points.to_vector()}};
    switch (h.kind) {
      case HyperplaneKind::Perp:
        rec["center"] = h.center;
        break;
      case HyperplaneKind::PlaneOvoid:
        rec["plane"] = h.plane;
        break;
      case HyperplaneKind::Tripod: {
        json triads = json::array();
        for (const auto& t : h.triads) triads.push_back(t.to_vector());
        rec["triads"] = triads;
        break;
      }
    }
    out.push_back(std::move(rec));
  }
  return out;
}

json vlines_to_json(const VeldkampCensus& census) {
  json out = json::array();
  for (const auto& v : census.vlines()) {
    out.push_back({{"members", v.member_ids},
                   {"size", static_cast<int>(v.member_ids.size())},
                   {"composition",
                    {{"perps", v.composition[0]},
                     {"plane_ovoids", v.composition[1]},
                     {"tripods", v.composition[2]}}},
                   {"core", v.core.to_vector()},
                   {"core_kind", core_name(v.core_kind)}});
  }
  return out;
}

json group_to_json(const AutomorphismGroup& group) {
  json gens = json::array();
  for (const auto& g : group.generators) {
    json images = json::array();
    for (int i = 0; i < 45; ++i) images.push_back(g(i));
    gens.push_back(std::move(images));
  }
  return {{"order", group.order()}, {"generators", gens}};
}

std::string geometry_to_dot(const HermitianGeometry& geom) {
  std::ostringstream os;
  os << "graph gq42 {\n";
  os << "  // 45 points, 27 lines; every line is a 5-clique\n";
  for (std::size_t i = 0; i < geom.gq_lines().size(); ++i) {
    os << "  // line " << i << ":";
    for (int p : geom.gq_lines()[i]) os << " " << p;
    os << "\n";
  }
  for (int p = 0; p < 45; ++p) os << "  p" << p << ";\n";
  for (std::size_t i = 0; i < geom.gq_lines().size(); ++i) {
    auto pts = geom.gq_lines()[i].to_vector();
    for (std::size_t a = 0; a < pts.size(); ++a) {
      for (std::size_t b = a + 1; b < pts.size(); ++b) {
        os << "  p" << pts[a] << " -- p" << pts[b] << " [line=" << i << "];\n";
      }
    }
  }
  os << "}\n";
  return os.str();
}

ImportedGeometry geometry_from_json(const json& j) {
  ImportedGeometry g;
  g.structure.n_points = static_cast<int>(j.at("points").size());
  g.point_coords.resize(j.at("points").size());
  for (const auto& rec : j.at("points")) {
    int id = rec.at("id").get<int>();
    const auto& c = rec.at("coords");
    g.point_coords[static_cast<std::size_t>(id)] = Vec4{
        Gf4(c.at(0).get<int>()), Gf4(c.at(1).get<int>()),
        Gf4(c.at(2).get<int>()), Gf4(c.at(3).get<int>())};
  }
  g.structure.lines.resize(j.at("lines").size());
  for (const auto& rec : j.at("lines")) {
    PointSet line;
    for (int p : rec.at("points")) line.set(p);
    g.structure.lines[rec.at("id").get<std::size_t>()] = line;
  }
  return g;
}

std::vector<std::pair<std::string, PointSet>> hyperplanes_from_json(
    const json& j) {
  std::vector<std::pair<std::string, PointSet>> out;
  for (const auto& rec : j) {
    PointSet pts;
    for (int p : rec.at("points")) pts.set(p);
    out.push_back({rec.at("kind").get<std::string>(), pts});
  }
  return out;
}

}  // namespace gq42
