#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "gq42/exports.hpp"
#include "gq42/workspace.hpp"

using namespace gq42;

namespace {
Workspace& ws() {
  static Workspace w(GramKind::SymplecticJ);
  return w;
}
}  // namespace

TEST_CASE("geometry json: 45 point records, 27 line records, round-trip") {
  auto j = geometry_to_json(ws().geometry());
  CHECK(j.at("points").size() == 45);
  CHECK(j.at("lines").size() == 27);
  for (const auto& line : j.at("lines")) {
    CHECK(line.at("points").size() == 5);
  }

  // Round-trip through the text form.
  auto text = j.dump();
  auto parsed = nlohmann::json::parse(text);
  auto imported = geometry_from_json(parsed);
  CHECK(imported.structure.n_points == 45);
  REQUIRE(imported.structure.lines.size() == 27);
  for (int i = 0; i < 27; ++i) {
    CHECK(imported.structure.lines[static_cast<std::size_t>(i)] ==
          ws().geometry().gq_lines()[static_cast<std::size_t>(i)]);
  }
  for (int g = 0; g < 45; ++g) {
    CHECK(imported.point_coords[static_cast<std::size_t>(g)] ==
          ws().pg().point(ws().geometry().pg_point(g)));
  }
}

TEST_CASE("hyperplane json: 245 records with kind fields, round-trip") {
  auto j = hyperplanes_to_json(ws().hyperplanes());
  REQUIRE(j.size() == 245);
  int perps = 0, planes = 0, tripods = 0;
  for (const auto& rec : j) {
    std::string kind = rec.at("kind");
    if (kind == "perp") {
      ++perps;
      CHECK(rec.contains("center"));
    } else if (kind == "plane_ovoid") {
      ++planes;
      CHECK(rec.contains("plane"));
    } else {
      ++tripods;
      CHECK(rec.at("triads").size() == 3);
    }
  }
  CHECK(perps == 45);
  CHECK(planes == 40);
  CHECK(tripods == 160);

  auto imported = hyperplanes_from_json(nlohmann::json::parse(j.dump()));
  REQUIRE(imported.size() == 245);
  for (int i = 0; i < 245; ++i) {
    CHECK(imported[static_cast<std::size_t>(i)].second ==
          ws().hyperplanes()[i].points);
    CHECK(imported[static_cast<std::size_t>(i)].first ==
          kind_name(ws().hyperplanes()[i].kind));
  }
}

TEST_CASE("vline json carries members, composition and core") {
  auto j = vlines_to_json(ws().veldkamp());
  CHECK(j.size() == static_cast<std::size_t>(ws().veldkamp().size()));
  const auto& rec = j.at(0);
  CHECK(rec.contains("members"));
  CHECK(rec.at("composition").contains("perps"));
  CHECK(rec.contains("core"));
}

TEST_CASE("group json: order and 45-entry generator images") {
  auto j = group_to_json(ws().group());
  CHECK(j.at("order").get<std::uint64_t>() == ws().group().order());
  REQUIRE(!j.at("generators").empty());
  for (const auto& g : j.at("generators")) {
    CHECK(g.size() == 45);
  }
}

TEST_CASE("dot export lists all points, edges and line annotations") {
  auto dot = geometry_to_dot(ws().geometry());
  CHECK(dot.find("graph gq42") != std::string::npos);
  CHECK(dot.find("p44;") != std::string::npos);
  // 27 lines x C(5,2) = 270 collinear pairs.
  std::size_t edges = 0, pos = 0;
  while ((pos = dot.find(" -- ", pos)) != std::string::npos) {
    ++edges;
    pos += 4;
  }
  CHECK(edges == 270);
  CHECK(dot.find("[line=26]") != std::string::npos);

  // Determinism: a second build emits identical bytes.
  Workspace other(GramKind::SymplecticJ);
  CHECK(geometry_to_dot(other.geometry()) == dot);
}

TEST_CASE("reference copy 0 is the canonical copy for the default gram") {
  CHECK(ws().reference_copy(0) == ws().geometry().canonical_gq22());
  CHECK_THROWS_AS(ws().reference_copy(99), std::invalid_argument);
}
