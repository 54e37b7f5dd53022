#include "json_io.hpp"

namespace ltc {

Json cell_to_json(Cell c) { return Json::array({c.row, c.col}); }

Cell cell_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2)
    throw TilingError("SyntaxError", "cell must be a [row, col] pair");
  return {j[0].get<int>(), j[1].get<int>()};
}

Json placement_to_json(const Placement& p) {
  return Json{{"kind", tile_name(p.kind)}, {"anchor", cell_to_json(p.anchor)}};
}

Placement placement_from_json(const Json& j) {
  return {tile_from_name(j.at("kind").get<std::string>()),
          cell_from_json(j.at("anchor"))};
}

Json tiling_to_json(const Tiling& t) {
  Json arr = Json::array();
  for (const Placement& p : t.placements) arr.push_back(placement_to_json(p));
  return Json{{"placements", std::move(arr)}};
}

Tiling tiling_from_json(const Json& j) {
  Tiling t;
  for (const Json& p : j.at("placements"))
    t.placements.push_back(placement_from_json(p));
  return t;
}

Json image_to_json(const ImageTiling& img) {
  Json dominoes = Json::array();
  for (const Domino& d : img.dominoes)
    dominoes.push_back(Json::array({cell_to_json(d.a), cell_to_json(d.b)}));
  Json monomers = Json::array();
  for (Cell c : img.monomers) monomers.push_back(cell_to_json(c));
  return Json{{"size", img.size},
              {"missing", img.missing_image
                              ? cell_to_json(*img.missing_image)
                              : Json(nullptr)},
              {"dominoes", std::move(dominoes)},
              {"monomers", std::move(monomers)}};
}

ImageTiling image_from_json(const Json& j) {
  ImageTiling img;
  img.size = j.at("size").get<int>();
  if (!j.at("missing").is_null())
    img.missing_image = cell_from_json(j.at("missing"));
  for (const Json& d : j.at("dominoes"))
    img.dominoes.push_back({cell_from_json(d[0]), cell_from_json(d[1])});
  for (const Json& m : j.at("monomers")) img.monomers.push_back(cell_from_json(m));
  return img;
}

Json decomposition_to_json(const Decomposition& d) {
  Json rects = Json::array();
  for (const RectBlock& b : d.rect_blocks)
    rects.push_back(
        Json{{"origin", cell_to_json(b.origin)},
             {"orientation", b.orient == Orientation::Horizontal ? "H" : "V"},
             {"side", b.side == BlockSide::Lower ? "Lower" : "Upper"},
             {"placements", Json::array({placement_to_json(b.a),
                                         placement_to_json(b.b)})}});
  Json squares = Json::array();
  for (const SquareBlock& b : d.square_blocks)
    squares.push_back(Json{{"origin", cell_to_json(b.origin)},
                           {"side", b.side == BlockSide::Lower ? "Lower" : "Upper"},
                           {"placement", placement_to_json(b.t5)}});
  Json irregular = Json::array();
  for (const Placement& p : d.irregular) irregular.push_back(placement_to_json(p));
  return Json{{"rect_blocks", std::move(rects)},
              {"square_blocks", std::move(squares)},
              {"irregular", std::move(irregular)}};
}

Json crack_report_to_json(const CrackReport& r) {
  Json cells = Json::array();
  for (Cell c : r.crack_cells) cells.push_back(cell_to_json(c));
  Json comps = Json::array();
  for (const auto& comp : r.components) {
    Json jc = Json::array();
    for (Cell c : comp) jc.push_back(cell_to_json(c));
    comps.push_back(std::move(jc));
  }
  Json windows = Json::array();
  for (WindowSide w : r.window_occupancy) windows.push_back(window_side_name(w));
  return Json{{"crack_cells", std::move(cells)},
              {"irregular_count", r.irregular_count},
              {"components", std::move(comps)},
              {"window_occupancy", std::move(windows)}};
}

Json crack_verdict_to_json(const CrackVerdict& v) {
  return Json{{"location_ok", v.location_ok},
              {"endpoints_ok", v.endpoints_ok},
              {"count_ok", v.count_ok},
              {"two_components_ok", v.two_components_ok},
              {"equal_area_ok", v.equal_area_ok},
              {"all_ok", v.all_ok()},
              {"diagnostics", v.diagnostics}};
}

Json bigcount_to_json(const BigCount& v) {
  if (v <= std::numeric_limits<uint64_t>::max())
    return v.convert_to<uint64_t>();
  return v.str();
}

Json census_to_json(const CensusReport& r) {
  Json cracks = Json::array();
  for (const CensusEntry& e : r.cracks) {
    Json cells = Json::array();
    for (Cell c : e.cells) cells.push_back(cell_to_json(c));
    cracks.push_back(Json{{"cells", std::move(cells)},
                          {"tilings", bigcount_to_json(e.tilings)},
                          {"fillings", bigcount_to_json(e.fillings)}});
  }
  return Json{{"distinct_cracks", bigcount_to_json(r.distinct_cracks)},
              {"weighted_cracks", bigcount_to_json(r.weighted_cracks)},
              {"cracks", std::move(cracks)}};
}

Json profile_to_json(const DiagonalProfile& p) {
  Json counts = Json::array();
  for (const BigCount& c : p.counts) counts.push_back(bigcount_to_json(c));
  return Json{{"n", p.n}, {"N", std::move(counts)}};
}

LiftChoices choices_from_json(const Json& j) {
  LiftChoices c;
  if (j.contains("variant_bit") && !j.at("variant_bit").is_null())
    c.variant_bit = j.at("variant_bit").get<int>();
  if (j.contains("monomer_sides"))
    for (const Json& e : j.at("monomer_sides")) {
      Cell cell = cell_from_json(e.at("cell"));
      std::string side = e.at("side").get<std::string>();
      c.monomer_sides[cell] =
          side == "Lower" ? DiagSide::Lower : DiagSide::Upper;
    }
  return c;
}

Json choices_to_json(const LiftChoices& c) {
  Json sides = Json::array();
  for (const auto& [cell, side] : c.monomer_sides)
    sides.push_back(Json{{"cell", cell_to_json(cell)},
                         {"side", side == DiagSide::Lower ? "Lower" : "Upper"}});
  return Json{{"variant_bit", c.variant_bit ? Json(*c.variant_bit) : Json(nullptr)},
              {"monomer_sides", std::move(sides)}};
}

}  // namespace ltc
