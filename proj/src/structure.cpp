#include "structure.hpp"

#include <algorithm>
#include <queue>

namespace ltc {

namespace {

bool aligned_origin(Cell o) {
  bool lower = o.row % 2 == 1 && o.col % 2 == 0;
  bool upper = o.row % 2 == 0 && o.col % 2 == 1;
  return lower || upper;
}

BlockSide side_of_origin(Cell o) {
  return o.row % 2 == 1 ? BlockSide::Lower : BlockSide::Upper;
}

}  // namespace

const char* window_side_name(WindowSide s) {
  switch (s) {
    case WindowSide::Lower: return "Lower";
    case WindowSide::Upper: return "Upper";
    default: return "MissingCenter";
  }
}

Decomposition decompose(const Region& region, const Tiling& tiling) {
  if (!validate_tiling(region, tiling).empty())
    throw TilingError("InvalidTiling", "tiling is not an exact cover");

  std::set<Placement> present(tiling.placements.begin(),
                              tiling.placements.end());
  Decomposition d;
  std::set<Placement> assigned;
  for (const Placement& p : tiling.placements) {
    Cell a = p.anchor;
    if (p.kind == TileKind::T3) {
      // Horizontal 2x4 box at (a.row, a.col): its unique pair tiling is
      // T3 at the NW cell and T4 one column right.
      Placement mate{TileKind::T4, {a.row, a.col + 1}};
      if (present.count(mate) && aligned_origin(a)) {
        d.rect_blocks.push_back(
            {a, Orientation::Horizontal, side_of_origin(a), p, mate});
        assigned.insert(p);
        assigned.insert(mate);
      }
    } else if (p.kind == TileKind::T2) {
      // Vertical 4x2 box at (a.row, a.col): T2 on top of T1.
      Placement mate{TileKind::T1, {a.row + 1, a.col}};
      if (present.count(mate) && aligned_origin(a)) {
        d.rect_blocks.push_back(
            {a, Orientation::Vertical, side_of_origin(a), p, mate});
        assigned.insert(p);
        assigned.insert(mate);
      }
    } else if (p.kind == TileKind::T5 && aligned_origin(a)) {
      d.square_blocks.push_back({a, side_of_origin(a), p});
      assigned.insert(p);
    }
  }
  for (const Placement& p : tiling.placements)
    if (!assigned.count(p)) d.irregular.push_back(p);
  return d;
}

CrackReport extract_crack(const Region& region, const Tiling& tiling) {
  if (!is_deficient_square(region))
    throw TilingError("NotDeficientSquare",
                      "crack analysis needs an odd deficient square with the "
                      "missing cell on the diagonal");
  Decomposition d = decompose(region, tiling);

  CrackReport rep;
  rep.irregular_count = static_cast<int>(d.irregular.size());
  for (const Placement& p : d.irregular)
    for (Cell c : placement_cells(p)) rep.crack_cells.insert(c);
  rep.crack_cells.insert(*region.missing());

  // Complement components under 4-adjacency.
  std::set<Cell> left;
  for (Cell c : region.cells())
    if (!rep.crack_cells.count(c)) left.insert(c);
  while (!left.empty()) {
    std::set<Cell> comp;
    std::queue<Cell> q;
    q.push(*left.begin());
    left.erase(left.begin());
    while (!q.empty()) {
      Cell c = q.front();
      q.pop();
      comp.insert(c);
      for (Cell nb : {Cell{c.row - 1, c.col}, Cell{c.row + 1, c.col},
                      Cell{c.row, c.col - 1}, Cell{c.row, c.col + 1}}) {
        auto it = left.find(nb);
        if (it != left.end()) {
          left.erase(it);
          q.push(nb);
        }
      }
    }
    rep.components.push_back(std::move(comp));
  }

  // Which side each central window's center cell took.
  std::map<Cell, BlockSide> cell_side;
  for (const RectBlock& b : d.rect_blocks)
    for (const Placement* p : {&b.a, &b.b})
      for (Cell c : placement_cells(*p)) cell_side[c] = b.side;
  for (const SquareBlock& b : d.square_blocks)
    for (Cell c : placement_cells(b.t5)) cell_side[c] = b.side;

  for (const CentralWindow& w : central_windows(region.width())) {
    Cell center = w.center();
    if (*region.missing() == center) {
      rep.window_occupancy.push_back(WindowSide::MissingCenter);
      continue;
    }
    auto it = cell_side.find(center);
    if (it == cell_side.end())
      throw TilingError("StructureViolation",
                        "central window center covered by an irregular tile");
    rep.window_occupancy.push_back(it->second == BlockSide::Lower
                                       ? WindowSide::Lower
                                       : WindowSide::Upper);
  }
  return rep;
}

CrackVerdict validate_crack(const CrackReport& report, int side,
                            TileSetId set) {
  (void)set;
  CrackVerdict v;
  int n = (side - 1) / 2;
  SquareClass cls = classify_side(side);

  v.location_ok = true;
  for (Cell c : report.crack_cells)
    if (!in_central_windows(side, c)) {
      v.location_ok = false;
      v.diagnostics.push_back("crack cell (" + std::to_string(c.row) + "," +
                              std::to_string(c.col) +
                              ") outside the central windows");
    }

  v.endpoints_ok = report.crack_cells.count({0, 0}) &&
                   report.crack_cells.count({side - 1, side - 1});
  if (!v.endpoints_ok)
    v.diagnostics.push_back("crack does not touch both corners");

  int expect = cls.tag == SquareTag::FourMPlusOne  ? n
               : cls.tag == SquareTag::FourMPlusThree ? n + 1
                                                      : -1;
  v.count_ok = report.irregular_count == expect;
  if (!v.count_ok)
    v.diagnostics.push_back("irregular count " +
                            std::to_string(report.irregular_count) +
                            ", expected " + std::to_string(expect));

  v.two_components_ok = report.components.size() == 2;
  if (!v.two_components_ok)
    v.diagnostics.push_back("complement has " +
                            std::to_string(report.components.size()) +
                            " components");

  v.equal_area_ok = report.components.size() == 2 &&
                    report.components[0].size() == report.components[1].size();
  return v;
}

CensusReport crack_census(const Region& region, TileSetId set) {
  if (!is_deficient_square(region))
    throw TilingError("NotDeficientSquare", "census needs a deficient square");

  std::map<std::vector<Cell>, std::pair<BigCount, std::set<std::vector<Placement>>>>
      groups;
  enumerate_tilings(region, set, [&](const Tiling& t) {
    Decomposition d = decompose(region, t);
    std::set<Cell> cells;
    for (const Placement& p : d.irregular)
      for (Cell c : placement_cells(p)) cells.insert(c);
    cells.insert(*region.missing());
    std::vector<Cell> key(cells.begin(), cells.end());
    auto& g = groups[key];
    g.first += 1;
    g.second.insert(d.irregular);  // canonical order within a tiling
    return true;
  });

  CensusReport rep;
  for (auto& [key, g] : groups) {
    CensusEntry e;
    e.cells = key;
    e.tilings = g.first;
    e.fillings = static_cast<unsigned>(g.second.size());
    rep.weighted_cracks += e.fillings;
    rep.cracks.push_back(std::move(e));
  }
  rep.distinct_cracks = static_cast<unsigned>(rep.cracks.size());
  return rep;
}

}  // namespace ltc
