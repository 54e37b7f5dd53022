#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "structure.hpp"

using namespace ltc;

namespace {
Region square(int side, int pos) {
  return Region::deficient_square(side, {pos - 1, pos - 1});
}
}  // namespace

TEST_CASE("decompose splits the hand-checked 5x5 tilings") {
  Region r = square(5, 1);
  auto ts = all_tilings(r, TileSetId::RibbonT4);
  REQUIRE(ts.size() == 2);
  for (const Tiling& t : ts) {
    Decomposition d = decompose(r, t);
    CHECK(d.irregular.size() == 2);
    CHECK(d.rect_blocks.size() == 2);
    CHECK(d.square_blocks.empty());
    // One block per staircase.
    std::multiset<BlockSide> sides;
    for (const auto& b : d.rect_blocks) sides.insert(b.side);
    CHECK(sides.count(BlockSide::Lower) == 1);
    CHECK(sides.count(BlockSide::Upper) == 1);
    // Block cells and irregular cells partition the region.
    std::set<Cell> covered;
    for (const auto& b : d.rect_blocks) {
      for (Cell c : placement_cells(b.a)) covered.insert(c);
      for (Cell c : placement_cells(b.b)) covered.insert(c);
    }
    for (const Placement& p : d.irregular)
      for (Cell c : placement_cells(p)) covered.insert(c);
    CHECK((int)covered.size() == r.cell_count());
  }
}

TEST_CASE("block alignment classes") {
  // A rect block origin must sit on one of the two staircase lattices.
  Region r = square(7, 4);
  for (const Tiling& t : all_tilings(r, TileSetId::RibbonT4)) {
    Decomposition d = decompose(r, t);
    for (const auto& b : d.rect_blocks) {
      bool lower = b.origin.row % 2 == 1 && b.origin.col % 2 == 0;
      bool upper = b.origin.row % 2 == 0 && b.origin.col % 2 == 1;
      CHECK((lower || upper));
      CHECK(b.side == (lower ? BlockSide::Lower : BlockSide::Upper));
    }
  }
}

TEST_CASE("t5 blocks appear only in t4plus decompositions") {
  Region r = square(5, 3);
  bool saw_square_block = false;
  for (const Tiling& t : all_tilings(r, TileSetId::RibbonT4Plus)) {
    Decomposition d = decompose(r, t);
    for (const auto& b : d.square_blocks) {
      saw_square_block = true;
      CHECK(b.t5.kind == TileKind::T5);
      bool lower = b.origin.row % 2 == 1 && b.origin.col % 2 == 0;
      bool upper = b.origin.row % 2 == 0 && b.origin.col % 2 == 1;
      CHECK((lower || upper));
    }
  }
  CHECK(saw_square_block);
}

TEST_CASE("crack report geometry") {
  Region r = square(5, 1);
  for (const Tiling& t : all_tilings(r, TileSetId::RibbonT4)) {
    CrackReport rep = extract_crack(r, t);
    CHECK(rep.irregular_count == 2);
    CHECK(rep.crack_cells.size() == 9);  // 2 tiles + missing cell
    CHECK(rep.crack_cells.count({0, 0}));  // the missing NW corner
    CHECK(rep.crack_cells.count({4, 4}));  // reaches the SE corner
    for (Cell c : rep.crack_cells) CHECK(in_central_windows(5, c));
    REQUIRE(rep.components.size() == 2);
    CHECK(rep.components[0].size() == rep.components[1].size());
    REQUIRE(rep.window_occupancy.size() == 2);
    for (WindowSide w : rep.window_occupancy)
      CHECK(w != WindowSide::MissingCenter);
  }
  // A missing cell sitting on a window center (4m+3 sides, even position)
  // marks that window.
  Region mid = square(7, 4);
  Tiling t = all_tilings(mid, TileSetId::RibbonT4).front();
  CrackReport rep = extract_crack(mid, t);
  bool has_missing_center = false;
  for (WindowSide w : rep.window_occupancy)
    if (w == WindowSide::MissingCenter) has_missing_center = true;
  CHECK(has_missing_center);
}

TEST_CASE("extract_crack rejects non-deficient-square input") {
  Region rect = Region::parse("####\n####\n");
  Tiling t{{{TileKind::T3, {0, 0}}, {TileKind::T4, {0, 1}}}};
  try {
    extract_crack(rect, t);
  } catch (const TilingError& e) {
    CHECK(e.code() == "NotDeficientSquare");
  }
}

TEST_CASE("validate_crack verdicts") {
  for (int side : {5, 7}) {
    for (int pos = side % 4 == 1 ? 1 : 2; pos <= side; pos += 2) {
      Region r = square(side, pos);
      for (const Tiling& t : all_tilings(r, TileSetId::RibbonT4)) {
        CrackVerdict v =
            validate_crack(extract_crack(r, t), side, TileSetId::RibbonT4);
        CAPTURE(side);
        CAPTURE(pos);
        CHECK(v.location_ok);
        CHECK(v.endpoints_ok);
        CHECK(v.count_ok);
        CHECK(v.two_components_ok);
        CHECK(v.all_ok_except_area());
        if (side % 4 == 1) CHECK(v.equal_area_ok);
      }
    }
  }
}

TEST_CASE("census totals") {
  CensusReport r5 = crack_census(square(5, 1), TileSetId::RibbonT4);
  CHECK(r5.weighted_cracks == 2);
  CHECK(r5.distinct_cracks == 2);  // the two tilings have different cracks
  BigCount total = 0;
  for (const auto& e : r5.cracks) {
    total += e.tilings;
    CHECK(e.fillings >= 1);
    CHECK(std::is_sorted(e.cells.begin(), e.cells.end()));
  }
  CHECK(total == 2);

  CensusReport p5 = crack_census(square(5, 1), TileSetId::RibbonT4Plus);
  CHECK(p5.weighted_cracks == 4);
  CensusReport r7 = crack_census(square(7, 4), TileSetId::RibbonT4);
  CHECK(r7.weighted_cracks == 4);
}
