#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <set>

#include "doctest.h"
#include "propagation.hpp"

using namespace ltc;

namespace {
Region square(int side, int pos) {
  return Region::deficient_square(side, {pos - 1, pos - 1});
}
}  // namespace

TEST_CASE("propagation grows the square by 4 and keeps every placement") {
  for (int side : {5, 7}) {
    for (int pos = side % 4 == 1 ? 1 : 2; pos <= side; pos += 2) {
      Region r = square(side, pos);
      for (const Tiling& t : all_tilings(r, TileSetId::RibbonT4)) {
        auto [r2, t2] = propagate(r, t, TileSetId::RibbonT4);
        CHECK(r2.width() == side + 4);
        CHECK(r2.height() == side + 4);
        CHECK(r2.missing() == r.missing());
        CHECK(validate_tiling(r2, t2).empty());
        std::set<Placement> bigger(t2.placements.begin(), t2.placements.end());
        for (const Placement& p : t.placements) CHECK(bigger.count(p));
        // Band area is (side+4)^2 - side^2 = 8*side + 16, i.e. 2*side+4 tiles.
        CHECK(t2.placements.size() ==
              t.placements.size() + 2 * (size_t)side + 4);
      }
    }
  }
}

TEST_CASE("the extended tiling has a valid crack extending the old one") {
  Region r = square(7, 4);
  for (const Tiling& t : all_tilings(r, TileSetId::RibbonT4)) {
    auto [r2, t2] = propagate(r, t, TileSetId::RibbonT4);
    CrackReport old_rep = extract_crack(r, t);
    CrackReport new_rep = extract_crack(r2, t2);
    CrackVerdict v = validate_crack(new_rep, 11, TileSetId::RibbonT4);
    CHECK(v.all_ok_except_area());
    // Restricted to the old box, the crack is unchanged.
    std::set<Cell> restricted;
    for (Cell c : new_rep.crack_cells)
      if (c.row < 7 && c.col < 7) restricted.insert(c);
    CHECK(restricted == old_rep.crack_cells);
    CHECK(new_rep.irregular_count == old_rep.irregular_count + 2);
  }
}

TEST_CASE("propagation iterates") {
  Region r = square(5, 3);
  Tiling t = all_tilings(r, TileSetId::RibbonT4).front();
  for (int side = 5; side <= 17; side += 4) {
    CHECK(r.width() == side);
    CHECK(validate_tiling(r, t).empty());
    CrackVerdict v =
        validate_crack(extract_crack(r, t), side, TileSetId::RibbonT4);
    CHECK(v.all_ok());
    std::tie(r, t) = propagate(r, t, TileSetId::RibbonT4);
  }
}

TEST_CASE("t4plus tilings propagate too") {
  Region r = square(5, 1);
  for (const Tiling& t : all_tilings(r, TileSetId::RibbonT4Plus)) {
    auto [r2, t2] = propagate(r, t, TileSetId::RibbonT4Plus);
    CHECK(validate_tiling(r2, t2).empty());
    CrackVerdict v =
        validate_crack(extract_crack(r2, t2), 9, TileSetId::RibbonT4Plus);
    CHECK(v.all_ok_except_area());
  }
}

TEST_CASE("invalid input is rejected") {
  Region rect = Region::parse("####\n####\n");
  Tiling pair{{{TileKind::T3, {0, 0}}, {TileKind::T4, {0, 1}}}};
  CHECK_THROWS_AS(propagate(rect, pair, TileSetId::RibbonT4), TilingError);

  Region r = square(5, 1);
  Tiling bogus;  // not a tiling of r at all
  CHECK_THROWS_AS(propagate(r, bogus, TileSetId::RibbonT4), TilingError);
}
