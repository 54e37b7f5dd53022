#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <map>
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "projection.hpp"

using namespace ltc;

namespace {
Region square(int side, int pos) {
  return Region::deficient_square(side, {pos - 1, pos - 1});
}
}  // namespace

TEST_CASE("projection of a 5x5 tiling is a 2x2 domino tiling") {
  Region r = square(5, 1);
  for (const Tiling& t : all_tilings(r, TileSetId::RibbonT4)) {
    ImageTiling img = project(r, t);
    CHECK(img.size == 2);
    CHECK(!img.missing_image);
    CHECK(img.dominoes.size() == 2);
    CHECK(img.monomers.empty());
    auto [lo, up] = diagonal_balance(img);
    CHECK(lo == 1);
    CHECK(up == 1);
  }
}

TEST_CASE("side 4m+1 projection is a bijection onto dimer tilings") {
  for (int side : {5, 9}) {
    int m = side / 4;
    for (int pos = 1; pos <= side; pos += 2) {
      Region r = square(side, pos);
      auto ts = all_tilings(r, TileSetId::RibbonT4);
      std::set<ImageTiling> images;
      for (const Tiling& t : ts) images.insert(project(r, t));
      CHECK(images.size() == ts.size());  // injective
      CHECK(BigCount(images.size()) ==
            oracles::naive_dimer_count(oracles::square_cells(2 * m)));
    }
  }
}

TEST_CASE("side 4m+3 projection is a 2-to-1 double cover") {
  int side = 7, pos = 4;
  Region r = square(side, pos);
  std::map<ImageTiling, int> fibers;
  for (const Tiling& t : all_tilings(r, TileSetId::RibbonT4))
    fibers[project(r, t)]++;
  CHECK(fibers.size() == 2);  // deficient 3x3, center removed, has 2 matchings
  for (const auto& [img, n] : fibers) {
    CHECK(n == 2);
    REQUIRE(img.missing_image);
    CHECK(*img.missing_image == Cell{1, 1});
    CHECK(img.size == 3);
  }
}

TEST_CASE("lift inverts project given the read-back choices") {
  for (int side : {5, 7}) {
    for (int pos = side % 4 == 1 ? 1 : 2; pos <= side; pos += 2) {
      Region r = square(side, pos);
      for (TileSetId set : {TileSetId::RibbonT4, TileSetId::RibbonT4Plus}) {
        for (const Tiling& t : all_tilings(r, set)) {
          ImageTiling img = project(r, t);
          LiftChoices ch = read_choices(r, t);
          CHECK(lift(img, side, pos, ch) == t);
        }
      }
    }
  }
}

TEST_CASE("project inverts lift on every image") {
  int side = 9, pos = 5;
  Region r = square(side, pos);
  std::set<ImageTiling> images;
  for (const Tiling& t : all_tilings(r, TileSetId::RibbonT4))
    images.insert(project(r, t));
  for (const ImageTiling& img : images) {
    Tiling t = lift(img, side, pos, {});
    CHECK(validate_tiling(r, t).empty());
    CHECK(project(r, t) == img);
  }
}

TEST_CASE("the two lift variants for 4m+3 are distinct and both valid") {
  int side = 7, pos = 2;
  Region r = square(side, pos);
  Tiling t = all_tilings(r, TileSetId::RibbonT4).front();
  ImageTiling img = project(r, t);
  LiftChoices a, b;
  a.variant_bit = 0;
  b.variant_bit = 1;
  Tiling ta = lift(img, side, pos, a);
  Tiling tb = lift(img, side, pos, b);
  CHECK(ta != tb);
  CHECK(validate_tiling(r, ta).empty());
  CHECK(validate_tiling(r, tb).empty());
  CHECK(project(r, ta) == img);
  CHECK(project(r, tb) == img);
}

TEST_CASE("preimage cardinality counts diagonal monomers") {
  ImageTiling img;
  img.size = 2;
  img.dominoes = {{{0, 0}, {1, 0}}, {{0, 1}, {1, 1}}};
  CHECK(preimage_cardinality(img, 5) == 1);
  ImageTiling withmono;
  withmono.size = 2;
  withmono.monomers = {{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  CHECK(preimage_cardinality(withmono, 5) == 4);  // 2 diagonal monomers
  ImageTiling def;
  def.size = 3;
  def.missing_image = Cell{0, 0};
  def.dominoes = {{{0, 1}, {0, 2}}, {{1, 0}, {2, 0}},
                  {{1, 1}, {1, 2}}, {{2, 1}, {2, 2}}};
  CHECK(preimage_cardinality(def, 7) == 2);
}

TEST_CASE("t4plus fibers equal the predicted preimage cardinality") {
  Region r = square(5, 3);
  std::map<ImageTiling, BigCount> fibers;
  for (const Tiling& t : all_tilings(r, TileSetId::RibbonT4Plus))
    fibers[project(r, t)] += 1;
  BigCount total = 0;
  for (const auto& [img, n] : fibers) {
    CHECK(n == preimage_cardinality(img, 5));
    total += n;
  }
  CHECK(total == 14);
}

TEST_CASE("lift rejects inconsistent images") {
  ImageTiling img;
  img.size = 2;
  // Overlapping dominoes collide when expanded.
  img.dominoes = {{{0, 0}, {1, 0}}, {{0, 0}, {0, 1}}};
  CHECK_THROWS_AS(lift(img, 5, 1, {}), TilingError);
  ImageTiling wrong_size;
  wrong_size.size = 3;  // size must be 2 for side 5
  CHECK_THROWS_AS(lift(wrong_size, 5, 1, {}), TilingError);
  try {
    lift(wrong_size, 5, 1, {});
  } catch (const TilingError& e) {
    CHECK(e.code() == "InconsistentImage");
  }
}
