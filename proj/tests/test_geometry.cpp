#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "geometry.hpp"

using namespace ltc;

namespace {
std::string code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const TilingError& e) {
    return e.code();
  }
  return "";
}
}  // namespace

TEST_CASE("deficient square factory") {
  Region r = Region::deficient_square(5, {2, 2});
  CHECK(r.width() == 5);
  CHECK(r.height() == 5);
  CHECK(r.cell_count() == 24);
  CHECK(!r.has({2, 2}));
  CHECK(r.missing() == Cell{2, 2});
  CHECK(r.has({0, 0}));
  CHECK(!r.has({5, 0}));
  CHECK(!r.in_box({-1, 0}));

  CHECK(code_of([] { Region::deficient_square(4, {0, 0}); }) == "EvenSide");
  CHECK(code_of([] { Region::deficient_square(5, {5, 5}); }) ==
        "MissingOutOfBounds");
  CHECK(code_of([] { Region::full_rect(0, 3); }) == "EmptyBox");
  CHECK(code_of([] { Region::full_rect(65, 3); }) == "RegionTooLarge");
}

TEST_CASE("parse and serialize round trip") {
  std::string text = "*##\n###\n##.\n";
  Region r = Region::parse(text);
  CHECK(r.width() == 3);
  CHECK(r.height() == 3);
  CHECK(r.missing() == Cell{0, 0});
  CHECK(!r.has({0, 0}));
  CHECK(!r.has({2, 2}));
  CHECK(r.cell_count() == 7);
  CHECK(r.serialize() == text);
  CHECK(Region::parse(r.serialize()) == r);

  // Ragged rows pad with '.'.
  Region ragged = Region::parse("##\n####\n");
  CHECK(ragged.width() == 4);
  CHECK(!ragged.has({0, 2}));
  CHECK(ragged.has({1, 3}));

  CHECK(code_of([] { Region::parse(""); }) == "SyntaxError");
  CHECK(code_of([] { Region::parse("#?#\n"); }) == "SyntaxError");
  CHECK(code_of([] { Region::parse("*#\n#*\n"); }) == "MultipleMissing");
}

TEST_CASE("side classification") {
  CHECK(classify_side(5).tag == SquareTag::FourMPlusOne);
  CHECK(classify_side(5).m == 1);
  CHECK(classify_side(9).m == 2);
  CHECK(classify_side(7).tag == SquareTag::FourMPlusThree);
  CHECK(classify_side(7).m == 1);
  CHECK(classify_side(11).m == 2);
  CHECK(classify_side(6).tag == SquareTag::NotOddSquare);
}

TEST_CASE("diagonal position is 1-indexed") {
  CHECK(diagonal_position(5, {0, 0}) == 1);
  CHECK(diagonal_position(5, {4, 4}) == 5);
  CHECK(!diagonal_position(5, {1, 2}).has_value());
  CHECK_THROWS_AS(diagonal_position(5, {5, 5}), TilingError);
}

TEST_CASE("central windows chain along the diagonal") {
  auto w5 = central_windows(5);
  REQUIRE(w5.size() == 2);
  CHECK(w5[0].origin == Cell{0, 0});
  CHECK(w5[1].origin == Cell{2, 2});
  CHECK(w5[0].center() == Cell{1, 1});
  CHECK(w5[1].center() == Cell{3, 3});
  // Consecutive windows overlap in exactly one cell.
  int shared = 0;
  for (int r = 0; r < 5; ++r)
    for (int c = 0; c < 5; ++c)
      if (w5[0].contains({r, c}) && w5[1].contains({r, c})) ++shared;
  CHECK(shared == 1);
  CHECK(w5[0].contains({2, 2}));

  CHECK(central_windows(11).size() == 5);
  CHECK(in_central_windows(5, {0, 2}));
  CHECK(!in_central_windows(5, {0, 3}));
  CHECK(in_central_windows(5, {4, 4}));
}

TEST_CASE("deficient square predicate") {
  CHECK(is_deficient_square(Region::deficient_square(5, {2, 2})));
  CHECK(!is_deficient_square(Region::deficient_square(5, {1, 2})));
  CHECK(!is_deficient_square(Region::full_rect(5, 5)));
  CHECK(!is_deficient_square(Region::deficient_rect(5, 7, {2, 2})));
}

TEST_CASE("cells come out row-major") {
  Region r = Region::parse("#.#\n.#.\n");
  auto cells = r.cells();
  REQUIRE(cells.size() == 3);
  CHECK(cells[0] == Cell{0, 0});
  CHECK(cells[1] == Cell{0, 2});
  CHECK(cells[2] == Cell{1, 1});
}
