#include "projection.hpp"

#include <algorithm>

namespace ltc {

namespace {

struct ImageParams {
  int size = 0;
  std::optional<Cell> missing_image;
};

ImageParams image_params(int side, int missing_pos) {
  SquareClass cls = classify_side(side);
  if (cls.tag == SquareTag::FourMPlusOne) return {2 * cls.m, std::nullopt};
  if (cls.tag == SquareTag::FourMPlusThree) {
    if (missing_pos % 2 != 0)
      throw TilingError("InconsistentImage",
                        "side 4m+3 needs an even missing position");
    int k0 = (missing_pos - 2) / 2;
    return {2 * cls.m + 1, Cell{k0, k0}};
  }
  throw TilingError("InconsistentImage", "side is not an odd square side");
}

Cell img_of_origin(Cell origin, BlockSide side) {
  if (side == BlockSide::Lower)
    return {(origin.row - 1) / 2, origin.col / 2};
  return {origin.row / 2, (origin.col - 1) / 2};
}

// Expansion of one image object back to full scale. The NW cell of the
// expanded box for an image cell (i,j) is (2i+1, 2j) on the lower staircase
// and (2i, 2j+1) on the upper one.
Cell box_origin(Cell img, DiagSide side) {
  if (side == DiagSide::Lower) return {2 * img.row + 1, 2 * img.col};
  return {2 * img.row, 2 * img.col + 1};
}

DiagSide side_of_domino(const Domino& d) {
  // a < b row-major. A domino covering a diagonal cell goes to the lower
  // staircase iff the partner lies below or left of it.
  if (d.a.row == d.a.col)
    return d.b.row == d.a.row + 1 ? DiagSide::Lower : DiagSide::Upper;
  if (d.b.row == d.b.col)
    return d.a.col == d.b.col - 1 ? DiagSide::Lower : DiagSide::Upper;
  return d.a.row > d.a.col ? DiagSide::Lower : DiagSide::Upper;
}

}  // namespace

ImageTiling project(const Region& region, const Tiling& tiling) {
  if (!is_deficient_square(region))
    throw TilingError("NotDeficientSquare", "projection needs a deficient square");
  int side = region.width();
  int p = *diagonal_position(side, *region.missing());
  ImageParams params = image_params(side, p);
  Decomposition d = decompose(region, tiling);

  ImageTiling img;
  img.size = params.size;
  img.missing_image = params.missing_image;
  for (const RectBlock& b : d.rect_blocks) {
    Cell c = img_of_origin(b.origin, b.side);
    Cell mate = b.orient == Orientation::Horizontal ? Cell{c.row, c.col + 1}
                                                    : Cell{c.row + 1, c.col};
    img.dominoes.push_back({c, mate});
  }
  for (const SquareBlock& b : d.square_blocks)
    img.monomers.push_back(img_of_origin(b.origin, b.side));
  std::sort(img.dominoes.begin(), img.dominoes.end());
  std::sort(img.monomers.begin(), img.monomers.end());

  // The two halving maps must reassemble into an exact cover of the image.
  std::vector<std::vector<int>> cover(img.size, std::vector<int>(img.size, 0));
  auto mark = [&](Cell c) {
    if (c.row < 0 || c.row >= img.size || c.col < 0 || c.col >= img.size)
      throw TilingError("StructureViolation", "image cell out of range");
    cover[c.row][c.col] += 1;
  };
  for (const Domino& dm : img.dominoes) {
    mark(dm.a);
    mark(dm.b);
  }
  for (Cell c : img.monomers) mark(c);
  for (int r = 0; r < img.size; ++r)
    for (int c = 0; c < img.size; ++c) {
      int expect = img.missing_image && *img.missing_image == Cell{r, c} ? 0 : 1;
      if (cover[r][c] != expect)
        throw TilingError("StructureViolation",
                          "projected blocks do not tile the image square");
    }
  return img;
}

Tiling lift(const ImageTiling& image, int side, int missing_pos,
            const LiftChoices& choices) {
  ImageParams params = image_params(side, missing_pos);
  if (image.size != params.size ||
      image.missing_image != params.missing_image)
    throw TilingError("InconsistentImage",
                      "image size/missing do not match the target square");
  if (params.missing_image.has_value() != choices.variant_bit.has_value())
    throw TilingError("InconsistentImage",
                      "variant_bit must be given exactly for side 4m+3");
  if (choices.variant_bit && *choices.variant_bit != 0 &&
      *choices.variant_bit != 1)
    throw TilingError("InconsistentImage", "variant_bit must be 0 or 1");

  std::set<Cell> diag_monomers;
  for (Cell c : image.monomers)
    if (c.row == c.col) diag_monomers.insert(c);
  {
    std::set<Cell> keys;
    for (const auto& [c, s] : choices.monomer_sides) keys.insert(c);
    if (keys != diag_monomers)
      throw TilingError("InconsistentImage",
                        "monomer_sides keys must be the diagonal monomers");
  }

  Tiling out;
  for (const Domino& d : image.dominoes) {
    DiagSide side_cls = side_of_domino(d);
    Cell o = box_origin(d.a, side_cls);
    if (d.b.row == d.a.row) {  // horizontal -> 2x4 box
      out.placements.push_back({TileKind::T3, o});
      out.placements.push_back({TileKind::T4, {o.row, o.col + 1}});
    } else {  // vertical -> 4x2 box
      out.placements.push_back({TileKind::T2, o});
      out.placements.push_back({TileKind::T1, {o.row + 1, o.col}});
    }
  }
  for (Cell c : image.monomers) {
    DiagSide side_cls;
    if (c.row == c.col)
      side_cls = choices.monomer_sides.at(c);
    else
      side_cls = c.row > c.col ? DiagSide::Lower : DiagSide::Upper;
    out.placements.push_back({TileKind::T5, box_origin(c, side_cls)});
  }

  Cell missing{missing_pos - 1, missing_pos - 1};
  Region region = Region::deficient_square(side, missing);

  // Whatever the expansion left uncovered is the crack; complete it with
  // ribbon tiles by exact cover.
  Region crack(side, side);
  std::set<Cell> covered;
  for (const Placement& p : out.placements)
    for (Cell c : placement_cells(p)) {
      if (!region.has(c) || covered.count(c))
        throw TilingError("InconsistentImage",
                          "expanded blocks collide or leave the square");
      covered.insert(c);
    }
  for (Cell c : region.cells())
    if (!covered.count(c)) crack.add(c);

  std::vector<Tiling> completions =
      all_tilings(crack, TileSetId::RibbonT4, 3);
  if (completions.empty())
    throw TilingError("CrackNotCompletable", "crack admits no ribbon tiling");
  size_t expect = params.missing_image ? 2 : 1;
  if (completions.size() != expect)
    throw TilingError("CrackCompletionNotUnique",
                      "crack completion count differs from the expected "
                      "1 (side 4m+1) or 2 (side 4m+3)");
  const Tiling& fill =
      completions[choices.variant_bit ? *choices.variant_bit : 0];
  out.placements.insert(out.placements.end(), fill.placements.begin(),
                        fill.placements.end());
  std::sort(out.placements.begin(), out.placements.end());

  if (!validate_tiling(region, out).empty())
    throw TilingError("StructureViolation", "lifted tiling is not exact");
  return out;
}

BigCount preimage_cardinality(const ImageTiling& image, int side) {
  SquareClass cls = classify_side(side);
  if (cls.tag == SquareTag::NotOddSquare)
    throw TilingError("InconsistentImage", "side is not an odd square side");
  int expect_size = cls.tag == SquareTag::FourMPlusOne ? 2 * cls.m : 2 * cls.m + 1;
  if (image.size != expect_size)
    throw TilingError("InconsistentImage", "image size does not match side");
  int k = 0;
  for (Cell c : image.monomers)
    if (c.row == c.col) ++k;
  BigCount result = BigCount(1) << k;
  if (cls.tag == SquareTag::FourMPlusThree) result *= 2;
  return result;
}

std::pair<int, int> diagonal_balance(const ImageTiling& image) {
  int lower = 0, upper = 0;
  for (const Domino& d : image.dominoes) {
    if (d.a.row != d.a.col && d.b.row != d.b.col) continue;
    (side_of_domino(d) == DiagSide::Lower ? lower : upper) += 1;
  }
  return {lower, upper};
}

LiftChoices read_choices(const Region& region, const Tiling& tiling) {
  Decomposition d = decompose(region, tiling);
  LiftChoices ch;
  for (const SquareBlock& b : d.square_blocks) {
    Cell img = img_of_origin(b.origin, b.side);
    if (img.row == img.col)
      ch.monomer_sides[img] = b.side == BlockSide::Lower ? DiagSide::Lower
                                                         : DiagSide::Upper;
  }
  if (classify_side(region.width()).tag == SquareTag::FourMPlusThree) {
    // The crack region is the irregular cells; its two ribbon tilings are
    // enumerated in canonical order, and the bit indexes the source's one.
    Region crack(region.width(), region.height());
    for (const Placement& p : d.irregular)
      for (Cell c : placement_cells(p)) crack.add(c);
    std::vector<Placement> irregular = d.irregular;
    std::sort(irregular.begin(), irregular.end());
    int bit = -1, idx = 0;
    for (const Tiling& t : all_tilings(crack, TileSetId::RibbonT4, 3)) {
      if (t.placements == irregular) bit = idx;
      ++idx;
    }
    if (bit < 0)
      throw TilingError("StructureViolation",
                        "source crack filling not found among completions");
    ch.variant_bit = bit;
  }
  return ch;
}

}  // namespace ltc
