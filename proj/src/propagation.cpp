#include "propagation.hpp"

#include <algorithm>

namespace ltc {

std::pair<Region, Tiling> propagate(const Region& region, const Tiling& tiling,
                                    TileSetId set) {
  if (!is_deficient_square(region))
    throw TilingError("InputCrackInvalid", "input is not a deficient square");
  int s = region.width();
  {
    CrackReport rep = extract_crack(region, tiling);
    CrackVerdict v = validate_crack(rep, s, set);
    bool ok = set == TileSetId::RibbonT4 ? v.all_ok() : v.all_ok_except_area();
    if (!ok)
      throw TilingError("InputCrackInvalid", "input tiling fails crack checks");
  }

  Region out_region = Region::deficient_square(s + 4, *region.missing());
  Tiling out = tiling;
  auto add_rect_h = [&](int r, int c) {  // 2x4 box
    out.placements.push_back({TileKind::T3, {r, c}});
    out.placements.push_back({TileKind::T4, {r, c + 1}});
  };
  auto add_rect_v = [&](int r, int c) {  // 4x2 box
    out.placements.push_back({TileKind::T2, {r, c}});
    out.placements.push_back({TileKind::T1, {r + 1, c}});
  };

  int n = (s - 1) / 2;
  for (int j = 0; j < n; ++j) add_rect_v(s, 2 * j);      // south band
  for (int i = 0; i < n; ++i) add_rect_h(2 * i, s);      // east band
  add_rect_v(s, s - 1);      // lower corner block, covers window S_n's center
  add_rect_v(s - 1, s + 2);  // upper corner block, covers S_{n+1}'s center
  // Crack extension through the two new windows.
  out.placements.push_back({TileKind::T2, {s - 1, s}});
  out.placements.push_back({TileKind::T3, {s + 2, s + 1}});
  std::sort(out.placements.begin(), out.placements.end());

  if (!validate_tiling(out_region, out).empty())
    throw TilingError("BandFillFailed", "band construction left gaps");
  CrackReport rep = extract_crack(out_region, out);
  CrackVerdict v = validate_crack(rep, s + 4, set);
  bool ok = set == TileSetId::RibbonT4 ? v.all_ok() : v.all_ok_except_area();
  if (!ok)
    throw TilingError("BandFillFailed", "extended tiling fails crack checks");
  return {std::move(out_region), std::move(out)};
}

}  // namespace ltc
