#include "tiles.hpp"

namespace ltc {

namespace {
const std::array<std::array<Cell, 4>, 5> kOffsets = {{
    {{{0, 0}, {1, 0}, {2, 0}, {2, 1}}},  // T1
    {{{0, 0}, {0, 1}, {1, 1}, {2, 1}}},  // T2
    {{{0, 0}, {1, 0}, {1, 1}, {1, 2}}},  // T3
    {{{0, 0}, {0, 1}, {0, 2}, {1, 2}}},  // T4
    {{{0, 0}, {0, 1}, {1, 0}, {1, 1}}},  // T5
}};

const std::vector<TileKind> kT4 = {TileKind::T1, TileKind::T2, TileKind::T3,
                                   TileKind::T4};
const std::vector<TileKind> kT4Plus = {TileKind::T1, TileKind::T2,
                                       TileKind::T3, TileKind::T4,
                                       TileKind::T5};
}  // namespace

const std::array<Cell, 4>& tile_offsets(TileKind kind) {
  return kOffsets[static_cast<int>(kind)];
}

bool is_ribbon(TileKind kind) { return kind != TileKind::T5; }

const char* tile_name(TileKind kind) {
  static const char* names[] = {"T1", "T2", "T3", "T4", "T5"};
  return names[static_cast<int>(kind)];
}

TileKind tile_from_name(const std::string& name) {
  for (int i = 0; i < 5; ++i)
    if (name == tile_name(static_cast<TileKind>(i)))
      return static_cast<TileKind>(i);
  throw TilingError("BadTileKind", "unknown tile kind: " + name);
}

const std::vector<TileKind>& tiles_in(TileSetId set) {
  return set == TileSetId::RibbonT4 ? kT4 : kT4Plus;
}

TileSetId tileset_from_name(const std::string& name) {
  if (name == "t4") return TileSetId::RibbonT4;
  if (name == "t4plus") return TileSetId::RibbonT4Plus;
  throw TilingError("BadTileSet", "unknown tile set: " + name);
}

const char* tileset_name(TileSetId set) {
  return set == TileSetId::RibbonT4 ? "t4" : "t4plus";
}

std::array<Cell, 4> tile_cells(TileKind kind, Cell anchor) {
  std::array<Cell, 4> out;
  const auto& offs = tile_offsets(kind);
  for (int i = 0; i < 4; ++i)
    out[i] = {anchor.row + offs[i].row, anchor.col + offs[i].col};
  return out;
}

std::array<Cell, 4> placement_cells(const Placement& p) {
  return tile_cells(p.kind, p.anchor);
}

bool placement_fits(const Region& region, const Placement& p) {
  for (Cell c : placement_cells(p))
    if (!region.has(c)) return false;
  return true;
}

std::vector<Placement> placements_in(const Region& region, TileSetId set) {
  std::vector<Placement> out;
  for (int r = 0; r < region.height(); ++r)
    for (int c = 0; c < region.width(); ++c)
      for (TileKind kind : tiles_in(set)) {
        Placement p{kind, {r, c}};
        if (placement_fits(region, p)) out.push_back(p);
      }
  return out;
}

}  // namespace ltc
