#pragma once

#include <array>
#include <string>
#include <vector>

#include "geometry.hpp"

namespace ltc {

// The four ribbon L-tetrominoes (T1-T4) and the 2x2 square (T5). Only these
// fixed orientations exist; tiles are placed by translation only. Offsets are
// relative to the NW-most corner of the shape's bounding box, and every shape
// contains offset (0,0).
enum class TileKind : int { T1 = 0, T2, T3, T4, T5 };

enum class TileSetId { RibbonT4, RibbonT4Plus };

const std::array<Cell, 4>& tile_offsets(TileKind kind);
bool is_ribbon(TileKind kind);
const char* tile_name(TileKind kind);
TileKind tile_from_name(const std::string& name);
const std::vector<TileKind>& tiles_in(TileSetId set);
TileSetId tileset_from_name(const std::string& name);  // "t4" | "t4plus"
const char* tileset_name(TileSetId set);

// A tile kind anchored at a cell (the NW-most bounding-box corner position).
struct Placement {
  TileKind kind = TileKind::T1;
  Cell anchor;
  friend bool operator==(const Placement&, const Placement&) = default;
  // Canonical order: (anchor.row, anchor.col, kind).
  friend std::strong_ordering operator<=>(const Placement& a,
                                          const Placement& b) {
    if (auto c = a.anchor <=> b.anchor; c != 0) return c;
    return a.kind <=> b.kind;
  }
};

std::array<Cell, 4> tile_cells(TileKind kind, Cell anchor);
std::array<Cell, 4> placement_cells(const Placement& p);

// Every placement whose cells all lie in the region, ordered by
// (anchor.row, anchor.col, kind). This order is a stable public contract.
std::vector<Placement> placements_in(const Region& region, TileSetId set);

bool placement_fits(const Region& region, const Placement& p);

}  // namespace ltc
