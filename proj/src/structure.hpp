#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "solver.hpp"

namespace ltc {

// Regular blocks are 2x4 / 4x2 / 2x2 boxes aligned with one of the two
// staircase lattices. With row 0 at the top the lower (SW) staircase blocks
// have their NW corner at (odd row, even col) and the upper (NE) staircase
// blocks at (even row, odd col).
enum class BlockSide { Lower, Upper };

enum class Orientation { Horizontal, Vertical };

struct RectBlock {
  Cell origin;  // NW cell of the 2x4 or 4x2 box
  Orientation orient = Orientation::Horizontal;
  BlockSide side = BlockSide::Lower;
  Placement a, b;
};

struct SquareBlock {
  Cell origin;  // NW cell of the 2x2 box
  BlockSide side = BlockSide::Lower;
  Placement t5;
};

struct Decomposition {
  std::vector<RectBlock> rect_blocks;
  std::vector<SquareBlock> square_blocks;
  std::vector<Placement> irregular;
};

enum class WindowSide { Lower, Upper, MissingCenter };
const char* window_side_name(WindowSide s);

struct CrackReport {
  std::set<Cell> crack_cells;  // cells of irregular placements + missing
  int irregular_count = 0;
  std::vector<std::set<Cell>> components;  // 4-adjacency, complement
  std::vector<WindowSide> window_occupancy;  // per central window
};

struct CrackVerdict {
  bool location_ok = false;
  bool endpoints_ok = false;
  bool count_ok = false;
  bool two_components_ok = false;
  bool equal_area_ok = false;
  std::vector<std::string> diagnostics;
  bool all_ok() const {
    return location_ok && endpoints_ok && count_ok && two_components_ok &&
           equal_area_ok;
  }
  // Side 4m+3 cracks carry no equal-area guarantee; equal_area_ok is
  // recorded but not part of this check.
  bool all_ok_except_area() const {
    return location_ok && endpoints_ok && count_ok && two_components_ok;
  }
};

// Split a valid tiling into aligned rectangular/square blocks plus the
// irregular leftovers. Each L placement belongs to at most one candidate
// block (an aligned 2x4 box is tiled by a unique pair), so the maximal
// assignment is unique by construction.
Decomposition decompose(const Region& region, const Tiling& tiling);

// Requires a deficient odd square with the missing cell on the diagonal.
CrackReport extract_crack(const Region& region, const Tiling& tiling);

CrackVerdict validate_crack(const CrackReport& report, int side,
                            TileSetId set);

struct CensusEntry {
  std::vector<Cell> cells;  // sorted crack cell-set
  BigCount tilings;         // tilings sharing this crack
  BigCount fillings;        // distinct irregular placement-sets realizing it
};

struct CensusReport {
  BigCount distinct_cracks = 0;
  BigCount weighted_cracks = 0;  // sum of fillings over cell-sets
  std::vector<CensusEntry> cracks;  // sorted lexicographically by cell list
};

CensusReport crack_census(const Region& region, TileSetId set);

}  // namespace ltc
