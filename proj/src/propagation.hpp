#pragma once

#include <utility>

#include "structure.hpp"

namespace ltc {

// Extend a crack tiling of a deficient (2n+1)-square to the deficient
// (2n+5)-square with the same missing cell (NW-anchored). Every input
// placement is kept; the width-4 band along the S and E edges is filled with
// aligned rectangle pairs plus two new irregular tiles that continue the
// crack through the two new central windows (the first assigned to the lower
// staircase, the second to the upper one).
std::pair<Region, Tiling> propagate(const Region& region, const Tiling& tiling,
                                    TileSetId set);

}  // namespace ltc
