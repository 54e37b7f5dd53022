#pragma once

#include <string>

#include "solver.hpp"

namespace ltc {

// Letter-per-tile grid; 'X' marks the missing cell, '.' cells outside the
// region. Without a tiling every region cell prints '#'.
std::string render_ascii(const Region& region, const Tiling* tiling);

// SVG 1.1 drawing. Regular tiles are light (two alternating shades), crack
// tiles mid-gray, the missing cell dark. Crack shading is applied when the
// region is an admissible deficient square and the tiling decomposes.
std::string render_svg(const Region& region, const Tiling* tiling);

}  // namespace ltc
