#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "structure.hpp"

namespace ltc {

struct Domino {
  Cell a, b;  // adjacent, a < b in row-major order
  friend bool operator==(const Domino&, const Domino&) = default;
  friend auto operator<=>(const Domino&, const Domino&) = default;
};

// Domino(+monomer) tiling of the half-scale square produced by the
// homothety projection. For side 4m+3 one diagonal cell is missing.
struct ImageTiling {
  int size = 0;
  std::optional<Cell> missing_image;
  std::vector<Domino> dominoes;  // sorted
  std::vector<Cell> monomers;    // sorted
  friend bool operator==(const ImageTiling&, const ImageTiling&) = default;
  friend auto operator<=>(const ImageTiling&, const ImageTiling&) = default;
};

enum class DiagSide { Lower, Upper };

// Free choices the lift cannot read off the image: which 3x3 filling to use
// around the missing cell (side 4m+3 only), and which staircase each
// diagonal monomer's 2x2 tile goes to.
struct LiftChoices {
  std::optional<int> variant_bit;  // 0 or 1; present iff missing_image is
  std::map<Cell, DiagSide> monomer_sides;
};

// Eliminate the crack, replace aligned blocks by dominoes/monomers, and
// apply the half-scale maps of the two staircases.
ImageTiling project(const Region& region, const Tiling& tiling);

// Inverse of project given the choices. The crack left over after expanding
// the image is completed by L-tetrominoes via exact cover; the completion is
// unique for side 4m+1 and two-fold (variant_bit) for side 4m+3.
Tiling lift(const ImageTiling& image, int side, int missing_pos,
            const LiftChoices& choices);

// 2^k, doubled for side 4m+3; k = number of diagonal monomers.
BigCount preimage_cardinality(const ImageTiling& image, int side);

// (lower, upper): diagonal cells covered by dominoes whose partner lies
// below/left vs above/right. Monomers are excluded.
std::pair<int, int> diagonal_balance(const ImageTiling& image);

// Read back from a source tiling the choices that make lift invert project.
LiftChoices read_choices(const Region& region, const Tiling& tiling);

}  // namespace ltc
