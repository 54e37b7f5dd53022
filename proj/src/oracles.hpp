#pragma once

#include <set>
#include <utility>
#include <vector>

#include "bigcount.hpp"
#include "geometry.hpp"
#include "tiles.hpp"

namespace ltc::oracles {

// Deliberately naive reference implementations used only by the test and
// verification suites. They work on plain cell sets and share no machinery
// with the production solver or the dimer DP.

// Recursive exact-cover count over a cell set; intended for <= ~28 cells.
BigCount naive_count_tilings(const Region& region, TileSetId set);

// Perfect matchings of the given cell set by dominoes.
BigCount naive_dimer_count(const std::set<Cell>& cells);

// All perfect matchings, each as a sorted list of sorted cell pairs.
std::vector<std::vector<std::pair<Cell, Cell>>> enumerate_dimer_matchings(
    const std::set<Cell>& cells);

// Domino+monomer tilings of the cell set, split by the number of monomers
// landing on {row == col}; index k of the result. Brute force.
std::vector<BigCount> naive_monomer_dimer_profile(const std::set<Cell>& cells,
                                                  int max_diag);

std::set<Cell> square_cells(int n);
std::set<Cell> deficient_square_cells(int n, int diag_pos);

}  // namespace ltc::oracles
