#include "oracles.hpp"

namespace ltc::oracles {

namespace {

BigCount count_covers(std::set<Cell>& free, TileSetId set) {
  if (free.empty()) return 1;
  Cell first = *free.begin();
  BigCount total = 0;
  for (TileKind kind : tiles_in(set)) {
    // Try every anchor that puts some cell of the tile on `first`.
    for (Cell off : tile_offsets(kind)) {
      Cell anchor{first.row - off.row, first.col - off.col};
      auto cells = tile_cells(kind, anchor);
      bool ok = true;
      for (Cell c : cells)
        if (!free.count(c)) ok = false;
      if (!ok) continue;
      for (Cell c : cells) free.erase(c);
      total += count_covers(free, set);
      for (Cell c : cells) free.insert(c);
    }
  }
  return total;
}

void match_rec(std::set<Cell>& free,
               std::vector<std::pair<Cell, Cell>>& acc,
               std::vector<std::vector<std::pair<Cell, Cell>>>* out,
               BigCount& count) {
  if (free.empty()) {
    count += 1;
    if (out) out->push_back(acc);
    return;
  }
  Cell first = *free.begin();
  for (Cell mate : {Cell{first.row, first.col + 1}, Cell{first.row + 1, first.col}}) {
    if (!free.count(mate)) continue;
    free.erase(first);
    free.erase(mate);
    acc.push_back({first, mate});
    match_rec(free, acc, out, count);
    acc.pop_back();
    free.insert(first);
    free.insert(mate);
  }
}

void monomer_rec(std::set<Cell>& free, int diag, std::vector<BigCount>& out) {
  if (free.empty()) {
    out[diag] += 1;
    return;
  }
  Cell first = *free.begin();
  free.erase(first);
  // monomer
  int d = first.row == first.col ? 1 : 0;
  if (diag + d < static_cast<int>(out.size())) {
    monomer_rec(free, diag + d, out);
  }
  // dominoes
  for (Cell mate : {Cell{first.row, first.col + 1}, Cell{first.row + 1, first.col}}) {
    if (!free.count(mate)) continue;
    free.erase(mate);
    monomer_rec(free, diag, out);
    free.insert(mate);
  }
  free.insert(first);
}

}  // namespace

BigCount naive_count_tilings(const Region& region, TileSetId set) {
  std::set<Cell> free;
  for (Cell c : region.cells()) free.insert(c);
  return count_covers(free, set);
}

BigCount naive_dimer_count(const std::set<Cell>& cells) {
  std::set<Cell> free = cells;
  std::vector<std::pair<Cell, Cell>> acc;
  BigCount count = 0;
  match_rec(free, acc, nullptr, count);
  return count;
}

std::vector<std::vector<std::pair<Cell, Cell>>> enumerate_dimer_matchings(
    const std::set<Cell>& cells) {
  std::set<Cell> free = cells;
  std::vector<std::pair<Cell, Cell>> acc;
  std::vector<std::vector<std::pair<Cell, Cell>>> out;
  BigCount count = 0;
  match_rec(free, acc, &out, count);
  return out;
}

std::vector<BigCount> naive_monomer_dimer_profile(const std::set<Cell>& cells,
                                                  int max_diag) {
  std::vector<BigCount> out(max_diag + 1);
  std::set<Cell> free = cells;
  monomer_rec(free, 0, out);
  return out;
}

std::set<Cell> square_cells(int n) {
  std::set<Cell> out;
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) out.insert({r, c});
  return out;
}

std::set<Cell> deficient_square_cells(int n, int diag_pos) {
  auto out = square_cells(n);
  out.erase({diag_pos - 1, diag_pos - 1});
  return out;
}

}  // namespace ltc::oracles
