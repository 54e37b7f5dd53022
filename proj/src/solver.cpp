#include "solver.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <unordered_map>

namespace ltc {

namespace {

// Flat-bitset search context. Bit set = cell unavailable (outside the region
// or already covered). The branch cell is always the row-major first free
// cell; since every tile shape contains offset (0,0), only placements
// anchored exactly there can cover it.
struct Search {
  int width = 0, height = 0, ncells = 0;
  std::vector<uint64_t> occ;                 // flat, 1 = unavailable
  std::vector<std::vector<Placement>> cand;  // per flat cell, anchored there
  std::vector<std::vector<std::array<int, 4>>> cand_cells;  // flat indices

  explicit Search(const Region& region, TileSetId set)
      : width(region.width()), height(region.height()) {
    ncells = width * height;
    occ.assign((ncells + 63) / 64, 0);
    for (int r = 0; r < height; ++r)
      for (int c = 0; c < width; ++c)
        if (!region.has({r, c})) this->set(r * width + c);
    cand.resize(ncells);
    cand_cells.resize(ncells);
    for (int r = 0; r < height; ++r)
      for (int c = 0; c < width; ++c)
        for (TileKind kind : tiles_in(set)) {
          Placement p{kind, {r, c}};
          if (!placement_fits(region, p)) continue;
          int f = r * width + c;
          cand[f].push_back(p);
          std::array<int, 4> cells;
          auto pc = placement_cells(p);
          for (int i = 0; i < 4; ++i)
            cells[i] = pc[i].row * width + pc[i].col;
          cand_cells[f].push_back(cells);
        }
  }

  bool test(int f) const { return occ[f >> 6] >> (f & 63) & 1u; }
  void set(int f) { occ[f >> 6] |= 1ull << (f & 63); }
  void clear(int f) { occ[f >> 6] &= ~(1ull << (f & 63)); }

  int advance(int cursor) const {
    while (cursor < ncells && test(cursor)) ++cursor;
    return cursor;
  }

  bool free_at(const std::array<int, 4>& cells) const {
    return !test(cells[1]) && !test(cells[2]) && !test(cells[3]);
  }

  void place(const std::array<int, 4>& cells) {
    for (int f : cells) set(f);
  }
  void unplace(const std::array<int, 4>& cells) {
    for (int f : cells) clear(f);
  }
};

// Counting with memoization on (cursor, occupancy window). Any cell covered
// past the cursor lies within the next 3*width flat positions, so for
// width <= 18 the state packs into 64 bits.
class Counter {
 public:
  explicit Counter(Search& s) : s_(s) {
    window_ = 3 * s_.width - 1;
    memo_ok_ = window_ + 10 <= 64 && s_.ncells < (1 << 10);
  }

  BigCount count(int cursor) {
    cursor = s_.advance(cursor);
    if (cursor == s_.ncells) return 1;
    uint64_t key = 0;
    if (memo_ok_) {
      key = static_cast<uint64_t>(cursor) << window_;
      int hi = std::min(s_.ncells, cursor + 1 + window_);
      for (int f = cursor + 1; f < hi; ++f)
        if (s_.test(f)) key |= 1ull << (f - cursor - 1);
      auto it = memo_.find(key);
      if (it != memo_.end()) return it->second;
    }
    BigCount total = 0;
    const auto& cells = s_.cand_cells[cursor];
    for (const auto& cc : cells) {
      if (!s_.free_at(cc)) continue;
      s_.place(cc);
      total += count(cursor + 1);
      s_.unplace(cc);
    }
    if (memo_ok_) memo_[key] = total;
    return total;
  }

 private:
  Search& s_;
  int window_;
  bool memo_ok_;
  std::unordered_map<uint64_t, BigCount> memo_;
};

bool dfs_enumerate(Search& s, int cursor, std::vector<Placement>& acc,
                   uint64_t& remaining,
                   const std::function<bool(const Tiling&)>& visit) {
  cursor = s.advance(cursor);
  if (cursor == s.ncells) {
    // Anchors strictly increase along a branch, so acc is already in
    // canonical (anchor, kind) order.
    Tiling t{acc};
    if (!visit(t)) return false;
    if (remaining != UINT64_MAX && --remaining == 0) return false;
    return true;
  }
  const auto& cands = s.cand[cursor];
  const auto& cells = s.cand_cells[cursor];
  for (size_t i = 0; i < cands.size(); ++i) {
    if (!s.free_at(cells[i])) continue;
    s.place(cells[i]);
    acc.push_back(cands[i]);
    bool go = dfs_enumerate(s, cursor + 1, acc, remaining, visit);
    acc.pop_back();
    s.unplace(cells[i]);
    if (!go) return false;
  }
  return true;
}

}  // namespace

BigCount count_tilings(const Region& region, TileSetId set, int threads) {
  Search s(region, set);
  int cursor = s.advance(0);
  if (cursor == s.ncells) return 1;
  if (threads <= 1) {
    Counter counter(s);
    return counter.count(cursor);
  }
  // Split the root branches across workers; summing in branch order keeps
  // the result identical to the sequential count.
  std::vector<std::future<BigCount>> parts;
  const auto& cells = s.cand_cells[cursor];
  for (const auto& cc : cells) {
    if (!s.free_at(cc)) continue;
    Search sub = s;
    sub.place(cc);
    parts.push_back(std::async(std::launch::async, [sub = std::move(sub),
                                                    cursor]() mutable {
      Counter counter(sub);
      return counter.count(cursor + 1);
    }));
  }
  BigCount total = 0;
  for (auto& f : parts) total += f.get();
  return total;
}

void enumerate_tilings(const Region& region, TileSetId set,
                       const std::function<bool(const Tiling&)>& visit,
                       std::optional<uint64_t> limit) {
  if (limit && *limit == 0) return;
  Search s(region, set);
  std::vector<Placement> acc;
  uint64_t remaining = limit ? *limit : UINT64_MAX;
  dfs_enumerate(s, 0, acc, remaining, visit);
}

std::vector<Tiling> all_tilings(const Region& region, TileSetId set,
                                std::optional<uint64_t> limit) {
  std::vector<Tiling> out;
  enumerate_tilings(
      region, set,
      [&](const Tiling& t) {
        out.push_back(t);
        return true;
      },
      limit);
  return out;
}

std::vector<Violation> validate_tiling(const Region& region,
                                       const Tiling& tiling) {
  std::vector<Violation> out;
  std::map<Cell, int> cover;
  for (const Placement& p : tiling.placements) {
    bool outside = false;
    for (Cell c : placement_cells(p)) {
      if (!region.has(c)) outside = true;
      cover[c] += 1;
    }
    if (outside) out.push_back({Violation::OutsideRegion, p.anchor, p});
  }
  for (const auto& [cell, n] : cover)
    if (n > 1 && region.has(cell))
      out.push_back({Violation::OverlapAt, cell, std::nullopt});
  for (Cell c : region.cells())
    if (!cover.count(c))
      out.push_back({Violation::UncoveredCell, c, std::nullopt});
  return out;
}

}  // namespace ltc
