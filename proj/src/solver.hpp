#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "bigcount.hpp"
#include "tiles.hpp"

namespace ltc {

// An exact cover of a region by placements, canonically sorted by
// (anchor, kind).
struct Tiling {
  std::vector<Placement> placements;
  friend bool operator==(const Tiling&, const Tiling&) = default;
  friend auto operator<=>(const Tiling&, const Tiling&) = default;
};

// Exact number of distinct exact covers. The empty region counts as 1.
// With threads > 1 the search tree is split across workers; the result is
// independent of the thread count.
BigCount count_tilings(const Region& region, TileSetId set, int threads = 1);

// Emits each tiling exactly once, in the deterministic order induced by
// branching on the row-major first uncovered cell with placements tried in
// placements_in order. The visitor returns false to stop early.
// Single-threaded by contract.
void enumerate_tilings(const Region& region, TileSetId set,
                       const std::function<bool(const Tiling&)>& visit,
                       std::optional<uint64_t> limit = std::nullopt);

// Convenience: materialize the enumeration stream.
std::vector<Tiling> all_tilings(const Region& region, TileSetId set,
                                std::optional<uint64_t> limit = std::nullopt);

struct Violation {
  enum Kind { OverlapAt, UncoveredCell, OutsideRegion } kind;
  Cell cell;                           // for OverlapAt / UncoveredCell
  std::optional<Placement> placement;  // for OutsideRegion
  friend bool operator==(const Violation&, const Violation&) = default;
};

// Exhaustive list of violations; empty iff the tiling is an exact cover.
std::vector<Violation> validate_tiling(const Region& region,
                                       const Tiling& tiling);

}  // namespace ltc
