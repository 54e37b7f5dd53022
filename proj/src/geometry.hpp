#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ltc {

// Error with a stable machine-readable code ("EvenSide", "SyntaxError", ...).
class TilingError : public std::runtime_error {
 public:
  TilingError(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

// Lattice cell. Row 0 is the top (NW) edge, rows grow southward, so the
// main NW-SE diagonal is exactly {row == col}.
struct Cell {
  int row = 0;
  int col = 0;
  friend bool operator==(const Cell&, const Cell&) = default;
  friend auto operator<=>(const Cell&, const Cell&) = default;  // row-major
};

// Finite set of unit cells inside a width x height bounding box, plus an
// optional designated missing cell. Stored as one bitmask per row, so
// irregular regions need no special casing. Immutable once built.
class Region {
 public:
  Region(int width, int height);

  static Region full_rect(int width, int height);
  static Region deficient_square(int side, Cell missing);
  static Region deficient_rect(int width, int height, Cell missing);
  static Region parse(const std::string& text);

  int width() const { return width_; }
  int height() const { return height_; }
  bool in_box(Cell c) const {
    return c.row >= 0 && c.row < height_ && c.col >= 0 && c.col < width_;
  }
  bool has(Cell c) const {
    return in_box(c) && (rows_[c.row] >> c.col & 1u);
  }
  void add(Cell c);
  void remove(Cell c);
  void set_missing(Cell c);
  const std::optional<Cell>& missing() const { return missing_; }
  uint64_t row_bits(int r) const { return rows_[r]; }

  int cell_count() const;
  std::vector<Cell> cells() const;  // row-major order

  std::string serialize() const;

  bool operator==(const Region&) const = default;

 private:
  int width_;
  int height_;
  std::vector<uint64_t> rows_;
  std::optional<Cell> missing_;
};

enum class SquareTag { FourMPlusOne, FourMPlusThree, NotOddSquare };

struct SquareClass {
  SquareTag tag = SquareTag::NotOddSquare;
  int m = 0;
};

SquareClass classify_side(int side);

// 1-indexed position on the main diagonal, or nullopt off the diagonal.
// Position 1 is the NW corner.
std::optional<int> diagonal_position(int side, Cell cell);

// One 3x3 square of the diagonal chain; consecutive windows overlap in the
// single cell (2k+2, 2k+2).
struct CentralWindow {
  int index = 0;
  Cell origin;  // (2k, 2k); spans rows/cols [2k, 2k+3)
  bool contains(Cell c) const {
    return c.row >= origin.row && c.row < origin.row + 3 &&
           c.col >= origin.col && c.col < origin.col + 3;
  }
  Cell center() const { return {origin.row + 1, origin.col + 1}; }
};

std::vector<CentralWindow> central_windows(int side);

// True iff some window of the side's chain contains the cell.
bool in_central_windows(int side, Cell c);

// Odd square with the missing cell present on the main diagonal. This is the
// precondition for crack analysis; the diagonal-parity rule is not enforced
// here (wrong-parity squares simply have no tilings).
bool is_deficient_square(const Region& r);

}  // namespace ltc
