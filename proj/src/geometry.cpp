#include "geometry.hpp"

#include <bit>
#include <sstream>

namespace ltc {

Region::Region(int width, int height) : width_(width), height_(height) {
  if (width < 1 || height < 1)
    throw TilingError("EmptyBox", "region box must be at least 1x1");
  if (width > 64 || height > 64)
    throw TilingError("RegionTooLarge", "region box is limited to 64x64");
  rows_.assign(height, 0);
}

Region Region::full_rect(int width, int height) {
  Region r(width, height);
  for (int i = 0; i < height; ++i)
    r.rows_[i] = width == 64 ? ~0ull : (1ull << width) - 1;
  return r;
}

Region Region::deficient_rect(int width, int height, Cell missing) {
  Region r = full_rect(width, height);
  if (!r.in_box(missing))
    throw TilingError("MissingOutOfBounds", "missing cell outside the box");
  r.remove(missing);
  r.missing_ = missing;
  return r;
}

Region Region::deficient_square(int side, Cell missing) {
  if (side < 1 || side % 2 == 0)
    throw TilingError("EvenSide", "deficient square needs an odd side");
  return deficient_rect(side, side, missing);
}

Region Region::parse(const std::string& text) {
  std::vector<std::string> lines;
  std::string cur;
  for (char ch : text) {
    if (ch == '\n') {
      lines.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) lines.push_back(cur);
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  if (lines.empty())
    throw TilingError("SyntaxError", "empty region text");

  size_t width = 0;
  for (const auto& l : lines) width = std::max(width, l.size());
  if (width == 0) throw TilingError("SyntaxError", "no columns in region text");

  Region r(static_cast<int>(width), static_cast<int>(lines.size()));
  for (int row = 0; row < static_cast<int>(lines.size()); ++row) {
    for (int col = 0; col < static_cast<int>(lines[row].size()); ++col) {
      char ch = lines[row][col];
      Cell c{row, col};
      switch (ch) {
        case '#':
          r.add(c);
          break;
        case '.':
          break;
        case '*':
          if (r.missing_)
            throw TilingError("MultipleMissing", "more than one '*' cell");
          r.missing_ = c;
          break;
        default:
          throw TilingError("SyntaxError",
                            std::string("bad character '") + ch + "' at row " +
                                std::to_string(row));
      }
    }
  }
  return r;
}

void Region::add(Cell c) {
  if (!in_box(c)) throw TilingError("CellOutOfBounds", "cell outside the box");
  rows_[c.row] |= 1ull << c.col;
}

void Region::remove(Cell c) {
  if (!in_box(c)) throw TilingError("CellOutOfBounds", "cell outside the box");
  rows_[c.row] &= ~(1ull << c.col);
}

void Region::set_missing(Cell c) {
  if (!in_box(c))
    throw TilingError("MissingOutOfBounds", "missing cell outside the box");
  if (has(c))
    throw TilingError("MissingOverlapsCell", "missing cell is a region cell");
  missing_ = c;
}

int Region::cell_count() const {
  int n = 0;
  for (uint64_t bits : rows_) n += std::popcount(bits);
  return n;
}

std::vector<Cell> Region::cells() const {
  std::vector<Cell> out;
  out.reserve(cell_count());
  for (int r = 0; r < height_; ++r)
    for (int c = 0; c < width_; ++c)
      if (rows_[r] >> c & 1u) out.push_back({r, c});
  return out;
}

std::string Region::serialize() const {
  std::ostringstream os;
  for (int r = 0; r < height_; ++r) {
    for (int c = 0; c < width_; ++c) {
      Cell cell{r, c};
      if (has(cell))
        os << '#';
      else if (missing_ && *missing_ == cell)
        os << '*';
      else
        os << '.';
    }
    os << '\n';
  }
  return os.str();
}

SquareClass classify_side(int side) {
  if (side < 1) throw TilingError("BadSide", "side must be positive");
  if (side % 4 == 1) return {SquareTag::FourMPlusOne, (side - 1) / 4};
  if (side % 4 == 3) return {SquareTag::FourMPlusThree, (side - 3) / 4};
  return {SquareTag::NotOddSquare, 0};
}

std::optional<int> diagonal_position(int side, Cell cell) {
  if (cell.row < 0 || cell.row >= side || cell.col < 0 || cell.col >= side)
    throw TilingError("CellOutOfBounds", "cell outside the side x side box");
  if (cell.row != cell.col) return std::nullopt;
  return cell.row + 1;
}

std::vector<CentralWindow> central_windows(int side) {
  if (side < 3 || side % 2 == 0)
    throw TilingError("EvenSide", "central windows need an odd side >= 3");
  int n = (side - 1) / 2;
  std::vector<CentralWindow> out;
  out.reserve(n);
  for (int k = 0; k < n; ++k) out.push_back({k, {2 * k, 2 * k}});
  return out;
}

bool in_central_windows(int side, Cell c) {
  // Window k covers rows/cols [2k, 2k+2]; c lies in one iff some valid k
  // satisfies both axes.
  int n = (side - 1) / 2;
  int klo = std::max({0, (c.row - 2 + 1) / 2, (c.col - 2 + 1) / 2});
  for (int k = klo; k < n; ++k) {
    CentralWindow w{k, {2 * k, 2 * k}};
    if (w.contains(c)) return true;
    if (2 * k > c.row || 2 * k > c.col) break;
  }
  return false;
}

bool is_deficient_square(const Region& r) {
  if (r.width() != r.height() || r.width() % 2 == 0) return false;
  if (!r.missing()) return false;
  if (r.missing()->row != r.missing()->col) return false;
  return r.cell_count() == r.width() * r.height() - 1;
}

}  // namespace ltc
