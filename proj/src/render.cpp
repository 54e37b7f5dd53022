#include "render.hpp"

#include <map>
#include <set>
#include <sstream>

#include "structure.hpp"

namespace ltc {

namespace {

constexpr int kCellPx = 24;

std::map<Cell, int> tile_index_map(const Tiling& t) {
  std::map<Cell, int> m;
  for (size_t i = 0; i < t.placements.size(); ++i)
    for (Cell c : placement_cells(t.placements[i]))
      m[c] = static_cast<int>(i);
  return m;
}

std::set<int> irregular_indices(const Region& region, const Tiling& t) {
  std::set<int> out;
  if (!is_deficient_square(region)) return out;
  try {
    Decomposition d = decompose(region, t);
    std::set<Placement> irr(d.irregular.begin(), d.irregular.end());
    for (size_t i = 0; i < t.placements.size(); ++i)
      if (irr.count(t.placements[i])) out.insert(static_cast<int>(i));
  } catch (const TilingError&) {
    // not decomposable; render everything as regular
  }
  return out;
}

}  // namespace

std::string render_ascii(const Region& region, const Tiling* tiling) {
  std::map<Cell, int> owner;
  if (tiling) owner = tile_index_map(*tiling);
  static const char* letters =
      "abcdefghijklmnopqrstuvwxyzABCDEFGHIJKLMNOPQRSTUVWXYZ";
  std::ostringstream os;
  for (int r = 0; r < region.height(); ++r) {
    for (int c = 0; c < region.width(); ++c) {
      Cell cell{r, c};
      if (region.missing() && *region.missing() == cell)
        os << 'X';
      else if (!region.has(cell))
        os << '.';
      else if (!tiling)
        os << '#';
      else {
        auto it = owner.find(cell);
        os << (it == owner.end() ? '?' : letters[it->second % 52]);
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string render_svg(const Region& region, const Tiling* tiling) {
  std::map<Cell, int> owner;
  std::set<int> crack;
  if (tiling) {
    owner = tile_index_map(*tiling);
    crack = irregular_indices(region, *tiling);
  }
  int w = region.width() * kCellPx, h = region.height() * kCellPx;
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
     << w << "\" height=\"" << h << "\" viewBox=\"0 0 " << w << " " << h
     << "\">\n";
  for (int r = 0; r < region.height(); ++r)
    for (int c = 0; c < region.width(); ++c) {
      Cell cell{r, c};
      const char* fill = nullptr;
      if (region.missing() && *region.missing() == cell)
        fill = "#303030";
      else if (!region.has(cell))
        continue;
      else if (!tiling)
        fill = "#e8e8e8";
      else {
        auto it = owner.find(cell);
        int idx = it == owner.end() ? 0 : it->second;
        fill = crack.count(idx) ? "#9a9a9a"
                                : (idx % 2 ? "#dcdcdc" : "#efefef");
      }
      os << "  <rect x=\"" << c * kCellPx << "\" y=\"" << r * kCellPx
         << "\" width=\"" << kCellPx << "\" height=\"" << kCellPx
         << "\" fill=\"" << fill << "\" stroke=\"#c0c0c0\" stroke-width=\"1\"/>\n";
    }
  // Heavy outline along tile boundaries.
  if (tiling) {
    os << "  <g stroke=\"#404040\" stroke-width=\"2\">\n";
    for (int r = 0; r < region.height(); ++r)
      for (int c = 0; c < region.width(); ++c) {
        auto it = owner.find({r, c});
        if (it == owner.end()) continue;
        int idx = it->second;
        auto other = [&](int rr, int cc) {
          auto jt = owner.find({rr, cc});
          return jt == owner.end() ? -1 : jt->second;
        };
        int x = c * kCellPx, y = r * kCellPx;
        if (other(r - 1, c) != idx)
          os << "    <line x1=\"" << x << "\" y1=\"" << y << "\" x2=\""
             << x + kCellPx << "\" y2=\"" << y << "\"/>\n";
        if (other(r + 1, c) != idx)
          os << "    <line x1=\"" << x << "\" y1=\"" << y + kCellPx
             << "\" x2=\"" << x + kCellPx << "\" y2=\"" << y + kCellPx
             << "\"/>\n";
        if (other(r, c - 1) != idx)
          os << "    <line x1=\"" << x << "\" y1=\"" << y << "\" x2=\"" << x
             << "\" y2=\"" << y + kCellPx << "\"/>\n";
        if (other(r, c + 1) != idx)
          os << "    <line x1=\"" << x + kCellPx << "\" y1=\"" << y
             << "\" x2=\"" << x + kCellPx << "\" y2=\"" << y + kCellPx
             << "\"/>\n";
      }
    os << "  </g>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace ltc
