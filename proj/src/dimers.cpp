#include "dimers.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/multiprecision/cpp_bin_float.hpp>
#include <unordered_map>

namespace ltc {

namespace {

// Broken-profile DP over cells in row-major order. The mask has one bit per
// column: at cell (r,c), bits >= c say the cell in row r is already covered
// from above, bits < c say the cell in row r+1 is covered by a vertical
// domino placed in row r. Values are vectors indexed by the number of
// diagonal monomers so far (a single slot when not tracking).
std::vector<BigCount> profile_dp(int n, bool monomers,
                                 std::optional<Cell> missing,
                                 bool track_diag) {
  if (n < 1) throw TilingError("BadSide", "board side must be >= 1");
  if (n > 30) throw TilingError("RegionTooLarge", "board side limited to 30");
  size_t slots = track_diag ? n + 1 : 1;
  using State = std::unordered_map<uint32_t, std::vector<BigCount>>;
  State dp;
  dp[0] = std::vector<BigCount>(slots);
  dp[0][0] = 1;

  auto bump = [&](State& next, uint32_t mask, const std::vector<BigCount>& val,
                  int kshift) {
    auto& slot = next[mask];
    if (slot.empty()) slot.assign(slots, 0);
    for (size_t k = 0; k + kshift < slots; ++k)
      if (val[k] != 0) slot[k + kshift] += val[k];
  };

  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) {
      State next;
      bool is_missing = missing && *missing == Cell{r, c};
      bool right_missing = missing && *missing == Cell{r, c + 1};
      for (auto& [mask, val] : dp) {
        bool covered = mask >> c & 1u;
        if (is_missing) {
          if (!covered) bump(next, mask, val, 0);  // stays empty
          continue;  // a vertical domino may not end in the hole
        }
        if (covered) {
          bump(next, mask & ~(1u << c), val, 0);
          continue;
        }
        if (r + 1 < n && !(missing && *missing == Cell{r + 1, c}))
          bump(next, mask | 1u << c, val, 0);  // vertical domino
        if (c + 1 < n && !(mask >> (c + 1) & 1u) && !right_missing)
          bump(next, mask | 1u << (c + 1), val, 0);  // horizontal domino
        if (monomers) bump(next, mask, val, track_diag && r == c ? 1 : 0);
      }
      dp = std::move(next);
    }

  auto it = dp.find(0);
  if (it == dp.end()) return std::vector<BigCount>(slots);
  return it->second;
}

template <typename Float>
Float kasteleyn_eval(int n) {
  Float pi = boost::math::constants::pi<Float>();
  Float acc = 1;
  for (int j = 1; j <= n / 2; ++j)
    for (int k = 1; k <= n / 2; ++k) {
      Float cj = cos(Float(j) * pi / Float(n + 1));
      Float ck = cos(Float(k) * pi / Float(n + 1));
      acc *= 4 * cj * cj + 4 * ck * ck;
    }
  return acc;
}

template <typename Float>
std::optional<BigCount> kasteleyn_round(int n) {
  Float v = kasteleyn_eval<Float>(n);
  Float r = floor(v + Float(0.5));
  if (abs(v - r) > Float(1e-3)) return std::nullopt;
  return r.template convert_to<BigCount>();
}

}  // namespace

BigCount count_dimer_tilings(int n) {
  if (n < 0 || n % 2 != 0)
    throw TilingError("OddSide", "perfect domino tilings need an even side");
  if (n == 0) return 1;
  return profile_dp(n, false, std::nullopt, false)[0];
}

BigCount count_dimer_deficient(int n, int diag_pos) {
  if (n < 1 || n % 2 == 0)
    throw TilingError("EvenSide", "deficient dimer board needs an odd side");
  if (diag_pos < 1 || diag_pos > n)
    throw TilingError("PositionOutOfRange", "diagonal position out of range");
  return profile_dp(n, false, Cell{diag_pos - 1, diag_pos - 1}, false)[0];
}

DiagonalProfile diagonal_profile(int n) {
  DiagonalProfile p;
  p.n = n;
  p.counts = profile_dp(n, true, std::nullopt, true);
  return p;
}

BigCount count_monomer_dimer(int n) {
  return profile_dp(n, true, std::nullopt, false)[0];
}

BigCount capital_n(int m, bool include_k0) {
  if (m < 1) throw TilingError("BadSide", "m must be >= 1");
  DiagonalProfile p = diagonal_profile(2 * m);
  BigCount total = 0;
  for (int k = include_k0 ? 0 : 1; k <= 2 * m; ++k)
    total += (BigCount(1) << k) * p.counts[k];
  return total;
}

BigCount kasteleyn_closed_form(int n) {
  if (n < 2 || n % 2 != 0)
    throw TilingError("OddSide", "closed form needs an even side >= 2");
  using boost::multiprecision::cpp_bin_float_50;
  using boost::multiprecision::cpp_bin_float_100;
  if (auto v = kasteleyn_round<cpp_bin_float_50>(n)) return *v;
  if (auto v = kasteleyn_round<cpp_bin_float_100>(n)) return *v;
  throw TilingError("PrecisionLoss",
                    "product formula did not converge to an integer");
}

}  // namespace ltc
