#pragma once

#include <optional>
#include <vector>

#include "bigcount.hpp"
#include "geometry.hpp"

namespace ltc {

// Independent counters for domino and domino+monomer tilings of square
// boards. These deliberately share no code with the exact-cover solver so
// the cross-law identities are a true oracle triangle.

// Perfect domino tilings of the n x n board, n even.
BigCount count_dimer_tilings(int n);

// Domino tilings of the n x n board (n odd) minus the diagonal cell at the
// given 1-indexed position.
BigCount count_dimer_deficient(int n, int diag_pos);

// counts[k] = tilings by dominoes and monomers of the n x n board with
// exactly k monomers on the main diagonal (monomers allowed anywhere).
struct DiagonalProfile {
  int n = 0;
  std::vector<BigCount> counts;  // k = 0..n
};

DiagonalProfile diagonal_profile(int n);

// All domino+monomer tilings of the n x n board, with no diagonal tracking.
BigCount count_monomer_dimer(int n);

// Sum of 2^k N_k over the 2m x 2m profile; k starts at 1 or 0.
BigCount capital_n(int m, bool include_k0);

// Classical product formula for count_dimer_tilings(n), evaluated in
// high-precision floating point and rounded.
BigCount kasteleyn_closed_form(int n);

}  // namespace ltc
