#pragma once

#include <string>
#include <vector>

namespace ltc {

struct ClaimRecord {
  std::string id;
  std::string expected;
  std::string observed;
  std::string status;  // pass | fail | recorded
};

struct VerificationReport {
  std::vector<ClaimRecord> claims;
  double runtime_seconds = 0;
  int failures() const;
  bool all_passed() const { return failures() == 0; }
};

// Runs the verification suite over the counting, structure, projection and
// propagation claims. The quick suite stops at side 11 for t4 and side 9 for
// t4plus; full additionally computes the side-11 t4plus counts (recorded,
// the literature gives no reference values for them).
VerificationReport run_suite(bool full, int threads);

// Deterministic serialization: claims in suite order, no timestamps or
// runtimes, suitable for byte-compare across runs.
std::string report_to_json(const VerificationReport& report);

}  // namespace ltc
