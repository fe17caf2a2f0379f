#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace coe {

struct CheckResult {
  std::string group;
  std::string name;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

struct SelftestOptions {
  bool mc = false;
  std::uint64_t seed = 2011;
  std::uint64_t samples = 100'000;
};

/// Replays the worked examples and the n <= 3 invariant suites; with
/// opts.mc also the Monte Carlo checks. Never throws: failures are recorded.
std::vector<CheckResult> run_selftest(const SelftestOptions& opts);

}  // namespace coe
