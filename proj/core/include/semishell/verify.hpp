#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace semishell {

struct VerifyOptions {
  int dim_lo = 2;
  int dim_hi = 6;
  int instances = 200;
  std::uint64_t seed = 42;
};

struct CheckResult {
  std::string key;   // stable anchor, e.g. "propositionsum-5"
  int trials = 0;
  int failures = 0;
  double worst = 0.0;  // worst margin observed (sign convention per check)
  std::string note;
  bool pass() const { return trials > 0 && failures == 0; }
};

// Runs the randomized property battery covering every module's invariants
// on freshly generated instances. Deterministic per options.
std::vector<CheckResult> run_verify(const VerifyOptions& options);

}  // namespace semishell
