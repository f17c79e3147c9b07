#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace contsum {

struct VerifyFailure {
  std::string check;
  std::string params;
};

struct VerifySummary {
  std::string suite;
  long long checked = 0;
  std::vector<VerifyFailure> failures;
  std::uint64_t wall_time_ms = 0;

  long long failed() const { return static_cast<long long>(failures.size()); }
  bool ok() const { return failures.empty(); }
};

struct VerifyOptions {
  long long n_max = -1;  // negative: use the suite's default
  long long l_max = -1;
  long long k_max = -1;
  int jobs = 1;
};

// Suite names accepted by run_verify, "all" last.
const std::vector<std::string>& verify_suites();

// Runs one invariant sweep (or every sweep for "all") and reports the number
// of checks executed and any failures, ordered deterministically regardless
// of the worker count.  Throws std::invalid_argument for unknown suites or
// out-of-range bounds.
VerifySummary run_verify(const std::string& suite, const VerifyOptions& opts = {});

}  // namespace contsum
