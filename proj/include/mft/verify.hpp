#pragma once

#include <string>
#include <vector>

#include "mft/graph.hpp"
#include "mft/oracle.hpp"

namespace mft {

enum class CheckStatus { kPass, kFail, kSkipped };

const char* to_string(CheckStatus status);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::kPass;
  std::string detail;
};

struct VerifyReport {
  std::vector<CheckResult> checks;

  /// True when no check failed (skipped checks do not count against it).
  bool passed() const;
};

/// Runs every matrix/forest identity on `g`, each compared exactly against
/// brute-force enumeration. Throws GuardExceeded up front if `g` is above the
/// guard, so a returned report is always complete.
VerifyReport verify(const AnyGraph& g, oracle::EnumGuard guard = {});

}  // namespace mft
