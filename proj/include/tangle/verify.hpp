#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "tangle/tolerances.hpp"

namespace tangle {

struct CheckResult {
  std::string module;
  std::string name;
  double observed = 0.0;
  double limit = 0.0;
  /// true: pass iff observed <= limit. false: pass iff observed > limit.
  bool upper_bound = true;
  bool passed = false;
};

struct VerifyOptions {
  std::uint64_t seed = 1;
  Tolerances tol;
  /// Replaces the limit of every accuracy check (not the physical thresholds).
  std::optional<double> check_tolerance;
};

struct VerifyReport {
  std::vector<CheckResult> checks;
  /// Informational tables that are reported but never fail the run.
  std::vector<std::string> notes;

  bool passed() const;
  std::string format() const;
};

/// Runs the invariant suite of every module.
VerifyReport cmd_verify(const VerifyOptions& options = {});

}  // namespace tangle
