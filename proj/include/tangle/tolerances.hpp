#pragma once

#include <cstddef>
#include <numbers>

namespace tangle {

/// Numerical budgets shared by every module. Defaults are the library's
/// reference settings; the CLI exposes each one as a --tol-* override.
struct Tolerances {
  double herm = 1e-12;    // relative Hermiticity defect accepted by the eigensolver
  double eig = 1e-12;     // Jacobi stop (off-diagonal mass / ||M||_F); also the tangle clamp window
  double series = 1e-14;  // relative geometric tail estimate that ends a series
  double ckw = 1e-9;      // slack in the monogamy check
  double eps_norm = 1e-10;  // bosonic truncation norm budget
};

inline constexpr double kDiracRMax = std::numbers::pi / 4.0;
inline constexpr double kScalarRCap = 5.0;
inline constexpr std::size_t kMaxSeriesTerms = 1'000'000;

}  // namespace tangle
