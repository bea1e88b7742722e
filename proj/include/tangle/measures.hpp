#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>

#include "tangle/qudit.hpp"
#include "tangle/rindler.hpp"
#include "tangle/tolerances.hpp"

namespace tangle {

enum class Method { Numeric, ClosedForm };

std::string_view to_string(Method method);

/// Entanglement bookkeeping of a tripartite state. Parties are indexed
/// A = 0, B = 1, C = 2; pairs are ordered AB, AC, BC.
struct TangleReport {
  std::array<double, 3> one_tangles{};  // N_A(BC), N_B(AC), N_C(AB)
  std::array<double, 3> two_tangles{};  // N_AB, N_AC, N_BC
  std::array<double, 3> residuals{};    // pi_A, pi_B, pi_C
  double pi_tangle = 0.0;
  std::array<bool, 3> ckw_ok{};
  Method method = Method::Numeric;
  std::optional<TruncationReport> truncation;

  bool all_ckw_ok() const { return ckw_ok[0] && ckw_ok[1] && ckw_ok[2]; }
};

inline constexpr std::array<std::pair<std::size_t, std::size_t>, 3> kPairs{{{0, 1}, {0, 2}, {1, 2}}};

/// Values within tol.eig below zero become exactly 0; anything more
/// negative is a NumericalError.
double clamp_tangle(double value, const Tolerances& tol, std::string_view what);

/// Negativity across the subsystem | rest bipartition of a three-party state.
double one_tangle(const DensityMatrix& rho, std::size_t subsystem, const Tolerances& tol = {});

/// Negativity of the two-party reduction onto `pair`.
double two_tangle(const DensityMatrix& rho, std::pair<std::size_t, std::size_t> pair, const Tolerances& tol = {});

/// Fills residuals, pi_tangle and ckw_ok from the one- and two-tangles:
/// pi_X = N_X(YZ)^2 - N_XY^2 - N_XZ^2, pi = (pi_A + pi_B + pi_C) / 3.
void complete_report(TangleReport& report, const Tolerances& tol = {});

TangleReport pi_tangle_numeric(const DensityMatrix& rho, const Tolerances& tol = {});

/// Full brute-force pipeline: build the state, trace region II, measure.
TangleReport evaluate_numeric(const ScenarioParams& params, const Tolerances& tol = {});

}  // namespace tangle
