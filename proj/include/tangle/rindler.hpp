#pragma once

// Tripartite GHZ-type state alpha|000> + sqrt(1-alpha^2)|111> with Charlie's
// mode re-expressed in Rindler regions I and II, for Dirac and scalar fields.
// Layouts are (A, B, C_I, C_II); region II is always the last factor.

#include <cstddef>
#include <optional>
#include <string_view>

#include "tangle/qudit.hpp"
#include "tangle/tolerances.hpp"

namespace tangle {

enum class Field { Dirac, Scalar };

std::string_view to_string(Field field);
Field parse_field(std::string_view text);

struct ScenarioParams {
  Field field = Field::Dirac;
  double alpha = 0.0;  // amplitude of |000>, real, in [0, 1]
  double r = 0.0;      // acceleration parameter
  /// Scalar only: fixed Fock truncation. Unset selects it adaptively.
  std::optional<std::size_t> n_max;
};

/// Throws DomainError when alpha or r is outside the range for the field.
void validate(const ScenarioParams& params);

struct TruncationReport {
  std::size_t n_max = 0;
  double norm_deficit = 0.0;  // 1 - ||psi||^2 of the truncated state
  double tail_bound = 0.0;    // alpha-independent upper bound on norm_deficit
};

/// Dimensionless r for a proper acceleration a seen on a mode of frequency
/// omega:  Dirac  cos r  = (1 + e^{-2 pi omega c / a})^{-1/2},
///         scalar cosh r = (1 - e^{-2 pi omega c / a})^{-1/2}.
/// a == 0 gives r == 0.
double r_from_acceleration(Field field, double a, double omega, double c);

/// alpha (cos r |0000> + sin r |0011>) + sqrt(1-alpha^2) |1110> on (2,2,2,2).
StateVector build_fermion_state(double alpha, double r);

struct BosonState {
  StateVector psi;
  TruncationReport truncation;
};

/// Tail bound sum_{n > n_max} (n+1) tanh^{2n} r / cosh^4 r, which dominates the
/// norm lost by cutting both Fock ladders at n_max.
double boson_tail_bound(double r, std::size_t n_max);
/// Smallest n_max whose tail bound is within eps_norm.
std::size_t minimal_boson_n_max(double r, double eps_norm);

/// Truncated scalar state on layout (2, 2, n_max+2, n_max+1):
///   (1/cosh r) sum_{n<=n_max} tanh^n r [ alpha |0 0 n n>
///        + sqrt((n+1)(1-alpha^2)) / cosh r |1 1 n+1 n> ].
/// Throws TruncationError if the tail bound exceeds eps_norm.
BosonState build_boson_state(double alpha, double r, std::size_t n_max, double eps_norm = 1e-10);
/// Same, with n_max starting at 16 and doubling until the tail bound clears eps_norm.
BosonState build_boson_state(double alpha, double r, double eps_norm = 1e-10);

/// Reduced state of A, B and C_I: region II traced out.
DensityMatrix rho_abc(const StateVector& psi);

struct Scenario {
  DensityMatrix rho;
  std::optional<TruncationReport> truncation;
};

/// Builds the state for the scenario and traces out region II.
Scenario build_rho_abc(const ScenarioParams& params, const Tolerances& tol = {});

}  // namespace tangle
