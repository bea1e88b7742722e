#pragma once

// Analytic one-tangles and pi-tangles for the Rindler-transformed GHZ-type
// state. Every function here has a brute-force counterpart in measures.hpp
// and the two are expected to agree (exactly for Dirac, up to truncation
// for scalar fields).

#include <cstddef>

#include "tangle/measures.hpp"
#include "tangle/rindler.hpp"
#include "tangle/tolerances.hpp"

namespace tangle {

/// Accelerated-party one-tangle variants for the Dirac field.
enum class DiracCharlieForm {
  /// alpha (sqrt(alpha^2 sin^4 r + 4 (1-alpha^2) cos^2 r) - alpha sin^2 r);
  /// the negative eigenvalue of the 2x2 block of rho^{T_C}. Default.
  BlockSpectrum,
  /// alpha sqrt(1-alpha^2) cos r - alpha^2 sin^2 r
  ///   + alpha sqrt((1-alpha^2) cos^2 r + alpha^2 sin^4 r).
  /// Matches BlockSpectrum only at r = 0; kept for comparison.
  SplitRoot,
};

/// Cross-term coefficient inside the square root of the scalar N_C(AB) series.
enum class ScalarCharlieForm {
  ShiftTwo,  // 2 alpha^2 (1-alpha^2) (n+2) / cosh^2 r. Default.
  ShiftOne,  // 2 alpha^2 (1-alpha^2) (n+1) / cosh^2 r; kept for comparison.
};

enum class SeriesForm { Sum, Polylog };

/// N_A(BC) = N_B(AC) = 2 alpha sqrt(1-alpha^2) cos r.
double fermion_one_tangle_inertial(double alpha, double r);
double fermion_one_tangle_charlie(double alpha, double r, DiracCharlieForm form = DiracCharlieForm::BlockSpectrum);
/// (2 N_A(BC)^2 + N_C(AB)^2) / 3; the two-tangles vanish identically.
double fermion_pi_tangle(double alpha, double r, DiracCharlieForm form = DiracCharlieForm::BlockSpectrum);

/// N_A(BC) = N_B(AC) for the scalar field, either as
///   2 alpha sqrt(1-alpha^2) / cosh^3 r  sum_n sqrt(n+1) tanh^{2n} r       (Sum)
/// or
///   2 alpha sqrt(1-alpha^2) / (cosh r sinh^2 r)  Li_{-1/2}(tanh^2 r)     (Polylog).
double boson_one_tangle_inertial(double alpha, double r, SeriesForm form = SeriesForm::Sum,
                                 const Tolerances& tol = {});

/// Eigenvalue data of the n-th 2x2 block of (rho^{T_C})(rho^{T_C})^dagger.
struct SpectrumTerm {
  std::size_t n = 0;
  double xi = 0.0;
  double mu = 0.0;
  double eta = 0.0;
  double lambda_plus = 0.0;   // (xi + sqrt(eta + mu)) / 2
  double lambda_minus = 0.0;  // (xi - sqrt(eta + mu)) / 2
};

SpectrumTerm boson_spectrum_term(double alpha, double r, std::size_t n);
/// The isolated eigenvalue alpha^4 / cosh^4 r of the same product.
double boson_spectrum_isolated(double alpha, double r);

/// N_C(AB) = -1 + alpha^2/cosh^2 r
///   + sum_n tanh^{2n} r / cosh^2 r * sqrt(n^2 (1-alpha^2)^2 / sinh^4 r
///                                        + 2 alpha^2 (1-alpha^2)(n+2) / cosh^2 r
///                                        + alpha^4 tanh^4 r).
double boson_one_tangle_charlie(double alpha, double r, ScalarCharlieForm form = ScalarCharlieForm::ShiftTwo,
                                const Tolerances& tol = {});

double boson_pi_tangle(double alpha, double r, const Tolerances& tol = {});

/// Closed-form counterpart of evaluate_numeric.
TangleReport evaluate_closed_form(const ScenarioParams& params, const Tolerances& tol = {});

}  // namespace tangle
