#include "tangle/rindler.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "tangle/errors.hpp"

namespace tangle {

namespace {

constexpr std::size_t kInitialNMax = 16;
constexpr std::size_t kLargestNMax = std::size_t{1} << 22;

}  // namespace

std::string_view to_string(Field field) { return field == Field::Dirac ? "dirac" : "scalar"; }

Field parse_field(std::string_view text) {
  if (text == "dirac") return Field::Dirac;
  if (text == "scalar") return Field::Scalar;
  throw ValidationError("unknown field '" + std::string(text) + "' (expected dirac or scalar)");
}

void validate(const ScenarioParams& p) {
  if (!(p.alpha >= 0.0 && p.alpha <= 1.0)) throw DomainError("alpha must lie in [0, 1], got " + std::to_string(p.alpha));
  if (!(p.r >= 0.0)) throw DomainError("r must be nonnegative, got " + std::to_string(p.r));
  if (p.field == Field::Dirac && p.r > kDiracRMax * (1.0 + 1e-15)) {
    throw DomainError("Dirac r must lie in [0, pi/4], got " + std::to_string(p.r));
  }
  if (p.field == Field::Scalar && p.r > kScalarRCap) {
    throw NumericalError("scalar r=" + std::to_string(p.r) + " is beyond the supported cap r <= 5");
  }
}

double r_from_acceleration(Field field, double a, double omega, double c) {
  if (!(omega > 0.0) || !(c > 0.0)) throw DomainError("r_from_acceleration: omega and c must be positive");
  if (a == 0.0) return 0.0;
  if (!(a > 0.0)) throw DomainError("r_from_acceleration: acceleration must be nonnegative");
  // Both maps reduce to a closed form in e^{-x/2}, x = 2 pi omega c / a:
  // Dirac tan^2 r = e^{-x}, scalar tanh^2 r = e^{-x}.
  const double root = std::exp(-std::numbers::pi * omega * c / a);
  return field == Field::Dirac ? std::atan(root) : std::atanh(root);
}

StateVector build_fermion_state(double alpha, double r) {
  validate({Field::Dirac, alpha, r, {}});
  const SubsystemLayout layout{2, 2, 2, 2};
  const double beta = std::sqrt(1.0 - alpha * alpha);
  return StateVector::from_amplitudes(layout, {
                                                  {0b0000, alpha * std::cos(r)},
                                                  {0b0011, alpha * std::sin(r)},
                                                  {0b1110, beta},
                                              });
}

double boson_tail_bound(double r, std::size_t n_max) {
  const double x = std::pow(std::tanh(r), 2);
  const double n = static_cast<double>(n_max);
  // sum_{k>n} (k+1) x^k (1-x)^2 = x^{n+1} ((n+2) - (n+1) x)
  return std::pow(x, n + 1.0) * ((n + 2.0) - (n + 1.0) * x);
}

std::size_t minimal_boson_n_max(double r, double eps_norm) {
  const double x = std::pow(std::tanh(r), 2);
  double power = x;  // x^{n+1}
  for (std::size_t n = 0; n <= kLargestNMax; ++n) {
    const double nd = static_cast<double>(n);
    if (power * ((nd + 2.0) - (nd + 1.0) * x) <= eps_norm) return n;
    power *= x;
  }
  throw TruncationError("no Fock truncation up to " + std::to_string(kLargestNMax) + " reaches the norm budget",
                        kLargestNMax);
}

BosonState build_boson_state(double alpha, double r, std::size_t n_max, double eps_norm) {
  validate({Field::Scalar, alpha, r, n_max});
  const double tail = boson_tail_bound(r, n_max);
  if (tail > eps_norm) {
    const auto needed = minimal_boson_n_max(r, eps_norm);
    throw TruncationError("n_max=" + std::to_string(n_max) + " leaves tail " + std::to_string(tail) +
                              " above budget; need n_max >= " + std::to_string(needed),
                          needed);
  }

  const double beta = std::sqrt(1.0 - alpha * alpha);
  const double ch = std::cosh(r);
  const double th = std::tanh(r);
  const SubsystemLayout layout{2, 2, n_max + 2, n_max + 1};

  std::vector<Amplitude> amps;
  amps.reserve(2 * (n_max + 1));
  double th_n = 1.0;  // tanh^n r
  for (std::size_t n = 0; n <= n_max; ++n) {
    const double weight = th_n / ch;
    const Index vacuum[] = {0, 0, n, n};
    const Index excited[] = {1, 1, n + 1, n};
    amps.push_back({layout.flatten(vacuum), alpha * weight});
    amps.push_back({layout.flatten(excited), weight * std::sqrt(static_cast<double>(n + 1)) * beta / ch});
    th_n *= th;
  }

  // Exact lost norm: alpha^2 x^{n+1} + beta^2 x^{n+1} ((n+2) - (n+1) x).
  const double x = th * th;
  const double xn1 = std::pow(x, static_cast<double>(n_max) + 1.0);
  const double deficit = alpha * alpha * xn1 + beta * beta * tail;
  return {StateVector::from_amplitudes(layout, std::move(amps)), {n_max, deficit, tail}};
}

BosonState build_boson_state(double alpha, double r, double eps_norm) {
  validate({Field::Scalar, alpha, r, {}});
  std::size_t n_max = kInitialNMax;
  while (boson_tail_bound(r, n_max) > eps_norm) {
    if (n_max >= kLargestNMax) {
      throw TruncationError("adaptive truncation exceeded n_max=" + std::to_string(kLargestNMax),
                            minimal_boson_n_max(r, eps_norm));
    }
    n_max *= 2;
  }
  return build_boson_state(alpha, r, n_max, eps_norm);
}

DensityMatrix rho_abc(const StateVector& psi) {
  if (psi.layout().size() != 4) throw DomainError("rho_abc: expected a four-factor (A, B, C_I, C_II) state");
  return partial_trace(psi, {0, 1, 2});
}

Scenario build_rho_abc(const ScenarioParams& params, const Tolerances& tol) {
  validate(params);
  if (params.field == Field::Dirac) return {rho_abc(build_fermion_state(params.alpha, params.r)), std::nullopt};
  auto state = params.n_max ? build_boson_state(params.alpha, params.r, *params.n_max, tol.eps_norm)
                            : build_boson_state(params.alpha, params.r, tol.eps_norm);
  return {rho_abc(state.psi), state.truncation};
}

}  // namespace tangle
