#include "tangle/measures.hpp"

#include <string>

#include "tangle/errors.hpp"
#include "tangle/numerics.hpp"

namespace tangle {

std::string_view to_string(Method method) { return method == Method::Numeric ? "numeric" : "closed"; }

double clamp_tangle(double value, const Tolerances& tol, std::string_view what) {
  if (value >= 0.0) return value;
  if (value >= -tol.eig) return 0.0;
  throw NumericalError(std::string(what) + " is negative beyond tolerance: " + std::to_string(value));
}

double one_tangle(const DensityMatrix& rho, std::size_t subsystem, const Tolerances& tol) {
  if (rho.layout().size() != 3) throw DomainError("one_tangle: expected a three-party state");
  return clamp_tangle(negativity(rho, subsystem, tol), tol, "one-tangle");
}

double two_tangle(const DensityMatrix& rho, std::pair<std::size_t, std::size_t> pair, const Tolerances& tol) {
  if (rho.layout().size() != 3) throw DomainError("two_tangle: expected a three-party state");
  if (pair.first == pair.second) throw DomainError("two_tangle: pair must name two different parties");
  const auto reduced = partial_trace(rho, {pair.first, pair.second});
  return clamp_tangle(negativity(reduced, 0, tol), tol, "two-tangle");
}

void complete_report(TangleReport& report, const Tolerances& tol) {
  const auto& one = report.one_tangles;
  const auto& two = report.two_tangles;
  // Two-tangles touching each party: A -> AB, AC; B -> AB, BC; C -> AC, BC.
  constexpr std::array<std::array<std::size_t, 2>, 3> touching{{{0, 1}, {0, 2}, {1, 2}}};
  double sum = 0.0;
  for (std::size_t x = 0; x < 3; ++x) {
    const double lhs = one[x] * one[x];
    const double rhs = two[touching[x][0]] * two[touching[x][0]] + two[touching[x][1]] * two[touching[x][1]];
    report.residuals[x] = lhs - rhs;
    report.ckw_ok[x] = lhs + tol.ckw >= rhs;
    sum += report.residuals[x];
  }
  report.pi_tangle = sum / 3.0;
}

TangleReport pi_tangle_numeric(const DensityMatrix& rho, const Tolerances& tol) {
  TangleReport report;
  report.method = Method::Numeric;
  for (std::size_t x = 0; x < 3; ++x) report.one_tangles[x] = one_tangle(rho, x, tol);
  for (std::size_t p = 0; p < 3; ++p) report.two_tangles[p] = two_tangle(rho, kPairs[p], tol);
  complete_report(report, tol);
  return report;
}

TangleReport evaluate_numeric(const ScenarioParams& params, const Tolerances& tol) {
  auto scenario = build_rho_abc(params, tol);
  auto report = pi_tangle_numeric(scenario.rho, tol);
  report.truncation = scenario.truncation;
  return report;
}

}  // namespace tangle
