#include "tangle/closed_form.hpp"

#include <cmath>
#include <string>

#include "tangle/errors.hpp"
#include "tangle/numerics.hpp"

namespace tangle {

namespace {

// Below this the sinh r denominators are replaced by their r -> 0 limits.
constexpr double kSmallR = 1e-8;

double inertial_prefactor(double alpha) { return 2.0 * alpha * std::sqrt(1.0 - alpha * alpha); }

}  // namespace

double fermion_one_tangle_inertial(double alpha, double r) {
  validate({Field::Dirac, alpha, r, {}});
  return inertial_prefactor(alpha) * std::cos(r);
}

double fermion_one_tangle_charlie(double alpha, double r, DiracCharlieForm form) {
  validate({Field::Dirac, alpha, r, {}});
  const double a2 = alpha * alpha;
  const double b2 = 1.0 - a2;
  const double c = std::cos(r);
  const double s2 = std::pow(std::sin(r), 2);
  switch (form) {
    case DiracCharlieForm::BlockSpectrum:
      return alpha * (std::sqrt(a2 * s2 * s2 + 4.0 * b2 * c * c) - alpha * s2);
    case DiracCharlieForm::SplitRoot:
      return alpha * std::sqrt(b2) * c - a2 * s2 + alpha * std::sqrt(b2 * c * c + a2 * s2 * s2);
  }
  throw DomainError("fermion_one_tangle_charlie: unknown form");
}

double fermion_pi_tangle(double alpha, double r, DiracCharlieForm form) {
  const double inertial = fermion_one_tangle_inertial(alpha, r);
  const double charlie = fermion_one_tangle_charlie(alpha, r, form);
  return (2.0 * inertial * inertial + charlie * charlie) / 3.0;
}

double boson_one_tangle_inertial(double alpha, double r, SeriesForm form, const Tolerances& tol) {
  validate({Field::Scalar, alpha, r, {}});
  const double pre = inertial_prefactor(alpha);
  const double x = std::pow(std::tanh(r), 2);
  const double ch = std::cosh(r);
  if (form == SeriesForm::Sum) {
    const auto series = sum_series(
        [x](std::size_t n) { return std::sqrt(static_cast<double>(n + 1)) * std::pow(x, static_cast<double>(n)); },
        tol.series);
    return pre * series.value / (ch * ch * ch);
  }
  if (r < kSmallR) return pre;
  return pre * polylog_neg_half(x, tol.series) / (ch * std::pow(std::sinh(r), 2));
}

SpectrumTerm boson_spectrum_term(double alpha, double r, std::size_t n) {
  validate({Field::Scalar, alpha, r, {}});
  if (!(r > 0.0)) throw DomainError("boson_spectrum_term: requires r > 0");
  const double a2 = alpha * alpha;
  const double b2 = 1.0 - a2;
  const double nd = static_cast<double>(n);
  const double t2 = std::pow(std::tanh(r), 2);
  const double c2 = std::pow(std::cosh(r), 2);
  const double s2 = std::pow(std::sinh(r), 2);
  const double t4n = std::pow(t2, 2.0 * nd);   // tanh^{4n}
  const double t8n = t4n * t4n;                // tanh^{8n}
  const double c4 = c2 * c2;
  const double c8 = c4 * c4;

  SpectrumTerm term;
  term.n = n;
  term.xi = t4n / c4 * (nd * nd * b2 * b2 / (s2 * s2) + 2.0 * a2 * b2 * (nd + 1.0) / c2 + a2 * a2 * t2 * t2);
  term.mu = 4.0 * a2 * b2 * (nd + 1.0) / c2 * t8n / c8 * std::pow(nd * b2 / s2 + a2 * t2, 2);
  term.eta = t8n / c8 * std::pow(nd * nd * b2 * b2 / (s2 * s2) - a2 * a2 * t2 * t2, 2);
  const double root = std::sqrt(term.eta + term.mu);
  term.lambda_plus = 0.5 * (term.xi + root);
  term.lambda_minus = 0.5 * (term.xi - root);
  return term;
}

double boson_spectrum_isolated(double alpha, double r) {
  validate({Field::Scalar, alpha, r, {}});
  return std::pow(alpha, 4) / std::pow(std::cosh(r), 4);
}

double boson_one_tangle_charlie(double alpha, double r, ScalarCharlieForm form, const Tolerances& tol) {
  validate({Field::Scalar, alpha, r, {}});
  if (r < kSmallR) return inertial_prefactor(alpha);
  const double a2 = alpha * alpha;
  const double b2 = 1.0 - a2;
  const double th = std::tanh(r);
  const double t2 = th * th;
  const double c2 = std::pow(std::cosh(r), 2);
  const double shift = form == ScalarCharlieForm::ShiftTwo ? 2.0 : 1.0;

  // tanh^{2n}/cosh^2 * sqrt(...) with the n^2/sinh^4 piece folded into the
  // prefactor, i.e. tanh^{2n} n / sinh^2 = n tanh^{2n-2} / cosh^2, so small r
  // does not divide by a vanishing sinh.
  auto term = [&](std::size_t n) {
    const double nd = static_cast<double>(n);
    const double t2n = std::pow(t2, nd);
    const double ladder = n == 0 ? 0.0 : nd * b2 * std::pow(t2, nd - 1.0) / c2;
    const double rest = t2n * t2n * (2.0 * a2 * b2 * (nd + shift) / c2 + a2 * a2 * t2 * t2);
    return std::sqrt(ladder * ladder + rest) / c2;
  };
  const auto series = sum_series(term, tol.series);
  return -1.0 + a2 / c2 + series.value;
}

double boson_pi_tangle(double alpha, double r, const Tolerances& tol) {
  const double inertial = boson_one_tangle_inertial(alpha, r, SeriesForm::Sum, tol);
  const double charlie = boson_one_tangle_charlie(alpha, r, ScalarCharlieForm::ShiftTwo, tol);
  return (2.0 * inertial * inertial + charlie * charlie) / 3.0;
}

TangleReport evaluate_closed_form(const ScenarioParams& params, const Tolerances& tol) {
  validate(params);
  TangleReport report;
  report.method = Method::ClosedForm;
  double inertial = 0.0;
  double charlie = 0.0;
  if (params.field == Field::Dirac) {
    inertial = fermion_one_tangle_inertial(params.alpha, params.r);
    charlie = fermion_one_tangle_charlie(params.alpha, params.r);
  } else {
    inertial = boson_one_tangle_inertial(params.alpha, params.r, SeriesForm::Sum, tol);
    charlie = boson_one_tangle_charlie(params.alpha, params.r, ScalarCharlieForm::ShiftTwo, tol);
  }
  report.one_tangles = {inertial, inertial, clamp_tangle(charlie, tol, "N_C(AB)")};
  report.two_tangles = {0.0, 0.0, 0.0};
  complete_report(report, tol);
  return report;
}

}  // namespace tangle
