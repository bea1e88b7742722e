// Acceptance suite: one PASS/FAIL line per primary criterion, exit 1 on any failure.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "tangle/closed_form.hpp"
#include "tangle/measures.hpp"
#include "tangle/numerics.hpp"
#include "tangle/random_matrices.hpp"
#include "tangle/rindler.hpp"
#include "tangle/sweep.hpp"

using namespace tangle;

namespace {

const double kHalfRoot = 1.0 / std::sqrt(2.0);
int failures = 0;

void report(bool ok, const std::string& name, const std::string& detail) {
  std::printf("%s  %s  (%s)\n", ok ? "PASS" : "FAIL", name.c_str(), detail.c_str());
  failures += !ok;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c);
  return buf;
}

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  out.back() = hi;
  return out;
}

struct Point {
  double alpha;
  double r;
  TangleReport numeric;
  TangleReport closed;
};

struct Grid {
  std::vector<Point> points;
  double seconds = 0.0;
};

Grid evaluate(Field field, const std::vector<double>& rs) {
  const auto start = std::chrono::steady_clock::now();
  Grid grid;
  for (double a : figure_alphas()) {
    for (double r : rs) {
      const ScenarioParams p{field, a, r, {}};
      grid.points.push_back({a, r, evaluate_numeric(p), evaluate_closed_form(p)});
    }
  }
  grid.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return grid;
}

double max_gap(const Grid& grid) {
  double gap = 0.0;
  for (const auto& p : grid.points) {
    for (std::size_t k = 0; k < 3; ++k) gap = std::max(gap, std::abs(p.numeric.one_tangles[k] - p.closed.one_tangles[k]));
    gap = std::max(gap, std::abs(p.numeric.pi_tangle - p.closed.pi_tangle));
  }
  return gap;
}

double max_two_tangle(const Grid& grid) {
  double worst = 0.0;
  for (const auto& p : grid.points) {
    for (double v : p.numeric.two_tangles) worst = std::max(worst, std::abs(v));
  }
  return worst;
}

double max_ckw_excess(const Grid& grid) {
  double worst = -std::numeric_limits<double>::infinity();
  for (const auto& p : grid.points) {
    for (std::size_t x = 0; x < 3; ++x) {
      double sum = 0.0;
      for (std::size_t k = 0; k < 3; ++k) {
        if (kPairs[k].first == x || kPairs[k].second == x) sum += p.numeric.two_tangles[k] * p.numeric.two_tangles[k];
      }
      worst = std::max(worst, sum - p.numeric.one_tangles[x] * p.numeric.one_tangles[x]);
    }
  }
  return worst;
}

void inertial_baseline() {
  double worst = 0.0;
  for (Field field : {Field::Dirac, Field::Scalar}) {
    for (const auto& rep : {evaluate_numeric({field, kHalfRoot, 0.0, {}}), evaluate_closed_form({field, kHalfRoot, 0.0, {}})}) {
      for (double v : rep.one_tangles) worst = std::max(worst, std::abs(v - 1.0));
      worst = std::max(worst, std::abs(rep.pi_tangle - 1.0));
    }
  }
  report(worst <= 1e-10, "inertial maximal baseline: all one-tangles and pi-tangle equal 1, both fields",
         fmt("max deviation %.2e", worst));
}

void symmetry(const Grid& dirac, const Grid& scalar) {
  double ab = 0.0;
  double swap = 0.0;
  for (const auto* grid : {&dirac, &scalar}) {
    for (const auto& p : grid->points) ab = std::max(ab, std::abs(p.numeric.one_tangles[0] - p.numeric.one_tangles[1]));
  }
  const double lo = 1.0 / std::sqrt(5.0);
  const double hi = 2.0 / std::sqrt(5.0);
  double separation[2] = {0.0, 0.0};
  int f = 0;
  for (const auto* grid : {&dirac, &scalar}) {
    for (const auto& p : grid->points) {
      if (p.alpha >= 0.5) continue;
      const double partner = std::sqrt(1.0 - p.alpha * p.alpha);
      const auto it = std::find_if(grid->points.begin(), grid->points.end(), [&](const Point& q) {
        return std::abs(q.alpha - partner) < 1e-12 && q.r == p.r;
      });
      if (it == grid->points.end()) continue;
      swap = std::max(swap, std::abs(p.numeric.one_tangles[0] - it->numeric.one_tangles[0]));
      if (std::abs(p.alpha - lo) < 1e-12 && std::abs(it->alpha - hi) < 1e-12 && p.r > 0.3) {
        separation[f] = std::max(separation[f], std::abs(p.numeric.one_tangles[2] - it->numeric.one_tangles[2]));
      }
    }
    ++f;
  }
  const bool ok = ab <= 1e-10 && swap <= 1e-10 && separation[0] > 1e-3 && separation[1] > 1e-3;
  report(ok, "symmetry: N_A = N_B, alpha-swap invariance of N_A, N_C separates for (1/sqrt5, 2/sqrt5)",
         fmt("|N_A-N_B| %.2e, swap %.2e, ", ab, swap) +
             fmt("N_C separation dirac %.3e scalar %.3e", separation[0], separation[1]));
}

void dirac_survival(const Grid& dirac) {
  double min_pi = std::numeric_limits<double>::infinity();
  for (const auto& p : dirac.points) {
    if (p.r == std::numbers::pi / 4) min_pi = std::min(min_pi, p.numeric.pi_tangle);
  }
  const auto maximal = evaluate_numeric({Field::Dirac, kHalfRoot, std::numbers::pi / 4, {}});
  // Baseline frozen from the dense pipeline.
  const double baseline = 5.0 / 12.0;
  const bool ok = min_pi > 0.0 && std::abs(maximal.pi_tangle - baseline) <= 1e-6;
  report(ok, "Dirac survival: pi-tangle at r = pi/4 positive for all alpha, maximal case at frozen baseline",
         fmt("min %.6f, alpha=1/sqrt2 gives %.9f vs baseline %.9f", min_pi, maximal.pi_tangle, baseline));
  const double split = fermion_pi_tangle(kHalfRoot, std::numbers::pi / 4, DiracCharlieForm::SplitRoot);
  std::printf("INFO  split-root Charlie form composes to %.6f at r = pi/4; dense value %.6f (differs by %.2e)\n", split,
              maximal.pi_tangle, std::abs(split - maximal.pi_tangle));
}

void scalar_asymptotics(const Grid& scalar) {
  const auto far = evaluate_numeric({Field::Scalar, kHalfRoot, 5.0, {}});
  double min_pi = std::numeric_limits<double>::infinity();
  for (const auto& p : scalar.points) {
    if (p.r == 3.0) min_pi = std::min(min_pi, p.numeric.pi_tangle);
  }
  report(far.one_tangles[2] < 0.02 && min_pi > 0.0,
         "scalar asymptotics: N_C(r=5, alpha=1/sqrt2) < 0.02 and pi-tangle at r = 3 positive for all alpha",
         fmt("N_C(5) = %.6e (n_max %.0f), min pi(3) = %.6f", far.one_tangles[2],
             static_cast<double>(far.truncation->n_max), min_pi));
}

void monotonicity(const Grid& dirac, const Grid& scalar) {
  double dirac_rise = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < dirac.points.size(); ++i) {
    const auto& a = dirac.points[i];
    const auto& b = dirac.points[i + 1];
    if (a.alpha != b.alpha) continue;
    for (std::size_t k = 0; k < 3; ++k) dirac_rise = std::max(dirac_rise, b.numeric.one_tangles[k] - a.numeric.one_tangles[k]);
  }
  double scalar_rise = -std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i + 1 < scalar.points.size(); ++i) {
    const auto& a = scalar.points[i];
    const auto& b = scalar.points[i + 1];
    if (a.alpha != b.alpha) continue;
    for (std::size_t k = 0; k < 3; ++k) scalar_rise = std::max(scalar_rise, b.numeric.one_tangles[k] - a.numeric.one_tangles[k]);
    scalar_rise = std::max(scalar_rise, b.numeric.pi_tangle - a.numeric.pi_tangle);
  }
  report(dirac_rise < 0.0 && scalar_rise <= 1e-9,
         "monotonicity: Dirac one-tangles strictly decreasing, scalar tangles non-increasing",
         fmt("Dirac max step %.3e, scalar max step %.3e", dirac_rise, scalar_rise));
}

void eigensolver_property() {
  Rng rng(20240611);
  std::uniform_int_distribution<std::size_t> dim(2, 64);
  std::uniform_real_distribution<double> value(-1.0, 1.0);
  double worst = 0.0;
  for (int trial = 0; trial < 100; ++trial) {
    std::vector<double> planted(dim(rng));
    for (auto& v : planted) v = value(rng);
    const auto found = eigenvalues_hermitian(planted_hermitian(planted, rng)).eigenvalues;
    std::sort(planted.begin(), planted.end());
    const double scale = std::max(std::abs(planted.front()), std::abs(planted.back()));
    for (std::size_t i = 0; i < planted.size(); ++i) worst = std::max(worst, std::abs(found[i] - planted[i]) / scale);
  }
  report(worst <= 1e-10, "eigensolver: 100 planted spectra, dims 2-64, recovered",
         fmt("max relative error %.2e", worst));
}

void series_and_spectrum() {
  double identity = 0.0;
  for (double r : {0.1, 0.5, 1.0, 2.0}) {
    const double x = std::pow(std::tanh(r), 2);
    const double c2 = std::pow(std::cosh(r), 2);
    const auto plain = sum_series([x](std::size_t n) { return std::pow(x, static_cast<double>(n)); }, 1e-14);
    const auto weighted =
        sum_series([x](std::size_t n) { return (n + 1.0) * std::pow(x, static_cast<double>(n)); }, 1e-14);
    identity = std::max({identity, std::abs(plain.value / c2 - 1.0), std::abs(weighted.value / (c2 * c2) - 1.0)});
  }

  const double alpha = kHalfRoot;
  const double r = 0.8;
  const auto psi = build_boson_state(alpha, r, 1e-10).psi;
  const auto pt = partial_transpose(rho_abc(psi), 2);
  const auto dense = spectrum(multiply(pt, pt.adjoint()).hermitized());
  auto distance = [&](double v) {
    double best = dense.implicit_zeros > 0 ? std::abs(v) : std::numeric_limits<double>::infinity();
    for (double l : dense.eigenvalues) best = std::min(best, std::abs(l - v));
    return best;
  };
  double worst = distance(boson_spectrum_isolated(alpha, r));
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto t = boson_spectrum_term(alpha, r, n);
    worst = std::max({worst, distance(t.lambda_plus), distance(t.lambda_minus)});
  }
  report(identity <= 1e-12 && worst <= 1e-9,
         "geometric series identities and closed-form partial-transpose spectrum (alpha=1/sqrt2, r=0.8, n<=6)",
         fmt("identity rel. error %.2e, max eigenvalue distance %.2e", identity, worst));
}

}  // namespace

int main() {
  inertial_baseline();

  const auto dirac = evaluate(Field::Dirac, linspace(0.0, std::numbers::pi / 4, 50));
  const double dirac_gap = max_gap(dirac);
  report(dirac_gap <= 1e-10 && dirac.seconds < 5.0, "Dirac dual path: 7 alpha x 50 r, closed form vs dense",
         fmt("max |diff| %.2e, %.2f s", dirac_gap, dirac.seconds));

  const auto scalar = evaluate(Field::Scalar, linspace(0.0, 3.0, 40));
  double scalar_excess = -std::numeric_limits<double>::infinity();
  double scalar_gap = 0.0;
  for (const auto& p : scalar.points) {
    const double allowed = std::max(1e-8, 10.0 * p.numeric.truncation->tail_bound);
    double gap = std::abs(p.numeric.pi_tangle - p.closed.pi_tangle);
    for (std::size_t k = 0; k < 3; ++k) gap = std::max(gap, std::abs(p.numeric.one_tangles[k] - p.closed.one_tangles[k]));
    scalar_gap = std::max(scalar_gap, gap);
    scalar_excess = std::max(scalar_excess, gap - allowed);
  }
  report(scalar_excess <= 0.0 && scalar.seconds < 120.0,
         "scalar dual path: 7 alpha x 40 r on [0, 3], adaptive truncation at 1e-10",
         fmt("max |diff| %.2e, %.2f s", scalar_gap, scalar.seconds));

  double forms = 0.0;
  for (double a : figure_alphas()) {
    for (double r : {0.1, 0.3, 0.7, 1.2, 2.0}) {
      forms = std::max(forms, std::abs(boson_one_tangle_inertial(a, r, SeriesForm::Sum) -
                                       boson_one_tangle_inertial(a, r, SeriesForm::Polylog)));
    }
  }
  report(forms <= 1e-10, "scalar inertial one-tangle: series form equals polylog form", fmt("max |diff| %.2e", forms));

  const double dirac_two = max_two_tangle(dirac);
  const double scalar_two = max_two_tangle(scalar);
  report(dirac_two <= 1e-9 && scalar_two <= 1e-8, "two-tangles vanish on both grids",
         fmt("Dirac max %.2e, scalar max %.2e", dirac_two, scalar_two));

  const double ckw = std::max(max_ckw_excess(dirac), max_ckw_excess(scalar));
  report(ckw <= 1e-9, "CKW inequality at every grid point", fmt("max excess %.3e", ckw));

  symmetry(dirac, scalar);
  dirac_survival(dirac);
  scalar_asymptotics(scalar);
  monotonicity(dirac, scalar);
  eigensolver_property();
  series_and_spectrum();

  std::printf("%d failure(s)\n", failures);
  return failures == 0 ? 0 : 1;
}
