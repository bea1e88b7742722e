#include "tangle/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <exception>
#include <limits>
#include <numbers>
#include <sstream>

#include "tangle/closed_form.hpp"
#include "tangle/measures.hpp"
#include "tangle/numerics.hpp"
#include "tangle/random_matrices.hpp"
#include "tangle/rindler.hpp"
#include "tangle/sweep.hpp"

namespace tangle {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

class Suite {
 public:
  Suite(VerifyReport& report, const VerifyOptions& options) : report_(report), options_(options) {}

  const Tolerances& tol() const { return options_.tol; }

  /// Accuracy check: observed <= limit, limit replaceable from the command line.
  void accuracy(const char* module, const char* name, double observed, double limit) {
    record(module, name, observed, options_.check_tolerance.value_or(limit), true);
  }
  /// Physical threshold or exact count: observed <= limit, never overridden.
  void at_most(const char* module, const char* name, double observed, double limit) {
    record(module, name, observed, limit, true);
  }
  void above(const char* module, const char* name, double observed, double limit) {
    record(module, name, observed, limit, false);
  }

  template <typename Body>
  void guarded(const char* module, const char* name, Body&& body) {
    try {
      body();
    } catch (const std::exception& e) {
      record(module, (std::string(name) + " [error: " + e.what() + "]").c_str(), kNaN, 0.0, true);
    }
  }

  void note(std::string line) { report_.notes.push_back(std::move(line)); }

 private:
  void record(const char* module, const std::string& name, double observed, double limit, bool upper) {
    const bool ok = upper ? observed <= limit : observed > limit;
    report_.checks.push_back({module, name, observed, limit, upper, ok});
  }

  VerifyReport& report_;
  const VerifyOptions& options_;
};

std::vector<double> linspace(double lo, double hi, std::size_t n) {
  std::vector<double> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(n - 1);
  out.back() = hi;
  return out;
}

double min_eigenvalue(const DensityMatrix& m, const Tolerances& tol) {
  const auto spec = spectrum(m, tol);
  double lo = spec.implicit_zeros > 0 ? 0.0 : std::numeric_limits<double>::infinity();
  if (!spec.eigenvalues.empty()) lo = std::min(lo, spec.eigenvalues.front());
  return lo;
}

double max_entry_difference(const DensityMatrix& a, const DensityMatrix& b) {
  double d = 0.0;
  for (const auto& e : a.entries()) d = std::max(d, std::abs(e.value - b.at(e.row, e.col)));
  for (const auto& e : b.entries()) d = std::max(d, std::abs(e.value - a.at(e.row, e.col)));
  return d;
}

// ---------------------------------------------------------------------------

void qudit_checks(Suite& s, Rng& rng) {
  const char* m = "qudit_algebra";
  s.guarded(m, "flatten/unflatten round trip", [&] {
    std::uniform_int_distribution<Index> dim(1, 5);
    std::uniform_int_distribution<std::size_t> count(1, 4);
    double mismatches = 0;
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<Index> dims(count(rng));
      for (auto& d : dims) d = dim(rng);
      const SubsystemLayout layout(dims);
      for (Index i = 0; i < layout.total(); ++i) mismatches += layout.flatten(layout.unflatten(i)) != i;
    }
    s.at_most(m, "flatten/unflatten round trip (mismatches)", mismatches, 0.0);
  });

  s.guarded(m, "single-party reductions of pure states are unit-trace PSD", [&] {
    const SubsystemLayout layout{2, 3, 2};
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const auto psi = random_pure_state(layout, rng);
      for (std::size_t k = 0; k < 3; ++k) {
        const std::size_t keep[] = {k};
        const auto reduced = partial_trace(psi, keep);
        worst = std::max({worst, std::abs(reduced.trace().real() - 1.0), -min_eigenvalue(reduced, s.tol())});
      }
    }
    s.accuracy(m, "single-party reductions of pure states are unit-trace PSD", worst, 1e-12);
  });

  s.guarded(m, "partial transpose preserves Hermiticity, trace and spectrum sum", [&] {
    const SubsystemLayout layout{2, 2, 3};
    double worst = 0.0;
    double involution = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const auto rho = random_density_matrix(layout, 3, rng);
      for (std::size_t k = 0; k < 3; ++k) {
        const auto pt = partial_transpose(rho, k);
        const auto spec = spectrum(pt, s.tol());
        double sum = 0.0;
        for (double l : spec.eigenvalues) sum += l;
        worst = std::max({worst, pt.hermiticity_defect(), std::abs(pt.trace() - rho.trace()),
                          std::abs(sum - rho.trace().real())});
        involution = std::max(involution, max_entry_difference(partial_transpose(pt, k), rho));
      }
    }
    s.accuracy(m, "partial transpose preserves Hermiticity, trace and spectrum sum", worst, 1e-12);
    s.at_most(m, "partial transpose applied twice is the identity (max entry change)", involution, 0.0);
  });

  s.guarded(m, "pure product states are PPT", [&] {
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const auto psi = kron(kron(random_pure_state(SubsystemLayout{2}, rng), random_pure_state(SubsystemLayout{3}, rng)),
                            random_pure_state(SubsystemLayout{2}, rng));
      const auto rho = outer(psi);
      for (std::size_t k = 0; k < 3; ++k) worst = std::max(worst, std::abs(negativity(rho, k, s.tol())));
    }
    s.accuracy(m, "pure product states are PPT (max |negativity|)", worst, 1e-12);
  });

  s.guarded(m, "successive partial traces compose", [&] {
    double worst = 0.0;
    for (int trial = 0; trial < 5; ++trial) {
      const auto rho = random_density_matrix(SubsystemLayout{2, 3, 2, 2}, 2, rng);
      const auto stepwise = partial_trace(partial_trace(rho, {0, 1, 2}), {0, 1});
      const auto direct = partial_trace(rho, {0, 1});
      worst = std::max(worst, max_entry_difference(stepwise, direct));
    }
    s.accuracy(m, "successive partial traces compose", worst, 1e-14);
  });
}

void numerics_checks(Suite& s, Rng& rng) {
  const char* m = "hermitian_numerics";
  s.guarded(m, "planted spectra recovered", [&] {
    std::uniform_int_distribution<std::size_t> dim(2, 64);
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    double worst = 0.0;
    double residual = 0.0;
    for (int trial = 0; trial < 100; ++trial) {
      std::vector<double> planted(dim(rng));
      for (auto& v : planted) v = value(rng);
      const auto matrix = planted_hermitian(planted, rng);
      const auto result = eigenvalues_hermitian(matrix, s.tol());
      std::sort(planted.begin(), planted.end());
      const double scale = std::max(1.0, std::abs(planted.front()) + std::abs(planted.back()));
      for (std::size_t i = 0; i < planted.size(); ++i) {
        worst = std::max(worst, std::abs(result.eigenvalues[i] - planted[i]) / scale);
      }
      residual = std::max(residual, result.residual / matrix.max_abs());
    }
    s.accuracy(m, "planted spectra recovered, 100 matrices dim 2-64 (max relative error)", worst, 1e-10);
    s.accuracy(m, "eigenpair residual / max entry", residual, 1e-10);
  });

  s.guarded(m, "trace norm dominates |trace|", [&] {
    double worst = -std::numeric_limits<double>::infinity();
    std::uniform_real_distribution<double> value(-1.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
      std::vector<double> planted(8);
      for (auto& v : planted) v = value(rng);
      const auto matrix = planted_hermitian(planted, rng);
      Complex tr{};
      for (std::size_t i = 0; i < matrix.size(); ++i) tr += matrix(i, i);
      worst = std::max(worst, std::abs(tr) - trace_norm(matrix, s.tol()));
    }
    s.accuracy(m, "|tr M| - ||M||_1 (must not be positive)", worst, 1e-12);
  });

  s.guarded(m, "negativity independent of which side is transposed", [&] {
    double worst = 0.0;
    for (int trial = 0; trial < 10; ++trial) {
      const auto rho = random_density_matrix(SubsystemLayout{2, 2, 2}, 2, rng);
      const double over_a = negativity(rho, 0, s.tol());
      const auto pt_bc = partial_transpose(partial_transpose(rho, 1), 2);
      const double over_bc = trace_norm(pt_bc, s.tol()) - rho.trace().real();
      worst = std::max(worst, std::abs(over_a - over_bc));
    }
    s.accuracy(m, "negativity over A vs over BC", worst, 1e-12);
  });

  s.guarded(m, "geometric series identities", [&] {
    double worst = 0.0;
    for (double r : {0.1, 0.5, 1.0, 2.0}) {
      const double x = std::pow(std::tanh(r), 2);
      const double c2 = std::pow(std::cosh(r), 2);
      const auto plain = sum_series([x](std::size_t n) { return std::pow(x, static_cast<double>(n)); }, s.tol().series);
      const auto weighted = sum_series(
          [x](std::size_t n) { return (static_cast<double>(n) + 1.0) * std::pow(x, static_cast<double>(n)); },
          s.tol().series);
      worst = std::max({worst, std::abs(plain.value / c2 - 1.0), std::abs(weighted.value / (c2 * c2) - 1.0)});
    }
    s.accuracy(m, "sum tanh^2n r = cosh^2 r and sum (n+1) tanh^2n r = cosh^4 r (relative)", worst, 1e-12);
  });

  s.guarded(m, "Li_{-1/2} against term-by-term summation", [&] {
    double worst = 0.0;
    for (double x : {0.1, 0.5, 0.9}) {
      double direct = 0.0;
      double power = 1.0;
      for (int k = 1; k < 20000; ++k) {
        power *= x;
        direct += std::sqrt(static_cast<double>(k)) * power;
      }
      worst = std::max(worst, std::abs(polylog_neg_half(x) - direct) / direct);
    }
    s.accuracy(m, "Li_{-1/2}(x) vs direct partial sums, x in {0.1, 0.5, 0.9} (relative)", worst, 1e-10);
  });
}

void rindler_checks(Suite& s) {
  const char* m = "rindler_states";
  const auto alphas = figure_alphas();

  s.guarded(m, "fermion state norm", [&] {
    double worst = 0.0;
    for (double a : alphas) {
      for (double r : linspace(0.0, kDiracRMax, 9)) worst = std::max(worst, std::abs(build_fermion_state(a, r).squared_norm() - 1.0));
    }
    s.accuracy(m, "fermion state norm deviation", worst, 1e-15);
  });

  s.guarded(m, "boson truncation bookkeeping", [&] {
    double mismatch = 0.0;
    double increases = 0.0;
    double trace_gap = 0.0;
    for (double r : {0.3, 1.0, 2.0}) {
      double previous = std::numeric_limits<double>::infinity();
      const auto n0 = minimal_boson_n_max(r, 1e-6);
      for (std::size_t n = n0; n < n0 + 40; n += 8) {
        const auto state = build_boson_state(1.0 / std::sqrt(5.0), r, n, 1e-6);
        mismatch = std::max(mismatch, std::abs((1.0 - state.psi.squared_norm()) - state.truncation.norm_deficit));
        increases += state.truncation.norm_deficit > previous;
        previous = state.truncation.norm_deficit;
        trace_gap = std::max(trace_gap, std::abs(rho_abc(state.psi).trace().real() - state.psi.squared_norm()));
      }
    }
    s.accuracy(m, "boson norm deficit vs analytic tail", mismatch, 1e-13);
    s.at_most(m, "boson norm deficit increases with n_max (count)", increases, 0.0);
    s.accuracy(m, "rho_abc trace vs state norm", trace_gap, 1e-12);
  });

  s.guarded(m, "alpha in {0, 1} gives a product across A|BC", [&] {
    double worst = 0.0;
    for (double a : {0.0, 1.0}) {
      for (double r : {0.0, 0.4, kDiracRMax}) {
        worst = std::max(worst, evaluate_numeric({Field::Dirac, a, r, {}}, s.tol()).one_tangles[0]);
      }
      for (double r : {0.0, 0.8, 2.0}) {
        worst = std::max(worst, evaluate_numeric({Field::Scalar, a, r, {}}, s.tol()).one_tangles[0]);
      }
    }
    s.accuracy(m, "N_A(BC) at alpha in {0, 1}", worst, 1e-12);
  });

  s.guarded(m, "Dirac vacuum embedding", [&] {
    double worst = 0.0;
    for (double r : linspace(0.0, kDiracRMax, 7)) {
      const auto psi = build_fermion_state(1.0, r);
      worst = std::max({worst, std::abs(psi.amplitude(0b0000) - std::cos(r)), std::abs(psi.amplitude(0b0011) - std::sin(r)),
                        std::abs(psi.squared_norm() - std::norm(psi.amplitude(0b0000)) - std::norm(psi.amplitude(0b0011)))});
    }
    s.accuracy(m, "alpha = 1 restricts to cos r |00> + sin r |11> on Charlie", worst, 1e-15);
  });
}

struct GridPoint {
  double alpha;
  double r;
  TangleReport numeric;
  TangleReport closed;
};

std::vector<GridPoint> evaluate_grid(Field field, const std::vector<double>& rs, const Tolerances& tol) {
  std::vector<GridPoint> out;
  for (double a : figure_alphas()) {
    for (double r : rs) {
      const ScenarioParams p{field, a, r, {}};
      out.push_back({a, r, evaluate_numeric(p, tol), evaluate_closed_form(p, tol)});
    }
  }
  return out;
}

void measure_and_closed_form_checks(Suite& s) {
  const char* mm = "tangle_measures";
  const char* mc = "closed_form";
  const auto& tol = s.tol();
  const auto dirac_rs = linspace(0.0, kDiracRMax, 12);
  const auto scalar_rs = linspace(0.0, 3.0, 10);

  s.guarded(mm, "grid evaluation", [&] {
    const auto dirac = evaluate_grid(Field::Dirac, dirac_rs, tol);
    const auto scalar = evaluate_grid(Field::Scalar, scalar_rs, tol);

    double symmetry = 0.0;
    double ckw = -std::numeric_limits<double>::infinity();
    double dirac_gap = 0.0;
    double scalar_gap = 0.0;
    double max_tail = 0.0;
    for (const auto* grid : {&dirac, &scalar}) {
      for (const auto& pt : *grid) {
        symmetry = std::max(symmetry, std::abs(pt.numeric.one_tangles[0] - pt.numeric.one_tangles[1]));
        const auto& one = pt.numeric.one_tangles;
        const auto& two = pt.numeric.two_tangles;
        ckw = std::max({ckw, two[0] * two[0] + two[1] * two[1] - one[0] * one[0],
                        two[0] * two[0] + two[2] * two[2] - one[1] * one[1],
                        two[1] * two[1] + two[2] * two[2] - one[2] * one[2]});
      }
    }
    for (const auto& pt : dirac) {
      for (std::size_t k = 0; k < 3; ++k) dirac_gap = std::max(dirac_gap, std::abs(pt.numeric.one_tangles[k] - pt.closed.one_tangles[k]));
      dirac_gap = std::max(dirac_gap, std::abs(pt.numeric.pi_tangle - pt.closed.pi_tangle));
    }
    for (const auto& pt : scalar) {
      for (std::size_t k = 0; k < 3; ++k) scalar_gap = std::max(scalar_gap, std::abs(pt.numeric.one_tangles[k] - pt.closed.one_tangles[k]));
      scalar_gap = std::max(scalar_gap, std::abs(pt.numeric.pi_tangle - pt.closed.pi_tangle));
      max_tail = std::max(max_tail, pt.numeric.truncation->tail_bound);
    }
    s.accuracy(mm, "N_A(BC) = N_B(AC) on both grids", symmetry, 1e-10);
    s.accuracy(mm, "CKW excess N_XY^2 + N_XZ^2 - N_X(YZ)^2", ckw, tol.ckw);
    s.accuracy(mc, "Dirac closed forms vs dense oracle", dirac_gap, 1e-10);
    s.accuracy(mc, "scalar closed forms vs dense oracle", scalar_gap, std::max(1e-8, 10.0 * max_tail));

    // Monotonicity along r for each alpha.
    double dirac_rise = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < dirac.size(); ++i) {
      if (dirac[i].alpha != dirac[i + 1].alpha) continue;
      for (std::size_t k : {0u, 2u}) {
        dirac_rise = std::max(dirac_rise, dirac[i + 1].numeric.one_tangles[k] - dirac[i].numeric.one_tangles[k]);
      }
    }
    double scalar_rise = 0.0;
    for (std::size_t i = 0; i + 1 < scalar.size(); ++i) {
      if (scalar[i].alpha != scalar[i + 1].alpha) continue;
      for (std::size_t k = 0; k < 3; ++k) {
        scalar_rise = std::max(scalar_rise, scalar[i + 1].numeric.one_tangles[k] - scalar[i].numeric.one_tangles[k]);
      }
      scalar_rise = std::max(scalar_rise, scalar[i + 1].numeric.pi_tangle - scalar[i].numeric.pi_tangle);
    }
    s.above(mm, "Dirac one-tangles strictly decreasing (min drop between grid points)", -dirac_rise, 0.0);
    s.accuracy(mm, "scalar tangles non-increasing (max rise)", scalar_rise, 1e-9);

    double survival = std::numeric_limits<double>::infinity();
    for (const auto& pt : dirac) {
      if (pt.r == kDiracRMax) survival = std::min(survival, pt.numeric.pi_tangle);
    }
    s.above(mm, "Dirac pi-tangle at r = pi/4, min over alpha", survival, 0.0);
    double plateau = std::numeric_limits<double>::infinity();
    for (const auto& pt : scalar) {
      if (pt.r == scalar_rs.back()) plateau = std::min(plateau, pt.numeric.pi_tangle);
    }
    s.above(mm, "scalar pi-tangle at r = 3, min over alpha", plateau, 0.0);
  });

  s.guarded(mm, "alpha swap", [&] {
    const double pairs[][2] = {{1.0 / std::sqrt(5.0), 2.0 / std::sqrt(5.0)},
                               {1.0 / std::sqrt(10.0), 3.0 / std::sqrt(10.0)},
                               {1.0 / std::sqrt(22.0), std::sqrt(21.0 / 22.0)}};
    double inertial = 0.0;
    double charlie_split = std::numeric_limits<double>::infinity();
    for (Field field : {Field::Dirac, Field::Scalar}) {
      const auto rs = field == Field::Dirac ? dirac_rs : scalar_rs;
      double best = 0.0;
      for (const auto& pair : pairs) {
        for (double r : rs) {
          const auto lo = evaluate_numeric({field, pair[0], r, {}}, tol);
          const auto hi = evaluate_numeric({field, pair[1], r, {}}, tol);
          inertial = std::max(inertial, std::abs(lo.one_tangles[0] - hi.one_tangles[0]));
          if (pair[0] == pairs[0][0] && r > 0.3) best = std::max(best, std::abs(lo.one_tangles[2] - hi.one_tangles[2]));
        }
      }
      charlie_split = std::min(charlie_split, best);
    }
    s.accuracy(mm, "N_A(BC) invariant under alpha <-> sqrt(1-alpha^2)", inertial, 1e-10);
    s.above(mm, "N_C(AB) separation for (1/sqrt5, 2/sqrt5) on r > 0.3, min over fields", charlie_split, 1e-3);
  });

  s.guarded(mm, "scalar N_C(AB) at r = 5", [&] {
    const auto report = evaluate_numeric({Field::Scalar, 1.0 / std::sqrt(2.0), 5.0, {}}, tol);
    s.at_most(mm, "scalar N_C(AB) at r = 5, alpha = 1/sqrt2", report.one_tangles[2], 0.02);
  });

  s.guarded(mc, "polylog form", [&] {
    double worst = 0.0;
    for (double a : figure_alphas()) {
      for (double r : {0.1, 0.3, 0.7, 1.2, 2.0}) {
        worst = std::max(worst, std::abs(boson_one_tangle_inertial(a, r, SeriesForm::Sum, tol) -
                                         boson_one_tangle_inertial(a, r, SeriesForm::Polylog, tol)));
      }
    }
    s.accuracy(mc, "N_A(BC) series form vs polylog form", worst, 1e-10);
  });

  s.guarded(mc, "closed-form spectrum of (rho^T_C)(rho^T_C)^dagger", [&] {
    const double alpha = 1.0 / std::sqrt(2.0);
    const double r = 0.8;
    const auto state = build_boson_state(alpha, r, std::size_t{40}, tol.eps_norm);
    const auto pt = partial_transpose(rho_abc(state.psi), 2);
    const auto product = multiply(pt, pt.adjoint()).hermitized();
    const auto dense = spectrum(product, tol);

    auto nearest = [&](double value) {
      double best = value;  // distance to the implicit zeros
      for (double l : dense.eigenvalues) best = std::min(best, std::abs(l - value));
      return best;
    };
    double worst = nearest(boson_spectrum_isolated(alpha, r));
    for (std::size_t n = 0; n <= 6; ++n) {
      const auto term = boson_spectrum_term(alpha, r, n);
      worst = std::max({worst, nearest(term.lambda_plus), nearest(term.lambda_minus)});
    }
    s.accuracy(mc, "closed-form eigenvalues found in dense spectrum (n <= 6)", worst, 1e-9);

    double sum = 0.0;
    for (double l : dense.eigenvalues) sum += l;
    s.accuracy(mc, "dense spectrum sums to the trace", std::abs(sum - product.trace().real()), 1e-12);

    double norm_from_terms = std::sqrt(boson_spectrum_isolated(alpha, r));
    for (std::size_t n = 0; n < 200; ++n) {
      const auto term = boson_spectrum_term(alpha, r, n);
      norm_from_terms += std::sqrt(std::max(0.0, term.lambda_plus)) + std::sqrt(std::max(0.0, term.lambda_minus));
    }
    s.accuracy(mc, "trace norm from closed-form eigenvalues vs dense", std::abs(norm_from_terms - trace_norm(pt, tol)),
               1e-9);
  });
}

void sweep_checks(Suite& s) {
  const char* m = "sweep_cli";
  s.guarded(m, "sweep determinism", [&] {
    SweepGrid grid;
    grid.field = Field::Scalar;
    grid.alphas = {1.0 / std::sqrt(5.0), 1.0 / std::sqrt(2.0)};
    grid.r_max = 2.0;
    grid.r_steps = 6;
    const auto first = run_sweep(grid, s.tol(), 1);
    const auto second = run_sweep(grid, s.tol(), 3);
    s.at_most(m, "CSV identical across runs and thread counts (differences)",
              format_csv(first) == format_csv(second) ? 0.0 : 1.0, 0.0);
    s.at_most(m, "row count - |alphas| x r_steps x |methods|",
              std::abs(static_cast<double>(first.size()) - 2.0 * 6.0 * 2.0), 0.0);
    double bad = 0;
    for (const auto& row : first) {
      if (!row.report) {
        ++bad;
        continue;
      }
      bad += !row.report->all_ckw_ok();
      for (double v : row.report->one_tangles) bad += v < 0.0;
      for (double v : row.report->two_tangles) bad += v < 0.0;
    }
    s.at_most(m, "rows failing CKW, nonnegativity or evaluation", bad, 0.0);
  });
}

void cross_field_notes(Suite& s) {
  const double alpha = 1.0 / std::sqrt(2.0);
  char line[160];
  s.note("pi-tangle at equal r, alpha = 1/sqrt2 (r, Dirac, scalar):");
  for (double r : linspace(0.0, kDiracRMax, 5)) {
    std::snprintf(line, sizeof line, "  %.4f  %.6f  %.6f", r, fermion_pi_tangle(alpha, r), boson_pi_tangle(alpha, r, s.tol()));
    s.note(line);
  }
  s.note("pi-tangle at equal acceleration, omega = c = 1 (a, r_Dirac, pi_Dirac, r_scalar, pi_scalar):");
  for (double a : {0.5, 1.0, 2.0, 5.0, 10.0, 50.0, 100.0}) {
    const double rd = r_from_acceleration(Field::Dirac, a, 1.0, 1.0);
    const double rs = r_from_acceleration(Field::Scalar, a, 1.0, 1.0);
    std::snprintf(line, sizeof line, "  %6.1f  %.4f  %.6f  %.4f  %.6f", a, rd, fermion_pi_tangle(alpha, rd), rs,
                  boson_pi_tangle(alpha, rs, s.tol()));
    s.note(line);
  }
}

}  // namespace

bool VerifyReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

std::string VerifyReport::format() const {
  std::ostringstream out;
  std::size_t failures = 0;
  for (const auto& c : checks) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.3e %s %.3e", c.observed, c.upper_bound ? "<=" : ">", c.limit);
    out << (c.passed ? "PASS " : "FAIL ") << '[' << c.module << "] " << c.name << ": " << buf << '\n';
    failures += !c.passed;
  }
  for (const auto& n : notes) out << n << '\n';
  out << checks.size() - failures << '/' << checks.size() << " checks passed\n";
  return out.str();
}

VerifyReport cmd_verify(const VerifyOptions& options) {
  VerifyReport report;
  Suite suite(report, options);
  Rng rng(options.seed);
  qudit_checks(suite, rng);
  numerics_checks(suite, rng);
  rindler_checks(suite);
  measure_and_closed_form_checks(suite);
  sweep_checks(suite);
  cross_field_notes(suite);
  return report;
}

}  // namespace tangle
