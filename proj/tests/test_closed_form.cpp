#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>

#include "tangle/closed_form.hpp"
#include "tangle/errors.hpp"
#include "tangle/measures.hpp"
#include "tangle/numerics.hpp"
#include "tangle/rindler.hpp"

using namespace tangle;

namespace {
const double kHalfRoot = 1.0 / std::sqrt(2.0);
const double kQuarterPi = std::numbers::pi / 4;
}

TEST_CASE("Dirac inertial one-tangle") {
  CHECK(fermion_one_tangle_inertial(kHalfRoot, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fermion_one_tangle_inertial(kHalfRoot, kQuarterPi) == doctest::Approx(0.7071068).epsilon(1e-7));
  for (double r : {0.1, 0.4, 0.7}) {
    CHECK(fermion_one_tangle_inertial(1 / std::sqrt(5.0), r) ==
          doctest::Approx(fermion_one_tangle_inertial(2 / std::sqrt(5.0), r)).epsilon(1e-15));
  }
}

TEST_CASE("Dirac Charlie one-tangle") {
  CHECK(fermion_one_tangle_charlie(kHalfRoot, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fermion_one_tangle_charlie(kHalfRoot, 0.0, DiracCharlieForm::SplitRoot) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(std::abs(fermion_one_tangle_charlie(1 / std::sqrt(5.0), 0.5) - fermion_one_tangle_charlie(2 / std::sqrt(5.0), 0.5)) >
        1e-3);

  // The dense pipeline decides which algebraic form is right.
  const auto oracle = evaluate_numeric({Field::Dirac, kHalfRoot, kQuarterPi, {}});
  CHECK(fermion_one_tangle_charlie(kHalfRoot, kQuarterPi) == doctest::Approx(oracle.one_tangles[2]).epsilon(1e-12));
  CHECK(fermion_one_tangle_charlie(kHalfRoot, kQuarterPi) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(fermion_one_tangle_charlie(kHalfRoot, kQuarterPi, DiracCharlieForm::SplitRoot) ==
        doctest::Approx(0.536566).epsilon(1e-6));
}

TEST_CASE("Dirac pi-tangle") {
  CHECK(fermion_pi_tangle(kHalfRoot, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(fermion_pi_tangle(0.0, 0.4) == 0.0);
  CHECK(fermion_pi_tangle(1.0, 0.4) == 0.0);
  CHECK(fermion_pi_tangle(kHalfRoot, kQuarterPi) == doctest::Approx(5.0 / 12.0).epsilon(1e-14));
  CHECK(fermion_pi_tangle(kHalfRoot, kQuarterPi, DiracCharlieForm::SplitRoot) == doctest::Approx(0.42929).epsilon(1e-5));
}

TEST_CASE("scalar inertial one-tangle, both forms") {
  for (auto form : {SeriesForm::Sum, SeriesForm::Polylog}) {
    CHECK(boson_one_tangle_inertial(kHalfRoot, 0.0, form) == doctest::Approx(1.0).epsilon(1e-15));
    for (double r : {0.1, 0.3, 0.7, 1.2, 2.0}) {
      CHECK(boson_one_tangle_inertial(0.3, r, form) ==
            doctest::Approx(boson_one_tangle_inertial(std::sqrt(1 - 0.09), r, form)).epsilon(1e-12));
    }
  }
  for (double r : {0.1, 0.3, 0.7, 1.2, 2.0}) {
    CHECK(std::abs(boson_one_tangle_inertial(kHalfRoot, r, SeriesForm::Sum) -
                   boson_one_tangle_inertial(kHalfRoot, r, SeriesForm::Polylog)) <= 1e-10);
  }
}

TEST_CASE("scalar Charlie one-tangle") {
  CHECK(boson_one_tangle_charlie(kHalfRoot, 0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(boson_one_tangle_charlie(kHalfRoot, 1e-9) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(std::abs(boson_one_tangle_charlie(1 / std::sqrt(5.0), 1.0) - boson_one_tangle_charlie(2 / std::sqrt(5.0), 1.0)) >
        1e-3);
  CHECK(boson_one_tangle_charlie(kHalfRoot, 5.0) < 0.02);

  // Only the (n+2) weight agrees with the dense pipeline.
  const auto oracle = evaluate_numeric({Field::Scalar, kHalfRoot, 1.0, {}});
  CHECK(std::abs(boson_one_tangle_charlie(kHalfRoot, 1.0, ScalarCharlieForm::ShiftTwo) - oracle.one_tangles[2]) < 1e-10);
  CHECK(std::abs(boson_one_tangle_charlie(kHalfRoot, 1.0, ScalarCharlieForm::ShiftOne) - oracle.one_tangles[2]) > 1e-3);
}

TEST_CASE("scalar partial-transpose spectrum against the dense spectrum") {
  const double alpha = kHalfRoot;
  const double r = 0.8;
  const auto psi = build_boson_state(alpha, r, std::size_t{12}, 1.0).psi;
  const auto pt = partial_transpose(rho_abc(psi), 2);
  const auto product = multiply(pt, pt.adjoint()).hermitized();
  const auto dense = spectrum(product);

  auto found = [&](double value) {
    return std::any_of(dense.eigenvalues.begin(), dense.eigenvalues.end(),
                       [&](double l) { return std::abs(l - value) <= 1e-9; }) ||
           (dense.implicit_zeros > 0 && value <= 1e-9);
  };
  CHECK(found(boson_spectrum_isolated(alpha, r)));
  for (std::size_t n = 0; n <= 6; ++n) {
    const auto term = boson_spectrum_term(alpha, r, n);
    CHECK(term.n == n);
    CHECK(found(term.lambda_plus));
    CHECK(found(term.lambda_minus));
    CHECK(term.lambda_plus + term.lambda_minus == doctest::Approx(term.xi).epsilon(1e-14));
  }
  CHECK_THROWS_AS(boson_spectrum_term(alpha, 0.0, 0), DomainError);
}

TEST_CASE("closed-form reports") {
  const auto dirac = evaluate_closed_form({Field::Dirac, kHalfRoot, 0.0, {}});
  CHECK(dirac.method == Method::ClosedForm);
  CHECK(dirac.pi_tangle == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(dirac.all_ckw_ok());

  const auto scalar = evaluate_closed_form({Field::Scalar, 0.4, 1.5, {}});
  const auto oracle = evaluate_numeric({Field::Scalar, 0.4, 1.5, {}});
  REQUIRE(oracle.truncation);
  CHECK(std::abs(scalar.pi_tangle - oracle.pi_tangle) <= std::max(1e-8, 10 * oracle.truncation->tail_bound));
  for (std::size_t k = 0; k < 3; ++k) CHECK(std::abs(scalar.one_tangles[k] - oracle.one_tangles[k]) <= 1e-8);

  CHECK_THROWS_AS(evaluate_closed_form({Field::Dirac, 0.5, 1.0, {}}), DomainError);
}
