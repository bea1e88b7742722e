#include <doctest.h>

#include <cmath>
#include <numbers>

#include "tangle/errors.hpp"
#include "tangle/rindler.hpp"

using namespace tangle;

namespace {
const double kHalfRoot = 1.0 / std::sqrt(2.0);
}

TEST_CASE("acceleration parameter") {
  // 2 pi omega c / a = ln 3 gives cos r = sqrt(3)/2.
  const double a = 2.0 * std::numbers::pi / std::log(3.0);
  const double r = r_from_acceleration(Field::Dirac, a, 1.0, 1.0);
  CHECK(r == doctest::Approx(std::numbers::pi / 6).epsilon(1e-15));
  CHECK(std::cos(r) == doctest::Approx(std::sqrt(3.0) / 2).epsilon(1e-15));

  CHECK(r_from_acceleration(Field::Dirac, 1e12, 1.0, 1.0) == doctest::Approx(std::numbers::pi / 4).epsilon(1e-10));
  CHECK(r_from_acceleration(Field::Scalar, 1e-3, 1.0, 1.0) == 0.0);
  CHECK(r_from_acceleration(Field::Scalar, 0.0, 1.0, 1.0) == 0.0);
  CHECK(r_from_acceleration(Field::Dirac, 0.0, 1.0, 1.0) == 0.0);

  // Scalar: cosh r = (1 - exp(-2 pi omega c / a))^{-1/2}.
  const double rs = r_from_acceleration(Field::Scalar, a, 1.0, 1.0);
  CHECK(std::cosh(rs) == doctest::Approx(1.0 / std::sqrt(1.0 - 1.0 / 3.0)).epsilon(1e-14));

  CHECK_THROWS_AS(r_from_acceleration(Field::Dirac, -1.0, 1.0, 1.0), DomainError);
  CHECK_THROWS_AS(r_from_acceleration(Field::Dirac, 1.0, 0.0, 1.0), DomainError);
}

TEST_CASE("fermion state") {
  const auto vac = build_fermion_state(1.0, 0.3);
  CHECK(vac.amplitudes().size() == 2);
  CHECK(vac.amplitude(0) == Complex(std::cos(0.3)));
  CHECK(vac.amplitude(3) == Complex(std::sin(0.3)));
  CHECK(vac.squared_norm() == doctest::Approx(1.0).epsilon(1e-16));

  const auto inertial = build_fermion_state(kHalfRoot, 0.0);
  CHECK(inertial.amplitudes().size() == 2);
  CHECK(inertial.amplitude(0) == Complex(kHalfRoot));
  CHECK(inertial.amplitude(14).real() == doctest::Approx(kHalfRoot).epsilon(1e-15));

  const auto edge = build_fermion_state(kHalfRoot, std::numbers::pi / 4);
  CHECK(edge.amplitude(0).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(edge.amplitude(3).real() == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(edge.amplitude(14).real() == doctest::Approx(kHalfRoot).epsilon(1e-15));

  CHECK_THROWS_AS(build_fermion_state(1.2, 0.1), DomainError);
  CHECK_THROWS_AS(build_fermion_state(0.5, 1.0), DomainError);
}

TEST_CASE("boson state at r = 0 is the bare GHZ-like state") {
  const auto s = build_boson_state(0.6, 0.0, std::size_t{4});
  CHECK(s.truncation.norm_deficit == 0.0);
  CHECK(s.psi.squared_norm() == doctest::Approx(1.0).epsilon(1e-16));
  CHECK(s.psi.amplitudes().size() == 2);
  const auto& layout = s.psi.layout();
  const std::vector<Index> one{1, 1, 1, 0};
  CHECK(s.psi.amplitude(0) == Complex(0.6));
  CHECK(std::abs(s.psi.amplitude(layout.flatten(one)) - 0.8) < 1e-15);

  const auto rho = rho_abc(s.psi);
  CHECK(rho.entries().size() == 4);
  CHECK(std::abs(rho.trace() - 1.0) < 1e-15);
}

TEST_CASE("boson state with alpha = 1 is a two-mode squeezed vacuum") {
  const double r = 0.7;
  const auto s = build_boson_state(1.0, r, std::size_t{30}, 1e-3);
  const auto& layout = s.psi.layout();
  for (Index n = 0; n < 5; ++n) {
    const std::vector<Index> levels{0, 0, n, n};
    CHECK(s.psi.amplitude(layout.flatten(levels)).real() ==
          doctest::Approx(std::pow(std::tanh(r), static_cast<double>(n)) / std::cosh(r)).epsilon(1e-14));
  }
  CHECK(s.psi.amplitudes().size() == 31);
}

TEST_CASE("boson truncation") {
  const auto s = build_boson_state(kHalfRoot, 1.0, 1e-10);
  CHECK(s.truncation.norm_deficit <= 1e-10);
  CHECK(s.truncation.norm_deficit <= s.truncation.tail_bound);
  CHECK(1.0 - s.psi.squared_norm() == doctest::Approx(s.truncation.norm_deficit).epsilon(1e-4));
  CHECK(s.truncation.n_max >= minimal_boson_n_max(1.0, 1e-10));

  const auto n = minimal_boson_n_max(1.0, 1e-10);
  CHECK(boson_tail_bound(1.0, n) <= 1e-10);
  CHECK(boson_tail_bound(1.0, n - 1) > 1e-10);
  CHECK_NOTHROW(build_boson_state(kHalfRoot, 1.0, n, 1e-10));

  try {
    (void)build_boson_state(kHalfRoot, 1.0, n - 1, 1e-10);
    FAIL("expected a truncation error");
  } catch (const TruncationError& e) {
    CHECK(e.minimal_n_max() == n);
  }
}

TEST_CASE("scenario validation") {
  CHECK_NOTHROW(validate(ScenarioParams{Field::Dirac, 0.5, std::numbers::pi / 4, {}}));
  CHECK_THROWS_AS(validate(ScenarioParams{Field::Dirac, 0.5, 0.8, {}}), DomainError);
  CHECK_THROWS_AS(validate(ScenarioParams{Field::Scalar, -0.1, 0.1, {}}), DomainError);
  CHECK_THROWS_AS(validate(ScenarioParams{Field::Scalar, 0.5, -0.1, {}}), DomainError);
  CHECK_THROWS_AS(validate(ScenarioParams{Field::Scalar, 0.5, 5.5, {}}), NumericalError);
  CHECK(parse_field("scalar") == Field::Scalar);
  CHECK_THROWS_AS(parse_field("photon"), ValidationError);
}

TEST_CASE("three-party state keeps the norm") {
  const auto scenario = build_rho_abc({Field::Scalar, 0.3, 2.0, {}});
  REQUIRE(scenario.truncation);
  CHECK(std::abs(scenario.rho.trace().real() - (1.0 - scenario.truncation->norm_deficit)) < 1e-13);
  CHECK(scenario.rho.hermiticity_defect() == 0.0);

  const auto fermion = build_rho_abc({Field::Dirac, 0.3, 0.5, {}});
  CHECK_FALSE(fermion.truncation);
  CHECK(fermion.rho.trace().real() == doctest::Approx(1.0).epsilon(1e-15));
}
