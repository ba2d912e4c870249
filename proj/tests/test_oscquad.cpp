// SPDX-License-Identifier: MIT
//
// Unit tests for the oscillatory power-kernel quadrature and the two
// regularization paths.

#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>

#include "selfrecip/oscquad.hpp"
#include "oracle_values.hpp"

using selfrecip::complex;
using selfrecip::Family;
using selfrecip::RegularizationKind;
using selfrecip::RegularizationPolicy;
using selfrecip::StripPoint;

namespace {

const double kSqrtPiOver2 = std::sqrt(std::numbers::pi / 2.0);

complex closed_form(int kind, complex zeta) {
  return selfrecip::closed_form_power_integral(
      kind == 0 ? Family::cosine : Family::sine, StripPoint{zeta});
}

}  // namespace

TEST_CASE("eps-damped integral: weight-free sine and frozen anchors", "[oscquad]") {
  // int_0^inf e^{-eps s} sin s ds = 1/(1+eps^2); the zeta-free weight is the
  // boundary exponent zeta = 1 of the internal core.
  const complex weight_free = selfrecip::detail::osc_power_core(
      Family::sine, complex{1.0, 0.0}, 0.1, std::numeric_limits<double>::infinity(), false);
  CHECK(std::abs(weight_free - complex{1.0 / 1.01, 0.0}) < 1e-10);

  for (const auto& s : selfrecip::oracle::kEpsReg) {
    const Family fam = s.kind == 0 ? Family::cosine : Family::sine;
    const complex got = selfrecip::epsilon_regularized(fam, StripPoint{s.zeta}, s.eps);
    INFO("kind=" << s.kind << " zeta=" << s.zeta.real() << "+" << s.zeta.imag()
                 << "i eps=" << s.eps);
    CHECK(std::abs(got - s.value) < 1e-10 * (1.0 + std::abs(s.value)));
  }

  const complex near_limit =
      selfrecip::epsilon_regularized(Family::cosine, StripPoint{complex{0.5, 0.0}}, 1e-3);
  CHECK(std::abs(near_limit - complex{kSqrtPiOver2, 0.0}) < 2e-3);

  CHECK_THROWS_AS(
      selfrecip::epsilon_regularized(Family::cosine, StripPoint{complex{0.5, 0.0}}, 0.0),
      std::invalid_argument);
  CHECK_THROWS_AS(
      selfrecip::epsilon_regularized(Family::cosine, StripPoint{complex{1.5, 0.0}}, 0.1),
      std::invalid_argument);
}

TEST_CASE("eps schedule extrapolates to the closed form", "[oscquad]") {
  RegularizationPolicy policy;
  policy.kind = RegularizationKind::epsilon;
  policy.schedule = {1e-2, 1e-3, 1e-4};
  policy.extrapolation_order = 2;
  const complex zeta{0.5, 1.0};
  const auto limit = selfrecip::regularized_limit(Family::cosine, StripPoint{zeta}, policy);
  CHECK(std::abs(limit.value - closed_form(0, zeta)) < 1e-8);
}

TEST_CASE("truncated integral: empty interval, anchors, oscillating approach",
          "[oscquad]") {
  CHECK(selfrecip::truncated(Family::sine, StripPoint{complex{0.5, 0.0}}, 0.0) ==
        complex{0.0, 0.0});

  for (const auto& s : selfrecip::oracle::kTruncated) {
    const Family fam = s.kind == 0 ? Family::cosine : Family::sine;
    const complex got = selfrecip::truncated(fam, StripPoint{s.zeta}, s.upper);
    INFO("kind=" << s.kind << " zeta=" << s.zeta.real() << "+" << s.zeta.imag()
                 << "i R=" << s.upper);
    CHECK(std::abs(got - s.value) < 1e-10 * (1.0 + std::abs(s.value)));
  }

  for (int k = 1; k <= 4; ++k) {
    const double R = 10.0 * k * std::numbers::pi;
    const complex got = selfrecip::truncated(Family::cosine, StripPoint{complex{0.5, 0.0}}, R);
    CHECK(std::abs(got - complex{kSqrtPiOver2, 0.0}) <= 1.0 / std::sqrt(R));
  }
}

TEST_CASE("uniform exponential bound across the strip", "[oscquad]") {
  // Calibrate max |truncated| e^{-pi |tau|/2} on the strip boundary lines
  // Re = 1/4, 3/4; the interior line Re = 1/2 must obey the same constant.
  const double radii[] = {10.0, 100.0, 1e3, 1e4};
  const double taus[] = {-10.0, -5.0, 0.0, 5.0, 10.0};
  auto scan = [&](double re) {
    double worst = 0.0;
    for (double R : radii)
      for (double tau : taus)
        for (Family fam : {Family::cosine, Family::sine}) {
          const complex v = selfrecip::truncated(fam, StripPoint{complex{re, tau}}, R);
          worst = std::max(worst, std::abs(v) * std::exp(-std::numbers::pi * std::abs(tau) / 2));
        }
    return worst;
  };
  const double calibrated = std::max(scan(0.25), scan(0.75));
  CHECK(scan(0.5) <= 1.05 * calibrated);
}

TEST_CASE("regularized limits match closed forms with honest estimates", "[oscquad]") {
  const auto eps_limit = selfrecip::regularized_limit(
      Family::cosine, StripPoint{complex{0.5, 0.0}}, selfrecip::default_epsilon_policy());
  CHECK(std::abs(eps_limit.value - complex{kSqrtPiOver2, 0.0}) < 1e-8);
  CHECK(std::abs(eps_limit.value - complex{kSqrtPiOver2, 0.0}) <= 10.0 * eps_limit.error_estimate);

  const auto trunc_limit = selfrecip::regularized_limit(
      Family::sine, StripPoint{complex{0.3, 0.0}}, selfrecip::default_truncation_policy());
  const complex want_sine = closed_form(1, complex{0.3, 0.0});
  CHECK(std::abs(trunc_limit.value - want_sine) < 1e-6);
  CHECK(std::abs(trunc_limit.value - want_sine) <= 10.0 * trunc_limit.error_estimate);

  const complex zeta_high{0.5, 5.0};
  const auto high = selfrecip::regularized_limit(Family::cosine, StripPoint{zeta_high},
                                                 selfrecip::default_epsilon_policy());
  CHECK(std::abs(high.value - closed_form(0, zeta_high)) < 1e-6);

  // Both regularizations agree away from the strip boundary.
  const complex pts[] = {{0.1, 0.0}, {0.37, 1.5}, {0.5, -2.0}, {0.75, 4.0}, {0.9, -0.5}};
  for (const complex zeta : pts)
    for (Family fam : {Family::cosine, Family::sine}) {
      const auto by_eps =
          selfrecip::regularized_limit(fam, StripPoint{zeta}, selfrecip::default_epsilon_policy());
      const auto by_trunc = selfrecip::regularized_limit(fam, StripPoint{zeta},
                                                         selfrecip::default_truncation_policy());
      INFO("zeta=" << zeta.real() << "+" << zeta.imag() << "i family=" << to_string(fam));
      CHECK(std::abs(by_eps.value - by_trunc.value) < 1e-6);
      const complex exact = closed_form(fam == Family::cosine ? 0 : 1, zeta);
      CHECK(std::abs(by_eps.value - exact) <= 10.0 * by_eps.error_estimate);
      CHECK(std::abs(by_trunc.value - exact) <= 10.0 * by_trunc.error_estimate);
    }
}

TEST_CASE("policy validation and non-convergence detection", "[oscquad]") {
  RegularizationPolicy bad;
  bad.kind = RegularizationKind::epsilon;
  bad.schedule = {1e-2, 1e-3};
  CHECK_THROWS_AS(selfrecip::regularized_limit(Family::cosine, StripPoint{complex{0.5, 0.0}}, bad),
                  std::invalid_argument);

  bad.schedule = {1e-2, 1e-3, 2e-3};
  CHECK_THROWS_AS(selfrecip::regularized_limit(Family::cosine, StripPoint{complex{0.5, 0.0}}, bad),
                  std::invalid_argument);

  bad.schedule = {1e-2, 1e-3, 1e-4};
  bad.extrapolation_order = 5;
  CHECK_THROWS_AS(selfrecip::regularized_limit(Family::cosine, StripPoint{complex{0.5, 0.0}}, bad),
                  std::invalid_argument);

  RegularizationPolicy tiny_radii;
  tiny_radii.kind = RegularizationKind::truncation;
  tiny_radii.schedule = {0.5, 0.6, 0.7};
  tiny_radii.extrapolation_order = 2;
  CHECK_THROWS_AS(
      selfrecip::regularized_limit(Family::cosine, StripPoint{complex{0.9, 0.0}}, tiny_radii),
      selfrecip::numeric_contract_error);
}
