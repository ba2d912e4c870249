// SPDX-License-Identifier: MIT
//
// Oscillatory power-kernel quadrature: the two regularizations of
//   int_0^inf {cos|sin}(s) s^{zeta-1} ds,  0 < Re zeta < 1,
// namely the absolutely convergent eps-damped integral and the truncated
// integral over [0, R], plus Richardson extrapolation of either schedule to
// the regularized limit. The engine is a Filon-type product quadrature: per
// panel the trigonometric moments are exact and only the smooth power factor
// is interpolated, so panels may span many oscillation periods without loss.

#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "selfrecip/special.hpp"

namespace selfrecip {

enum class RegularizationKind { epsilon, truncation };

/// A schedule of regularization parameters driving regularized_limit:
/// decreasing eps values or increasing truncation radii, at least three,
/// strictly monotone.
struct RegularizationPolicy {
  RegularizationKind kind = RegularizationKind::epsilon;
  std::vector<double> schedule;
  int extrapolation_order = 3;
};

inline void validate(const RegularizationPolicy& policy) {
  if (policy.schedule.size() < 3)
    throw std::invalid_argument("RegularizationPolicy: schedule needs at least 3 entries");
  for (double v : policy.schedule)
    if (!(v > 0.0) || !std::isfinite(v))
      throw std::invalid_argument("RegularizationPolicy: schedule entries must be positive");
  for (std::size_t i = 1; i < policy.schedule.size(); ++i) {
    const bool ok = policy.kind == RegularizationKind::epsilon
                        ? policy.schedule[i] < policy.schedule[i - 1]
                        : policy.schedule[i] > policy.schedule[i - 1];
    if (!ok)
      throw std::invalid_argument("RegularizationPolicy: schedule must be strictly monotone");
  }
  if (policy.extrapolation_order < 1 ||
      policy.extrapolation_order + 1 > static_cast<int>(policy.schedule.size()))
    throw std::invalid_argument("RegularizationPolicy: extrapolation_order out of range");
}

/// Default eps schedule 2^{-k}, k = 4..16, cubic extrapolation.
inline RegularizationPolicy default_epsilon_policy() {
  RegularizationPolicy p;
  p.kind = RegularizationKind::epsilon;
  for (int k = 4; k <= 16; ++k) p.schedule.push_back(std::ldexp(1.0, -k));
  p.extrapolation_order = 3;
  return p;
}

/// Default truncation schedule R = 2 pi k over a sparse set of k.
inline RegularizationPolicy default_truncation_policy() {
  RegularizationPolicy p;
  p.kind = RegularizationKind::truncation;
  for (int k : {2, 3, 4, 6, 8, 12, 16, 20})
    p.schedule.push_back(2.0 * std::numbers::pi * k);
  p.extrapolation_order = 3;
  return p;
}

namespace detail {

// Moments mu_k(theta) = int_0^1 sigma^k e^{i theta sigma} dsigma, k = 0..3.
inline std::array<complex, 4> filon_moments(double theta) {
  std::array<complex, 4> mu;
  if (std::abs(theta) < 0.5) {
    // Power series: mu_k = sum_m (i theta)^m / (m! (k+m+1)).
    const complex it{0.0, theta};
    for (int k = 0; k < 4; ++k) {
      complex term{1.0, 0.0};  // (i theta)^m / m!
      complex acc = term / static_cast<double>(k + 1);
      for (int m = 1; m < 40; ++m) {
        term *= it / static_cast<double>(m);
        const complex add = term / static_cast<double>(k + m + 1);
        acc += add;
        if (std::abs(add) < 1e-18 * std::abs(acc)) break;
      }
      mu[k] = acc;
    }
    return mu;
  }
  const complex it{0.0, theta};
  const complex eit = std::exp(it);
  mu[0] = (eit - 1.0) / it;
  for (int k = 1; k < 4; ++k) mu[k] = (eit - static_cast<double>(k) * mu[k - 1]) / it;
  return mu;
}

// Weights W_i with  int_a^{a+delta} g(s) e^{i omega s} ds  ~=  sum_i W_i g(s_i)
// for the cubic through the equispaced panel nodes s_i = a + delta*{0,1/3,2/3,1}.
// Real/imaginary parts of W_i are the cosine/sine weights for complex-valued g.
inline std::array<complex, 4> filon_panel_weights(double a, double delta, double omega) {
  // Monomial coefficients of the Lagrange basis on sigma = {0, 1/3, 2/3, 1}.
  static constexpr double A[4][4] = {
      {1.0, 0.0, 0.0, 0.0},
      {-5.5, 9.0, -4.5, 1.0},
      {9.0, -22.5, 18.0, -4.5},
      {-4.5, 13.5, -13.5, 4.5},
  };
  const auto mu = filon_moments(omega * delta);
  const complex front = delta * std::exp(complex{0.0, omega * a});
  std::array<complex, 4> w;
  for (int i = 0; i < 4; ++i)
    w[i] = front * (mu[0] * A[0][i] + mu[1] * A[1][i] + mu[2] * A[2][i] + mu[3] * A[3][i]);
  return w;
}

// Head panel: J(w) = int_0^{s0} e^{w s} s^{zeta-1} ds by term-by-term
// integration of the exponential series, |w| s0 small.
inline complex head_series(complex zeta, complex w, double s0) {
  const complex s0_pow_zeta = std::exp(zeta * std::log(s0));
  complex wn{1.0, 0.0};  // w^n / n!
  double s0n = 1.0;      // s0^n
  complex acc = s0_pow_zeta / zeta;
  for (int n = 1; n < 80; ++n) {
    wn *= w / static_cast<double>(n);
    s0n *= s0;
    const complex term = wn * s0n * s0_pow_zeta / (zeta + static_cast<double>(n));
    acc += term;
    if (std::abs(term) < 1e-18 * std::abs(acc)) break;
  }
  return acc;
}

// Core quadrature for int_0^R e^{-eps s} trig(s) s^{zeta-1} ds. Accepts
// 0 < Re zeta <= 1 (the upper boundary is needed by weight-free test
// integrals); R may be +infinity when eps > 0.
inline complex osc_power_core(Family kind, complex zeta, double eps, double R,
                              bool period_cap) {
  if (R <= 0.0) return complex{0.0, 0.0};

  double upper = R;
  if (std::isinf(R)) upper = std::max(0.2, 32.2 / eps);  // e^{-32.2} tail, oscillation-damped

  const double s0 = std::min(0.1, upper);
  // Head: cos = (J(i-eps) + J(-i-eps))/2, sin = (J(i-eps) - J(-i-eps))/(2i).
  const complex jp = head_series(zeta, complex{-eps, 1.0}, s0);
  const complex jm = head_series(zeta, complex{-eps, -1.0}, s0);
  complex acc = kind == Family::cosine ? (jp + jm) / 2.0 : (jp - jm) / complex{0.0, 2.0};
  if (upper <= s0) return acc;

  // Body: panels grow geometrically (interpolation of s^{zeta-1} needs width
  // proportional to s / |zeta-1|), capped by the e^{-eps s} resolution width
  // and, on the truncated path, by pi/2 (>= 16 nodes per oscillation period).
  const double lambda = std::numbers::ln10 / (1024.0 * std::max(1.0, std::abs(zeta - 1.0)));
  const double growth = std::exp(lambda);
  double cap = eps > 0.0 ? 0.04 / eps : std::numeric_limits<double>::infinity();
  if (period_cap) cap = std::min(cap, std::numbers::pi / 2.0);

  double a = s0;
  complex g0 = std::exp((zeta - 1.0) * std::log(a) - eps * a);
  while (a < upper) {
    double b = std::min({upper, a * growth, a + cap});
    if (upper - b < 1e-12 * upper) b = upper;
    const double delta = b - a;
    const double second = a + delta / 3.0, third = a + 2.0 * delta / 3.0;
    const complex g1 = std::exp((zeta - 1.0) * std::log(second) - eps * second);
    const complex g2 = std::exp((zeta - 1.0) * std::log(third) - eps * third);
    const complex g3 = std::exp((zeta - 1.0) * std::log(b) - eps * b);
    const auto w = filon_panel_weights(a, delta, 1.0);
    if (kind == Family::cosine) {
      acc += w[0].real() * g0 + w[1].real() * g1 + w[2].real() * g2 + w[3].real() * g3;
    } else {
      acc += w[0].imag() * g0 + w[1].imag() * g1 + w[2].imag() * g2 + w[3].imag() * g3;
    }
    a = b;
    g0 = g3;
  }
  return acc;
}

// Asymptotic tail  int_R^inf e^{+/- i s} s^{zeta-1} ds  by repeated
// integration by parts, truncated at the smallest term. Returns the value and
// the magnitude of the first omitted term.
struct TailEstimate {
  complex value;
  double uncertainty;
};

inline TailEstimate exp_tail_series(int sign, complex zeta, double R) {
  const complex i_sign{0.0, static_cast<double>(sign)};
  complex term = i_sign * std::exp(complex{0.0, sign * R} + (zeta - 1.0) * std::log(R));
  complex acc{0.0, 0.0};
  double smallest = std::abs(term);
  for (int j = 0; j < 200; ++j) {
    acc += term;
    const complex next = term * i_sign * (zeta - static_cast<double>(j + 1)) / R;
    if (std::abs(next) >= std::abs(term)) return {acc, std::abs(next)};
    term = next;
    smallest = std::abs(term);
    if (smallest < 1e-18 * (1.0 + std::abs(acc))) break;
  }
  return {acc, smallest};
}

inline TailEstimate trig_tail(Family kind, complex zeta, double R) {
  const TailEstimate plus = exp_tail_series(+1, zeta, R);
  const TailEstimate minus = exp_tail_series(-1, zeta, R);
  const complex value = kind == Family::cosine
                            ? (plus.value + minus.value) / 2.0
                            : (plus.value - minus.value) / complex{0.0, 2.0};
  return {value, (plus.uncertainty + minus.uncertainty) / 2.0};
}

}  // namespace detail

/// The absolutely convergent integral int_0^inf e^{-eps s} trig(s) s^{zeta-1} ds.
inline complex epsilon_regularized(Family kernel, StripPoint zeta, double eps) {
  if (!(eps > 0.0) || !std::isfinite(eps))
    throw std::invalid_argument("epsilon_regularized: eps must be positive");
  return detail::osc_power_core(kernel, zeta.value(), eps,
                                std::numeric_limits<double>::infinity(), false);
}

/// The truncated integral int_0^R trig(s) s^{zeta-1} ds (no damping). R = 0 is
/// the empty integral.
inline complex truncated(Family kernel, StripPoint zeta, double R) {
  if (R < 0.0 || !std::isfinite(R))
    throw std::invalid_argument("truncated: R must be finite and nonnegative");
  return detail::osc_power_core(kernel, zeta.value(), 0.0, R, true);
}

/// Result of a regularized limit: the extrapolated value, a defensive error
/// estimate (final extrapolation increment, floored at the quadrature noise
/// level), and the per-schedule-entry extrapolation diagonal.
struct LimitResult {
  complex value;
  double error_estimate;
  std::vector<complex> diagonal;
};

/// Richardson/Neville extrapolation of the schedule to the regularized limit.
/// The eps path extrapolates F(eps) to eps = 0; the truncation path first adds
/// the analytic integration-by-parts tail of int_R^inf and extrapolates the
/// corrected values in 1/R. Throws numeric_contract_error if the extrapolation
/// increments fail to decrease (non-convergence) or if the truncation schedule
/// tops out at an R too small for the tail series.
inline LimitResult regularized_limit(Family kernel, StripPoint zeta,
                                     const RegularizationPolicy& policy) {
  validate(policy);
  const int n = static_cast<int>(policy.schedule.size());
  std::vector<complex> f(n);
  std::vector<double> x(n);
  for (int i = 0; i < n; ++i) {
    const double p = policy.schedule[i];
    if (policy.kind == RegularizationKind::epsilon) {
      f[i] = epsilon_regularized(kernel, zeta, p);
      x[i] = p;
    } else {
      const auto tail = detail::trig_tail(kernel, zeta.value(), p);
      f[i] = truncated(kernel, zeta, p) + tail.value;
      x[i] = 1.0 / p;
      if (i == n - 1 && tail.uncertainty > 1e-7 * (1.0 + std::abs(f[i])))
        throw numeric_contract_error(
            "regularized_limit: truncation radii too small for a convergent tail "
            "correction; largest R = " + std::to_string(p));
    }
  }

  // Neville tableau, polynomial degree capped at extrapolation_order; the
  // diagonal D_i extrapolates the first i+1 entries to x = 0.
  const int order = policy.extrapolation_order;
  std::vector<complex> diag(n);
  std::vector<complex> row = f;
  diag[0] = row[0];
  for (int i = 1; i < n; ++i) {
    std::vector<complex> next(row.size());
    next[i] = f[i];
    for (int m = 1; m <= std::min(i, order); ++m) {
      const double xi = x[i - m], xj = x[i];
      next[i - m] = (xi * next[i - m + 1] - xj * row[i - m]) / (xi - xj);
    }
    row = next;
    diag[i] = row[i - std::min(i, order)];
  }

  // Monotone-increment check. Diagonal entries with index <= order are still
  // ramping up in polynomial degree and may overshoot structurally, so the
  // decrease is enforced only once the tableau runs at full order. The floor
  // sits at the quadrature noise level: once increments dip below it the
  // sequence has converged and later jitter carries no signal.
  const double scale = 1.0 + std::abs(diag[n - 1]);
  const double floor = 1e-10 * scale;
  double prev_inc = -1.0;
  for (int i = 1; i < n; ++i) {
    const double inc = std::abs(diag[i] - diag[i - 1]);
    if (inc <= floor) break;
    if (i > order && prev_inc > floor && inc >= prev_inc)
      throw numeric_contract_error(
          "regularized_limit: extrapolation increments are not decreasing; "
          "the schedule does not converge");
    prev_inc = inc;
  }

  LimitResult result;
  result.value = diag[n - 1];
  result.error_estimate =
      std::max(std::abs(diag[n - 1] - diag[n - 2]), 3e-11 * scale);
  result.diagonal = std::move(diag);
  return result;
}

}  // namespace selfrecip
