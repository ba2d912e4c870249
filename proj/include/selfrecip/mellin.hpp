// SPDX-License-Identifier: MIT
//
// The L2 Mellin transform on the critical line Re zeta = 1/2:
//   forward   Phi(1/2 + i tau) = int_0^inf f(t) t^{-1/2 + i tau} dt,
//   inverse   f(t) = (1/2pi) int_R Phi(1/2 + i tau) t^{-1/2 - i tau} dtau.
// In logarithmic coordinates u = ln t the forward map is the Fourier integral
// of g(u) = f(e^u) e^{u/2}, so on a log-uniform grid it reduces to a single
// FFT once the tau-grid is tied to the radial grid by DFT duality:
//   tau_step = 2 pi / (N h),  M = N.
// The quadrature is the plain trapezoid in u (endpoint samples at half
// weight) with no windowing: inputs whose log-integrand is still large at the
// grid edges raise a decay-contract error instead of being silently tapered,
// because tapers corrupt Parseval diagnostics.  Callers integrating a
// function supported exactly on the grid window (where the half-weight
// endpoints are the correct jump treatment) opt out via `edge_tol`.
//
// Also here: the multiplier factor tying the Mellin images of a function and
// of its cosine/sine transform across tau -> -tau, and the end-to-end
// verification of that relation.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "selfrecip/cstransform.hpp"
#include "selfrecip/fft.hpp"
#include "selfrecip/grid.hpp"
#include "selfrecip/special.hpp"

namespace selfrecip {

/// A radial function together with its critical-line Mellin image, tied by
/// the Parseval identity ||f||_2^2 = (1/2pi) int |Phi|^2 dtau.
struct MellinPair {
  GridFunction source;
  CriticalLineFunction image;
};

namespace detail {

// Trapezoid samples of the log-coordinate integrand g(u) = f(e^u) e^{u/2}
// (endpoints at half weight).  Enforces the edge-decay contract: the
// half-line integral is only representable on the window [t_lo, t_hi] if the
// integrand has died out at both ends, relative to its peak.
inline std::vector<complex> mellin_log_integrand(const GridFunction& f, double edge_tol,
                                                 const char* who) {
  const RadialGrid& g = f.grid;
  const int n = g.count;
  std::vector<complex> vals(n);
  double peak = 0.0;
  for (int j = 0; j < n; ++j) {
    vals[j] = f.values[j] * std::exp(0.5 * g.u(j));
    peak = std::max(peak, std::abs(vals[j]));
  }
  if (peak > 0.0) {
    const double lo = std::abs(vals.front()) / peak;
    const double hi = std::abs(vals.back()) / peak;
    if (!(lo <= edge_tol) || !(hi <= edge_tol))
      throw decay_contract_error(
          std::string(who) + ": f(t) sqrt(t) has not decayed at the grid edges (edge/peak = " +
          std::to_string(std::max(lo, hi)) + ", edge_tol = " + std::to_string(edge_tol) +
          "); widen the grid or relax edge_tol for window-supported inputs");
  }
  vals.front() *= 0.5;
  vals.back() *= 0.5;
  return vals;
}

}  // namespace detail

/// Forward transform Phi(1/2 + i tau_k) on the dual tau-grid
/// tau_k = (k - N/2) * 2pi/(N h), k = 0..N-1, via one FFT of the trapezoid
/// samples of f(e^u) e^{u/2}.  Requires an even node count.  Inputs that have
/// not decayed at the grid edges (relative magnitude above `edge_tol`) raise
/// decay_contract_error; pass edge_tol = 1.0 for functions supported exactly
/// on the window, where the half-weight endpoints are the correct treatment
/// of the boundary jump.
inline CriticalLineFunction mellin_forward(const GridFunction& f, double edge_tol = 1e-5) {
  const RadialGrid& g = f.grid;
  const int n = g.count;
  if (n % 2 != 0)
    throw std::invalid_argument("mellin_forward: grid count must be even to center the tau-grid");
  std::vector<complex> a = detail::mellin_log_integrand(f, edge_tol, "mellin_forward");
  // Phi_k = h e^{i tau_k u_min} sum_j g_j e^{i tau_k j h} and tau_k j h =
  // 2pi j k / N - pi j, so the sum is the un-normalized inverse DFT of
  // (-1)^j g_j.
  for (int j = 1; j < n; j += 2) a[j] = -a[j];
  detail::fft(a, /*inverse=*/true);
  const double tau_step = 2.0 * std::numbers::pi / (n * g.h);
  std::vector<complex> phi(n);
  for (int k = 0; k < n; ++k) {
    const double tau = (k - n / 2) * tau_step;
    phi[k] = g.h * static_cast<double>(n) * a[k] * std::polar(1.0, tau * g.u_min);
  }
  return CriticalLineFunction{tau_step, n, std::move(phi)};
}

/// Forward transform at a single (arbitrary) tau, by direct summation of the
/// same trapezoid rule the FFT path uses.  Same edge-decay contract.
inline complex mellin_forward_at(const GridFunction& f, double tau, double edge_tol = 1e-5) {
  const RadialGrid& g = f.grid;
  const std::vector<complex> vals =
      detail::mellin_log_integrand(f, edge_tol, "mellin_forward_at");
  // Horner in the unit phase e^{i tau h}: sum_j g_j e^{i tau j h}.  The
  // recurrence compounds rounding over N unimodular multiplies, so it is
  // accumulated in extended precision.
  const std::complex<long double> w{std::cos(static_cast<long double>(tau) * g.h),
                                    std::sin(static_cast<long double>(tau) * g.h)};
  std::complex<long double> acc{0.0L, 0.0L};
  for (int j = g.count - 1; j >= 0; --j)
    acc = acc * w + std::complex<long double>(vals[j].real(), vals[j].imag());
  const complex sum{static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
  return g.h * sum * std::polar(1.0, tau * g.u_min);
}

/// Inverse transform onto a radial grid.  When the image sits on the exact
/// dual tau-grid of `grid` (tau_step * N * h = 2pi, matching counts), the
/// discrete forward map is inverted exactly by one FFT -- endpoint half
/// weights undone -- so a forward/inverse round trip returns the original
/// samples to rounding error.  Otherwise the inversion integral
/// f(t) = (tau_step/2pi) sum_k Phi_k t^{-1/2 - i tau_k} is discretized
/// directly.  The image must have decayed at the tau-grid edges (relative
/// magnitude below `edge_tol`).
inline GridFunction mellin_inverse(const CriticalLineFunction& phi, const RadialGrid& grid,
                                   double edge_tol = 1e-5) {
  const int m = phi.count;
  if (m <= 0 || static_cast<int>(phi.values.size()) != m)
    throw std::invalid_argument("mellin_inverse: malformed critical-line function");
  double peak = 0.0;
  for (const complex& v : phi.values) peak = std::max(peak, std::abs(v));
  std::vector<complex> out(grid.count);
  if (peak == 0.0) return GridFunction{grid, std::move(out)};
  const double lo = std::abs(phi.values.front()) / peak;
  const double hi = std::abs(phi.values.back()) / peak;
  if (!(lo <= edge_tol) || !(hi <= edge_tol))
    throw decay_contract_error(
        "mellin_inverse: the image has not decayed at the tau-grid edges (edge/peak = " +
        std::to_string(std::max(lo, hi)) + ", edge_tol = " + std::to_string(edge_tol) + ")");

  const double two_pi = 2.0 * std::numbers::pi;
  const bool dual = (m == grid.count) &&
                    (std::abs(phi.tau_step * m * grid.h - two_pi) <= 1e-12 * two_pi);
  if (dual) {
    // Exact inversion of the forward FFT: recover (-1)^j g_j, strip the sign
    // and the e^{u/2} weight, and undo the trapezoid's endpoint half weights
    // so the original samples come back.
    std::vector<complex> a(m);
    const double scale = 1.0 / (grid.h * m);
    for (int k = 0; k < m; ++k) {
      const double tau = (k - m / 2) * phi.tau_step;
      a[k] = phi.values[k] * std::polar(1.0, -tau * grid.u_min) * scale;
    }
    detail::fft(a, /*inverse=*/false);
    for (int j = 0; j < grid.count; ++j) {
      const double sign = (j % 2 == 0) ? 1.0 : -1.0;
      out[j] = sign * a[j] * std::exp(-0.5 * grid.u(j));
    }
    out.front() *= 2.0;
    out.back() *= 2.0;
    return GridFunction{grid, std::move(out)};
  }

  for (int j = 0; j < grid.count; ++j) {
    const double u = grid.u(j);
    // Horner in e^{-i tau_step u}; the tau_k = (k - M/2) tau_step offset is
    // restored by one outer phase.  Extended-precision accumulation keeps the
    // compounded rounding of M unimodular multiplies below the pointwise
    // tolerances even where the result is many orders below the image peak.
    const long double ang = -static_cast<long double>(phi.tau_step) * u;
    const std::complex<long double> w{std::cos(ang), std::sin(ang)};
    std::complex<long double> acc{0.0L, 0.0L};
    for (int k = m - 1; k >= 0; --k)
      acc = acc * w + std::complex<long double>(phi.values[k].real(), phi.values[k].imag());
    const complex sum{static_cast<double>(acc.real()), static_cast<double>(acc.imag())};
    out[j] = (phi.tau_step / two_pi) * sum * std::polar(1.0, 0.5 * m * phi.tau_step * u) *
             std::exp(-0.5 * u);
  }
  return GridFunction{grid, std::move(out)};
}

/// Convenience constructor: a function together with its forward image.
inline MellinPair mellin_pair(const GridFunction& f, double edge_tol = 1e-5) {
  return MellinPair{f, mellin_forward(f, edge_tol)};
}

/// Relative residual of the Parseval identity
///   ||f||_2^2 = (1/2pi) * tau_step * sum_k |Phi_k|^2,
/// with the left side from the radial quadrature and the right side from the
/// plain Riemann sum over the tau-grid.
inline double parseval_residual(const MellinPair& pair) {
  const double n = l2_norm(pair.source);
  const double lhs = n * n;
  double sum = 0.0;
  for (const complex& v : pair.image.values) sum += std::norm(v);
  const double rhs = pair.image.tau_step * sum / (2.0 * std::numbers::pi);
  if (lhs == 0.0) return rhs == 0.0 ? 0.0 : std::numeric_limits<double>::infinity();
  return std::abs(lhs - rhs) / lhs;
}

/// The critical-line multiplier tying the Mellin image of a transformed
/// function to the reflected image of the original:
///   Phi_{Cx}(zeta) = m_c(zeta) Phi_x(1 - zeta),   zeta = 1/2 + i tau,
/// with m_c(zeta) = 2^{zeta - 1/2} Gamma(zeta/2) / Gamma((1 - zeta)/2) and
/// m_s(zeta) = 2^{zeta - 1/2} Gamma((1 + zeta)/2) / Gamma(1 - zeta/2).  Both
/// are unimodular on the line and equal the square of the corresponding
/// eigenfunction phase.
inline complex titchmarsh_multiplier(Family family, complex zeta) {
  if (!(std::abs(zeta.real() - 0.5) <= 1e-9))
    throw std::invalid_argument("titchmarsh_multiplier: zeta must lie on the critical line");
  const complex half{0.5, 0.0};
  const complex one{1.0, 0.0};
  complex log_ratio;
  if (family == Family::cosine)
    log_ratio = log_gamma(0.5 * zeta) - log_gamma(0.5 * (one - zeta));
  else
    log_ratio = log_gamma(0.5 * (one + zeta)) - log_gamma(one - 0.5 * zeta);
  return std::exp((zeta - half) * std::numbers::ln2 + log_ratio);
}

/// End-to-end check of the multiplier relation: transforms x, takes the
/// Mellin image of both x and its transform on the shared dual tau-grid, and
/// returns the largest mismatch
///   |Phi_{Tx}(1/2 + i tau) - m(1/2 + i tau) Phi_x(1/2 - i tau)|
/// over the central half of the tau-grid (the outer quarters sit at
/// frequencies the radial grid cannot support), relative to the peak of
/// |Phi_{Tx}| on that central half.
inline double verify_multiplier_relation(const GridFunction& x, Family family,
                                         const TransformConfig& config = {}) {
  const GridFunction tx = family == Family::cosine ? cosine_transform(x, config)
                                                   : sine_transform(x, config);
  const CriticalLineFunction phi_x = mellin_forward(x);
  const CriticalLineFunction phi_tx = mellin_forward(tx);
  const int m = phi_x.count;
  double peak = 0.0;
  for (int k = m / 4; k < 3 * m / 4; ++k) peak = std::max(peak, std::abs(phi_tx.values[k]));
  if (peak == 0.0) return 0.0;
  double worst = 0.0;
  for (int k = m / 4; k < 3 * m / 4; ++k) {
    // Phi_x at -tau_k lives at the mirrored index m - k.
    const complex mult = titchmarsh_multiplier(family, complex{0.5, phi_tx.tau(k)});
    const complex rhs = mult * phi_x.values[m - k];
    worst = std::max(worst, std::abs(phi_tx.values[k] - rhs) / peak);
  }
  return worst;
}

}  // namespace selfrecip
