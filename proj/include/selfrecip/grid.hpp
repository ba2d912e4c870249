// SPDX-License-Identifier: MIT
//
// Discrete carriers for functions on the half line (0, inf) and on the
// critical line Re = 1/2: a log-uniform radial grid t_j = exp(u_min + j h),
// sampled complex functions on it with L2 norm / inner product, cubic
// log-coordinate resampling, and the symmetric tau-grid type that carries
// Mellin images.

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include "selfrecip/special.hpp"

namespace selfrecip {

/// Log-uniform grid on (0, inf): nodes t_j = exp(u_min + j h), j = 0..count-1.
struct RadialGrid {
  double u_min = 0.0;
  double h = 0.0;
  int count = 0;

  double u(int j) const { return u_min + j * h; }
  // Nodes are evaluated in extended precision so that the ratio
  // t_{j+1}/t_j stays constant to double rounding across the grid.
  double node(int j) const {
    return static_cast<double>(
        std::exp(static_cast<long double>(u_min) + static_cast<long double>(j) *
                                                       static_cast<long double>(h)));
  }
  double t_lo() const { return node(0); }
  double t_hi() const { return node(count - 1); }

  friend bool operator==(const RadialGrid&, const RadialGrid&) = default;
};

/// Builds the log-uniform grid spanning [t_lo, t_hi] with N >= 16 nodes.
inline RadialGrid make_radial_grid(double t_lo, double t_hi, int n) {
  if (!(t_lo > 0.0) || !(t_hi > t_lo) || !std::isfinite(t_lo) || !std::isfinite(t_hi))
    throw std::invalid_argument("make_radial_grid: need 0 < t_lo < t_hi, both finite");
  if (n < 16)
    throw std::invalid_argument("make_radial_grid: need at least 16 nodes, got " +
                                std::to_string(n));
  RadialGrid g;
  g.u_min = std::log(t_lo);
  g.h = (std::log(t_hi) - std::log(t_lo)) / (n - 1);
  g.count = n;
  return g;
}

/// A complex function sampled on a RadialGrid.
struct GridFunction {
  RadialGrid grid;
  std::vector<complex> values;

  GridFunction() = default;
  GridFunction(RadialGrid g, std::vector<complex> v) : grid(g), values(std::move(v)) {
    if (static_cast<int>(values.size()) != grid.count)
      throw std::invalid_argument("GridFunction: value count does not match grid");
  }
};

/// Samples a callable t -> complex (or t -> double) on a grid.
template <class F>
GridFunction sample(const RadialGrid& grid, F&& f) {
  std::vector<complex> values(grid.count);
  for (int j = 0; j < grid.count; ++j) values[j] = complex(f(grid.node(j)));
  return GridFunction{grid, std::move(values)};
}

/// A function on the critical line sampled at tau_k = (k - M/2) * tau_step,
/// k = 0..M-1, M even (symmetric about tau = 0).
struct CriticalLineFunction {
  double tau_step = 0.0;
  int count = 0;
  std::vector<complex> values;

  CriticalLineFunction() = default;
  CriticalLineFunction(double step, int m, std::vector<complex> v)
      : tau_step(step), count(m), values(std::move(v)) {
    if (!(step > 0.0)) throw std::invalid_argument("CriticalLineFunction: tau_step must be > 0");
    if (m <= 0 || m % 2 != 0)
      throw std::invalid_argument("CriticalLineFunction: count must be even and positive");
    if (static_cast<int>(values.size()) != m)
      throw std::invalid_argument("CriticalLineFunction: value count mismatch");
  }

  double tau(int k) const { return (k - count / 2) * tau_step; }
};

namespace detail {

// Quadrature weights for integrals over (0, t_hi] on a log grid: trapezoid in
// u with dt = t du, plus the head term t_0 for node 0 (the exact integral of
// the constant extension of the integrand over [0, t_lo], which a log grid
// cannot otherwise reach).
inline std::vector<double> radial_quadrature_weights(const RadialGrid& g) {
  std::vector<double> w(g.count);
  for (int j = 0; j < g.count; ++j) {
    const double frac = (j == 0 || j == g.count - 1) ? 0.5 : 1.0;
    w[j] = g.node(j) * g.h * frac;
  }
  w[0] += g.node(0);
  return w;
}

}  // namespace detail

/// Trapezoidal L2(0, inf) norm on the log grid (dt = t du), with the [0, t_lo]
/// head closed by constant extension of |f|^2.
inline double l2_norm(const GridFunction& f) {
  const auto w = detail::radial_quadrature_weights(f.grid);
  double acc = 0.0;
  for (int j = 0; j < f.grid.count; ++j) acc += w[j] * std::norm(f.values[j]);
  return std::sqrt(acc);
}

/// Inner product <f, g> = integral conj(f) g dt, conjugate-linear in the first
/// slot, with the same quadrature weights as l2_norm.
inline complex inner_product(const GridFunction& f, const GridFunction& g) {
  if (!(f.grid == g.grid)) throw std::invalid_argument("inner_product: grid mismatch");
  const auto w = detail::radial_quadrature_weights(f.grid);
  complex acc = 0.0;
  for (int j = 0; j < f.grid.count; ++j) acc += w[j] * std::conj(f.values[j]) * g.values[j];
  return acc;
}

namespace detail {

// Cubic Lagrange interpolation of uniformly sampled data at fractional index
// ri (ri in node units). Values snap to the nearest node when ri is within
// 1e-12 of it, making shared nodes bitwise exact.
inline complex interpolate_uniform_cubic(const std::vector<complex>& v, double ri) {
  const int n = static_cast<int>(v.size());
  const double nearest = std::round(ri);
  if (std::abs(ri - nearest) < 1e-12 && nearest >= 0.0 && nearest < n)
    return v[static_cast<int>(nearest)];
  int j0 = static_cast<int>(std::floor(ri)) - 1;
  j0 = std::clamp(j0, 0, n - 4);
  const double x = ri - j0;  // in [~0, 3], relative to the 4-point stencil
  // Lagrange basis on nodes 0,1,2,3.
  const double l0 = -(x - 1) * (x - 2) * (x - 3) / 6.0;
  const double l1 = x * (x - 2) * (x - 3) / 2.0;
  const double l2 = -x * (x - 1) * (x - 3) / 2.0;
  const double l3 = x * (x - 1) * (x - 2) / 6.0;
  return l0 * v[j0] + l1 * v[j0 + 1] + l2 * v[j0 + 2] + l3 * v[j0 + 3];
}

// Degree-5 sibling of the cubic interpolator, used where the transform
// error budget is tighter than cubic-in-index accuracy allows.
inline complex interpolate_uniform_quintic(const std::vector<complex>& v, double ri) {
  const int n = static_cast<int>(v.size());
  const double nearest = std::round(ri);
  if (std::abs(ri - nearest) < 1e-12 && nearest >= 0.0 && nearest < n)
    return v[static_cast<int>(nearest)];
  if (n < 6) return interpolate_uniform_cubic(v, ri);
  int j0 = static_cast<int>(std::floor(ri)) - 2;
  j0 = std::clamp(j0, 0, n - 6);
  const double x = ri - j0;  // in [~0, 5], relative to the 6-point stencil
  complex acc{0.0, 0.0};
  for (int i = 0; i < 6; ++i) {
    double w = 1.0;
    for (int q = 0; q < 6; ++q)
      if (q != i) w *= (x - q) / static_cast<double>(i - q);
    acc += w * v[j0 + i];
  }
  return acc;
}

}  // namespace detail

/// Resamples f onto a target grid by cubic interpolation in the log
/// coordinate. The target range must lie inside the source range; shared
/// nodes are copied bitwise.
inline GridFunction resample(const GridFunction& f, const RadialGrid& target) {
  const RadialGrid& src = f.grid;
  const double u_max_src = src.u(src.count - 1);
  const double slack = 1e-12 * std::max(1.0, std::abs(u_max_src));
  std::vector<complex> out(target.count);
  for (int j = 0; j < target.count; ++j) {
    const double u = target.u(j);
    if (u < src.u_min - slack || u > u_max_src + slack)
      throw std::invalid_argument("resample: target node outside source range");
    out[j] = detail::interpolate_uniform_cubic(f.values, (u - src.u_min) / src.h);
  }
  return GridFunction{target, std::move(out)};
}

}  // namespace selfrecip
