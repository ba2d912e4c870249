// SPDX-License-Identifier: MIT
//
// The half-line cosine and sine transforms
//   (Cx)(t) = sqrt(2/pi) int_0^inf cos(t xi) x(xi) dxi,
//   (Sx)(t) = sqrt(2/pi) int_0^inf sin(t xi) x(xi) dxi,
// realized two ways on the log grid:
//   * reference_quadrature: O(N^2) Filon product quadrature over panels of
//     grid nodes -- trigonometric moments exact per panel, only the smooth
//     factor interpolated -- plus a polynomial head panel on [0, t_lo];
//   * fast_uniform: resample to a uniform xi-grid, apply DCT-I / DST-I via
//     FFT, correct the trapezoid's xi = 0 endpoint bias by Euler-Maclaurin
//     terms (the dominant channel summed in closed form), and interpolate
//     back to the log grid.
// Also: the Hermite-type eigenfunctions h_k by recurrence, and the Parseval /
// eigenspace residual diagnostics.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "selfrecip/fft.hpp"
#include "selfrecip/grid.hpp"
#include "selfrecip/oscquad.hpp"
#include "selfrecip/special.hpp"

namespace selfrecip {

/// The input does not decay fast enough at the grid edge for the half-line
/// integral to be representable on the grid.
class decay_contract_error : public numeric_contract_error {
  using numeric_contract_error::numeric_contract_error;
};

enum class TransformMethod { reference_quadrature, fast_uniform };

struct TransformConfig {
  TransformMethod method = TransformMethod::reference_quadrature;
  int uniform_count = 4096;
  double tol = 1e-9;
};

namespace detail {

inline void check_decay(const GridFunction& x, double tol, const char* who) {
  const double edge = std::abs(x.values.back()) * x.grid.t_hi();
  if (!(edge < tol))
    throw decay_contract_error(
        std::string(who) +
        ": |x(t_N)| * t_N = " + std::to_string(edge) +
        " violates the decay contract (tol = " + std::to_string(tol) + ")");
}

// Degree-5 Newton-form extension of a grid function onto [0, t_lo), built
// from six nodes spread over roughly the first decade of the grid (narrower
// stencils of near-coincident log nodes would make leftward extrapolation
// ill-conditioned).
struct HeadPoly {
  std::array<double, 6> nodes{};
  std::array<complex, 6> coef{};
  int degree = 5;

  complex eval(double xi) const {
    complex acc = coef[degree];
    for (int i = degree - 1; i >= 0; --i) acc = acc * (xi - nodes[i]) + coef[i];
    return acc;
  }
};

inline HeadPoly build_head_poly(const GridFunction& x) {
  const RadialGrid& g = x.grid;
  int span = g.count - 1;
  const double decade = std::numbers::ln10;
  if (span * g.h > decade)
    span = std::max(5, static_cast<int>(std::llround(decade / g.h)));
  span = std::min(span, g.count - 1);

  HeadPoly p;
  for (int r = 0; r <= 5; ++r) {
    const int idx = static_cast<int>(std::llround(r * span / 5.0));
    p.nodes[r] = g.node(idx);
    p.coef[r] = x.values[idx];
  }
  for (int lvl = 1; lvl <= 5; ++lvl)
    for (int i = 5; i >= lvl; --i)
      p.coef[i] = (p.coef[i] - p.coef[i - 1]) / (p.nodes[i] - p.nodes[i - lvl]);
  return p;
}

// Value of x at arbitrary xi > 0 (or xi = 0): quintic interpolation in the
// log coordinate inside the grid, head polynomial below it.
inline complex grid_value(const GridFunction& x, const HeadPoly& head, double xi) {
  const RadialGrid& g = x.grid;
  if (xi < g.t_lo()) return head.eval(xi);
  double ri = (std::log(xi) - g.u_min) / g.h;
  ri = std::clamp(ri, 0.0, static_cast<double>(g.count - 1));
  return interpolate_uniform_quintic(x.values, ri);
}

// Finite-difference weights (Fornberg's recursion): c[j][k] is the weight of
// the sample at nodes[j] in the k-th derivative at z, k = 0..m (m <= 5).
inline std::vector<std::array<double, 6>> fornberg_weights(
    double z, const std::vector<double>& nodes, int m) {
  const int n = static_cast<int>(nodes.size());
  std::vector<std::array<double, 6>> c(n, std::array<double, 6>{});
  double c1 = 1.0;
  double c4 = nodes[0] - z;
  c[0][0] = 1.0;
  for (int i = 1; i < n; ++i) {
    const int mn = std::min(i, m);
    double c2 = 1.0;
    const double c5 = c4;
    c4 = nodes[i] - z;
    for (int j = 0; j < i; ++j) {
      const double c3 = nodes[i] - nodes[j];
      c2 *= c3;
      if (j == i - 1) {
        for (int k = mn; k >= 1; --k)
          c[i][k] = c1 * (k * c[i - 1][k - 1] - c5 * c[i - 1][k]) / c2;
        c[i][0] = -c1 * c5 * c[i - 1][0] / c2;
      }
      for (int k = mn; k >= 1; --k) c[j][k] = (c4 * c[j][k] - k * c[j][k - 1]) / c3;
      c[j][0] = c4 * c[j][0] / c3;
    }
    c1 = c2;
  }
  return c;
}

// Monomial coefficients of the polynomial through (sigma_i, v_i), i < n <= 4:
// Gaussian elimination with partial pivoting on the small Vandermonde system.
inline std::array<complex, 4> monomial_coeffs(const std::array<double, 4>& sigma,
                                              const std::array<complex, 4>& v, int n) {
  double a[4][4];
  std::array<complex, 4> b{};
  for (int i = 0; i < n; ++i) {
    double p = 1.0;
    for (int k = 0; k < n; ++k) {
      a[i][k] = p;
      p *= sigma[i];
    }
    b[i] = v[i];
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r][col]) > std::abs(a[piv][col])) piv = r;
    if (piv != col) {
      for (int k = 0; k < n; ++k) std::swap(a[col][k], a[piv][k]);
      std::swap(b[col], b[piv]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double f = a[r][col] / a[col][col];
      for (int k = col; k < n; ++k) a[r][k] -= f * a[col][k];
      b[r] -= f * b[col];
    }
  }
  std::array<complex, 4> coeff{};
  for (int row = n - 1; row >= 0; --row) {
    complex acc = b[row];
    for (int k = row + 1; k < n; ++k) acc -= a[row][k] * coeff[k];
    coeff[row] = acc / a[row][row];
  }
  return coeff;
}

// Reference path: evaluates sqrt(2/pi) int_0^inf trig(t xi) x(xi) dxi at the
// requested t values by per-panel Filon quadrature. Panels cover three grid
// intervals each (a shorter final panel absorbs the remainder); the monomial
// coefficients of the smooth factor are precomputed per panel, so only the
// trigonometric moments depend on t.
inline std::vector<complex> reference_transform(const GridFunction& x, Family family,
                                                const std::vector<double>& ts) {
  const RadialGrid& g = x.grid;
  const int n = g.count;
  const bool want_cos = family == Family::cosine;

  struct Panel {
    double a = 0.0;
    double delta = 0.0;
    int deg = 3;
    std::array<complex, 4> m{};
  };
  std::vector<Panel> panels;
  panels.reserve(static_cast<std::size_t>(n) / 3 + 1);
  int i0 = 0;
  while (i0 < n - 1) {
    const int deg = std::min(3, n - 1 - i0);
    Panel p;
    p.a = g.node(i0);
    p.delta = g.node(i0 + deg) - p.a;
    p.deg = deg;
    std::array<double, 4> sigma{};
    std::array<complex, 4> v{};
    for (int i = 0; i <= deg; ++i) {
      sigma[i] = (g.node(i0 + i) - p.a) / p.delta;
      v[i] = x.values[i0 + i];
    }
    p.m = monomial_coeffs(sigma, v, deg + 1);
    panels.push_back(p);
    i0 += deg;
  }

  // Head region [0, t_lo]: three uniform cubic Filon sub-panels on the
  // polynomial extension of x.
  const HeadPoly head = build_head_poly(x);
  const double head_w = g.t_lo() / 3.0;
  std::array<std::array<complex, 4>, 3> head_v{};
  for (int q = 0; q < 3; ++q)
    for (int i = 0; i < 4; ++i)
      head_v[q][i] = head.eval(head_w * (q + i / 3.0));

  const double front = std::sqrt(2.0 / std::numbers::pi);
  std::vector<complex> out(ts.size());
  for (std::size_t it = 0; it < ts.size(); ++it) {
    const double t = ts[it];
    complex acc{0.0, 0.0};
    for (int q = 0; q < 3; ++q) {
      const auto w = filon_panel_weights(q * head_w, head_w, t);
      for (int i = 0; i < 4; ++i)
        acc += (want_cos ? w[i].real() : w[i].imag()) * head_v[q][i];
    }
    for (const Panel& p : panels) {
      const auto mu = filon_moments(t * p.delta);
      const complex phase = std::polar(1.0, t * p.a);
      for (int k = 0; k <= p.deg; ++k) {
        const complex wk = phase * mu[k];
        acc += p.delta * (want_cos ? wk.real() : wk.imag()) * p.m[k];
      }
    }
    out[it] = front * acc;
  }
  return out;
}

// Euler-Maclaurin endpoint correction for the uniform trapezoid of
// int_0^inf trig(t xi) x(xi) dxi with spacing delta. The channel multiplying
// the lowest one-sided derivative (x(0) for sine, x'(0) for cosine) is the
// dominant one at large t; its correction series in (t delta)^2 is summed in
// closed form (cot / csc^2), the higher channels through the delta^6 order.
inline complex em_correction(Family family, double t, double delta, const complex* d) {
  const double u = 0.5 * t * delta;
  const double d2 = delta * delta;
  const double d4 = d2 * d2;
  const double d6 = d4 * d2;
  if (family == Family::cosine) {
    double chan;  // delta^2/(4 sin^2 u) - 1/t^2
    if (std::abs(u) < 0.35) {
      const double u2 = u * u;
      chan = 0.25 * d2 *
             (1.0 / 3.0 + u2 * (1.0 / 15.0 + u2 * (2.0 / 189.0 + u2 / 675.0)));
    } else {
      const double s = std::sin(u);
      chan = 0.25 * d2 / (s * s) - 1.0 / (t * t);
    }
    return d[1] * chan - (d4 / 720.0) * d[3] +
           (d6 / 30240.0) * (-10.0 * t * t * d[3] + d[5]);
  }
  double chan;  // 1/t - (delta/2) cot u
  if (std::abs(u) < 0.35) {
    const double u2 = u * u;
    chan = 0.5 * delta * u *
           (1.0 / 3.0 + u2 * (1.0 / 45.0 + u2 * (2.0 / 945.0 + u2 / 4725.0)));
  } else {
    chan = 1.0 / t - 0.5 * delta * std::cos(u) / std::sin(u);
  }
  return d[0] * chan - (d4 / 720.0) * (3.0 * t * d[2]) +
         (d6 / 30240.0) * (-10.0 * t * t * t * d[2] + 5.0 * t * d[4]);
}

// Fast path: uniform resampling, zero padding, DCT-I / DST-I via FFT,
// endpoint correction, quintic interpolation back to the log grid.
inline GridFunction fast_transform(const GridFunction& x, Family family,
                                   const TransformConfig& cfg) {
  const RadialGrid& g = x.grid;
  if (cfg.uniform_count < 1024)
    throw std::invalid_argument(
        "TransformConfig: fast_uniform requires uniform_count >= 1024");

  const double xi_max = g.t_hi();
  const double t_max = g.t_hi();
  const double need = 8.0 * xi_max * t_max / std::numbers::pi;
  const std::size_t m = next_pow2(std::max(
      static_cast<std::size_t>(cfg.uniform_count),
      static_cast<std::size_t>(std::ceil(need))));
  if (m > (std::size_t{1} << 17))
    throw std::invalid_argument(
        "fast_uniform: grid span times bandwidth is too large for the uniform "
        "path; use reference_quadrature");
  const double delta = xi_max / static_cast<double>(m);
  const std::size_t m_tot = 8 * m;

  const HeadPoly head = build_head_poly(x);
  std::vector<complex> s(m_tot + 1, complex{0.0, 0.0});
  for (std::size_t j = 0; j <= m; ++j)
    s[j] = grid_value(x, head, static_cast<double>(j) * delta);

  // One-sided derivative estimates d_0..d_5 at xi = 0 for the endpoint
  // correction, from the first ten uniform samples.
  std::vector<double> fd_nodes(10);
  for (int j = 0; j < 10; ++j) fd_nodes[j] = j * delta;
  const auto fw = fornberg_weights(0.0, fd_nodes, 5);
  complex d[6];
  for (int k = 0; k <= 5; ++k) {
    complex acc{0.0, 0.0};
    for (int j = 0; j < 10; ++j) acc += fw[j][k] * s[j];
    d[k] = acc;
  }

  const std::vector<complex> spectrum =
      family == Family::cosine ? dct1_halfweight(s) : dst1(s);
  const double t_step = std::numbers::pi / (static_cast<double>(m_tot) * delta);
  const double front = std::sqrt(2.0 / std::numbers::pi);

  std::vector<complex> out(g.count);
  for (int i = 0; i < g.count; ++i) {
    const double t = g.node(i);
    const complex base = interpolate_uniform_quintic(spectrum, t / t_step);
    out[i] = front * (delta * base + em_correction(family, t, delta, d));
  }
  return GridFunction{g, std::move(out)};
}

inline GridFunction transform(const GridFunction& x, Family family,
                              const TransformConfig& cfg) {
  const char* who = family == Family::cosine ? "cosine_transform" : "sine_transform";
  check_decay(x, cfg.tol, who);
  if (cfg.method == TransformMethod::fast_uniform) return fast_transform(x, family, cfg);
  std::vector<double> ts(x.grid.count);
  for (int i = 0; i < x.grid.count; ++i) ts[i] = x.grid.node(i);
  return GridFunction{x.grid, reference_transform(x, family, ts)};
}

}  // namespace detail

/// (Cx)(t) = sqrt(2/pi) int_0^inf cos(t xi) x(xi) dxi on x's grid.
inline GridFunction cosine_transform(const GridFunction& x, const TransformConfig& cfg = {}) {
  return detail::transform(x, Family::cosine, cfg);
}

/// (Sx)(t) = sqrt(2/pi) int_0^inf sin(t xi) x(xi) dxi on x's grid.
inline GridFunction sine_transform(const GridFunction& x, const TransformConfig& cfg = {}) {
  return detail::transform(x, Family::sine, cfg);
}

/// h_k(t) = e^{t^2/2} (d/dt)^k e^{-t^2}, sampled on the grid via the stable
/// recurrence h_k = -2t h_{k-1} - 2(k-1) h_{k-2}, h_0 = e^{-t^2/2},
/// h_1 = -2t e^{-t^2/2}.
inline GridFunction hermite(int k, const RadialGrid& grid) {
  if (k < 0 || k > 200)
    throw std::invalid_argument("hermite: order must lie in [0, 200], got " +
                                std::to_string(k));
  std::vector<complex> values(grid.count);
  for (int j = 0; j < grid.count; ++j) {
    const double t = grid.node(j);
    double a = std::exp(-0.5 * t * t);
    double b = -2.0 * t * a;
    double h;
    if (k == 0)
      h = a;
    else if (k == 1)
      h = b;
    else {
      h = 0.0;
      for (int mth = 2; mth <= k; ++mth) {
        h = -2.0 * t * b - 2.0 * (mth - 1) * a;
        a = b;
        b = h;
      }
    }
    values[j] = h;
  }
  return GridFunction{grid, std::move(values)};
}

/// | ||Tx||^2 - ||x||^2 | / ||x||^2 for T in {C, S}; 0 for x = 0.
inline double parseval_residual(const GridFunction& x, Family family,
                                const TransformConfig& cfg = {}) {
  const double nx = l2_norm(x);
  if (nx == 0.0) return 0.0;
  const GridFunction tx = detail::transform(x, family, cfg);
  const double nt = l2_norm(tx);
  return std::abs(nt * nt - nx * nx) / (nx * nx);
}

/// ||Tx -+ x||_2 / ||x||_2 for T in {C, S}: how far x is from the +/-1
/// eigenspace of the chosen transform.
inline double eigen_residual(const GridFunction& x, Family family, Sign sign,
                             const TransformConfig& cfg = {}) {
  const double nx = l2_norm(x);
  if (nx == 0.0) return 0.0;
  GridFunction tx = detail::transform(x, family, cfg);
  const double s = sign == Sign::plus ? 1.0 : -1.0;
  for (int j = 0; j < x.grid.count; ++j) tx.values[j] -= s * x.values[j];
  return l2_norm(tx) / nx;
}

}  // namespace selfrecip
