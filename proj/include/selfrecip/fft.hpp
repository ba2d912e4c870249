#pragma once

// In-place complex FFT (radix-2 for power-of-two sizes, Bluestein chirp
// convolution otherwise) plus the DCT-I / DST-I wrappers used by the
// uniform-grid fast transform path. Header-only, no external dependencies.

#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <utility>
#include <vector>

namespace selfrecip {

using complex = std::complex<double>;

namespace detail {

inline bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_pow2(std::size_t n) {
  std::size_t p = 1;
  while (p < n) p <<= 1;
  return p;
}

// Radix-2 iterative FFT with a precomputed twiddle table; forward uses
// exp(-2*pi*i*jk/n). The inverse divides by n.
inline void fft_pow2(std::vector<complex>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  if (!is_pow2(n)) throw std::invalid_argument("fft_pow2: size must be a power of two");

  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }

  const double sign = inverse ? 1.0 : -1.0;
  std::vector<complex> tw(n / 2);
  for (std::size_t k = 0; k < n / 2; ++k)
    tw[k] = std::polar(1.0, sign * 2.0 * std::numbers::pi *
                                static_cast<double>(k) / static_cast<double>(n));

  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const complex w = tw[k * stride];
        const complex u = a[i + k];
        const complex v = a[i + k + len / 2] * w;
        a[i + k] = u + v;
        a[i + k + len / 2] = u - v;
      }
    }
  }

  if (inverse) {
    const double inv = 1.0 / static_cast<double>(n);
    for (auto& z : a) z *= inv;
  }
}

// Arbitrary-size DFT via the Bluestein chirp transform. The quadratic phase
// is reduced with k^2 mod 2n so the angle stays accurate for large k.
inline void fft_bluestein(std::vector<complex>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  const double sign = inverse ? 1.0 : -1.0;
  const std::uint64_t two_n = 2 * static_cast<std::uint64_t>(n);

  auto chirp = [&](std::size_t k) {
    const std::uint64_t q = (static_cast<std::uint64_t>(k) * k) % two_n;
    return std::polar(1.0, sign * std::numbers::pi * static_cast<double>(q) /
                               static_cast<double>(n));
  };

  const std::size_t m = next_pow2(2 * n - 1);
  std::vector<complex> u(m, complex{0.0, 0.0});
  std::vector<complex> v(m, complex{0.0, 0.0});
  for (std::size_t j = 0; j < n; ++j) {
    const complex c = chirp(j);
    u[j] = a[j] * c;
    const complex cc = std::conj(c);
    v[j] = cc;
    if (j != 0) v[m - j] = cc;
  }
  fft_pow2(u, false);
  fft_pow2(v, false);
  for (std::size_t j = 0; j < m; ++j) u[j] *= v[j];
  fft_pow2(u, true);
  for (std::size_t k = 0; k < n; ++k) a[k] = u[k] * chirp(k);
  if (inverse) {
    const double invn = 1.0 / static_cast<double>(n);
    for (auto& z : a) z *= invn;
  }
}

inline void fft(std::vector<complex>& a, bool inverse) {
  if (is_pow2(a.size()))
    fft_pow2(a, inverse);
  else
    fft_bluestein(a, inverse);
}

// DCT-I with trapezoid end-halving: given x_0..x_M returns, for k = 0..M,
//   C_k = x_0/2 + sum_{j=1}^{M-1} x_j cos(pi j k / M) + (-1)^k x_M / 2,
// computed from one size-2M FFT of the even extension (no conjugation, so
// complex-valued inputs are handled directly).
inline std::vector<complex> dct1_halfweight(const std::vector<complex>& x) {
  const std::size_t m = x.size() - 1;
  if (x.size() < 2 || !is_pow2(m))
    throw std::invalid_argument("dct1_halfweight: need 2^p + 1 samples");
  std::vector<complex> y(2 * m, complex{0.0, 0.0});
  for (std::size_t j = 0; j <= m; ++j) y[j] = x[j];
  for (std::size_t j = 1; j < m; ++j) y[2 * m - j] = x[j];
  fft_pow2(y, false);
  std::vector<complex> out(m + 1);
  for (std::size_t k = 0; k <= m; ++k) out[k] = 0.5 * y[k];
  return out;
}

// DST-I companion: returns, for k = 0..M,
//   S_k = sum_{j=1}^{M-1} x_j sin(pi j k / M)
// from the odd extension (endpoints of x are ignored).
inline std::vector<complex> dst1(const std::vector<complex>& x) {
  const std::size_t m = x.size() - 1;
  if (x.size() < 2 || !is_pow2(m))
    throw std::invalid_argument("dst1: need 2^p + 1 samples");
  std::vector<complex> y(2 * m, complex{0.0, 0.0});
  for (std::size_t j = 1; j < m; ++j) {
    y[j] = x[j];
    y[2 * m - j] = -x[j];
  }
  fft_pow2(y, false);
  std::vector<complex> out(m + 1);
  const complex half_i{0.0, 0.5};
  for (std::size_t k = 0; k <= m; ++k) out[k] = half_i * y[k];
  return out;
}

}  // namespace detail
}  // namespace selfrecip
