// SPDX-License-Identifier: MIT
//
// Gamma-function machinery on the critical strip 0 < Re z < 1: principal-branch
// complex log-gamma, the classical Gamma identities as machine-checkable
// residuals, the kappa amplitude pair and its square-root branch rule, the unit
// phase factors on the critical line, and the closed form of the oscillatory
// power integrals  int_0^inf trig(s) s^{zeta-1} ds.

#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

namespace selfrecip {

using complex = std::complex<double>;

/// Kernel / eigenfunction family selector: the cosine or the sine transform.
enum class Family { cosine, sine };

/// Eigenvalue selector: the +1 or the -1 eigenspace / chain.
enum class Sign { plus, minus };

/// Thrown when a numerical contract (decay requirement, convergence of an
/// extrapolation, internal consistency bound) is violated at run time.
class numeric_contract_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline const char* to_string(Family f) { return f == Family::cosine ? "cosine" : "sine"; }
inline const char* to_string(Sign s) { return s == Sign::plus ? "plus" : "minus"; }

namespace detail {

// zeta(2) .. zeta(46), for the Taylor expansion of log Gamma(1+w).
inline constexpr double kZeta[45] = {
    1.6449340668482264, 1.2020569031595942, 1.0823232337111381, 1.03692775514337,
    1.0173430619844492, 1.008349277381923, 1.0040773561979444, 1.0020083928260821,
    1.000994575127818, 1.0004941886041194, 1.000246086553308, 1.0001227133475785,
    1.0000612481350588, 1.000030588236307, 1.0000152822594086, 1.0000076371976379,
    1.000003817293265, 1.0000019082127165, 1.0000009539620338, 1.0000004769329869,
    1.0000002384505027, 1.000000119219926, 1.000000059608189, 1.0000000298035034,
    1.0000000149015549, 1.0000000074507118, 1.000000003725334, 1.0000000018626598,
    1.0000000009313275, 1.0000000004656628, 1.000000000232831, 1.0000000001164155,
    1.0000000000582077, 1.0000000000291038, 1.000000000014552, 1.000000000007276,
    1.000000000003638, 1.000000000001819, 1.0000000000009095, 1.0000000000004547,
    1.0000000000002274, 1.0000000000001137, 1.0000000000000568, 1.0000000000000284,
    1.0000000000000142,
};

// log Gamma(1+w) for |w| <= 0.5:  -egamma*w + sum_{k>=2} (-1)^k zeta(k) w^k / k.
// Keeps full relative accuracy next to the zeros of log Gamma at z = 1, 2.
inline complex log_gamma_taylor_at_one(complex w) {
  complex sum = -std::numbers::egamma * w;
  complex wk = w;
  double sign = 1.0;  // (-1)^k for k = 2, 3, ...
  for (int k = 2; k <= 46; ++k) {
    wk *= w;
    const complex term = sign * kZeta[k - 2] / static_cast<double>(k) * wk;
    sum += term;
    sign = -sign;
    if (std::abs(term) < 1e-18 * (std::abs(sum) + 1e-300)) break;
  }
  return sum;
}

// Stirling expansion, valid to ~1e-17 relative for |z| >= 16, Re z > 0:
// (z-1/2) Log z - z + ln(2 pi)/2 + sum_n B_{2n} / ((2n)(2n-1) z^{2n-1}).
inline complex log_gamma_stirling(complex z) {
  constexpr double c[8] = {
      1.0 / 12, -1.0 / 360, 1.0 / 1260, -1.0 / 1680,
      1.0 / 1188, -691.0 / 360360, 1.0 / 156, -3617.0 / 122400,
  };
  const complex inv2 = 1.0 / (z * z);
  complex series = complex{c[7], 0.0};
  for (int n = 6; n >= 0; --n) series = series * inv2 + c[n];
  series /= z;
  constexpr double half_ln_2pi = 0.91893853320467274178;
  return (z - 0.5) * std::log(z) - z + half_ln_2pi + series;
}

}  // namespace detail

/// Principal branch of log Gamma (continuous on the plane cut along
/// (-inf, 0], real on the positive real axis). Relative accuracy ~1e-14
/// on the strip 0 < Re z < 1 with |Im z| <= 100. Throws std::domain_error
/// at the poles z = 0, -1, -2, ... and on the cut, std::invalid_argument
/// on a non-finite argument.
inline complex log_gamma(complex z) {
  using namespace detail;
  if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
    throw std::invalid_argument("log_gamma: non-finite argument");
  if (z.imag() == 0.0 && z.real() <= 0.0) {
    if (z.real() == std::floor(z.real()))
      throw std::domain_error("log_gamma: pole at the non-positive integer " +
                              std::to_string(z.real()));
    throw std::domain_error("log_gamma: argument on the branch cut (-inf, 0]");
  }
  if (z.imag() < 0.0) return std::conj(log_gamma(std::conj(z)));

  // Im z >= 0 from here on.
  if (std::abs(z - 1.0) <= 0.5) return log_gamma_taylor_at_one(z - 1.0);
  if (std::abs(z - 2.0) <= 0.5) return std::log(z - 1.0) + log_gamma_taylor_at_one(z - 2.0);
  if (z.real() < 0.5) {
    // Reflection. For Im z >= 0 the branch of log sin(pi z) that makes the
    // principal-branch identity log Gamma(z) + log Gamma(1-z) = log(pi / sin(pi z))
    // exact is  i pi/2 - i pi z - ln 2 + Log(1 - e^{2 i pi z}).
    const complex log_sin = complex{0.0, std::numbers::pi / 2} -
                            complex{0.0, std::numbers::pi} * z - std::numbers::ln2 +
                            std::log(1.0 - std::exp(complex{0.0, 2 * std::numbers::pi} * z));
    return std::log(std::numbers::pi) - log_sin - log_gamma(1.0 - z);
  }
  complex shifted = z;
  complex shift_logs = 0.0;
  while (std::abs(shifted) < 16.0) {
    shift_logs += std::log(shifted);
    shifted += 1.0;
  }
  return log_gamma_stirling(shifted) - shift_logs;
}

/// Gamma itself via exp(log_gamma); safe wherever |Re log Gamma| < 709.
inline complex gamma(complex z) { return std::exp(log_gamma(z)); }

/// A point constrained to the open critical strip 0 < Re < 1, with a guard
/// margin that rejects values too close to the boundary for the kappa and
/// power-integral formulas to be well conditioned.
class StripPoint {
 public:
  static constexpr double kMargin = 1e-9;

  explicit StripPoint(complex v) : value_(v) {
    if (!std::isfinite(v.real()) || !std::isfinite(v.imag()))
      throw std::invalid_argument("StripPoint: non-finite value");
    if (!(v.real() > kMargin && v.real() < 1.0 - kMargin))
      throw std::invalid_argument(
          "StripPoint: Re = " + std::to_string(v.real()) +
          " is outside the open strip (0, 1) (margin 1e-9)");
  }

  complex value() const { return value_; }

 private:
  complex value_;
};

/// Relative residuals of the classical Gamma identities at one point:
///   recurrence    Gamma(z+1) = z Gamma(z)
///   reflection    Gamma(z) Gamma(1-z) = pi / sin(pi z)
///   duplication   Gamma(z) Gamma(z+1/2) = 2 sqrt(pi) 2^{-2z} Gamma(2z)
///   cosine_form   sqrt(2/pi) cos(pi z/2) Gamma(z) = 2^{z-1/2} Gamma(z/2) / Gamma(1/2 - z/2)
///   sine_form     sqrt(2/pi) sin(pi z/2) Gamma(z) = 2^{z-1/2} Gamma(1/2 + z/2) / Gamma(1 - z/2)
struct GammaIdentityResiduals {
  double recurrence;
  double reflection;
  double duplication;
  double cosine_form;
  double sine_form;

  double max() const {
    return std::max({recurrence, reflection, duplication, cosine_form, sine_form});
  }
};

/// Evaluates all five Gamma identities at a strip point and returns the
/// residuals |LHS - RHS| / |LHS|.
inline GammaIdentityResiduals verify_gamma_identities(StripPoint p) {
  const complex z = p.value();
  const double pi = std::numbers::pi;
  const auto rel = [](complex lhs, complex rhs) {
    return std::abs(lhs - rhs) / std::abs(lhs);
  };

  const complex lg_z = log_gamma(z);
  const complex rec_lhs = std::exp(log_gamma(z + 1.0));
  const complex rec_rhs = z * std::exp(lg_z);

  const complex refl_lhs = std::exp(lg_z + log_gamma(1.0 - z));
  const complex refl_rhs = pi / std::sin(pi * z);

  const complex dup_lhs = std::exp(lg_z + log_gamma(z + 0.5));
  const complex dup_rhs =
      2.0 * std::sqrt(pi) * std::exp(-2.0 * z * std::numbers::ln2 + log_gamma(2.0 * z));

  const double sqrt_2_over_pi = std::sqrt(2.0 / pi);
  const complex cos_lhs = sqrt_2_over_pi * std::cos(pi * z / 2.0) * std::exp(lg_z);
  const complex cos_rhs =
      std::exp((z - 0.5) * std::numbers::ln2 + log_gamma(z / 2.0) - log_gamma(0.5 - z / 2.0));

  const complex sin_lhs = sqrt_2_over_pi * std::sin(pi * z / 2.0) * std::exp(lg_z);
  const complex sin_rhs =
      std::exp((z - 0.5) * std::numbers::ln2 + log_gamma(0.5 + z / 2.0) - log_gamma(1.0 - z / 2.0));

  return GammaIdentityResiduals{rel(rec_lhs, rec_rhs), rel(refl_lhs, refl_rhs),
                                rel(dup_lhs, dup_rhs), rel(cos_lhs, cos_rhs),
                                rel(sin_lhs, sin_rhs)};
}

/// The amplitude pair kappa(a), kappa(1-a) of one transform family together
/// with the square roots used by the generalized eigenfunctions.
///
/// Branch rule: sqrt_kappa_one_minus_a is the principal square root of
/// kappa(1-a) and sqrt_kappa_a := 1 / sqrt_kappa_one_minus_a, so that the
/// product of the two square roots is exactly 1 and the eigenfunction
/// redundancy relations hold identically in a.
struct KappaPair {
  complex kappa_a;
  complex kappa_one_minus_a;
  complex sqrt_kappa_a;
  complex sqrt_kappa_one_minus_a;
};

/// kappa for the cosine family:
///   kappa(a)   = 2^{1/2-a} Gamma(1/2 - a/2) / Gamma(a/2)
///   kappa(1-a) = 2^{a-1/2} Gamma(a/2)      / Gamma(1/2 - a/2)
/// and for the sine family:
///   kappa(a)   = 2^{1/2-a} Gamma(1 - a/2)   / Gamma(1/2 + a/2)
///   kappa(1-a) = 2^{a-1/2} Gamma(1/2 + a/2) / Gamma(1 - a/2)
/// Both products kappa(a) kappa(1-a) equal 1 identically; the factory
/// computes the two factors independently and enforces the product to 1e-12.
inline KappaPair kappa(Family family, StripPoint a_point) {
  const complex a = a_point.value();
  complex log_kappa_a, log_kappa_one_minus_a;
  if (family == Family::cosine) {
    log_kappa_a = (0.5 - a) * std::numbers::ln2 + log_gamma(0.5 - a / 2.0) - log_gamma(a / 2.0);
    log_kappa_one_minus_a =
        (a - 0.5) * std::numbers::ln2 + log_gamma(a / 2.0) - log_gamma(0.5 - a / 2.0);
  } else {
    log_kappa_a = (0.5 - a) * std::numbers::ln2 + log_gamma(1.0 - a / 2.0) - log_gamma(0.5 + a / 2.0);
    log_kappa_one_minus_a =
        (a - 0.5) * std::numbers::ln2 + log_gamma(0.5 + a / 2.0) - log_gamma(1.0 - a / 2.0);
  }
  KappaPair pair;
  pair.kappa_a = std::exp(log_kappa_a);
  pair.kappa_one_minus_a = std::exp(log_kappa_one_minus_a);
  pair.sqrt_kappa_one_minus_a = std::sqrt(pair.kappa_one_minus_a);
  pair.sqrt_kappa_a = 1.0 / pair.sqrt_kappa_one_minus_a;
  if (std::abs(pair.kappa_a * pair.kappa_one_minus_a - 1.0) > 1e-12)
    throw numeric_contract_error("kappa: product kappa(a) kappa(1-a) deviates from 1");
  return pair;
}

/// Phase angle theta(tau) of the critical-line eigenfunctions:
///   cosine family: theta = (tau/2) ln 2 + arg Gamma(1/4 + i tau/2)
///   sine family:   theta = (tau/2) ln 2 + arg Gamma(3/4 + i tau/2)
/// arg Gamma is the continuous argument Im log_gamma, never reduced mod 2 pi.
inline double theta(Family family, double tau) {
  const double base = family == Family::cosine ? 0.25 : 0.75;
  return tau / 2.0 * std::numbers::ln2 + log_gamma(complex{base, tau / 2.0}).imag();
}

/// A unit-modulus phase factor c(tau) (cosine family) or s(tau) (sine family),
/// c(tau) = 2^{i tau/2} exp(i arg Gamma(1/4 + i tau/2)); conjugate-symmetric
/// in tau, equal to 1 at tau = 0.
struct PhaseFactor {
  double tau;
  complex value;
};

inline PhaseFactor phase(Family family, double tau) {
  if (!std::isfinite(tau)) throw std::invalid_argument("phase: non-finite tau");
  return PhaseFactor{tau, std::polar(1.0, theta(family, tau))};
}

/// Closed form of the conditionally convergent power-kernel integrals
///   int_0^inf cos(s) s^{zeta-1} ds = cos(pi zeta/2) Gamma(zeta)
///   int_0^inf sin(s) s^{zeta-1} ds = sin(pi zeta/2) Gamma(zeta)
/// on the strip 0 < Re zeta < 1 (regularized limit value).
inline complex closed_form_power_integral(Family family, StripPoint zeta_point) {
  const complex zeta = zeta_point.value();
  const complex trig = family == Family::cosine ? std::cos(std::numbers::pi * zeta / 2.0)
                                                : std::sin(std::numbers::pi * zeta / 2.0);
  return trig * std::exp(log_gamma(zeta));
}

}  // namespace selfrecip
