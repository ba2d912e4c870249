#pragma once

// Deterministic verification suites behind the command-line `verify`
// subcommand.  Each suite evaluates a fixed list of named checks -- pinned
// grids, pinned point sets, pinned tolerances, fixed evaluation order --
// and reports one residual per check.  Check names carry a stable cNN
// index so a report can be audited mechanically for coverage of every
// library-level guarantee:
//
//   c01  Gamma identity residuals across the strip
//   c02  kappa reflection product kappa(a) kappa(1-a) = 1
//   c03  regularized power-kernel integrals: closed form, agreement of the
//        eps and truncation paths, uniform exponential strip bound
//   c04  transform involution and Parseval on the decaying suite
//   c05  Hermite eigenfunction ladder with the period-4 sign pattern
//   c06  Mellin round-trip, Parseval, and the exponential's Gamma image
//   c07  critical-line multiplier relation and its phase-square identity
//   c08  chain isometry, adjoint identity, range property, projectors
//   c09  truncated broad-sense eigenfunction identity
//   c10  synthesis path agreement (direct quadrature vs inverse Mellin)
//   c11  pointwise envelope and L1 estimates
//
// A check that throws is reported as failed with an infinite residual
// instead of aborting the suite.  `tol_scale` multiplies every tolerance
// (the CLI maps the SELFRECIP_TOL environment variable onto it); 1.0 is
// the pinned default.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <complex>
#include <cstdint>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "selfrecip/cstransform.hpp"
#include "selfrecip/eigenchain.hpp"
#include "selfrecip/mellin.hpp"
#include "selfrecip/oscquad.hpp"
#include "selfrecip/special.hpp"

namespace selfrecip {

/// One named verification check: the measured residual against its pinned
/// (possibly rescaled) tolerance.
struct VerificationCheck {
  std::string name;
  double residual = 0.0;
  double tol = 0.0;
  bool pass = false;
};

/// A suite run: the checks in their fixed order plus the wall time.
struct VerificationReport {
  std::string suite;
  std::vector<VerificationCheck> checks;
  double wall_time_s = 0.0;
  bool all_pass = true;
};

inline const std::vector<std::string>& verification_suite_names() {
  static const std::vector<std::string> names{"gamma",  "lemma1", "transforms",
                                              "mellin", "chains", "all"};
  return names;
}

namespace detail {

class CheckRecorder {
 public:
  CheckRecorder(std::vector<VerificationCheck>& checks, double tol_scale)
      : checks_(checks), tol_scale_(tol_scale) {}

  void add(std::string name, double residual, double tol) {
    const double scaled = tol * tol_scale_;
    const bool pass = std::isfinite(residual) && residual <= scaled;
    checks_.push_back(VerificationCheck{std::move(name), residual, scaled, pass});
  }

  // Runs `body`; if it throws, records every check of the block as failed
  // with an infinite residual so one bad block cannot abort the suite.
  template <typename Body>
  void block(const std::vector<std::pair<const char*, double>>& names_tols, Body&& body) {
    const std::size_t before = checks_.size();
    try {
      body();
    } catch (const std::exception&) {
      checks_.resize(before);
      for (const auto& [name, tol] : names_tols)
        add(name, std::numeric_limits<double>::infinity(), tol);
    }
  }

 private:
  std::vector<VerificationCheck>& checks_;
  double tol_scale_;
};

// 53-bit uniform double in [0, 1) from the standard 64-bit Mersenne engine
// (the engine sequence is pinned by the standard; distributions are not).
inline double uniform_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// ---------------------------------------------------------------------------
// gamma suite: c01, c02
// ---------------------------------------------------------------------------

inline void run_gamma_suite(CheckRecorder& rec) {
  rec.block({{"c01.gamma.identities_strip_grid", 1e-11}}, [&] {
    double worst = 0.0;
    for (int i = 0; i < 40; ++i) {
      const double re = static_cast<double>(i + 1) / 41.0;
      for (int j = 0; j < 40; ++j) {
        const double im = -20.0 + 40.0 * static_cast<double>(j) / 39.0;
        worst = std::max(worst, verify_gamma_identities(StripPoint{complex{re, im}}).max());
      }
    }
    rec.add("c01.gamma.identities_strip_grid", worst, 1e-11);
  });

  rec.block({{"c02.gamma.kappa_reflection", 1e-12}}, [&] {
    std::mt19937_64 rng(0x5e1fc1a9u);
    double worst = 0.0;
    for (int i = 0; i < 1000; ++i) {
      const double re = 0.05 + 0.90 * uniform_unit(rng);
      const double im = -20.0 + 40.0 * uniform_unit(rng);
      const StripPoint a{complex{re, im}};
      for (Family family : {Family::cosine, Family::sine}) {
        const KappaPair pair = kappa(family, a);
        worst = std::max(worst, std::abs(pair.kappa_a * pair.kappa_one_minus_a - 1.0));
      }
    }
    rec.add("c02.gamma.kappa_reflection", worst, 1e-12);
  });
}

// ---------------------------------------------------------------------------
// lemma1 suite: c03
// ---------------------------------------------------------------------------

inline void run_lemma1_suite(CheckRecorder& rec) {
  rec.block({{"c03.lemma1.closed_form_eps_path", 1e-6}, {"c03.lemma1.path_agreement", 1e-6}},
            [&] {
              // 50 strip points at distance >= 0.1 from the boundary lines.
              const double res[] = {0.1, 0.3, 0.5, 0.7, 0.9};
              const double ims[] = {-6.0, -4.5, -3.0, -1.5, 0.0, 0.75, 1.5, 3.0, 4.5, 6.0};
              double worst_closed = 0.0;
              double worst_paths = 0.0;
              for (double re : res)
                for (double im : ims) {
                  const StripPoint zeta{complex{re, im}};
                  for (Family family : {Family::cosine, Family::sine}) {
                    const LimitResult by_eps =
                        regularized_limit(family, zeta, default_epsilon_policy());
                    const LimitResult by_trunc =
                        regularized_limit(family, zeta, default_truncation_policy());
                    const complex exact = closed_form_power_integral(family, zeta);
                    worst_closed = std::max(worst_closed, std::abs(by_eps.value - exact));
                    worst_paths =
                        std::max(worst_paths, std::abs(by_eps.value - by_trunc.value));
                  }
                }
              rec.add("c03.lemma1.closed_form_eps_path", worst_closed, 1e-6);
              rec.add("c03.lemma1.path_agreement", worst_paths, 1e-6);
            });

  rec.block({{"c03.lemma1.uniform_strip_bound", 1.05}}, [&] {
    // Calibrate max |truncated| e^{-pi |tau|/2} on the lines Re = 1/4 and
    // 3/4; the critical line must obey the same constant within 5%.
    const double radii[] = {10.0, 100.0, 1e3, 1e4};
    const double taus[] = {-10.0, -5.0, 0.0, 5.0, 10.0};
    const auto scan = [&](double re) {
      double worst = 0.0;
      for (double radius : radii)
        for (double tau : taus)
          for (Family family : {Family::cosine, Family::sine}) {
            const complex v = truncated(family, StripPoint{complex{re, tau}}, radius);
            worst = std::max(worst,
                             std::abs(v) * std::exp(-std::numbers::pi * std::abs(tau) / 2.0));
          }
      return worst;
    };
    const double calibrated = std::max(scan(0.25), scan(0.75));
    rec.add("c03.lemma1.uniform_strip_bound", scan(0.5) / calibrated, 1.05);
  });
}

// ---------------------------------------------------------------------------
// transforms suite: c04, c05
// ---------------------------------------------------------------------------

inline double verification_rel_l2(const GridFunction& a, const GridFunction& b) {
  GridFunction diff = a;
  for (std::size_t j = 0; j < diff.values.size(); ++j) diff.values[j] -= b.values[j];
  return l2_norm(diff) / l2_norm(b);
}

inline void run_transforms_suite(CheckRecorder& rec) {
  using ScalarFn = double (*)(double);
  // Smooth rapidly decaying functions whose even (cosine) or odd (sine)
  // real-line extensions are smooth, so both the function and its image
  // satisfy the transform decay contracts.
  static constexpr ScalarFn kEven[10] = {
      [](double t) { return std::exp(-t * t / 2); },
      [](double t) { return std::exp(-t * t); },
      [](double t) { return std::exp(-t * t / 4); },
      [](double t) { return t * t * std::exp(-t * t / 2); },
      [](double t) { return (1.0 + t * t) * std::exp(-t * t / 3); },
      [](double t) { return std::cos(t) * std::exp(-t * t / 2); },
      [](double t) { return std::cos(2 * t) * std::exp(-t * t); },
      [](double t) { return std::exp(-t * t / 2) / (1.0 + t * t); },
      [](double t) { return (2.0 - t * t) * std::exp(-t * t / 2); },
      [](double t) { return t * t * t * t * std::exp(-t * t); },
  };
  static constexpr ScalarFn kOdd[10] = {
      [](double t) { return t * std::exp(-t * t / 2); },
      [](double t) { return t * std::exp(-t * t); },
      [](double t) { return t * t * t * std::exp(-t * t / 2); },
      [](double t) { return std::sin(t) * std::exp(-t * t / 2); },
      [](double t) { return t * std::cos(t) * std::exp(-t * t); },
      [](double t) { return t * (1.0 - t * t) * std::exp(-t * t / 2); },
      [](double t) { return std::sin(2 * t) * std::exp(-t * t / 3); },
      [](double t) { return t * t * t * t * t * std::exp(-t * t); },
      [](double t) { return t * std::exp(-t * t / 4); },
      [](double t) { return t / (1.0 + t * t) * std::exp(-t * t / 2); },
  };
  const TransformConfig fast{TransformMethod::fast_uniform, 4096, 1e-9};

  rec.block({{"c04.transforms.involution", 1e-6}, {"c04.transforms.parseval", 1e-6}}, [&] {
    const RadialGrid g = make_radial_grid(1e-5, 30.0, 4096);
    double worst_inv = 0.0;
    double worst_par = 0.0;
    for (int family = 0; family < 2; ++family) {
      const Family fam = family == 0 ? Family::cosine : Family::sine;
      const auto apply = [&](const GridFunction& x) {
        return fam == Family::cosine ? cosine_transform(x, fast) : sine_transform(x, fast);
      };
      for (int i = 0; i < 10; ++i) {
        const GridFunction x = sample(g, family == 0 ? kEven[i] : kOdd[i]);
        worst_inv = std::max(worst_inv, verification_rel_l2(apply(apply(x)), x));
        worst_par = std::max(worst_par, parseval_residual(x, fam, fast));
      }
    }
    rec.add("c04.transforms.involution", worst_inv, 1e-6);
    rec.add("c04.transforms.parseval", worst_par, 1e-6);
  });

  rec.block({{"c05.transforms.hermite_eigenfunctions", 1e-5}}, [&] {
    // h_k is fixed by the family of its parity with eigenvalue (-1)^{k/2
    // rounded down}: the (family, sign) pattern has period 4 in k.
    const RadialGrid g = make_radial_grid(1e-6, 12.0, 4096);
    double worst = 0.0;
    for (int k = 0; k <= 7; ++k) {
      const Family fam = k % 2 == 0 ? Family::cosine : Family::sine;
      const Sign sign = k % 4 < 2 ? Sign::plus : Sign::minus;
      worst = std::max(worst, eigen_residual(hermite(k, g), fam, sign, fast));
    }
    rec.add("c05.transforms.hermite_eigenfunctions", worst, 1e-5);
  });
}

// ---------------------------------------------------------------------------
// mellin suite: c06, c07
// ---------------------------------------------------------------------------

inline void run_mellin_suite(CheckRecorder& rec) {
  using ScalarFn = double (*)(double);
  static constexpr ScalarFn kSuite[20] = {
      [](double t) { return std::exp(-t * t / 2.0); },
      [](double t) { return std::exp(-t * t); },
      [](double t) { return t * std::exp(-t * t / 2.0); },
      [](double t) { return t * t * std::exp(-t * t); },
      [](double t) { return std::exp(-t); },
      [](double t) { return t * std::exp(-t); },
      [](double t) { return std::cos(t) * std::exp(-t); },
      [](double t) { return std::exp(-t * t / 4.0); },
      [](double t) { return (1.0 + t * t) * std::exp(-t * t / 2.0); },
      [](double t) { return std::sin(t) * std::exp(-t * t / 2.0); },
      [](double t) { return t * t * t * std::exp(-t * t / 2.0); },
      [](double t) { return std::exp(-t * t / 2.0) / (1.0 + t * t); },
      [](double t) { return 1.0 / (1.0 + t * t); },
      [](double t) { return t / ((1.0 + t * t) * (1.0 + t * t)); },
      [](double t) { return std::exp(-2.0 * t); },
      [](double t) { return t * t * std::exp(-t); },
      [](double t) { return std::cos(2.0 * t) * std::exp(-t * t); },
      [](double t) { return std::sqrt(t) * std::exp(-t); },
      [](double t) { return t * std::exp(-t * t / 4.0); },
      [](double t) { return (2.0 - t * t) * std::exp(-t * t / 2.0); },
  };

  rec.block({{"c06.mellin.round_trip", 1e-7}, {"c06.mellin.parseval", 1e-5}}, [&] {
    const RadialGrid g = make_radial_grid(1e-12, 6000.0, 2048);
    double worst_rt = 0.0;
    double worst_par = 0.0;
    for (int i = 0; i < 20; ++i) {
      const GridFunction f = sample(g, kSuite[i]);
      const CriticalLineFunction phi = mellin_forward(f);
      worst_rt = std::max(worst_rt, verification_rel_l2(mellin_inverse(phi, g), f));
      worst_par = std::max(worst_par, parseval_residual(MellinPair{f, phi}));
    }
    rec.add("c06.mellin.round_trip", worst_rt, 1e-7);
    rec.add("c06.mellin.parseval", worst_par, 1e-5);
  });

  rec.block({{"c06.mellin.exponential_gamma_image", 1e-8}}, [&] {
    // The forward image of e^{-t} is Gamma(1/2 + i tau) on the line.
    const RadialGrid g = make_radial_grid(1e-17, 1e4, 8192);
    const GridFunction f = sample(g, [](double t) { return std::exp(-t); });
    const CriticalLineFunction phi = mellin_forward(f);
    double worst = 0.0;
    for (int k = 0; k < phi.count; ++k) {
      const double tau = phi.tau(k);
      if (std::abs(tau) > 20.0) continue;
      const complex want = std::exp(log_gamma(complex{0.5, tau}));
      worst = std::max(worst, std::abs(phi.values[static_cast<std::size_t>(k)] - want));
    }
    rec.add("c06.mellin.exponential_gamma_image", worst, 1e-8);
  });

  rec.block({{"c07.mellin.multiplier_relation", 1e-5}}, [&] {
    // Family x input pairs whose transform images meet the Mellin decay
    // contract on the shared grid (the sine images of the Gaussian and the
    // exponential decay only like 1/t and are excluded).
    const RadialGrid g = make_radial_grid(1e-12, 1e4, 4096);
    const TransformConfig reference{TransformMethod::reference_quadrature, 4096, 1e-9};
    const GridFunction gauss = sample(g, [](double t) { return std::exp(-t * t / 2.0); });
    const GridFunction expf = sample(g, [](double t) { return std::exp(-t); });
    const GridFunction tgauss = sample(g, [](double t) { return t * std::exp(-t * t / 2.0); });
    double worst = 0.0;
    worst = std::max(worst, verify_multiplier_relation(gauss, Family::cosine, reference));
    worst = std::max(worst, verify_multiplier_relation(expf, Family::cosine, reference));
    worst = std::max(worst, verify_multiplier_relation(tgauss, Family::sine, reference));
    worst = std::max(worst, verify_multiplier_relation(tgauss, Family::cosine, reference));
    rec.add("c07.mellin.multiplier_relation", worst, 1e-5);
  });

  rec.block({{"c07.mellin.multiplier_phase_square", 1e-11}}, [&] {
    double worst = 0.0;
    for (int k = 0; k <= 120; ++k) {
      const double tau = 0.25 * k;
      for (Family family : {Family::cosine, Family::sine}) {
        const complex c = phase(family, tau).value;
        worst = std::max(
            worst, std::abs(titchmarsh_multiplier(family, complex{0.5, tau}) - c * c));
      }
    }
    rec.add("c07.mellin.multiplier_phase_square", worst, 1e-11);
  });
}

// ---------------------------------------------------------------------------
// chains suite: c08 .. c11
// ---------------------------------------------------------------------------

inline void run_chains_suite(CheckRecorder& rec) {
  constexpr double kStep = 30.0 / 1600;
  constexpr int kCount = 1601;
  const auto density = [](auto&& f) {
    return sample_chain_density(kStep, kCount, std::forward<decltype(f)>(f));
  };

  // Four admissible densities (vanishing to second order at tau = 0 so all
  // four chain variants are well posed on a floating grid), spanning real,
  // complex, narrow and higher-moment shapes.
  const std::vector<TauFunction> members = {
      density([](double t) { return t * t * std::exp(-t * t); }),
      density([](double t) { return t * t * t * std::exp(-t * t); }),
      density([](double t) {
        return t * t * complex{std::cos(t), std::sin(2.0 * t)} * std::exp(-t * t);
      }),
      density([](double t) { return t * t * std::exp(-2.0 * t * t); }),
  };
  struct Variant {
    Family family;
    Sign sign;
  };
  const Variant variants[4] = {{Family::cosine, Sign::plus},
                               {Family::cosine, Sign::minus},
                               {Family::sine, Sign::plus},
                               {Family::sine, Sign::minus}};
  const double sqrt_pi = std::sqrt(std::numbers::pi);

  // One synthesis per (member, variant) feeds the isometry, adjoint
  // identity, path agreement and L1-bound checks.
  rec.block({{"c08.chains.isometry", 1e-5},
             {"c08.chains.adjoint_identity", 1e-5},
             {"c10.chains.synthesis_path_agreement", 1e-5},
             {"c11.chains.synthesis_l1_bound", 1e-8}},
            [&] {
              const RadialGrid adj = make_radial_grid(1e-15, 1e15, 2048);
              double iso = 0.0, adjid = 0.0, path = 0.0, l1 = 0.0;
              for (const TauFunction& phi : members) {
                const double n2 = tau_l2_norm(phi);
                const double n1 = tau_l1_norm(phi);
                for (const Variant& v : variants) {
                  const ChainSynthesis syn = t_apply_diagnostic(v.family, v.sign, phi, adj);
                  iso = std::max(iso, std::abs(l2_norm(syn.x) - n2) / n2);
                  path = std::max(path, syn.path_residual);
                  double peak = 0.0;
                  for (int j = 0; j < adj.count; ++j)
                    peak = std::max(peak, std::abs(syn.x.values[static_cast<std::size_t>(j)]) *
                                              std::sqrt(adj.node(j)) * sqrt_pi);
                  l1 = std::max(l1, std::max(0.0, (peak - n1) / n1));
                  const TauFunction back =
                      t_adjoint(v.family, v.sign, syn.x, kStep, kCount, 0.5);
                  TauFunction diff = back;
                  double sup = 0.0;
                  for (int k = 0; k < kCount; ++k) {
                    diff.values[static_cast<std::size_t>(k)] -=
                        phi.values[static_cast<std::size_t>(k)];
                    sup = std::max(sup, std::abs(diff.values[static_cast<std::size_t>(k)]));
                  }
                  adjid = std::max(adjid, std::max(sup, tau_l2_norm(diff) / n2));
                }
              }
              rec.add("c08.chains.isometry", iso, 1e-5);
              rec.add("c08.chains.adjoint_identity", adjid, 1e-5);
              rec.add("c10.chains.synthesis_path_agreement", path, 1e-5);
              rec.add("c11.chains.synthesis_l1_bound", l1, 1e-8);
            });

  rec.block({{"c08.chains.eigen_residual", 1e-4}}, [&] {
    // Synthesized superpositions decay like t^{-1/2}/ln^3 t, so the range
    // check needs the wide window and a loose absolute-tail guard (the
    // guard still trips by orders of magnitude for non-decaying inputs).
    const RadialGrid range = make_radial_grid(1e-20, 1e20, 2048);
    TransformConfig loose;
    loose.tol = 1e6;
    double worst = 0.0;
    for (std::size_t mi : {std::size_t{0}, std::size_t{2}}) {
      for (const Variant& v : variants) {
        const GridFunction x = t_apply(v.family, v.sign, members[mi], range);
        worst = std::max(worst, eigen_residual(x, v.family, v.sign, loose));
      }
    }
    rec.add("c08.chains.eigen_residual", worst, 1e-4);
  });

  rec.block({{"c08.chains.projector_transform_match", 1e-5},
             {"c08.chains.projector_idempotent", 1e-5},
             {"c08.chains.projector_completeness", 1e-6}},
            [&] {
              const RadialGrid proj = make_radial_grid(1e-14, 1e4, 2048);
              const GridFunction x = sample(proj, [](double t) { return std::exp(-t); });
              const ChainDecomposition dec = decompose(x, Family::cosine);

              // P+ + P- = identity.
              GridFunction sum = dec.plus_part;
              for (std::size_t j = 0; j < sum.values.size(); ++j)
                sum.values[j] += dec.minus_part.values[j];
              const double completeness = verification_rel_l2(sum, x);

              // T T* pieces match the transform-built (x +- Cx)/2.  The
              // cosine image of e^{-t} decays like t^{-2}, so the decay
              // guard is relaxed for the transform call.
              TransformConfig tc;
              tc.tol = 1e-3;
              const GridFunction tx = cosine_transform(x, tc);
              GridFunction op = x, om = x;
              for (std::size_t j = 0; j < op.values.size(); ++j) {
                op.values[j] = 0.5 * (x.values[j] + tx.values[j]);
                om.values[j] = 0.5 * (x.values[j] - tx.values[j]);
              }
              const double match = std::max(verification_rel_l2(dec.plus_part, op),
                                            verification_rel_l2(dec.minus_part, om));

              // P applied to its own output returns it.
              const GridFunction pp =
                  projector_apply(Family::cosine, Sign::plus, dec.plus_part);
              const double idem = verification_rel_l2(pp, dec.plus_part);

              rec.add("c08.chains.projector_transform_match", match, 1e-5);
              rec.add("c08.chains.projector_idempotent", idem, 1e-5);
              rec.add("c08.chains.projector_completeness", completeness, 1e-6);
            });

  rec.block({{"c09.chains.truncated_identity_fast_variants", 1e-3},
             {"c09.chains.truncated_identity_sine_minus_200pi", 5e-3},
             {"c09.chains.truncated_identity_sine_minus_extended", 1e-3}},
            [&] {
              // The Gaussian density: all four variants satisfy the pointwise
              // broad-sense identity.  Two variants need schedules that fit
              // their measured convergence: the sine-plus residual starts at
              // the oscillatory floor (~2e-5), where consecutive radii of
              // the default schedule are not yet in the asymptotic regime
              // (25pi -> 50pi rises), so its schedule starts at 50pi; the
              // sine-minus boundary term has no cancellation at
              // probe-commensurate radii and converges only like
              // 1/(sqrt(R) ln R), so it gets a documented slower pin at
              // R = 200 pi and the 1e-3 target at the extended schedule.
              const RadialGrid broad = make_radial_grid(1e-9, 1e9, 4096);
              const TauFunction gauss = density([](double t) { return std::exp(-t * t); });
              const double pi = std::numbers::pi;
              double fast_worst = 0.0;
              for (const Variant& v : variants) {
                if (v.family == Family::sine && v.sign == Sign::minus) continue;
                std::vector<double> schedule;  // empty selects the default
                if (v.family == Family::sine)
                  schedule = {50 * pi, 100 * pi, 200 * pi, 400 * pi};
                const GridFunction x = t_apply(v.family, v.sign, gauss, broad);
                fast_worst = std::max(
                    fast_worst, broad_sense_residual(x, v.family, v.sign, std::move(schedule)));
              }
              const GridFunction xm = t_apply(Family::sine, Sign::minus, gauss, broad);
              const double at_200pi = broad_sense_residual(xm, Family::sine, Sign::minus);
              const std::vector<double> extended{25 * pi,  50 * pi,  100 * pi, 200 * pi,
                                                 400 * pi, 800 * pi, 1600 * pi};
              // The hypothesis filter already vetted the density above.
              const double at_ext =
                  broad_sense_residual(xm, Family::sine, Sign::minus, extended, true);
              rec.add("c09.chains.truncated_identity_fast_variants", fast_worst, 1e-3);
              rec.add("c09.chains.truncated_identity_sine_minus_200pi", at_200pi, 5e-3);
              rec.add("c09.chains.truncated_identity_sine_minus_extended", at_ext, 1e-3);
            });

  rec.block({{"c11.chains.member_envelope", 1e-12}, {"c11.chains.member_envelope_equality", 1e-13}},
            [&] {
              const double taus[] = {0.0, 0.3, 1.0, 4.0, 12.0};
              const double ts[] = {0.01, 0.7, 1.0, 3.9, 250.0};
              double over = 0.0;
              double eq = 0.0;
              for (const Variant& v : variants)
                for (double tau : taus)
                  for (double t : ts) {
                    const double e = evaluate_e({v.family, v.sign, tau}, t);
                    over = std::max(over, std::abs(e) * std::sqrt(std::numbers::pi * t) - 1.0);
                  }
              for (double t : ts) {
                const double e = evaluate_e({Family::cosine, Sign::plus, 0.0}, t);
                eq = std::max(eq, std::abs(e * std::sqrt(std::numbers::pi * t) - 1.0));
              }
              rec.add("c11.chains.member_envelope", std::max(0.0, over), 1e-12);
              rec.add("c11.chains.member_envelope_equality", eq, 1e-13);
            });
}

}  // namespace detail

/// Runs one named verification suite ("gamma", "lemma1", "transforms",
/// "mellin", "chains", or "all") and returns its ordered report.  Every
/// check tolerance is multiplied by tol_scale.  Unknown suite names and
/// non-positive scales are usage errors.
inline VerificationReport run_verification_suite(const std::string& suite,
                                                 double tol_scale = 1.0) {
  if (!(tol_scale > 0.0) || !std::isfinite(tol_scale))
    throw std::invalid_argument("run_verification_suite: tol_scale must be positive and finite");
  const auto& names = verification_suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("run_verification_suite: unknown suite '" + suite +
                                "' (expected gamma, lemma1, transforms, mellin, chains, or all)");

  VerificationReport report;
  report.suite = suite;
  detail::CheckRecorder rec(report.checks, tol_scale);
  const auto start = std::chrono::steady_clock::now();
  if (suite == "gamma" || suite == "all") detail::run_gamma_suite(rec);
  if (suite == "lemma1" || suite == "all") detail::run_lemma1_suite(rec);
  if (suite == "transforms" || suite == "all") detail::run_transforms_suite(rec);
  if (suite == "mellin" || suite == "all") detail::run_mellin_suite(rec);
  if (suite == "chains" || suite == "all") detail::run_chains_suite(rec);
  const auto stop = std::chrono::steady_clock::now();
  report.wall_time_s = std::chrono::duration<double>(stop - start).count();
  report.all_pass = true;
  for (const VerificationCheck& check : report.checks) report.all_pass &= check.pass;
  return report;
}

}  // namespace selfrecip
