// Eigenfunction-chain machinery: the two-power generalized eigenfunctions,
// the unit-norm chain members e(t, tau), the four synthesis operators and
// their adjoints, eigenspace projectors, the two-sided decomposition, and
// the truncated broad-sense eigenfunction identity.
//
// Chains are L2 isometries only in exact arithmetic on the whole half-line;
// on a finite log grid the reachable accuracy is set by how much of the
// synthesized function's Mellin transform lives outside the grid's spectral
// window.  The admissible density suite below therefore vanishes to second
// order at tau = 0: a density with phi(0) != 0 feeds the minus chains an
// image jump whose synthesis decays like 1/|ln t| (its norm converges only
// like 1/sqrt(window)), and phi'(0) != 0 kinks the plus-chain image, with
// an algebraic 1/u^2 spectral tail.  Such densities are exercised where
// they are well-posed (plus-chain isometry, pointwise anchors, synthesis
// itself) but excluded from the four-variant isometry sweep, which no
// floating grid could pass for them.

#include <catch2/catch_amalgamated.hpp>
#include <cmath>
#include <complex>
#include <numbers>
#include <vector>

#include "oracle_values.hpp"
#include "selfrecip/eigenchain.hpp"

namespace sr = selfrecip;
using sr::complex;
using std::numbers::pi;

namespace {

constexpr double kTauStep = 30.0 / 1600;
constexpr int kTauCount = 1601;

template <typename F>
sr::TauFunction density(F&& f) {
  return sr::sample_chain_density(kTauStep, kTauCount, std::forward<F>(f));
}

const sr::RadialGrid& iso_grid() {
  static const sr::RadialGrid g = sr::make_radial_grid(1e-9, 1e9, 2049);
  return g;
}

// The eigen-residual of a chain superposition is limited by the transform's
// truncation of the t^{-1/2}/ln^3 t tails: the missing head integral alone
// contributes ~1/|ln t_lo|^3 in relative L2.  Meeting 1e-4 for every suite
// member therefore needs a very wide window; node count is not the limiter
// (the error is identical at 2048 and 2560 nodes).
const sr::RadialGrid& range_grid() {
  static const sr::RadialGrid g = sr::make_radial_grid(1e-20, 1e20, 2048);
  return g;
}

const sr::RadialGrid& adj_grid() {
  static const sr::RadialGrid g = sr::make_radial_grid(1e-11, 1e11, 2048);
  return g;
}

const sr::RadialGrid& proj_grid() {
  static const sr::RadialGrid g = sr::make_radial_grid(1e-14, 1e4, 2048);
  return g;
}

const sr::RadialGrid& broad_grid() {
  static const sr::RadialGrid g = sr::make_radial_grid(1e-9, 1e9, 4096);
  return g;
}

const sr::TauFunction& gauss_density() {
  static const sr::TauFunction phi = density([](double t) { return std::exp(-t * t); });
  return phi;
}

// Ten admissible densities, all vanishing to second order at tau = 0 (see the
// file header for why that is required of a four-variant member).
const std::vector<std::pair<const char*, sr::TauFunction>>& admissible_suite() {
  static const std::vector<std::pair<const char*, sr::TauFunction>> suite = {
      {"t2*gauss", density([](double t) { return t * t * std::exp(-t * t); })},
      {"t3*gauss", density([](double t) { return t * t * t * std::exp(-t * t); })},
      {"t2*narrow", density([](double t) { return t * t * std::exp(-2.0 * t * t); })},
      {"t2*shifted", density([](double t) { return t * t * std::exp(-(t - 1.0) * (t - 1.0)); })},
      {"t2*cos", density([](double t) { return t * t * std::cos(2.0 * t) * std::exp(-t * t); })},
      {"t2*sin", density([](double t) { return t * t * std::sin(t) * std::exp(-t * t); })},
      {"t4*gauss", density([](double t) { return t * t * t * t * std::exp(-t * t); })},
      {"t2*signchange",
       density([](double t) { return t * t * (2.0 - t * t) * std::exp(-t * t); })},
      {"complex-scale",
       density([](double t) { return complex{1.0, 2.0} * t * t * std::exp(-1.5 * t * t); })},
      {"complex-mix", density([](double t) {
         return t * t * complex{std::cos(t), std::sin(2.0 * t)} * std::exp(-t * t);
       })},
  };
  return suite;
}

double rel_l2(const sr::GridFunction& a, const sr::GridFunction& b) {
  sr::GridFunction d = a;
  for (std::size_t i = 0; i < d.values.size(); ++i) d.values[i] -= b.values[i];
  return sr::l2_norm(d) / sr::l2_norm(b);
}

const std::array<sr::Family, 2> kFamilies{sr::Family::cosine, sr::Family::sine};
const std::array<sr::Sign, 2> kSigns{sr::Sign::plus, sr::Sign::minus};

}  // namespace

// ---------------------------------------------------------------------------
// Generalized eigenfunctions E^{+/-}(t, a)
// ---------------------------------------------------------------------------

TEST_CASE("generalized eigenfunction point anchors", "[eigenchain]") {
  const sr::StripPoint a{complex{0.3, 0.1}};
  const complex ep = sr::evaluate_E(sr::Family::cosine, sr::Sign::plus, a, 2.0);
  const complex em = sr::evaluate_E(sr::Family::cosine, sr::Sign::minus, a, 2.0);
  CHECK(std::abs(ep - sr::oracle::kBigEPlusAnchor) < 1e-12);
  CHECK(std::abs(em - sr::oracle::kBigEMinusAnchor) < 1e-12);
}

TEST_CASE("a = 1/2 degeneracy: one eigen-direction, minus member exactly zero",
          "[eigenchain]") {
  const sr::StripPoint half{complex{0.5, 0.0}};
  for (sr::Family family : kFamilies) {
    for (double t : {0.25, 1.0, 2.0, 17.0}) {
      // kappa(1/2) = 1 for both kernels, so E^+ = 2 t^{-1/2} ...
      const complex ep = sr::evaluate_E(family, sr::Sign::plus, half, t);
      CHECK(std::abs(ep - 2.0 / std::sqrt(t)) < 1e-12);
      // ... and the minus coefficients cancel identically.
      const complex em = sr::evaluate_E(family, sr::Sign::minus, half, t);
      CHECK(em == complex{0.0, 0.0});
    }
  }
}

TEST_CASE("redundancy symmetry under a -> 1-a", "[eigenchain]") {
  const complex as[] = {{0.3, 0.1}, {0.25, -0.4}, {0.71, 0.0}, {0.5, 1.3}};
  for (const complex av : as) {
    const sr::StripPoint a{av};
    const sr::StripPoint one_minus_a{complex{1.0, 0.0} - av};
    for (sr::Family family : kFamilies) {
      for (double t : {0.6, 2.0, 11.0}) {
        const complex p1 = sr::evaluate_E(family, sr::Sign::plus, a, t);
        const complex p2 = sr::evaluate_E(family, sr::Sign::plus, one_minus_a, t);
        CHECK(std::abs(p1 - p2) <= 1e-12 * std::max(1.0, std::abs(p1)));
        const complex m1 = sr::evaluate_E(family, sr::Sign::minus, a, t);
        const complex m2 = sr::evaluate_E(family, sr::Sign::minus, one_minus_a, t);
        CHECK(std::abs(m1 + m2) <= 1e-12 * std::max(1.0, std::abs(m1)));
      }
    }
  }
}

TEST_CASE("generalized eigenfunction contracts and errors", "[eigenchain]") {
  const sr::StripPoint a{complex{0.4, -0.2}};
  const sr::GeneralizedEigenfunction fn =
      sr::generalized_eigenfunction(sr::Family::sine, sr::Sign::minus, a);
  // coefficient product carries the sign of the member
  CHECK(std::abs(fn.coef_t_minus_a * fn.coef_t_a_minus_1 + 1.0) < 1e-12);
  CHECK_THROWS_AS(fn.evaluate(0.0), std::invalid_argument);
  CHECK_THROWS_AS(fn.evaluate(-2.0), std::invalid_argument);
  // strip boundary is rejected at the type level
  CHECK_THROWS_AS(sr::StripPoint(complex(0.0, 0.3)), std::invalid_argument);
  CHECK_THROWS_AS(sr::StripPoint(complex(1.0, 0.0)), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Chain members e^{+/-}(t, tau)
// ---------------------------------------------------------------------------

TEST_CASE("chain member at tau = 0: cosine plus limit t^{-1/2}/sqrt(pi)",
          "[eigenchain]") {
  for (double t : {0.5, 2.0, 9.0}) {
    const double v = sr::evaluate_e({sr::Family::cosine, sr::Sign::plus, 0.0}, t);
    CHECK(v == Catch::Approx(1.0 / std::sqrt(pi * t)).epsilon(1e-14));
  }
  // the sine-family minus member vanishes identically at tau = 0
  CHECK(sr::evaluate_e({sr::Family::sine, sr::Sign::minus, 0.0}, 2.0) ==
        Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("chain member point anchors", "[eigenchain]") {
  const double vc = sr::evaluate_e({sr::Family::cosine, sr::Sign::plus, 1.0}, 2.0);
  CHECK(vc == Catch::Approx(sr::oracle::kChainCosPlusT2Tau1).margin(1e-13));
  const double vs =
      sr::evaluate_e({sr::Family::sine, sr::Sign::minus, 1.0}, std::exp(1.0));
  CHECK(vs == Catch::Approx(sr::oracle::kChainSinMinusTeTau1).epsilon(1e-13));
}

TEST_CASE("chain members obey the t^{-1/2}/sqrt(pi) envelope", "[eigenchain]") {
  for (sr::Family family : kFamilies)
    for (sr::Sign sign : kSigns)
      for (double tau : {0.0, 0.3, 1.0, 4.0, 12.0})
        for (double t : {0.01, 0.7, 1.0, 3.9, 250.0}) {
          const double v = sr::evaluate_e({family, sign, tau}, t);
          CHECK(std::abs(v) <= (1.0 + 1e-12) / std::sqrt(pi * t));
        }
}

TEST_CASE("chain member agrees with the generalized form on the critical line",
          "[eigenchain]") {
  // At a = 1/2 + i tau (small tau, where the principal square root of
  // kappa(1-a) coincides with the unimodular phase), 2 sqrt(pi) e^+ = E^+
  // and 2 i sqrt(pi) e^- = E^-.
  const double tau = 0.25;
  const sr::StripPoint a{complex{0.5, tau}};
  for (sr::Family family : kFamilies) {
    for (double t : {0.8, 3.0}) {
      const complex Ep = sr::evaluate_E(family, sr::Sign::plus, a, t);
      const double ep = sr::evaluate_e({family, sr::Sign::plus, tau}, t);
      CHECK(std::abs(Ep - 2.0 * std::sqrt(pi) * ep) < 1e-12);
      const complex Em = sr::evaluate_E(family, sr::Sign::minus, a, t);
      const double em = sr::evaluate_e({family, sr::Sign::minus, tau}, t);
      CHECK(std::abs(Em - complex{0.0, 2.0} * std::sqrt(pi) * em) < 1e-12);
    }
  }
}

TEST_CASE("chain member argument errors", "[eigenchain]") {
  CHECK_THROWS_AS(sr::evaluate_e({sr::Family::cosine, sr::Sign::plus, 1.0}, 0.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(sr::evaluate_e({sr::Family::cosine, sr::Sign::plus, 1.0}, -3.0),
                  std::invalid_argument);
  sr::ChainCoordinate bad{sr::Family::cosine, sr::Sign::plus, -1.0};
  CHECK_THROWS_AS(sr::evaluate_e(bad, 1.0), std::invalid_argument);
  // the public factory additionally rejects tau = 0 (no minus member there)
  CHECK_THROWS_AS(sr::make_chain_coordinate(sr::Family::sine, sr::Sign::minus, 0.0),
                  std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Density helpers
// ---------------------------------------------------------------------------

TEST_CASE("tau-grid norms against closed forms", "[eigenchain]") {
  const sr::TauFunction g = gauss_density();
  CHECK(sr::tau_l2_norm(g) == Catch::Approx(sr::oracle::kNormGaussTau).epsilon(1e-10));
  CHECK(sr::tau_l1_norm(g) == Catch::Approx(sr::oracle::kL1GaussTau).epsilon(1e-10));
  const sr::TauFunction t2 = density([](double t) { return t * t * std::exp(-t * t); });
  CHECK(sr::tau_l2_norm(t2) == Catch::Approx(sr::oracle::kNormTau2Gauss).epsilon(1e-10));
  CHECK(sr::tau_l1_norm(t2) == Catch::Approx(sr::oracle::kL1Tau2Gauss).epsilon(1e-10));
}

TEST_CASE("tau inner product is conjugate-linear in its first slot", "[eigenchain]") {
  const sr::TauFunction a = density([](double t) { return complex{1.0, 2.0} * std::exp(-t * t); });
  const sr::TauFunction b = density([](double t) { return t * std::exp(-t * t); });
  const complex ab = sr::tau_inner_product(a, b);
  const complex ba = sr::tau_inner_product(b, a);
  CHECK(std::abs(ab - std::conj(ba)) < 1e-14);
  CHECK(std::abs(sr::tau_inner_product(a, a).imag()) < 1e-14);
}

TEST_CASE("density sample validation", "[eigenchain]") {
  CHECK_THROWS_AS(sr::TauFunction(0.0, std::vector<complex>(16)), std::invalid_argument);
  CHECK_THROWS_AS(sr::TauFunction(0.1, std::vector<complex>(4)), std::invalid_argument);
  std::vector<complex> bad(16);
  bad[7] = complex{std::numeric_limits<double>::infinity(), 0.0};
  CHECK_THROWS_AS(sr::TauFunction(0.1, std::move(bad)), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Synthesis: isometry, estimates, anchors
// ---------------------------------------------------------------------------

TEST_CASE("four-variant isometry and L1 estimate across the admissible suite",
          "[eigenchain]") {
  const auto& suite = admissible_suite();
  REQUIRE(suite.size() == 10);

  const double sqrt_pi = std::sqrt(pi);
  for (const auto& [name, phi] : suite) {
    const double phi_l2 = sr::tau_l2_norm(phi);
    const double phi_l1 = sr::tau_l1_norm(phi);
    for (sr::Family family : kFamilies) {
      for (sr::Sign sign : kSigns) {
        INFO(name << " family=" << (family == sr::Family::cosine ? "cos" : "sin")
                  << " sign=" << (sign == sr::Sign::plus ? "+" : "-"));
        const sr::GridFunction x = sr::t_apply(family, sign, phi, iso_grid());
        CHECK(std::abs(sr::l2_norm(x) - phi_l2) <= 1e-5 * phi_l2);
        double worst = 0.0;
        for (int j = 0; j < x.grid.count; ++j)
          worst = std::max(worst, std::abs(x.values[static_cast<std::size_t>(j)]) *
                                      std::sqrt(x.grid.node(j)) * sqrt_pi);
        CHECK(worst <= phi_l1 + 1e-10);
      }
    }
  }
}

TEST_CASE("gaussian density: norm anchor and pointwise synthesis anchor",
          "[eigenchain]") {
  const sr::TauFunction& g = gauss_density();
  // plus-chain isometry carries a phi(0) != 0 density without trouble
  for (sr::Family family : kFamilies) {
    const sr::GridFunction x = sr::t_apply(family, sr::Sign::plus, g, iso_grid());
    CHECK(sr::l2_norm(x) == Catch::Approx(sr::oracle::kNormGaussTau).epsilon(1e-5));
  }
  // t = 1 sits exactly on the symmetric grid's central node
  const int mid = (iso_grid().count - 1) / 2;
  REQUIRE(iso_grid().node(mid) == Catch::Approx(1.0).epsilon(1e-14));
  const sr::GridFunction xc = sr::t_apply(sr::Family::cosine, sr::Sign::plus, g, iso_grid());
  CHECK(xc.values[static_cast<std::size_t>(mid)].real() ==
        Catch::Approx(sr::oracle::kGaussChainCosPlusAt1).epsilon(1e-9));
  const sr::GridFunction xs = sr::t_apply(sr::Family::sine, sr::Sign::minus, g, iso_grid());
  CHECK(xs.values[static_cast<std::size_t>(mid)].real() ==
        Catch::Approx(sr::oracle::kGaussChainSinMinusAt1).epsilon(1e-8));
  // minus chains cannot hold a phi(0) != 0 density's full norm on any finite
  // window: the synthesis decays like 1/|ln t| and the missing mass scales
  // like 1/window.  Assert the deficit is real and bounded, not a bug.
  const double nm = sr::l2_norm(xs);
  CHECK(nm < sr::oracle::kNormGaussTau);
  CHECK(sr::oracle::kNormGaussTau - nm < 0.05);
}

TEST_CASE("zero density synthesizes the zero function", "[eigenchain]") {
  const sr::TauFunction zero = density([](double) { return 0.0; });
  const sr::GridFunction x = sr::t_apply(sr::Family::cosine, sr::Sign::plus, zero, iso_grid());
  for (const complex& v : x.values) CHECK(v == complex{0.0, 0.0});
}

TEST_CASE("synthesis rejects a density the window truncates badly", "[eigenchain]") {
  const sr::TauFunction slow = density([](double t) { return 1.0 / (1.0 + t * t); });
  CHECK_THROWS_AS(sr::t_apply(sr::Family::cosine, sr::Sign::plus, slow, iso_grid()),
                  sr::decay_contract_error);
}

// ---------------------------------------------------------------------------
// Range property: synthesized functions are transform eigenfunctions
// ---------------------------------------------------------------------------

TEST_CASE("synthesized superpositions pass the transform eigen-residual",
          "[eigenchain]") {
  // The reference transform's decay guard bounds the absolutely-integrable
  // part of the neglected tail.  Chain superpositions only decay like
  // t^{-1/2}/polylog(t), so |x(t_N)| t_N grows like sqrt(t_N)/polylog and
  // reaches ~1e5 on this deliberately wide grid; the tail the quadrature
  // actually drops is the oscillatory integral of that envelope, far
  // smaller in relative L2.  The guard is kept (at 1e6) only to catch
  // genuinely non-decaying inputs, for which it still trips by orders of
  // magnitude (e.g. |x| ~ t^{-1/2} gives 1e10 here).
  sr::TransformConfig loose;
  loose.tol = 1e6;
  for (const auto& [name, phi] : admissible_suite()) {
    for (sr::Family family : kFamilies) {
      for (sr::Sign sign : kSigns) {
        INFO(name << " family=" << (family == sr::Family::cosine ? "cos" : "sin")
                  << " sign=" << (sign == sr::Sign::plus ? "+" : "-"));
        const sr::GridFunction x = sr::t_apply(family, sign, phi, range_grid());
        CHECK(sr::eigen_residual(x, family, sign, loose) < 1e-4);
      }
    }
  }
  // a phi(0) != 0 density is fine for the plus chains
  for (sr::Family family : kFamilies) {
    const sr::GridFunction xp =
        sr::t_apply(family, sr::Sign::plus, gauss_density(), range_grid());
    CHECK(sr::eigen_residual(xp, family, sr::Sign::plus, loose) < 1e-4);
  }
}

// ---------------------------------------------------------------------------
// Adjoints
// ---------------------------------------------------------------------------

namespace {

struct RecoveryError {
  double sup;
  double l2;
};

// Synthesizes phi on the given grid, runs the adjoint, and measures the
// recovery error.  The adjoint's decay guard is left loose (0.5): chain
// superpositions decay only logarithmically at the grid edges, and recovery
// accuracy does not depend on the guard.
RecoveryError recovery_error(sr::Family family, sr::Sign sign, const sr::TauFunction& phi,
                             const sr::RadialGrid& grid) {
  const sr::GridFunction x = sr::t_apply(family, sign, phi, grid);
  const sr::TauFunction back = sr::t_adjoint(family, sign, x, kTauStep, kTauCount, 0.5);
  double sup = 0.0, l2 = 0.0;
  for (int k = 0; k < kTauCount; ++k) {
    const double d = std::abs(back.values[static_cast<std::size_t>(k)] -
                              phi.values[static_cast<std::size_t>(k)]);
    sup = std::max(sup, d);
    l2 += d * d * kTauStep;
  }
  return {sup, std::sqrt(l2)};
}

// Analysis grid for full-accuracy adjoint recovery.  A minus-chain image
// carries a sign(tau) factor, so even a density that vanishes to second
// order leaves a curvature jump in the image whose synthesized function
// decays like t^{-1/2}/ln^3 t; the adjoint completes the truncated
// integrand tail analytically, and the completion's own fit error shrinks
// with the window, landing below 1e-5 for ln t_hi ~ 35.
const sr::RadialGrid& recovery_grid() {
  static const sr::RadialGrid g = sr::make_radial_grid(1e-15, 1e15, 2048);
  return g;
}

}  // namespace

TEST_CASE("adjoint recovers a plus-chain density: T* T = identity", "[eigenchain]") {
  for (sr::Family family : kFamilies) {
    const RecoveryError e = recovery_error(family, sr::Sign::plus, gauss_density(), adj_grid());
    CHECK(e.sup < 1e-5);
    CHECK(e.l2 < 1e-5 * sr::tau_l2_norm(gauss_density()));
  }
}

TEST_CASE("adjoint recovers minus-chain and kink-image densities to 1e-5",
          "[eigenchain]") {
  // These are the cases whose Mellin integrand has a genuine power tail
  // (image kink at tau = 0): all minus chains, and plus chains of densities
  // whose even extension has an odd-order kink.  The guarded tail completion
  // inside t_adjoint restores them to the same 1e-5 accuracy class as the
  // smooth plus cases; without it the windowed sum plateaus near 1e-3.
  struct Case {
    const char* name;
    sr::Family family;
    sr::Sign sign;
    sr::TauFunction phi;
  };
  const Case cases[] = {
      {"t2*gauss cos-", sr::Family::cosine, sr::Sign::minus,
       density([](double t) { return t * t * std::exp(-t * t); })},
      {"t2*gauss sin-", sr::Family::sine, sr::Sign::minus,
       density([](double t) { return t * t * std::exp(-t * t); })},
      {"complex-scale cos-", sr::Family::cosine, sr::Sign::minus,
       density([](double t) { return complex{1.0, 2.0} * t * t * std::exp(-1.5 * t * t); })},
      {"t3*gauss cos+", sr::Family::cosine, sr::Sign::plus,
       density([](double t) { return t * t * t * std::exp(-t * t); })},
      {"complex-mix cos+", sr::Family::cosine, sr::Sign::plus,
       density([](double t) {
         return complex{std::cos(t), std::sin(2.0 * t)} * (t * t * std::exp(-t * t));
       })},
  };
  for (const Case& c : cases) {
    INFO(c.name);
    const RecoveryError e = recovery_error(c.family, c.sign, c.phi, recovery_grid());
    CHECK(e.sup < 1e-5);
    CHECK(e.l2 < 1e-5 * sr::tau_l2_norm(c.phi));
  }
}

TEST_CASE("tail completion already helps on a moderate window", "[eigenchain]") {
  // On the narrower default analysis window (ln t_hi ~ 25) the completion's
  // fit error is larger but still two orders below the bare window loss
  // (~8e-4 at this width).
  const sr::TauFunction t2 = density([](double t) { return t * t * std::exp(-t * t); });
  for (sr::Family family : kFamilies) {
    const RecoveryError e = recovery_error(family, sr::Sign::minus, t2, adj_grid());
    CHECK(e.sup < 5e-5);
    CHECK(e.l2 < 2e-5 * sr::tau_l2_norm(t2));
  }
}

TEST_CASE("synthesis and adjoint are inner-product adjoints", "[eigenchain]") {
  const sr::TauFunction phi = density(
      [](double t) { return complex{1.0, 2.0} * t * t * std::exp(-1.5 * t * t); });
  const sr::GridFunction y =
      sr::sample(adj_grid(), [](double t) { return std::exp(-t - 1.0 / t); });
  for (sr::Family family : kFamilies) {
    for (sr::Sign sign : kSigns) {
      const sr::GridFunction tphi = sr::t_apply(family, sign, phi, adj_grid());
      const sr::TauFunction tstar_y =
          sr::t_adjoint(family, sign, y, kTauStep, kTauCount, 0.5);
      const complex lhs = sr::inner_product(tphi, y);
      const complex rhs = sr::tau_inner_product(phi, tstar_y);
      const double scale = sr::tau_l2_norm(phi) * sr::l2_norm(y);
      CHECK(std::abs(lhs - rhs) <= 1e-6 * scale);
    }
  }
}

TEST_CASE("adjoint of the zero function is the zero density", "[eigenchain]") {
  const sr::GridFunction zero = sr::sample(adj_grid(), [](double) { return 0.0; });
  const sr::TauFunction d =
      sr::t_adjoint(sr::Family::cosine, sr::Sign::plus, zero, kTauStep, kTauCount, 1e-5);
  for (const complex& v : d.values) CHECK(std::abs(v) == 0.0);
}

TEST_CASE("adjoint enforces the Mellin decay contract", "[eigenchain]") {
  const sr::GridFunction bad =
      sr::sample(adj_grid(), [](double t) { return 1.0 / std::sqrt(1.0 + t); });
  CHECK_THROWS_AS(
      sr::t_adjoint(sr::Family::cosine, sr::Sign::plus, bad, kTauStep, kTauCount, 1e-5),
      sr::decay_contract_error);
}

// ---------------------------------------------------------------------------
// Projectors and decomposition
// ---------------------------------------------------------------------------

TEST_CASE("projector fixes its eigenspace and kills the complement", "[eigenchain]") {
  const sr::GridFunction h0 =
      sr::sample(proj_grid(), [](double t) { return std::exp(-0.5 * t * t); });
  const sr::GridFunction h2 = sr::sample(
      proj_grid(), [](double t) { return (1.0 - 2.0 * t * t) * std::exp(-0.5 * t * t); });

  const sr::GridFunction p0 = sr::projector_apply(sr::Family::cosine, sr::Sign::plus, h0);
  CHECK(rel_l2(p0, h0) < 1e-5);

  const sr::GridFunction p2 = sr::projector_apply(sr::Family::cosine, sr::Sign::plus, h2);
  CHECK(sr::l2_norm(p2) < 1e-5 * sr::l2_norm(h2));
  const sr::GridFunction m2 = sr::projector_apply(sr::Family::cosine, sr::Sign::minus, h2);
  CHECK(rel_l2(m2, h2) < 1e-5);

  // idempotence on the already-projected function
  const sr::GridFunction pp0 = sr::projector_apply(sr::Family::cosine, sr::Sign::plus, p0);
  CHECK(rel_l2(pp0, p0) < 1e-5);

  // sine family: first and third Hermite functions split the same way
  const sr::GridFunction h1 =
      sr::sample(proj_grid(), [](double t) { return t * std::exp(-0.5 * t * t); });
  const sr::GridFunction p1 = sr::projector_apply(sr::Family::sine, sr::Sign::plus, h1);
  CHECK(rel_l2(p1, h1) < 1e-5);
  const sr::GridFunction h3 = sr::sample(proj_grid(), [](double t) {
    return (3.0 * t - 2.0 * t * t * t) * std::exp(-0.5 * t * t);
  });
  const sr::GridFunction p3 = sr::projector_apply(sr::Family::sine, sr::Sign::plus, h3);
  CHECK(sr::l2_norm(p3) < 1e-5 * sr::l2_norm(h3));
}

TEST_CASE("projector is self-adjoint", "[eigenchain]") {
  const sr::GridFunction x = sr::sample(proj_grid(), [](double t) { return std::exp(-t); });
  const sr::GridFunction y =
      sr::sample(proj_grid(), [](double t) { return t * t * std::exp(-0.5 * t * t); });
  const sr::GridFunction px = sr::projector_apply(sr::Family::cosine, sr::Sign::plus, x);
  const sr::GridFunction py = sr::projector_apply(sr::Family::cosine, sr::Sign::plus, y);
  const complex lhs = sr::inner_product(px, y);
  const complex rhs = sr::inner_product(x, py);
  CHECK(std::abs(lhs - rhs) <= 1e-5 * sr::l2_norm(x) * sr::l2_norm(y));
}

TEST_CASE("decomposition resolves the identity with orthogonal pieces",
          "[eigenchain]") {
  const sr::GridFunction x = sr::sample(proj_grid(), [](double t) { return std::exp(-t); });
  const sr::ChainDecomposition dec = sr::decompose(x, sr::Family::cosine);

  // completeness: P+ + P- = identity
  sr::GridFunction sum = dec.plus_part;
  for (std::size_t j = 0; j < sum.values.size(); ++j) sum.values[j] += dec.minus_part.values[j];
  CHECK(rel_l2(sum, x) < 1e-6);

  // orthogonality (Pythagoras)
  const double nx = sr::l2_norm(x);
  const double np = sr::l2_norm(dec.plus_part);
  const double nm = sr::l2_norm(dec.minus_part);
  CHECK(std::abs(nx * nx - np * np - nm * nm) <= 1e-5 * nx * nx);

  // the pieces agree with the (x +- Tx)/2 oracle computed by the transform
  sr::TransformConfig tc;
  tc.tol = 1e-3;
  const sr::GridFunction tx = sr::cosine_transform(x, tc);
  sr::GridFunction op = x, om = x;
  for (std::size_t j = 0; j < op.values.size(); ++j) {
    op.values[j] = 0.5 * (x.values[j] + tx.values[j]);
    om.values[j] = 0.5 * (x.values[j] - tx.values[j]);
  }
  CHECK(rel_l2(dec.plus_part, op) < 1e-5);
  CHECK(rel_l2(dec.minus_part, om) < 1e-5);

  // a real function's minus density vanishes at tau = 0 identically
  CHECK(std::abs(dec.density_minus.values.front()) < 1e-12);

  // the recovered densities synthesize transform eigenfunctions
  sr::TransformConfig loose;
  loose.tol = 1e6;
  const sr::GridFunction rp =
      sr::t_apply(sr::Family::cosine, sr::Sign::plus, dec.density_plus, range_grid());
  CHECK(sr::eigen_residual(rp, sr::Family::cosine, sr::Sign::plus, loose) < 1e-4);
  const sr::GridFunction rm =
      sr::t_apply(sr::Family::cosine, sr::Sign::minus, dec.density_minus, range_grid());
  CHECK(sr::eigen_residual(rm, sr::Family::cosine, sr::Sign::minus, loose) < 1e-4);
}

TEST_CASE("decomposition of an eigenfunction puts everything in one piece",
          "[eigenchain]") {
  const sr::GridFunction h0 =
      sr::sample(proj_grid(), [](double t) { return std::exp(-0.5 * t * t); });
  const sr::ChainDecomposition dec = sr::decompose(h0, sr::Family::cosine);
  CHECK(rel_l2(dec.plus_part, h0) < 1e-5);
  CHECK(sr::l2_norm(dec.minus_part) < 1e-5 * sr::l2_norm(h0));
  // frozen anchor for the recovered density at tau = 0
  CHECK(dec.density_plus.values.front().real() ==
        Catch::Approx(sr::oracle::kH0DensityAtZero).epsilon(1e-6));
}

TEST_CASE("decomposition splits a two-eigenfunction mixture", "[eigenchain]") {
  const sr::GridFunction h0 =
      sr::sample(proj_grid(), [](double t) { return std::exp(-0.5 * t * t); });
  const sr::GridFunction h2 = sr::sample(
      proj_grid(), [](double t) { return (1.0 - 2.0 * t * t) * std::exp(-0.5 * t * t); });
  sr::GridFunction mix = h0;
  for (std::size_t j = 0; j < mix.values.size(); ++j) mix.values[j] += h2.values[j];
  const sr::ChainDecomposition dec = sr::decompose(mix, sr::Family::cosine);
  CHECK(rel_l2(dec.plus_part, h0) < 1e-4);
  CHECK(rel_l2(dec.minus_part, h2) < 1e-4);
}

// ---------------------------------------------------------------------------
// Broad-sense eigenfunction identity under truncation
// ---------------------------------------------------------------------------

TEST_CASE("truncated identity: plus chain converges fast", "[eigenchain]") {
  const sr::GridFunction x =
      sr::t_apply(sr::Family::cosine, sr::Sign::plus, gauss_density(), broad_grid());
  // default schedule 25pi..200pi; strict decrease is enforced internally
  const double r = sr::broad_sense_residual(x, sr::Family::cosine, sr::Sign::plus);
  CHECK(r < 1e-3);
}

TEST_CASE("truncated identity: minus chain needs its slower rate honoured",
          "[eigenchain]") {
  const sr::GridFunction x =
      sr::t_apply(sr::Family::sine, sr::Sign::minus, gauss_density(), broad_grid());
  // A phi(0) != 0 minus superposition converges only like 1/(sqrt(R) ln R):
  // the boundary term cos(tR) x(R) / t has no cancellation at radii
  // commensurate with the probes (unlike the cosine side), and x(R) itself
  // decays like R^{-1/2}/ln R.  At R = 200pi the true residual is ~2.8e-3;
  // reaching 1e-3 honestly requires extending the schedule to 1600pi.
  const double at_200pi = sr::broad_sense_residual(x, sr::Family::sine, sr::Sign::minus);
  CHECK(at_200pi > 1e-3);   // the slow rate is real ...
  CHECK(at_200pi < 5e-3);   // ... and of the predicted size
  const std::vector<double> extended{25 * pi, 50 * pi,  100 * pi, 200 * pi,
                                     400 * pi, 800 * pi, 1600 * pi};
  const double r = sr::broad_sense_residual(x, sr::Family::sine, sr::Sign::minus, extended);
  CHECK(r < 1e-3);
}

TEST_CASE("truncated identity: hypothesis filter rejects a heavy density",
          "[eigenchain]") {
  // 1/(1+tau^2) has numerically divergent e^{pi tau/2}-weighted mass on the
  // window; synthesis needs relaxed window contracts just to build x.
  const sr::TauFunction slow = density([](double t) { return 1.0 / (1.0 + t * t); });
  sr::ChainConfig loose;
  loose.edge_tol = 1e-2;
  loose.path_tol = 1e-4;
  const sr::GridFunction x =
      sr::t_apply(sr::Family::cosine, sr::Sign::plus, slow, broad_grid(), loose);
  CHECK_THROWS_AS(sr::broad_sense_residual(x, sr::Family::cosine, sr::Sign::plus),
                  sr::chain_hypothesis_error);
  // the experimental escape hatch runs the measurement anyway and reports
  const double r =
      sr::broad_sense_residual(x, sr::Family::cosine, sr::Sign::plus, {}, true);
  CHECK(std::isfinite(r));
  CHECK(r < 1e-2);
}

TEST_CASE("truncated identity: argument validation", "[eigenchain]") {
  const sr::GridFunction zero = sr::sample(broad_grid(), [](double) { return 0.0; });
  CHECK(sr::broad_sense_residual(zero, sr::Family::cosine, sr::Sign::plus) == 0.0);

  CHECK_THROWS_AS(
      sr::broad_sense_residual(zero, sr::Family::cosine, sr::Sign::plus, {100.0}),
      std::invalid_argument);
  CHECK_THROWS_AS(sr::broad_sense_residual(zero, sr::Family::cosine, sr::Sign::plus,
                                           {200.0, 100.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(sr::broad_sense_residual(zero, sr::Family::cosine, sr::Sign::plus,
                                           {100.0, 1e12}),
                  std::invalid_argument);
  // grid must bracket the probe points
  const sr::GridFunction narrow =
      sr::sample(sr::make_radial_grid(1.0, 1e4, 64), [](double) { return 0.0; });
  CHECK_THROWS_AS(sr::broad_sense_residual(narrow, sr::Family::cosine, sr::Sign::plus),
                  std::invalid_argument);
}
