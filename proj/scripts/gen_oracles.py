#!/usr/bin/env python3
# SPDX-License-Identifier: MIT
"""Regenerates tests/oracle_values.hpp.

Every golden constant asserted by the test suite is computed here with mpmath
at 40 significant digits and frozen as a shortest-round-trip double literal.
Run from the repository root:  python3 scripts/gen_oracles.py
"""

import mpmath as mp

mp.mp.dps = 40

OUT = "tests/oracle_values.hpp"


def d(x) -> str:
    """Shortest double literal that round-trips the 40-digit value."""
    f = float(mp.mpf(x))
    s = repr(f)
    if "e" not in s and "." not in s and "inf" not in s and "nan" not in s:
        s += ".0"
    return s


def c(z) -> str:
    z = mp.mpc(z)
    return "cd{%s, %s}" % (d(z.real), d(z.imag))


def log_gamma(z):
    return mp.loggamma(z)


def phase_c(tau):
    # 2^{i tau/2} * exp(i arg Gamma(1/4 + i tau/2))
    return mp.exp(1j * (tau / mp.mpf(2)) * mp.log(2)) * mp.exp(
        1j * mp.arg(mp.gamma(mp.mpf(1) / 4 + 1j * tau / mp.mpf(2))))


def phase_s(tau):
    return mp.exp(1j * (tau / mp.mpf(2)) * mp.log(2)) * mp.exp(
        1j * mp.arg(mp.gamma(mp.mpf(3) / 4 + 1j * tau / mp.mpf(2))))


def kappa_c(a):
    return 2 ** (mp.mpf(1) / 2 - a) * mp.gamma(mp.mpf(1) / 2 - a / 2) / mp.gamma(a / 2)


def kappa_s(a):
    return 2 ** (mp.mpf(1) / 2 - a) * mp.gamma(1 - a / 2) / mp.gamma(mp.mpf(1) / 2 + a / 2)


def closed_power(kind, zeta):
    zeta = mp.mpc(zeta)
    if kind == "cos":
        return mp.cos(mp.pi * zeta / 2) * mp.gamma(zeta)
    return mp.sin(mp.pi * zeta / 2) * mp.gamma(zeta)


def eps_regularized(kind, zeta, eps):
    # int_0^inf e^{-eps s} trig(s) s^{zeta-1} ds
    zeta, eps = mp.mpc(zeta), mp.mpf(eps)
    a = (eps - 1j) ** (-zeta)
    b = (eps + 1j) ** (-zeta)
    if kind == "cos":
        return mp.gamma(zeta) * (a + b) / 2
    return mp.gamma(zeta) * (a - b) / (2j)


def truncated(kind, zeta, upper, pieces):
    zeta = mp.mpc(zeta)
    f = (lambda s: mp.cos(s) * s ** (zeta - 1)) if kind == "cos" else (
        lambda s: mp.sin(s) * s ** (zeta - 1))
    pts = [upper * mp.mpf(k) / pieces for k in range(pieces + 1)]
    return mp.quad(f, pts)


def hermite_h(k, t):
    # h_k(t) = e^{t^2/2} d^k/dt^k e^{-t^2}  ==  (-1)^k H_k(t) e^{-t^2/2}
    t = mp.mpf(t)
    via_poly = (-1) ** k * mp.hermite(k, t) * mp.exp(-t * t / 2)
    via_diff = mp.exp(t * t / 2) * mp.diff(lambda u: mp.exp(-u * u), t, k)
    assert mp.fabs(via_poly - via_diff) < mp.mpf(10) ** (-25) * (1 + mp.fabs(via_poly))
    return via_poly


def sqrt_principal(z):
    return mp.sqrt(z)


lines = []
add = lines.append
add("// Generated by scripts/gen_oracles.py (mpmath %s, 40 digits). Do not edit." % mp.__version__)
add("// SPDX-License-Identifier: MIT")
add("#pragma once")
add("")
add("#include <complex>")
add("")
add("namespace selfrecip::oracle {")
add("")
add("using cd = std::complex<double>;")
add("")

# ---------------------------------------------------------------- log gamma
add("struct LogGammaSample { cd z; cd value; };")
lg_pts = [
    mp.mpc(0.25, 0), mp.mpc(0.5, 0), mp.mpc(1, 0),
    mp.mpc(0.3, 0.4), mp.mpc(0.5, 5), mp.mpc(0.9, -3), mp.mpc(0.1, 20),
    mp.mpc(0.05, 0.3), mp.mpc(0.2, -7), mp.mpc(0.5, 100), mp.mpc(0.75, -40),
    mp.mpc(0.45, 60), mp.mpc(2.5, 0.7), mp.mpc(10, 10), mp.mpc(-1.5, 0.5),
    mp.mpc(1e-3, 0.0), mp.mpc(0.999, -0.001),
]
add("inline const LogGammaSample kLogGammaSamples[] = {")
for z in lg_pts:
    add("    {%s, %s}," % (c(z), c(log_gamma(z))))
add("};")
add("")

# ------------------------------------------------------- Gamma(1/2 + i tau)
add("struct GammaLineSample { double tau; cd value; };")
add("inline const GammaLineSample kGammaHalfLine[] = {")
for tau in [mp.mpf(q) for q in ("0", "0.5", "1", "3.7", "12", "20")]:
    add("    {%s, %s}," % (d(tau), c(mp.gamma(mp.mpf(1) / 2 + 1j * tau))))
add("};")
add("")

# ------------------------------------------------------------------- kappa
add("// kappa_c(a) = 2^{1/2-a} Gamma(1/2-a/2)/Gamma(a/2); kappa_s(a) = 2^{1/2-a} Gamma(1-a/2)/Gamma(1/2+a/2)")
add("inline const cd kKappaCosAt03 = %s;" % c(kappa_c(mp.mpf("0.3"))))
add("inline const cd kKappaCosAt07 = %s;" % c(kappa_c(mp.mpf("0.7"))))
add("inline const cd kKappaSinAtQuarter = %s;  // = 2^{1/4} Gamma(7/8)/Gamma(5/8)" % c(kappa_s(mp.mpf(1) / 4)))
a_cplx = mp.mpc("0.3", "0.2")
add("inline const cd kKappaCosComplexA = %s;       // a = 0.3+0.2i" % c(kappa_c(a_cplx)))
add("inline const cd kKappaCosComplexOneMinusA = %s;  // 1-a" % c(kappa_c(1 - a_cplx)))
add("inline const cd kKappaSinComplexA = %s;       // a = 0.3+0.2i" % c(kappa_s(a_cplx)))
add("")

# ------------------------------------------------------------ closed power
add("struct ClosedPowerSample { int kind; cd zeta; cd value; };  // kind: 0 = cosine, 1 = sine")
cp = [
    ("cos", mp.mpc(0.5, 0)), ("cos", mp.mpc(0.25, 0)), ("cos", mp.mpc(0.5, 1)),
    ("cos", mp.mpc(0.5, 5)), ("sin", mp.mpc(0.3, 0)), ("sin", mp.mpc(0.75, 0)),
    ("sin", mp.mpc(0.5, 2)), ("sin", mp.mpc(0.9, -4)),
]
add("inline const ClosedPowerSample kClosedPower[] = {")
for kind, z in cp:
    add("    {%d, %s, %s}," % (0 if kind == "cos" else 1, c(z), c(closed_power(kind, z))))
add("};")
add("")

# ----------------------------------------------------------------- phases
add("struct PhaseSample { int family; double tau; cd value; };  // family: 0 = cosine, 1 = sine")
ph = [("c", "1"), ("c", "3.7"), ("c", "-2.5"), ("s", "2"), ("s", "-5"), ("s", "0.25")]
add("inline const PhaseSample kPhases[] = {")
for fam, tau in ph:
    v = phase_c(mp.mpf(tau)) if fam == "c" else phase_s(mp.mpf(tau))
    add("    {%d, %s, %s}," % (0 if fam == "c" else 1, d(mp.mpf(tau)), c(v)))
add("};")
add("")

# ---------------------------------------------------------------- hermite
add("struct HermiteSample { int k; double t; double value; };")
add("inline const HermiteSample kHermite[] = {")
for k in range(7):
    for t in ("0.3", "1.1", "2.4"):
        add("    {%d, %s, %s}," % (k, d(mp.mpf(t)), d(hermite_h(k, t))))
add("};")
add("")

# ------------------------------------------- Titchmarsh multiplier anchors
add("// m_c(tau) = 2^{zeta-1/2} Gamma(zeta/2)/Gamma(1/2-zeta/2), zeta = 1/2+i tau; sine uses")
add("// m_s(tau) = 2^{zeta-1/2} Gamma(1/2+zeta/2)/Gamma(1-zeta/2).")
add("struct MultiplierSample { int family; double tau; cd value; };")


def mult_c(tau):
    z = mp.mpc(0.5, tau)
    return 2 ** (z - mp.mpf(1) / 2) * mp.gamma(z / 2) / mp.gamma(mp.mpf(1) / 2 - z / 2)


def mult_s(tau):
    z = mp.mpc(0.5, tau)
    return 2 ** (z - mp.mpf(1) / 2) * mp.gamma(mp.mpf(1) / 2 + z / 2) / mp.gamma(1 - z / 2)


add("inline const MultiplierSample kMultiplier[] = {")
for tau in ("1", "5", "-3.2"):
    add("    {0, %s, %s}," % (d(mp.mpf(tau)), c(mult_c(mp.mpf(tau)))))
for tau in ("1", "5", "-3.2"):
    add("    {1, %s, %s}," % (d(mp.mpf(tau)), c(mult_s(mp.mpf(tau)))))
add("};")
add("")

# -------------------------------------------------- Mellin image anchors
add("// Mellin image of e^{-t^2/2} on the critical line: 2^{zeta/2-1} Gamma(zeta/2), zeta = 1/2+i tau.")
add("struct MellinGaussSample { double tau; cd value; };")
add("inline const MellinGaussSample kMellinHalfGauss[] = {")
for tau in ("0", "1", "5"):
    z = mp.mpc(0.5, mp.mpf(tau))
    add("    {%s, %s}," % (d(mp.mpf(tau)), c(2 ** (z / 2 - 1) * mp.gamma(z / 2))))
add("};")
add("")

# ------------------------------------------------------------- L2 norms
add("// Half-line L2 norms: ||e^{-t}|| = sqrt(1/2), ||h0|| = (sqrt(pi)/2)^{1/2},")
add("// ||h1|| = pi^{1/4}, ||h2|| = 2 pi^{1/4}, ||e^{-tau^2}|| = (pi/8)^{1/4}.")
add("inline const double kNormExp = %s;" % d(mp.sqrt(mp.mpf(1) / 2)))
add("inline const double kNormH0 = %s;" % d(mp.sqrt(mp.sqrt(mp.pi) / 2)))
add("inline const double kNormH1 = %s;" % d(mp.pi ** mp.mpf("0.25")))
add("inline const double kNormH2 = %s;" % d(2 * mp.pi ** mp.mpf("0.25")))
add("inline const double kNormGaussTau = %s;" % d((mp.pi / 8) ** mp.mpf("0.25")))
add("inline const double kL1GaussTau = %s;  // integral_0^inf e^{-tau^2} dtau" % d(mp.sqrt(mp.pi) / 2))
add("inline const double kSqrtEMinus1 = %s;  // L2 norm of indicator[1,e]" % d(mp.sqrt(mp.e - 1)))
add("")

# ------------------------------------- generalized eigenfunction anchor
add("// E_c^{+/-}(t=2, a=0.3+0.1i) with sqrt branch rule: r = principal sqrt of kappa_c(1-a),")
add("// E = r 2^{-a} +/- (1/r) 2^{a-1}.")
aE = mp.mpc("0.3", "0.1")
rE = sqrt_principal(kappa_c(1 - aE))
t0 = mp.mpf(2)
add("inline const cd kBigEPlusAnchor = %s;" % c(rE * t0 ** (-aE) + (1 / rE) * t0 ** (aE - 1)))
add("inline const cd kBigEMinusAnchor = %s;" % c(rE * t0 ** (-aE) - (1 / rE) * t0 ** (aE - 1)))
add("")

# ------------------------------------------------- oscillatory integrals
add("// Regularized power-kernel integrals: int_0^inf e^{-eps s} trig(s) s^{zeta-1} ds.")
add("struct EpsRegSample { int kind; cd zeta; double eps; cd value; };")
er = [
    ("cos", mp.mpc(0.5, 0), "0.1"), ("cos", mp.mpc(0.5, 0), "0.001"),
    ("sin", mp.mpc(0.3, 0), "0.05"), ("cos", mp.mpc(0.5, 5), "0.02"),
    ("sin", mp.mpc(0.75, -2), "0.25"),
]
add("inline const EpsRegSample kEpsReg[] = {")
for kind, z, eps in er:
    add("    {%d, %s, %s, %s}," % (0 if kind == "cos" else 1, c(z), d(mp.mpf(eps)),
                                   c(eps_regularized(kind, z, mp.mpf(eps)))))
add("};")
add("")
add("// Truncated integrals int_0^R trig(s) s^{zeta-1} ds (R finite, no regularization).")
add("struct TruncSample { int kind; cd zeta; double upper; cd value; };")
tr = [
    ("cos", mp.mpc(0.5, 0), 10 * mp.pi, 40), ("sin", mp.mpc(0.3, 0), 4 * mp.pi, 16),
    ("cos", mp.mpc(0.5, 5), 8 * mp.pi, 32), ("sin", mp.mpc(0.9, 0), 7 * mp.pi, 28),
    ("cos", mp.mpc(0.25, 0), mp.mpf("0.05"), 4), ("sin", mp.mpc(0.6, 1), mp.mpf("0.03"), 4),
]
add("inline const TruncSample kTruncated[] = {")
for kind, z, R, pieces in tr:
    add("    {%d, %s, %s, %s}," % (0 if kind == "cos" else 1, c(z), d(R),
                                   c(truncated(kind, z, R, pieces))))
add("};")
add("")

# -------------------------------------------------- misc transform pairs
add("// Mellin image of indicator[1,e] at tau = 2: (e^{1/2+i tau} - 1)/(1/2 + i tau).")
zi = mp.mpc(0.5, 2)
add("inline const cd kMellinIndicatorTau2 = %s;" % c((mp.e ** zi - 1) / zi))
add("")
add("}  // namespace selfrecip::oracle")
add("")

with open(OUT, "w") as f:
    f.write("\n".join(lines))
print("wrote %s (%d lines)" % (OUT, len(lines)))
