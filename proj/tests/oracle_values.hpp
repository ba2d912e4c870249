// Generated by scripts/gen_oracles.py (mpmath 1.3.0, 40 digits). Do not edit.
// SPDX-License-Identifier: MIT
#pragma once

#include <complex>

namespace selfrecip::oracle {

using cd = std::complex<double>;

struct LogGammaSample { cd z; cd value; };
inline const LogGammaSample kLogGammaSamples[] = {
    {cd{0.25, 0.0}, cd{1.2880225246980774, 0.0}},
    {cd{0.5, 0.0}, cd{0.5723649429247001, 0.0}},
    {cd{1.0, 0.0}, cd{0.0, 0.0}},
    {cd{0.3, 0.4}, cd{0.49665590338172577, -0.9827434476071467}},
    {cd{0.5, 5.0}, cd{-6.935043100769822, 3.055542594015523}},
    {cd{0.9, -3.0}, cd{-3.354682188830822, -0.911296856396437}},
    {cd{0.1, 20.0}, cd{-31.695265907346563, 39.28441001064936}},
    {cd{0.05, 0.3}, cd{1.0961954692483151, -1.5458901140713923}},
    {cd{0.2, -7.0}, cd{-10.660245035487833, -6.149654062087331}},
    {cd{0.5, 100.0}, cd{-156.16069414628498, 360.5174352679064}},
    {cd{0.75, -40.0}, cd{-60.9906995583522, -107.94813766529656}},
    {cd{0.45, 60.0}, cd{-93.53355772965583, 185.58280753887107}},
    {cd{2.5, 0.7}, cd{0.16669548116680746, 0.5052935748792918}},
    {cd{10.0, 10.0}, cd{8.236131750448719, 23.948703413782038}},
    {cd{-1.5, 0.5}, cd{0.0008154671525182346, -5.926765791507547}},
    {cd{0.001, 0.0}, cd{6.907178885383853, 0.0}},
    {cd{0.999, -0.001}, cd{0.0005772148624471118, 0.000578861400338819}},
};

struct GammaLineSample { double tau; cd value; };
inline const GammaLineSample kGammaHalfLine[] = {
    {0.0, cd{1.772453850905516, 0.0}},
    {0.5, cd{0.8181639995417473, -0.7633138287139826}},
    {1.0, cd{0.3006946172606558, -0.4249678794331238}},
    {3.7, cd{0.0030485117756046324, 0.0068512095067396256}},
    {12.0, cd{8.443121328115218e-09, -1.3971152072226017e-08}},
    {20.0, cd{-3.430784159145482e-14, 4.5428803574633436e-14}},
};

// kappa_c(a) = 2^{1/2-a} Gamma(1/2-a/2)/Gamma(a/2); kappa_s(a) = 2^{1/2-a} Gamma(1-a/2)/Gamma(1/2+a/2)
inline const cd kKappaCosAt03 = cd{0.4701971928765542, 0.0};
inline const cd kKappaCosAt07 = cd{2.126767269456116, 0.0};
inline const cd kKappaSinAtQuarter = cd{0.9033149603099504, 0.0};  // = 2^{1/4} Gamma(7/8)/Gamma(5/8)
inline const cd kKappaCosComplexA = cd{0.3890729909293232, 0.3803358988181253};       // a = 0.3+0.2i
inline const cd kKappaCosComplexOneMinusA = cd{1.3142884191276352, -1.2847745252148997};  // 1-a
inline const cd kKappaSinComplexA = cd{0.9246802456253996, 0.07600128456330503};       // a = 0.3+0.2i

struct ClosedPowerSample { int kind; cd zeta; cd value; };  // kind: 0 = cosine, 1 = sine
inline const ClosedPowerSample kClosedPower[] = {
    {0, cd{0.5, 0.0}, cd{1.2533141373155003, 0.0}},
    {0, cd{0.25, 0.0}, cd{3.349626787076346, 0.0}},
    {0, cd{0.5, 1.0}, cd{-0.1580253917248102, -1.2433118282897162}},
    {0, cd{0.5, 5.0}, cd{-0.8067822084032484, 0.9591135464578081}},
    {1, cd{0.3, 0.0}, cd{1.3581438997256194, 0.0}},
    {1, cd{0.75, 0.0}, cd{1.132137410205051, 0.0}},
    {1, cd{0.5, 2.0}, cd{1.2305239651269655, 0.23792246225001004}},
    {1, cd{0.9, -4.0}, cd{-1.4871359422612003, -1.5958142273348617}},
};

struct PhaseSample { int family; double tau; cd value; };  // family: 0 = cosine, 1 = sine
inline const PhaseSample kPhases[] = {
    {0, 1.0, cd{0.6610272232396897, -0.750361919433566}},
    {0, 3.7, cd{0.983233624801074, 0.18235031960635792}},
    {0, -2.5, cd{0.8829317915578688, 0.4695012795045526}},
    {1, 2.0, cd{0.9954436381515352, 0.09535178689272374}},
    {1, -5.0, cd{-0.3425915317147497, -0.9394844556443399}},
    {1, 0.25, cd{0.9988773638981974, -0.04737100264706464}},
};

struct HermiteSample { int k; double t; double value; };
inline const HermiteSample kHermite[] = {
    {0, 0.3, 0.9559974818331},
    {0, 1.1, 0.5460744266397094},
    {0, 2.4, 0.05613476283413372},
    {1, 0.3, -0.57359848909986},
    {1, 1.1, -1.2013637386073608},
    {1, 2.4, -0.26944686160384185},
    {2, 0.3, -1.5678358702062838},
    {2, 1.1, 1.5508513716567747},
    {2, 2.4, 1.1810754100301735},
    {3, 0.3, 3.23509547852321},
    {3, 1.1, 1.3935819367845383},
    {3, 2.4, -4.591374521729465},
    {4, 0.3, 7.465957934123777},
    {4, 1.1, -12.370988490866633},
    {4, 2.4, 14.952145244120393},
    {5, 0.3, -30.360338588659946},
    {5, 1.1, 16.067519185630285},
    {5, 2.4, -35.03930099794216},
    {6, 0.3, -56.4433761880418},
    {6, 1.1, 88.3613427002797},
    {6, 2.4, 18.66719234891845},
};

// m_c(tau) = 2^{zeta-1/2} Gamma(zeta/2)/Gamma(1/2-zeta/2), zeta = 1/2+i tau; sine uses
// m_s(tau) = 2^{zeta-1/2} Gamma(1/2+zeta/2)/Gamma(1-zeta/2).
struct MultiplierSample { int family; double tau; cd value; };
inline const MultiplierSample kMultiplier[] = {
    {0, 1.0, cd{-0.12608602027205093, -0.9920193120559478}},
    {0, 5.0, cd{-0.6437190680153916, 0.7652618907755668}},
    {0, -3.2, cd{0.9688691072262982, 0.24757353061770543}},
    {1, 1.0, cd{0.9774441099546679, -0.21119425161430688}},
    {1, 5.0, cd{-0.7652620847946833, -0.6437188373627845}},
    {1, -3.2, cd{0.24765695365414947, -0.9688477864488035}},
};

// Mellin image of e^{-t^2/2} on the critical line: 2^{zeta/2-1} Gamma(zeta/2), zeta = 1/2+i tau.
struct MellinGaussSample { double tau; cd value; };
inline const MellinGaussSample kMellinHalfGauss[] = {
    {0.0, cd{2.155800549540928, 0.0}},
    {1.0, cd{0.5523517430013037, -0.6269994631229413}},
    {5.0, cd{0.0098696355748391, 0.021199158594301246}},
};

// Half-line L2 norms: ||e^{-t}|| = sqrt(1/2), ||h0|| = (sqrt(pi)/2)^{1/2},
// ||h1|| = pi^{1/4}, ||h2|| = 2 pi^{1/4}, ||e^{-tau^2}|| = (pi/8)^{1/4}.
inline const double kNormExp = 0.7071067811865476;
inline const double kNormH0 = 0.9413962637767148;
inline const double kNormH1 = 1.3313353638003897;
inline const double kNormH2 = 2.6626707276007795;
inline const double kNormGaussTau = 0.7916167435430798;
inline const double kL1GaussTau = 0.886226925452758;  // integral_0^inf e^{-tau^2} dtau
inline const double kSqrtEMinus1 = 1.3108324944320862;  // L2 norm of indicator[1,e]

// E_c^{+/-}(t=2, a=0.3+0.1i) with sqrt branch rule: r = principal sqrt of kappa_c(1-a),
// E = r 2^{-a} +/- (1/r) 2^{a-1}.
inline const cd kBigEPlusAnchor = cd{1.5295152428494014, -0.19993668635057446};
inline const cd kBigEMinusAnchor = cd{0.7001511943650461, -0.43677167423149704};

// Regularized power-kernel integrals: int_0^inf e^{-eps s} trig(s) s^{zeta-1} ds.
struct EpsRegSample { int kind; cd zeta; double eps; cd value; };
inline const EpsRegSample kEpsReg[] = {
    {0, cd{0.5, 0.0}, 0.1, cd{1.3109253038208317, 0.0}},
    {0, cd{0.5, 0.0}, 0.001, cd{1.2539403240000389, 0.0}},
    {1, cd{0.3, 0.0}, 0.05, cd{1.3175499607373053, 0.0}},
    {0, cd{0.5, 5.0}, 0.02, cd{-0.7377227655025415, 0.8611628974044695}},
    {1, cd{0.75, -2.0}, 0.25, cd{0.8539034947220725, -0.2599295347483944}},
};

// Truncated integrals int_0^R trig(s) s^{zeta-1} ds (R finite, no regularization).
struct TruncSample { int kind; cd zeta; double upper; cd value; };
inline const TruncSample kTruncated[] = {
    {0, cd{0.5, 0.0}, 31.41592653589793, cd{1.2504852381818483, 0.0}},
    {1, cd{0.3, 0.0}, 12.566370614359172, cd{1.1893141249951111, 0.0}},
    {0, cd{0.5, 5.0}, 25.132741228718345, cd{-0.7854153379114044, 0.9239131349555023}},
    {1, cd{0.9, 0.0}, 21.991148575128552, cd{1.7894410662021702, 0.0}},
    {0, cd{0.25, 0.0}, 0.05, cd{1.8912205409659308, 0.0}},
    {1, cd{0.6, 1.0}, 0.03, cd{-0.001169306248293985, 0.001547086583287933}},
};

// Mellin image of indicator[1,e] at tau = 2: (e^{1/2+i tau} - 1)/(1/2 + i tau).
inline const cd kMellinIndicatorTau2 = cd{0.5071296346884395, 0.9698374792470315};

// Chain eigenfunction point values:
//   e_c^+(2, 1)  = (1/sqrt(pi)) 2^{-1/2} cos(theta_c(1) - ln 2)
//   e_s^-(e, 1)  = (1/sqrt(pi)) e^{-1/2} sin(theta_s(1) - 1)
inline const double kChainCosPlusT2Tau1 = 0.011583546524236898;
inline const double kChainSinMinusTeTau1 = -0.30595652045271177;

// Chain superpositions of phi = e^{-tau^2} evaluated at t = 1:
//   (1/sqrt(pi)) int_0^inf {cos, sin}(theta(tau)) e^{-tau^2} dtau.
inline const double kGaussChainCosPlusAt1 = 0.40663816901806515;
inline const double kGaussChainSinMinusAt1 = -0.032731005332688569;

// Plus-chain density of h0 = e^{-t^2/2} (cosine family) at tau = 0:
// 2^{zeta/2-1} Gamma(zeta/2) / sqrt(pi) at zeta = 1/2.
inline const double kH0DensityAtZero = 1.2162802142575203;

// Norms of tau^2 e^{-tau^2} on the half-line: L2 and L1.
inline const double kNormTau2Gauss = 0.34278010498470904;
inline const double kL1Tau2Gauss = 0.44311346272637901;

}  // namespace selfrecip::oracle
