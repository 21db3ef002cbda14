// Generated by tests/oracle/generate_fixtures.py; do not edit.
#pragma once

#include <complex>

namespace fixtures {

// principal log Gamma(1 + i)
inline const std::complex<double> kLnGamma1p1i(-0.65092319930185633889, -0.30164032046753319789);
// 2F1(i/2, i/2; 1; 1/4)
inline const std::complex<double> kHyp2f1Half(0.93450417535359736943, -4.572553167251815641e-3);
// 2F1(0.7i, 0.7i; 1; 0.9)
inline const std::complex<double> kHyp2f1Upper(0.61302134715801083334, -0.22245214169410797129);
// 2F1(1+0.6i, 1+0.6i; 2; 0.8)
inline const std::complex<double> kHyp2f1C2(0.76319426961305011814, 1.1033606227171866464);
// root of phi(t) = 0.37 at ell = 1/2
inline const std::complex<double> kPhiInv037(0.034225, 0.0);
// E(0.5, 2; 0.5; 0.7)
inline const std::complex<double> kETau(0.80480794234583612812, -0.50553294293574467938);
// K1(0, 2; 1) = 4^-i F(i, i; 1; 1/4)
inline const std::complex<double> kK1Tau(0.1051696221091327664, -0.74766209647795824821);
// K0(1.9, 2; 0.5)
inline const std::complex<double> kK0Tau(-0.43394479179846211686, -0.52193487680023995026);
// K0(2(1 - 1e-4), 2; 0.5)
inline const std::complex<double> kK0TauNear4(-0.41916889741211848328, -0.52507724542106821863);
// K0(2(1 - 1e-8), 2; 0.5)
inline const std::complex<double> kK0TauNear8(-0.41913763477790839107, -0.52508335907819075595);
// K0(0.7, 1.3; 0.5 + 0.5i)
inline const std::complex<double> kK0TauComplex(0.27347783971528962892, -1.746940133240885622);
// E(0.3, 2; 1.2; m = 0.4), ell = 1/2
inline const std::complex<double> kETime(0.53084555418374858287, -0.11565676859931539876);
// K1(0.3, 2; m = 0.4; eps = 1), ell = 1/2
inline const std::complex<double> kK1Time(0.47005616546741319612, -0.14450025059530706613);
// K0(0.3, 2; m = 0.4; eps = 1), ell = 1/2
inline const std::complex<double> kK0Time(-0.37156789186699614154, -0.84984426940429631979);
// int_0^1 K1(r, 1; 0.5) dr
inline const std::complex<double> kK1Integral(0.90820017767760692773, -0.36972237494966267457);
// m = 0.8, lambda = -1, (1, 0.5i), f = exp(-tau), tau = 2
inline const std::complex<double> kEpdTau(0.74173466561117441062, 0.40672894892171321789);
// E0, m = 0.5, lambda = -1, tau = 1
inline const std::complex<double> kFundamental0(0.55766950630635975752, 0.10026647873783930739);
// E1, m = 0.5, lambda = -1, tau = 1
inline const std::complex<double> kFundamental1(0.76225443753948739545, -0.31292096035404068416);
// m = 0.6, lambda = -2, tau0 = 0.5, tau = 2
inline const std::complex<double> kRetarded(0.50950931589771567486, -0.27189404427881535241);
// ell = 2/3, m = 0.3, lambda = -1, (0.8-0.1i, 0.3+0.5i), f = (0.5+0.2i) exp(-t), t = 3
inline const std::complex<double> kEpdTime(0.80575942972847772665, 0.47015671477449395387);
// component 0, ell = 2/3, m = 1, k = (1,0,0), t = 3
inline const std::complex<double> kDirac0(-0.050182169365871866951, -0.20941536273923949173);
// component 1, ell = 2/3, m = 1, k = (1,0,0), t = 3
inline const std::complex<double> kDirac1(0.0, 0.0);
// component 2, ell = 2/3, m = 1, k = (1,0,0), t = 3
inline const std::complex<double> kDirac2(0.0, 0.0);
// component 3, ell = 2/3, m = 1, k = (1,0,0), t = 3
inline const std::complex<double> kDirac3(-0.021671777912445392558, -0.25351213162243823909);

}  // namespace fixtures
