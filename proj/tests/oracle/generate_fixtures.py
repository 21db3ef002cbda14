#!/usr/bin/env python3
"""Regenerates tests/fixtures.hpp from high-precision mpmath evaluations.

Every value is computed from the defining formulas or by Taylor-series ODE
integration (mpmath.odefun) at 30+ digits, independently of the C++ code.
Run from the repository root:  python3 tests/oracle/generate_fixtures.py
"""
import os

import mpmath as mp

mp.mp.dps = 40
I = mp.mpc(0, 1)
OUT = os.path.join(os.path.dirname(__file__), "..", "fixtures.hpp")


def F(a, b, c, z):
    return mp.hyp2f1(a, b, c, z)


# proper-time kernels, reduced mass mt
def E_tau(r, tau, b, mt):
    a = I * mt
    X = (tau + b + 2) ** 2 - r * r
    z = ((tau - b) ** 2 - r * r) / X
    return 2 ** (2 * a) * (1 + b) ** (2 * a) * X ** (-a) * F(a, a, 1, z)


def K0_tau(r, tau, mt):
    a = I * mt
    X = (tau + 2) ** 2 - r * r
    z = (tau * tau - r * r) / X
    return -2 ** (2 * a) * mt * X ** (-a) * (
        2 * I * (r * r - tau * (tau + 1)) / (r * r - tau * tau) * F(a, a, 1, z)
        - 4 * I * (tau + 1) * (tau * (tau + 2) - r * r)
        / ((tau * tau - r * r) * X) * F(a + 1, a, 1, z))


# original-time kernels
def phi(t, ell):
    return t ** (1 - ell) / (1 - ell)


def E_t(r, t, t0, ell, m):
    mt = m / (1 - ell)
    a = I * mt
    X = (phi(t, ell) + phi(t0, ell)) ** 2 - r * r
    z = ((phi(t, ell) - phi(t0, ell)) ** 2 - r * r) / X
    return (2 ** (2 * a - 1) * (1 - ell) ** (ell / (1 - ell))
            * phi(t0, ell) ** ((ell + 2 * I * m) / (1 - ell))
            * X ** (-a) * F(a, a, 1, z))


def K1_t(r, t, ell, m, eps):
    a = I * m / (1 - ell)
    pe = phi(eps, ell)
    X = (phi(t, ell) + pe) ** 2 - r * r
    z = ((phi(t, ell) - pe) ** 2 - r * r) / X
    return 2 ** (2 * a) * pe ** (2 * a - 1) * X ** (-a) * F(a, a, 1, z)


def K0_t(r, t, ell, m, eps):
    mt = m / (1 - ell)
    a = I * mt
    p, pe = phi(t, ell), phi(eps, ell)
    X = (p + pe) ** 2 - r * r
    z = ((p - pe) ** 2 - r * r) / X
    return -2 ** (2 * a) * mt * pe ** (2 * a) * X ** (-a) * (
        2 * I * (r * r - p * (p - pe)) / (r * r - (p - pe) ** 2) * F(a, a, 1, z)
        - 4 * I * p * pe * (p * p - pe * pe - r * r)
        / (((p - pe) ** 2 - r * r) * X) * F(a + 1, a, 1, z))


def ode(rhs, t0, y0, t):
    return mp.odefun(rhs, t0, [mp.mpc(v) for v in y0])(t)


entries = []


def add(name, value, note):
    value = mp.mpc(value)
    entries.append((name, value, note))


add("kLnGamma1p1i", mp.loggamma(1 + I), "principal log Gamma(1 + i)")
add("kHyp2f1Half", F(0.5 * I, 0.5 * I, 1, 0.25), "2F1(i/2, i/2; 1; 1/4)")
add("kHyp2f1Upper", F(0.7 * I, 0.7 * I, 1, 0.9), "2F1(0.7i, 0.7i; 1; 0.9)")
add("kHyp2f1C2", F(1 + 0.6 * I, 1 + 0.6 * I, 2, 0.8), "2F1(1+0.6i, 1+0.6i; 2; 0.8)")
add("kPhiInv037", mp.findroot(lambda t: phi(t, mp.mpf(0.5)) - mp.mpf("0.37"), 0.03),
    "root of phi(t) = 0.37 at ell = 1/2")

add("kETau", E_tau(mp.mpf(0.5), 2, mp.mpf(0.5), mp.mpf(0.7)), "E(0.5, 2; 0.5; 0.7)")
add("kK1Tau", E_tau(0, 2, 0, 1), "K1(0, 2; 1) = 4^-i F(i, i; 1; 1/4)")
add("kK0Tau", K0_tau(mp.mpf("1.9"), 2, mp.mpf(0.5)), "K0(1.9, 2; 0.5)")
add("kK0TauNear4", K0_tau(2 * (1 - mp.mpf("1e-4")), 2, mp.mpf(0.5)),
    "K0(2(1 - 1e-4), 2; 0.5)")
add("kK0TauNear8", K0_tau(2 * (1 - mp.mpf("1e-8")), 2, mp.mpf(0.5)),
    "K0(2(1 - 1e-8), 2; 0.5)")
add("kK0TauComplex", K0_tau(mp.mpf("0.7"), mp.mpf("1.3"), mp.mpc(0.5, 0.5)),
    "K0(0.7, 1.3; 0.5 + 0.5i)")
add("kETime", E_t(mp.mpf("0.3"), 2, mp.mpf("1.2"), mp.mpf(0.5), mp.mpf("0.4")),
    "E(0.3, 2; 1.2; m = 0.4), ell = 1/2")
add("kK1Time", K1_t(mp.mpf("0.3"), 2, mp.mpf(0.5), mp.mpf("0.4"), 1),
    "K1(0.3, 2; m = 0.4; eps = 1), ell = 1/2")
add("kK0Time", K0_t(mp.mpf("0.3"), 2, mp.mpf(0.5), mp.mpf("0.4"), 1),
    "K0(0.3, 2; m = 0.4; eps = 1), ell = 1/2")
add("kK1Integral", mp.quad(lambda r: E_tau(r, 1, 0, mp.mpf(0.5)), [0, 1]),
    "int_0^1 K1(r, 1; 0.5) dr")

# EPD mode problems, tau form: u'' + 2i m u'/(tau+1) - lambda u = f
def epd_tau(mt, lam, phi0, phi1, f, tau):
    return ode(lambda s, y: [y[1], f(s) + lam * y[0] - 2 * I * mt * y[1] / (s + 1)],
               0, [phi0, phi1], tau)[0]


add("kEpdTau", epd_tau(mp.mpf("0.8"), -1, 1, 0.5 * I, lambda s: mp.e ** (-s), 2),
    "m = 0.8, lambda = -1, (1, 0.5i), f = exp(-tau), tau = 2")
zero = lambda s: 0
add("kFundamental0", epd_tau(mp.mpf(0.5), -1, 1, 0, zero, 1), "E0, m = 0.5, lambda = -1, tau = 1")
add("kFundamental1", epd_tau(mp.mpf(0.5), -1, 0, 1, zero, 1), "E1, m = 0.5, lambda = -1, tau = 1")
add("kRetarded",
    ode(lambda s, y: [y[1], -2 * y[0] - 2 * I * mp.mpf("0.6") * y[1] / (s + 1)],
        mp.mpf(0.5), [0, 1], 2)[0],
    "m = 0.6, lambda = -2, tau0 = 0.5, tau = 2")

# original time: u'' + (ell + 2im) u'/t - lambda t^(-2 ell) u = f
ell, m = mp.mpf(2) / 3, mp.mpf("0.3")
add("kEpdTime",
    ode(lambda t, y: [y[1], mp.e ** (-t) * mp.mpc(0.5, 0.2) - t ** (-2 * ell) * y[0]
                      - (ell + 2 * I * m) * y[1] / t],
        1, [mp.mpc(0.8, -0.1), mp.mpc(0.3, 0.5)], 3)[0],
    "ell = 2/3, m = 0.3, lambda = -1, (0.8-0.1i, 0.3+0.5i), f = (0.5+0.2i) exp(-t), t = 3")

# Dirac mode, upper/lower block form, ell = 2/3, m = 1, k = (1, 0, 0)
def dirac_rhs(t, y, ell, m, k):
    s00, s01, s10, s11 = k[2], k[0] - I * k[1], k[0] + I * k[1], -k[2]
    w, dec, mt = t ** (-ell), mp.mpf(1.5) * ell / t, m / t
    u0, u1, l0, l1 = y
    return [-I * (w * (s00 * l0 + s01 * l1) + mt * u0) - dec * u0,
            -I * (w * (s10 * l0 + s11 * l1) + mt * u1) - dec * u1,
            I * (-w * (s00 * u0 + s01 * u1) + mt * l0) - dec * l0,
            I * (-w * (s10 * u0 + s11 * u1) + mt * l1) - dec * l1]


psi = ode(lambda t, y: dirac_rhs(t, y, mp.mpf(2) / 3, 1, [1, 0, 0]), 1, [1, 0, 0, 0], 3)
for c in range(4):
    add("kDirac%d" % c, psi[c], "component %d, ell = 2/3, m = 1, k = (1,0,0), t = 3" % c)


def lit(x):
    return mp.nstr(x, 20, min_fixed=-3, max_fixed=3)


with open(OUT, "w") as fh:
    fh.write("// Generated by tests/oracle/generate_fixtures.py; do not edit.\n")
    fh.write("#pragma once\n\n#include <complex>\n\nnamespace fixtures {\n\n")
    for name, value, note in entries:
        fh.write("// %s\n" % note)
        fh.write("inline const std::complex<double> %s(%s, %s);\n"
                 % (name, lit(value.real), lit(value.imag)))
    fh.write("\n}  // namespace fixtures\n")
print("wrote", len(entries), "fixtures")
