#include "flrw/kernels.hpp"

#include <cmath>
#include <string>

#include "flrw/error.hpp"

namespace flrw {
namespace {

const Complex kI(0.0, 1.0);

// Quadrature limits are computed by callers as phi(t) - phi(b); a few
// ulps of slack keep those endpoints inside the cone.
constexpr double kConeSlack = 1e-13;

void require_cone(double r, double radius, const char* who) {
  if (!(r >= 0.0) || !(radius >= 0.0)) {
    throw Error(ErrorKind::Domain,
                std::string(who) + ": need r >= 0 and a non-negative cone "
                                   "radius, got r = " +
                    std::to_string(r) + ", radius = " + std::to_string(radius));
  }
  if (r > radius + kConeSlack * (1.0 + radius)) {
    throw Error(ErrorKind::ConeViolation,
                std::string(who) + ": r = " + std::to_string(r) +
                    " lies outside the cone radius " + std::to_string(radius));
  }
}

// (R - r)(R + r) clipped at zero inside the slack band.
double cone_gap(double radius, double r) {
  return std::max(0.0, (radius - r) * (radius + r));
}

Complex f_aa1(Complex a, double z, const SeriesOptions& s) {
  return hyp2f1(a, a, 1, z, s).value;
}
Complex f_a1a1(Complex a, double z, const SeriesOptions& s) {
  return hyp2f1(a + 1.0, a, 1, z, s).value;
}
Complex f_a1a12(Complex a, double z, const SeriesOptions& s) {
  return hyp2f1(a + 1.0, a + 1.0, 2, z, s).value;
}

}  // namespace

KernelValue kernel_E_tau(double r, double tau, double b, Complex m,
                         const KernelOptions& options) {
  if (!(b >= 0.0) || !(b <= tau)) {
    throw Error(ErrorKind::Domain, "kernel_E_tau: need 0 <= b <= tau, got b = " +
                                       std::to_string(b) +
                                       ", tau = " + std::to_string(tau));
  }
  const double radius = tau - b;
  require_cone(r, radius, "kernel_E_tau");
  if (m == Complex(0.0, 0.0)) return {1.0, KernelBranch::Regular};

  const Complex a = kI * m;
  const double x = (tau + b + 2.0 - r) * (tau + b + 2.0 + r);
  const double z = cone_gap(radius, r) / x;
  const Complex value = cpow(2.0, 2.0 * a) * cpow(1.0 + b, 2.0 * a) *
                        cpow(x, -a) * f_aa1(a, z, options.series);
  return {value, KernelBranch::Regular};
}

KernelValue kernel_K1_tau(double r, double tau, Complex m,
                          const KernelOptions& options) {
  return kernel_E_tau(r, tau, 0.0, m, options);
}

KernelValue kernel_K0_tau(double r, double tau, Complex m,
                          const KernelOptions& options) {
  if (!(tau >= 0.0)) {
    throw Error(ErrorKind::Domain, "kernel_K0_tau: tau must be >= 0");
  }
  require_cone(r, tau, "kernel_K0_tau");
  if (m == Complex(0.0, 0.0)) return {0.0, KernelBranch::Regular};

  const Complex a = kI * m;
  const double d = (tau + 2.0 - r) * (tau + 2.0 + r);
  const double delta = cone_gap(tau, r);
  const double z = delta / d;
  const Complex prefactor = -cpow(2.0, 2.0 * a) * m * cpow(d, -a);
  const Complex f1 = f_aa1(a, z, options.series);
  const Complex f2 = f_a1a1(a, z, options.series);

  if (z < options.near_diagonal_switch) {
    const Complex g = f_a1a12(a, z, options.series);
    const Complex bracket = 2.0 * kI * f1 - 2.0 * kI * tau * a * g / d -
                            kI * f2 + kI * (delta + 2.0 * tau) * f2 / d;
    return {prefactor * bracket, KernelBranch::NearDiagonalExpansion};
  }
  const double r2 = r * r;
  const Complex bracket =
      2.0 * kI * (r2 - tau * (tau + 1.0)) / (r2 - tau * tau) * f1 -
      4.0 * kI * (tau + 1.0) * (tau * (tau + 2.0) - r2) / (delta * d) * f2;
  return {prefactor * bracket, KernelBranch::Regular};
}

KernelValue kernel_K0_fused_tau(double r, double tau, Complex m,
                                const KernelOptions& options) {
  if (!(tau >= 0.0)) {
    throw Error(ErrorKind::Domain, "kernel_K0_fused_tau: tau must be >= 0");
  }
  require_cone(r, tau, "kernel_K0_fused_tau");
  if (m == Complex(0.0, 0.0)) return {0.0, KernelBranch::Regular};

  const Complex a = kI * m;
  const double d = (tau + 2.0 - r) * (tau + 2.0 + r);
  const double z = cone_gap(tau, r) / d;
  if (z < options.near_diagonal_switch) {
    const Complex g = f_a1a12(a, z, options.series);
    const Complex f2 = f_a1a1(a, z, options.series);
    const Complex value = cpow(2.0, 2.0 * a) * cpow(d, -a) * 2.0 * kI * m *
                          (tau * a * g + (tau + 2.0) * f2) / d;
    return {value, KernelBranch::NearDiagonalExpansion};
  }
  const KernelValue k0 = kernel_K0_tau(r, tau, m, options);
  const KernelValue k1 = kernel_K1_tau(r, tau, m, options);
  return {k0.value + 2.0 * kI * m * k1.value, KernelBranch::Regular};
}

KernelValue kernel_E_t(double r, double t, double t0, const CosmologyParams& p,
                       const KernelOptions& options) {
  if (!(t0 >= p.epsilon()) || !(t >= t0)) {
    throw Error(ErrorKind::Domain,
                "kernel_E_t: need eps <= t0 <= t, got t0 = " +
                    std::to_string(t0) + ", t = " + std::to_string(t));
  }
  const double pt = phi(t, p);
  const double p0 = phi(t0, p);
  const double radius = pt - p0;
  require_cone(r, radius, "kernel_E_t");

  const double k = 1.0 - p.ell();
  const Complex mt = p.reduced_mass();
  const Complex a = kI * mt;
  const double x = (pt + p0 - r) * (pt + p0 + r);
  const double z = cone_gap(radius, r) / x;
  const Complex power = (p.ell() + 2.0 * kI * p.mass()) / k;
  const Complex value = cpow(2.0, 2.0 * a - 1.0) *
                        std::pow(k, p.ell() / k) * cpow(p0, power) *
                        cpow(x, -a) * f_aa1(a, z, options.series);
  return {value, KernelBranch::Regular};
}

KernelValue kernel_K1_t(double r, double t, const CosmologyParams& p,
                        const KernelOptions& options) {
  if (!(t >= p.epsilon())) {
    throw Error(ErrorKind::Domain, "kernel_K1_t: need t >= eps");
  }
  const double pt = phi(t, p);
  const double pe = phi(p.epsilon(), p);
  const double radius = pt - pe;
  require_cone(r, radius, "kernel_K1_t");

  const Complex a = kI * p.reduced_mass();
  const double x = (pt + pe - r) * (pt + pe + r);
  const double z = cone_gap(radius, r) / x;
  const Complex value = cpow(2.0, 2.0 * a) * cpow(pe, 2.0 * a - 1.0) *
                        cpow(x, -a) * f_aa1(a, z, options.series);
  return {value, KernelBranch::Regular};
}

KernelValue kernel_K0_t(double r, double t, const CosmologyParams& p,
                        const KernelOptions& options) {
  if (!(t >= p.epsilon())) {
    throw Error(ErrorKind::Domain, "kernel_K0_t: need t >= eps");
  }
  const double pt = phi(t, p);
  const double pe = phi(p.epsilon(), p);
  const double radius = pt - pe;
  require_cone(r, radius, "kernel_K0_t");
  const Complex mt = p.reduced_mass();
  if (mt == Complex(0.0, 0.0)) return {0.0, KernelBranch::Regular};

  const Complex a = kI * mt;
  const double x = (pt + pe - r) * (pt + pe + r);
  const double delta = cone_gap(radius, r);
  const double z = delta / x;
  const Complex prefactor =
      -cpow(2.0, 2.0 * a) * mt * cpow(pe, 2.0 * a) * cpow(x, -a);
  const Complex f1 = f_aa1(a, z, options.series);
  const Complex f2 = f_a1a1(a, z, options.series);

  if (z < options.near_diagonal_switch) {
    const Complex g = f_a1a12(a, z, options.series);
    const Complex bracket = 2.0 * kI * f1 - 2.0 * kI * a * radius * pe * g / x -
                            kI * f2 +
                            kI * (delta + 2.0 * radius * pe) * f2 / x;
    return {prefactor * bracket, KernelBranch::NearDiagonalExpansion};
  }
  const double r2 = r * r;
  const Complex bracket =
      2.0 * kI * (r2 - pt * radius) / (r2 - radius * radius) * f1 -
      4.0 * kI * pt * pe * (pt * pt - pe * pe - r2) / (delta * x) * f2;
  return {prefactor * bracket, KernelBranch::Regular};
}

KernelValue kernel_K0_fused_t(double r, double t, const CosmologyParams& p,
                              const KernelOptions& options) {
  if (!(t >= p.epsilon())) {
    throw Error(ErrorKind::Domain, "kernel_K0_fused_t: need t >= eps");
  }
  const double pt = phi(t, p);
  const double pe = phi(p.epsilon(), p);
  const double radius = pt - pe;
  require_cone(r, radius, "kernel_K0_fused_t");
  const Complex mt = p.reduced_mass();
  if (mt == Complex(0.0, 0.0)) return {0.0, KernelBranch::Regular};

  const Complex a = kI * mt;
  const double x = (pt + pe - r) * (pt + pe + r);
  const double z = cone_gap(radius, r) / x;
  if (z < options.near_diagonal_switch) {
    const Complex g = f_a1a12(a, z, options.series);
    const Complex f2 = f_a1a1(a, z, options.series);
    const Complex value = cpow(2.0, 2.0 * a) * cpow(pe, 2.0 * a) *
                          cpow(x, -a) * 2.0 * kI * mt * pe *
                          (radius * a * g + (radius + 2.0 * pe) * f2) / x;
    return {value, KernelBranch::NearDiagonalExpansion};
  }
  const KernelValue k0 = kernel_K0_t(r, t, p, options);
  const KernelValue k1 = kernel_K1_t(r, t, p, options);
  return {k0.value + 2.0 * kI * mt * pe * k1.value, KernelBranch::Regular};
}

}  // namespace flrw
