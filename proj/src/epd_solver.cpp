#include "flrw/epd_solver.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "flrw/error.hpp"

namespace flrw {
namespace {

const Complex kI(0.0, 1.0);
const Complex kZero(0.0, 0.0);

}  // namespace

Complex wave_mode_propagator(const ModeSymbol& symbol, double r) {
  if (r == 0.0) return 1.0;
  return std::cosh(r * std::sqrt(symbol.lambda));
}

Complex solve_epd_tau(const ModeSymbol& symbol, Complex m,
                      const ModeCauchyData& data, double tau,
                      const EpdOptions& options) {
  if (!(tau >= 0.0)) {
    throw Error(ErrorKind::Domain, "solve_epd_tau: tau must be >= 0");
  }
  if (tau == 0.0) return data.phi0;
  const auto& q = options.quadrature;
  const auto& ko = options.kernels;
  const auto v = [&](double r) { return wave_mode_propagator(symbol, r); };

  Complex u = 0.0;
  const double lo = std::max(0.0, data.source_from);
  const double hi = std::min(tau, data.source_to);
  if (data.source && lo < hi) {
    const QuadratureConfig inner = q.tightened(0.1);
    u += integrate_adaptive(
        [&](double b) {
          const Complex f = data.source(b);
          if (f == kZero) return kZero;
          return f * integrate_adaptive(
                         [&](double r) {
                           return kernel_E_tau(r, tau, b, m, ko).value * v(r);
                         },
                         0.0, tau - b, inner);
        },
        lo, hi, q);
  }
  if (data.phi1 != kZero) {
    u += data.phi1 * integrate_adaptive(
                         [&](double r) {
                           return kernel_K1_tau(r, tau, m, ko).value * v(r);
                         },
                         0.0, tau, q);
  }
  if (data.phi0 != kZero) {
    const Complex boundary = cpow(1.0 + tau, -kI * m) * v(tau);
    const Complex body = integrate_adaptive(
        [&](double r) { return kernel_K0_fused_tau(r, tau, m, ko).value * v(r); },
        0.0, tau, q);
    u += data.phi0 * (boundary + body);
  }
  return u;
}

Complex solve_epd_t(const ModeSymbol& symbol, const CosmologyParams& p,
                    const ModeCauchyData& data, double t,
                    const EpdOptions& options) {
  const double eps = p.epsilon();
  if (!(t >= eps)) {
    throw Error(ErrorKind::Domain,
                "solve_epd_t: t must be >= epsilon, got " + std::to_string(t));
  }
  if (t == eps) return data.phi0;
  const auto& q = options.quadrature;
  const auto& ko = options.kernels;
  const auto v = [&](double r) { return wave_mode_propagator(symbol, r); };
  const double pt = phi(t, p);
  const double pe = phi(eps, p);
  const double radius = pt - pe;

  Complex u = 0.0;
  const double lo = std::max(eps, data.source_from);
  const double hi = std::min(t, data.source_to);
  if (data.source && lo < hi) {
    const QuadratureConfig inner = q.tightened(0.1);
    u += 2.0 * integrate_adaptive(
                   [&](double b) {
                     const Complex f = data.source(b);
                     if (f == kZero) return kZero;
                     return f * integrate_adaptive(
                                    [&](double r) {
                                      return kernel_E_t(r, t, b, p, ko).value *
                                             v(r);
                                    },
                                    0.0, pt - phi(b, p), inner);
                   },
                   lo, hi, q);
  }
  if (data.phi1 != kZero) {
    const Complex body = integrate_adaptive(
        [&](double r) { return kernel_K1_t(r, t, p, ko).value * v(r); }, 0.0,
        radius, q);
    u += data.phi1 * (eps / (1.0 - p.ell())) * body;
  }
  if (data.phi0 != kZero) {
    const Complex boundary =
        cpow(pt / pe, -kI * p.reduced_mass()) * v(radius);
    const Complex body = integrate_adaptive(
        [&](double r) { return kernel_K0_fused_t(r, t, p, ko).value * v(r); },
        0.0, radius, q);
    u += data.phi0 * (boundary + body / pe);
  }
  return u;
}

Complex epd_retarded_mode(const ModeSymbol& symbol, Complex m, double tau,
                          double tau0, const EpdOptions& options) {
  if (!(tau0 >= 0.0)) {
    throw Error(ErrorKind::Domain, "epd_retarded_mode: tau0 must be >= 0");
  }
  if (!(tau > tau0)) {
    throw Error(ErrorKind::Ordering,
                "epd_retarded_mode: need tau > tau0, got tau = " +
                    std::to_string(tau) + ", tau0 = " + std::to_string(tau0));
  }
  return integrate_adaptive(
      [&](double r) {
        return kernel_E_tau(r, tau, tau0, m, options.kernels).value *
               wave_mode_propagator(symbol, r);
      },
      0.0, tau - tau0, options.quadrature);
}

std::pair<Complex, Complex> epd_fundamental_modes(const ModeSymbol& symbol,
                                                  Complex m, double tau,
                                                  const EpdOptions& options) {
  const Complex e0 = solve_epd_tau(symbol, m, {1.0, 0.0, {}}, tau, options);
  const Complex e1 = solve_epd_tau(symbol, m, {0.0, 1.0, {}}, tau, options);
  return {e0, e1};
}

}  // namespace flrw
