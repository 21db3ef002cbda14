#pragma once

#include <functional>
#include <limits>
#include <utility>

#include "flrw/cosmology.hpp"
#include "flrw/kernels.hpp"
#include "flrw/quadrature.hpp"

namespace flrw {

/// Value of the spatial operator A on one Fourier mode; for the Laplacian
/// this is -|k|^2.
struct ModeSymbol {
  Complex lambda;

  static ModeSymbol laplacian(double k_squared) { return {-k_squared}; }
};

/// Cauchy data for one mode. An empty `source` means f = 0. A source known
/// to vanish outside [source_from, source_to] is only integrated there.
struct ModeCauchyData {
  Complex phi0;
  Complex phi1;
  std::function<Complex(double)> source;
  double source_from = -std::numeric_limits<double>::infinity();
  double source_to = std::numeric_limits<double>::infinity();
};

struct EpdOptions {
  QuadratureConfig quadrature{};
  KernelOptions kernels{};
};

/// cosh(r sqrt(lambda)): the mode of v_rr - A v = 0, v(0) = 1, v_r(0) = 0.
Complex wave_mode_propagator(const ModeSymbol& symbol, double r);

/// Solution at tau of u'' - lambda u + 2 i m / (tau + 1) u' = f with
/// u(0) = phi0, u'(0) = phi1 (m is the reduced mass), by the kernel
/// representation: source double integral with E, K1 against phi1, the
/// boundary term (1 + tau)^(-im) v(tau) and the fused K0 + 2 i m K1 integral.
Complex solve_epd_tau(const ModeSymbol& symbol, Complex m,
                      const ModeCauchyData& data, double tau,
                      const EpdOptions& options = {});

/// Solution at t >= eps of u'' - t^(-2 ell) lambda u + (ell + 2im)/t u' = f
/// with u(eps) = phi0, u'(eps) = phi1, assembled from the original-time
/// kernels.
Complex solve_epd_t(const ModeSymbol& symbol, const CosmologyParams& p,
                    const ModeCauchyData& data, double t,
                    const EpdOptions& options = {});

/// Mode image of the retarded EPD propagator with the impulse at tau0:
/// int_0^{tau - tau0} E(r, tau; tau0; m) cosh(r sqrt(lambda)) dr.
Complex epd_retarded_mode(const ModeSymbol& symbol, Complex m, double tau,
                          double tau0, const EpdOptions& options = {});

/// Mode images (E0, E1) of the fundamental solutions carrying the data
/// (delta, 0) and (0, delta) at tau = 0.
std::pair<Complex, Complex> epd_fundamental_modes(
    const ModeSymbol& symbol, Complex m, double tau,
    const EpdOptions& options = {});

}  // namespace flrw
