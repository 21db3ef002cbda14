#pragma once

#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <string>
#include <vector>

#include "flrw/cosmology.hpp"
#include "flrw/dirac_algebra.hpp"
#include "flrw/epd_solver.hpp"

namespace flrw {

using Point = std::array<double, 3>;

/// One Fourier mode of the Dirac field: amplitude at t = eps and an optional
/// source history F(t).
struct SpinorMode {
  WaveVector k{};
  Spinor amplitude{};
  std::function<Spinor(double)> source;
};

/// Finite superposition of modes with distinct wave vectors.
struct FourierField {
  std::vector<SpinorMode> modes;
};

struct DiracOptions {
  EpdOptions epd = default_epd();
  /// Finite-difference step for dPhi/dt, relative to t.
  double fd_step = std::cbrt(std::numeric_limits<double>::epsilon());

  static EpdOptions default_epd() {
    EpdOptions o;
    o.quadrature.rel_tol = 1e-11;
    o.quadrature.abs_tol = 1e-15;
    return o;
  }
};

/// Psi(t) for i g0 Psi' + (i t^-ell g^j (i k_j) + (3 ell/2t) i g0 - m/t) Psi = F
/// with Psi(eps) = mode.amplitude, built as Psi = Dco Phi from two EPD
/// solves (mass +m for the upper, -m for the lower 2-spinor).
Spinor solve_dirac_mode(const SpinorMode& mode, const CosmologyParams& p,
                        double t, const DiracOptions& options = {});

std::vector<Spinor> solve_dirac_mode(const SpinorMode& mode,
                                     const CosmologyParams& p,
                                     const std::vector<double>& times,
                                     const DiracOptions& options = {});

/// D Psi - F at t, with Psi' from Richardson-extrapolated central differences
/// of step `step * t`.
Spinor dirac_residual(const SpinorMode& mode, const CosmologyParams& p,
                      double t, double step = 1e-3,
                      const DiracOptions& options = {});

/// Psi(x, t) = sum over modes of exp(i k.x) Psi_k(t). Result is indexed
/// [time][point]. Modes are solved in parallel and summed in field order.
std::vector<std::vector<Spinor>> solve_dirac_field(
    const FourierField& field, const CosmologyParams& p,
    const std::vector<double>& times, const std::vector<Point>& points,
    const DiracOptions& options = {});

/// Cubic wave-vector lattice {dk * (i, j, l) : |dk * i| <= k_max, ...}.
struct KGrid {
  double k_max = 16.0;
  double dk = 1.0;

  [[nodiscard]] int half_width() const;
  /// 2 pi / dk: the period of every lattice sum.
  [[nodiscard]] double period() const;
};

struct PropagatorOptions {
  /// Width of the spatial Gaussian replacing delta(x - x0).
  double sigma = 0.25;
  /// Half-width of the C^2 time bump replacing delta(t - t0). Negative means
  /// "same as sigma"; zero imposes the impulse exactly as a jump at t0.
  double time_sigma = -1.0;
  KGrid band{};
  /// The scalar responses depend on |k| only; they are solved on this many
  /// Chebyshev-Lobatto intervals in |k| and interpolated to the lattice
  /// shells. Zero solves every shell directly.
  int radial_nodes = 96;
  /// Raise ErrorKind::BandLimit instead of recording a warning.
  bool strict_band = false;
  DiracOptions dirac = loose();

  static DiracOptions loose() {
    DiracOptions o;
    o.epd.quadrature.rel_tol = 1e-9;
    o.epd.quadrature.abs_tol = 1e-13;
    o.fd_step = 1e-3;
    return o;
  }
  [[nodiscard]] double effective_time_sigma() const {
    return time_sigma < 0.0 ? sigma : time_sigma;
  }
};

struct PropagatorSample {
  Point x{};
  double t = 0.0;
  Point x0{};
  double t0 = 0.0;
  Matrix4c value;
  double mollifier_sigma = 0.0;
  /// Spatial smearing in comoving distance: sigma + phi'(t0) * time_sigma.
  double sigma_eff = 0.0;
  /// |x - x0| - (phi(t) - phi(t0)): positive outside the forward cone.
  double cone_distance = 0.0;
  /// Estimated relative error of the |k| interpolation (0 when unused).
  double radial_interpolation_error = 0.0;
  /// Non-empty when the lattice under-resolves the mollifier or the sample
  /// sees periodic images.
  std::string band_warning;
};

/// Mollified retarded fundamental solution E+(x, t; x0, t0): column c solves
/// the Dirac equation with source G_sigma(x - x0) bump(t - t0) e_c and zero
/// data at eps.
std::vector<PropagatorSample> sample_retarded_propagator(
    const std::vector<Point>& xs, double t, const Point& x0, double t0,
    const CosmologyParams& p, const PropagatorOptions& options = {});

PropagatorSample sample_retarded_propagator(const Point& x, double t,
                                            const Point& x0, double t0,
                                            const CosmologyParams& p,
                                            const PropagatorOptions& options = {});

/// Mollified fundamental solution of the Cauchy problem: column c has data
/// G_sigma(x - x0) e_c at t = eps.
std::vector<PropagatorSample> sample_cauchy_propagator(
    const std::vector<Point>& xs, double t, const Point& x0,
    const CosmologyParams& p, const PropagatorOptions& options = {});

PropagatorSample sample_cauchy_propagator(const Point& x, double t,
                                          const Point& x0,
                                          const CosmologyParams& p,
                                          const PropagatorOptions& options = {});

/// (1 - u^2)^3 on |u| < 1, the unnormalised time bump.
double time_bump_shape(double u);

}  // namespace flrw
