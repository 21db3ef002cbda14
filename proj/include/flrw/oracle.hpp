#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "flrw/cosmology.hpp"
#include "flrw/dirac_algebra.hpp"
#include "flrw/epd_solver.hpp"

namespace flrw {

using State = std::vector<Complex>;

struct OdeProblem {
  std::size_t dimension = 0;
  std::function<void(double t, const State& y, State& dydt)> rhs;
  double t0 = 0.0;
  State y0;
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
};

/// Adaptive Dormand-Prince 5(4) integration from prob.t0 through the
/// ascending grid `times` (each >= t0). Returns the state at every grid
/// point. Throws ErrorKind::StepUnderflow if the step size collapses.
std::vector<State> integrate(const OdeProblem& prob,
                             const std::vector<double>& times);

/// State at t_end.
State integrate(const OdeProblem& prob, double t_end);

struct OracleOptions {
  double rel_tol = 1e-12;
  double abs_tol = 1e-14;
};

/// u'' + (ell + 2im) u' / t - lambda t^(-2 ell) u = f from (phi0, phi1) at
/// t = eps. Returns u on `times`.
std::vector<Complex> oracle_epd_mode_t(const ModeSymbol& symbol,
                                       const CosmologyParams& p,
                                       const ModeCauchyData& data,
                                       const std::vector<double>& times,
                                       const OracleOptions& options = {});

/// u'' + 2 i m u' / (tau + 1) - lambda u = f from (phi0, phi1) at tau = 0.
std::vector<Complex> oracle_epd_mode_tau(const ModeSymbol& symbol, Complex m,
                                         const ModeCauchyData& data,
                                         const std::vector<double>& taus,
                                         const OracleOptions& options = {});

/// Homogeneous tau-equation started at tau0 with u = 0, u' = 1: the mode
/// image of the retarded propagator.
std::vector<Complex> oracle_epd_retarded_tau(const ModeSymbol& symbol,
                                             Complex m, double tau0,
                                             const std::vector<double>& taus,
                                             const OracleOptions& options = {});

/// First-order Dirac mode system written in upper/lower 2-spinor blocks,
/// started from psi_eps at t = eps. `source` may be empty.
std::vector<Spinor> oracle_dirac_mode(const WaveVector& k,
                                      const Spinor& psi_eps,
                                      const std::function<Spinor(double)>& source,
                                      const CosmologyParams& p,
                                      const std::vector<double>& times,
                                      const OracleOptions& options = {});

}  // namespace flrw
