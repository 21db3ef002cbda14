#pragma once

#include "flrw/special_functions.hpp"

namespace flrw {

/// Power-law FLRW background a(t) = a0 t^ell with time-dependent mass term
/// m / t and Cauchy data prescribed at t = epsilon.
///
/// Only ell < 1 is supported: ell == 1 (Milne) is excluded outright and
/// ell > 1 is rejected because the sign conventions of the accelerating case
/// are not pinned down.
class CosmologyParams {
 public:
  CosmologyParams(double ell, Complex mass, double epsilon);

  [[nodiscard]] double ell() const noexcept { return ell_; }
  [[nodiscard]] Complex mass() const noexcept { return mass_; }
  [[nodiscard]] double epsilon() const noexcept { return epsilon_; }

  /// m / (1 - ell), the mass seen by the proper-time EPD equation.
  [[nodiscard]] Complex reduced_mass() const noexcept {
    return mass_ / (1.0 - ell_);
  }

  /// Same background with m -> -m (the lower 2-spinor equation).
  [[nodiscard]] CosmologyParams with_mass(Complex mass) const {
    return {ell_, mass, epsilon_};
  }

 private:
  double ell_;
  Complex mass_;
  double epsilon_;
};

/// Distance function t^(1-ell) / (1-ell).
double phi(double t, const CosmologyParams& p);

/// Inverse of phi; s must be positive.
double phi_inv(double s, const CosmologyParams& p);

/// Proper time tau = (phi(t) - phi(eps)) / phi(eps); requires t >= eps.
double tau_of_t(double t, const CosmologyParams& p);

/// t = eps (tau + 1)^(1/(1-ell)); requires tau >= 0.
double t_of_tau(double tau, const CosmologyParams& p);

}  // namespace flrw
