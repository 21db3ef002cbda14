#pragma once

#include "flrw/cosmology.hpp"
#include "flrw/special_functions.hpp"

namespace flrw {

enum class KernelBranch { Regular, NearDiagonalExpansion };

struct KernelValue {
  Complex value;
  KernelBranch branch = KernelBranch::Regular;
};

struct KernelOptions {
  /// K0 switches to its cancellation-free form when
  /// z = (tau^2 - r^2) / ((tau + 2)^2 - r^2) drops below this.
  double near_diagonal_switch = 1e-3;
  SeriesOptions series{};
};

// Kernels in proper time tau, for u_tt - A u + 2 i m / (tau + 1) u_t = f.
// `m` is the reduced mass m / (1 - ell).

/// E(r, tau; b; m); requires 0 <= b <= tau and 0 <= r <= tau - b.
KernelValue kernel_E_tau(double r, double tau, double b, Complex m,
                         const KernelOptions& options = {});

/// K1(r, tau; m) = E(r, tau; 0; m).
KernelValue kernel_K1_tau(double r, double tau, Complex m,
                          const KernelOptions& options = {});

/// K0(r, tau; m) = lim_{b -> 0} -dE/db. Accepts 0 <= r <= tau; near the
/// diagonal the two 1/(tau^2 - r^2) poles of the closed form are cancelled
/// analytically.
KernelValue kernel_K0_tau(double r, double tau, Complex m,
                          const KernelOptions& options = {});

/// K0 + 2 i m K1, the combination integrated against the phi0 data.
KernelValue kernel_K0_fused_tau(double r, double tau, Complex m,
                                const KernelOptions& options = {});

// Kernels in the original time t.

/// E(r, t; t0; m) for eps <= t0 <= t, 0 <= r <= phi(t) - phi(t0).
KernelValue kernel_E_t(double r, double t, double t0, const CosmologyParams& p,
                       const KernelOptions& options = {});

/// K1(r, t; m; eps).
KernelValue kernel_K1_t(double r, double t, const CosmologyParams& p,
                        const KernelOptions& options = {});

/// K0(r, t; m; eps) = K0(r / phi(eps), tau(t); m / (1 - ell)).
KernelValue kernel_K0_t(double r, double t, const CosmologyParams& p,
                        const KernelOptions& options = {});

/// K0(r, t; m; eps) + 2 i m~ phi(eps) K1(r, t; m; eps): the phi0 integrand of
/// the original-time solution formula (before the 1 / phi(eps) factor).
KernelValue kernel_K0_fused_t(double r, double t, const CosmologyParams& p,
                              const KernelOptions& options = {});

}  // namespace flrw
