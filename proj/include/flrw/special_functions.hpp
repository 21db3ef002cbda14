#pragma once

#include <complex>

namespace flrw {

using Complex = std::complex<double>;

enum class Hyp2F1Branch { DirectSeries, ConnectionAtOne };

struct Hyp2F1Result {
  Complex value;
  int terms_used = 0;
  Hyp2F1Branch branch = Hyp2F1Branch::DirectSeries;
};

/// Series controls for hyp2f1. Defaults converge for |a|,|b| up to ~10.
struct SeriesOptions {
  int max_terms = 500;
  /// Above this z the connection formula at z = 1 is used.
  double switch_z = 0.5;
  /// Term budget for the direct-series fallback when the connection formula
  /// is degenerate (c - a - b an integer, or a gamma pole).
  int fallback_terms = 20000;
  double rel_tol = 1e-15;
};

/// Principal-branch log Gamma. Lanczos (g = 7, 9 terms) on Re z >= 1/2,
/// reflection otherwise. Throws ErrorKind::GammaPole at 0, -1, -2, ...
Complex ln_gamma(Complex z);

/// base^exponent through the real logarithm of base; base must be > 0.
Complex cpow(double base, Complex exponent);

/// Gauss hypergeometric 2F1(a, b; c; z) for c in {1, 2} and 0 <= z < 1.
///
/// The Gauss series is summed directly for z <= switch_z. Above it the
/// z -> 1 - z connection formula is used, which needs c - a - b to be
/// non-integer; degenerate parameters fall back to the direct series with
/// the extended term budget. The result is symmetric in (a, b) bit for bit.
Hyp2F1Result hyp2f1(Complex a, Complex b, int c, double z,
                    const SeriesOptions& options = {});

namespace detail {

/// Plain Gauss series with complex c; returns the sum and sets terms_used.
/// Throws ErrorKind::NonConvergence when the budget runs out.
Complex gauss_series(Complex a, Complex b, Complex c, double z, int max_terms,
                     double rel_tol, int& terms_used);

}  // namespace detail
}  // namespace flrw
