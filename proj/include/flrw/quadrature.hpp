#pragma once

#include <functional>

#include "flrw/special_functions.hpp"

namespace flrw {

struct QuadratureConfig {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  /// Maximum bisection depth of any subinterval.
  int max_depth = 30;

  /// Throws ErrorKind::Domain unless both tolerances are positive.
  void validate() const;
  /// Same limits, tolerances scaled by `factor`.
  [[nodiscard]] QuadratureConfig tightened(double factor) const;
};

using Integrand = std::function<Complex(double)>;

/// Globally adaptive bisection with the 7-point Gauss / 15-point Kronrod pair.
/// Bisects the subinterval with the largest |K15 - G7| until the summed
/// estimate is below max(abs_tol, rel_tol * |result|). Subintervals whose
/// error is already at the rounding floor are not split further.
/// Throws ErrorKind::NonConvergence when max_depth would be exceeded.
Complex integrate_adaptive(const Integrand& f, double a, double b,
                           const QuadratureConfig& config = {});

/// Iterated integral  int_a^b db  int_0^{upper(b)} g(b, r) dr.
/// The inner integrals run with tolerances ten times tighter than the outer.
Complex integrate_iterated(const std::function<Complex(double, double)>& g,
                           double a, double b,
                           const std::function<double(double)>& upper,
                           const QuadratureConfig& config = {});

}  // namespace flrw
