#pragma once

#include "flrw/special_functions.hpp"

namespace flrw {

// Richardson-extrapolated differences (steps h and h/2, one level).

template <class F>
Complex central_first(const F& f, double x, double h) {
  const Complex d_h = (f(x + h) - f(x - h)) / (2.0 * h);
  const Complex d_h2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
  return (4.0 * d_h2 - d_h) / 3.0;
}

template <class F>
Complex central_second(const F& f, double x, double h) {
  const Complex fx = f(x);
  const Complex d_h = (f(x + h) - 2.0 * fx + f(x - h)) / (h * h);
  const double g = 0.5 * h;
  const Complex d_h2 = (f(x + g) - 2.0 * fx + f(x - g)) / (g * g);
  return (4.0 * d_h2 - d_h) / 3.0;
}

/// Forward differences using only x, x + h/2, x + h, x + 2h.
template <class F>
Complex forward_first(const F& f, double x, double h) {
  return (-3.5 * f(x) + (16.0 / 3.0) * f(x + 0.5 * h) - 2.0 * f(x + h) +
          f(x + 2.0 * h) / 6.0) /
         h;
}

}  // namespace flrw
