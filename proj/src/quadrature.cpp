#include "flrw/quadrature.hpp"

#include <array>
#include <cmath>
#include <limits>
#include <queue>
#include <string>
#include <vector>

#include "flrw/error.hpp"

namespace flrw {
namespace {

// Kronrod abscissae (non-negative half) and weights; every odd index is
// also a Gauss node.
constexpr std::array<double, 8> kXgk = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144845693013, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.000000000000000000000000000000000};
constexpr std::array<double, 8> kWgk = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr std::array<double, 4> kWg = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Segment {
  double a;
  double b;
  Complex value;
  double error;
  double magnitude;  // integral of |f|, for the rounding floor
  int depth;
  bool at_floor;

  bool operator<(const Segment& other) const { return error < other.error; }
};

Segment gauss_kronrod(const Integrand& f, double a, double b, int depth) {
  const double centre = 0.5 * (a + b);
  const double half = 0.5 * (b - a);
  const Complex fc = f(centre);
  Complex kronrod = fc * kWgk[7];
  Complex gauss = fc * kWg[3];
  double magnitude = std::abs(fc) * kWgk[7];
  for (int j = 0; j < 7; ++j) {
    const double dx = half * kXgk[j];
    const Complex f1 = f(centre - dx);
    const Complex f2 = f(centre + dx);
    kronrod += kWgk[j] * (f1 + f2);
    magnitude += kWgk[j] * (std::abs(f1) + std::abs(f2));
    if (j % 2 == 1) gauss += kWg[j / 2] * (f1 + f2);
  }
  Segment s{a, b, kronrod * half, std::abs((kronrod - gauss) * half),
            magnitude * std::abs(half), depth, false};
  const double floor = 50.0 * std::numeric_limits<double>::epsilon() *
                       s.magnitude;
  if (s.error <= floor) s.at_floor = true;
  if (!std::isfinite(s.value.real()) || !std::isfinite(s.value.imag())) {
    throw Error(ErrorKind::NonConvergence,
                "integrate_adaptive: non-finite integrand on [" +
                    std::to_string(a) + ", " + std::to_string(b) + "]");
  }
  return s;
}

}  // namespace

void QuadratureConfig::validate() const {
  if (!(rel_tol > 0.0) || !(abs_tol > 0.0)) {
    throw Error(ErrorKind::Domain, "quadrature: tolerances must be positive");
  }
  if (max_depth < 1) {
    throw Error(ErrorKind::Domain, "quadrature: max_depth must be >= 1");
  }
}

QuadratureConfig QuadratureConfig::tightened(double factor) const {
  QuadratureConfig q = *this;
  q.rel_tol *= factor;
  q.abs_tol *= factor;
  return q;
}

Complex integrate_adaptive(const Integrand& f, double a, double b,
                           const QuadratureConfig& config) {
  config.validate();
  if (!(a <= b)) {
    throw Error(ErrorKind::Domain, "integrate_adaptive: need a <= b");
  }
  if (a == b) return 0.0;

  std::priority_queue<Segment> active;
  Complex settled_value = 0.0;

  Segment first = gauss_kronrod(f, a, b, 0);
  Complex total = first.value;
  double total_error = first.error;
  if (first.at_floor) {
    return first.value;
  }
  active.push(first);

  while (!active.empty()) {
    const double target = std::max(config.abs_tol, config.rel_tol * std::abs(total));
    if (total_error <= target) break;

    Segment worst = active.top();
    active.pop();
    if (worst.depth >= config.max_depth) {
      throw Error(ErrorKind::NonConvergence,
                  "integrate_adaptive: max_depth " +
                      std::to_string(config.max_depth) +
                      " exceeded near x = " + std::to_string(worst.a));
    }
    const double mid = 0.5 * (worst.a + worst.b);
    const Segment left = gauss_kronrod(f, worst.a, mid, worst.depth + 1);
    const Segment right = gauss_kronrod(f, mid, worst.b, worst.depth + 1);
    total += left.value + right.value - worst.value;
    total_error += left.error + right.error - worst.error;
    for (const Segment& child : {left, right}) {
      if (child.at_floor) {
        settled_value += child.value;
      } else {
        active.push(child);
      }
    }
  }
  // Re-sum from the pieces; the running total carries add/subtract rounding.
  Complex result = settled_value;
  while (!active.empty()) {
    result += active.top().value;
    active.pop();
  }
  return result;
}

Complex integrate_iterated(const std::function<Complex(double, double)>& g,
                           double a, double b,
                           const std::function<double(double)>& upper,
                           const QuadratureConfig& config) {
  const QuadratureConfig inner = config.tightened(0.1);
  return integrate_adaptive(
      [&](double outer) {
        const double top = upper(outer);
        return integrate_adaptive([&](double r) { return g(outer, r); }, 0.0,
                                  top, inner);
      },
      a, b, config);
}

}  // namespace flrw
