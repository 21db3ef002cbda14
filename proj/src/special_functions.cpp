#include "flrw/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "flrw/error.hpp"

namespace flrw {
namespace {

// Lanczos coefficients for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczos = {
    0.99999999999980993,     676.5203681218851,     -1259.1392167224028,
    771.32342877765313,      -176.61502916214059,   12.507343278686905,
    -0.13857109526572012,    9.9843695780195716e-6, 1.5056327351493116e-7};

bool is_non_positive_integer(Complex z, double tol = 0.0) {
  if (std::abs(z.imag()) > tol) return false;
  const double x = z.real();
  return x <= tol && std::abs(x - std::round(x)) <= tol;
}

bool is_integer(Complex z, double tol) {
  return std::abs(z.imag()) <= tol &&
         std::abs(z.real() - std::round(z.real())) <= tol;
}

Complex ln_gamma_lanczos(Complex z) {
  z -= 1.0;
  Complex x = kLanczos[0];
  for (std::size_t i = 1; i < kLanczos.size(); ++i) {
    x += kLanczos[i] / (z + static_cast<double>(i));
  }
  const Complex t = z + kLanczosG + 0.5;
  return 0.5 * std::log(2.0 * std::numbers::pi) + (z + 0.5) * std::log(t) - t +
         std::log(x);
}

Complex exp_of(Complex log_value) { return std::exp(log_value); }

}  // namespace

Complex ln_gamma(Complex z) {
  if (is_non_positive_integer(z)) {
    throw Error(ErrorKind::GammaPole,
                "ln_gamma: pole at z = " + std::to_string(z.real()));
  }
  if (z.real() < 0.5) {
    // Gamma(z) Gamma(1 - z) = pi / sin(pi z)
    return std::log(std::numbers::pi) -
           std::log(std::sin(std::numbers::pi * z)) -
           ln_gamma_lanczos(1.0 - z);
  }
  return ln_gamma_lanczos(z);
}

Complex cpow(double base, Complex exponent) {
  if (!(base > 0.0) || !std::isfinite(base)) {
    throw Error(ErrorKind::Domain,
                "cpow: base must be positive, got " + std::to_string(base));
  }
  if (exponent == Complex(0.0, 0.0)) return 1.0;
  return std::exp(exponent * std::log(base));
}

namespace detail {

Complex gauss_series(Complex a, Complex b, Complex c, double z, int max_terms,
                     double rel_tol, int& terms_used) {
  Complex sum = 1.0;
  Complex term = 1.0;
  int small_in_a_row = 0;
  const double tol_sq = rel_tol * rel_tol;
  for (int n = 0; n < max_terms; ++n) {
    const double dn = static_cast<double>(n);
    const Complex den = (c + dn) * (dn + 1.0);
    term *= (a + dn) * (b + dn) * std::conj(den) * (z / std::norm(den));
    sum += term;
    if (term == Complex(0.0, 0.0)) {
      // Terminating series (a or b a non-positive integer) or z == 0.
      terms_used = n + 1;
      return sum;
    }
    if (std::norm(term) <= tol_sq * std::norm(sum)) {
      if (++small_in_a_row == 2) {
        terms_used = n + 1;
        return sum;
      }
    } else {
      small_in_a_row = 0;
    }
  }
  terms_used = max_terms;
  throw Error(ErrorKind::NonConvergence,
              "hyp2f1: series did not converge in " +
                  std::to_string(max_terms) + " terms at z = " +
                  std::to_string(z));
}

}  // namespace detail

Hyp2F1Result hyp2f1(Complex a, Complex b, int c, double z,
                    const SeriesOptions& options) {
  if (c != 1 && c != 2) {
    throw Error(ErrorKind::Domain,
                "hyp2f1: c must be 1 or 2, got " + std::to_string(c));
  }
  if (!(z >= 0.0 && z < 1.0)) {
    throw Error(ErrorKind::Domain,
                "hyp2f1: z must lie in [0, 1), got " + std::to_string(z));
  }
  // Canonical parameter order makes the (a, b) symmetry exact.
  if (b.real() < a.real() || (b.real() == a.real() && b.imag() < a.imag())) {
    std::swap(a, b);
  }
  if (a == Complex(0.0, 0.0) || b == Complex(0.0, 0.0) || z == 0.0) {
    return {1.0, 0, Hyp2F1Branch::DirectSeries};
  }

  const Complex cc = static_cast<double>(c);
  Hyp2F1Result result;
  const bool terminating =
      is_non_positive_integer(a) || is_non_positive_integer(b);
  if (z <= options.switch_z || terminating) {
    result.branch = Hyp2F1Branch::DirectSeries;
    result.value = detail::gauss_series(a, b, cc, z, options.max_terms,
                                        options.rel_tol, result.terms_used);
    return result;
  }

  const Complex s = cc - a - b;
  constexpr double kDegenerateTol = 1e-9;
  const bool degenerate = is_integer(s, kDegenerateTol) ||
                          is_non_positive_integer(cc - a, kDegenerateTol) ||
                          is_non_positive_integer(cc - b, kDegenerateTol);
  if (degenerate) {
    result.branch = Hyp2F1Branch::DirectSeries;
    result.value = detail::gauss_series(a, b, cc, z, options.fallback_terms,
                                        options.rel_tol, result.terms_used);
    return result;
  }

  // F(a,b;c;z) = G1 F(a,b;a+b-c+1;1-z) + (1-z)^s G2 F(c-a,c-b;s+1;1-z)
  const double w = 1.0 - z;
  // Quadratures call this with fixed (a, b, c) and varying z.
  thread_local struct {
    Complex a, b;
    int c = 0;
    Complex g1, g2;
  } memo;
  if (memo.c != c || memo.a != a || memo.b != b) {
    const Complex lg_c = ln_gamma(cc);
    memo.g1 = exp_of(lg_c + ln_gamma(s) - ln_gamma(cc - a) - ln_gamma(cc - b));
    memo.g2 = exp_of(lg_c + ln_gamma(-s) - ln_gamma(a) - ln_gamma(b));
    memo.a = a;
    memo.b = b;
    memo.c = c;
  }
  const Complex g1 = memo.g1;
  const Complex g2 = memo.g2;
  int n1 = 0;
  int n2 = 0;
  const Complex f1 = detail::gauss_series(a, b, 1.0 - s, w, options.max_terms,
                                          options.rel_tol, n1);
  const Complex f2 = detail::gauss_series(cc - a, cc - b, s + 1.0, w,
                                          options.max_terms, options.rel_tol,
                                          n2);
  result.branch = Hyp2F1Branch::ConnectionAtOne;
  result.terms_used = n1 + n2;
  result.value = g1 * f1 + cpow(w, s) * g2 * f2;
  return result;
}

}  // namespace flrw
