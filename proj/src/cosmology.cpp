#include "flrw/cosmology.hpp"

#include <cmath>
#include <string>

#include "flrw/error.hpp"

namespace flrw {

CosmologyParams::CosmologyParams(double ell, Complex mass, double epsilon)
    : ell_(ell), mass_(mass), epsilon_(epsilon) {
  if (!std::isfinite(ell) || !std::isfinite(mass.real()) ||
      !std::isfinite(mass.imag()) || !std::isfinite(epsilon)) {
    throw Error(ErrorKind::Domain, "cosmology: parameters must be finite");
  }
  if (ell == 1.0) {
    throw Error(ErrorKind::UnsupportedExponent,
                "cosmology: ell = 1 (Milne) is not supported");
  }
  if (ell > 1.0) {
    throw Error(ErrorKind::UnsupportedExponent,
                "cosmology: ell > 1 is not supported (accelerating case has "
                "no verified formulas), got ell = " +
                    std::to_string(ell));
  }
  if (!(epsilon > 0.0)) {
    throw Error(ErrorKind::Domain, "cosmology: epsilon must be positive");
  }
}

double phi(double t, const CosmologyParams& p) {
  if (!(t > 0.0)) {
    throw Error(ErrorKind::Domain,
                "phi: t must be positive, got " + std::to_string(t));
  }
  const double k = 1.0 - p.ell();
  return std::pow(t, k) / k;
}

double phi_inv(double s, const CosmologyParams& p) {
  if (!(s > 0.0) || !std::isfinite(s)) {
    throw Error(ErrorKind::Domain,
                "phi_inv: argument outside the range of phi: " +
                    std::to_string(s));
  }
  const double k = 1.0 - p.ell();
  return std::pow(k * s, 1.0 / k);
}

double tau_of_t(double t, const CosmologyParams& p) {
  if (!(t >= p.epsilon())) {
    throw Error(ErrorKind::Domain,
                "tau_of_t: t must be >= epsilon, got " + std::to_string(t));
  }
  // (t/eps)^(1-ell) - 1 without forming phi(t) - phi(eps).
  const double k = 1.0 - p.ell();
  return std::expm1(k * std::log(t / p.epsilon()));
}

double t_of_tau(double tau, const CosmologyParams& p) {
  if (!(tau >= 0.0)) {
    throw Error(ErrorKind::Domain,
                "t_of_tau: tau must be >= 0, got " + std::to_string(tau));
  }
  const double k = 1.0 - p.ell();
  return p.epsilon() * std::exp(std::log1p(tau) / k);
}

}  // namespace flrw
