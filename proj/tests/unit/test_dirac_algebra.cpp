#include "doctest.h"
#include "flrw/dirac_algebra.hpp"
#include "flrw/verify.hpp"
#include "helpers.hpp"

using namespace flrw;
using C = Complex;

TEST_CASE("Clifford relations") {
  const double eta[4] = {1.0, -1.0, -1.0, -1.0};
  for (int mu = 0; mu < 4; ++mu) {
    for (int nu = 0; nu < 4; ++nu) {
      const Matrix4c ac = gamma(mu) * gamma(nu) + gamma(nu) * gamma(mu);
      Matrix4c expected;
      if (mu == nu) expected = C(2.0 * eta[mu]) * Matrix4c::identity();
      CHECK((ac - expected).max_abs() == 0.0);
    }
  }
}

TEST_CASE("projectors") {
  const auto& pr = projectors();
  CHECK((pr.gamma_U + pr.gamma_L - Matrix4c::identity()).max_abs() == 0.0);
  CHECK((pr.gamma_U * pr.gamma_U - pr.gamma_U).max_abs() == 0.0);
  CHECK((pr.gamma_U * pr.gamma_L).max_abs() == 0.0);
  CHECK(pr.gamma_U == Matrix4c::diagonal(1.0, 1.0, 0.0, 0.0));
}

TEST_CASE("composition identity") {
  UniformStream rng(7);
  for (int i = 0; i < 20; ++i) {
    const CosmologyParams p(rng.next(-1.0, 0.9), C(rng.next(-2, 2), rng.next(-1, 1)), 1.0);
    PolynomialSpinor psi;
    for (auto& row : psi.coefficients) {
      for (auto& c : row) c = C(rng.next(-1, 1), rng.next(-1, 1));
    }
    const WaveVector k = {rng.next(-3, 3), rng.next(-3, 3), rng.next(-3, 3)};
    CHECK(verify_composition(rng.next(1.0, 5.0), k, p, psi) <= 1e-11);
  }
}

TEST_CASE("sandwich sum") {
  CHECK(verify_condition13({1.0, 2.0, -0.5}, 3.0, C(0.7, 0.0)) <= 1e-14);
  CHECK(verify_condition13({5.0, 5.0, 5.0}, 10.0, C(2.0, 2.0)) <= 1e-14);
  CHECK(verify_condition13({0.0, 0.0, 0.0}, 2.0, C(1.0, -1.0)) == 0.0);
}

TEST_CASE("dirac symbol at k = 0") {
  const CosmologyParams p(0.5, 0.8, 1.0);
  const OperatorSymbol s = dirac_symbol(2.0, {0.0, 0.0, 0.0}, p);
  CHECK((s.coeff_dt - C(0, 1) * gamma(0)).max_abs() < 1e-15);
  const Matrix4c expect = C(0, 0.375) * gamma(0) - C(0.4) * Matrix4c::identity();
  CHECK((s.coeff_0 - expect).max_abs() < 1e-15);
}
