#include <cmath>

#include "../fixtures.hpp"
#include "doctest.h"
#include "flrw/dirac_solver.hpp"
#include "flrw/error.hpp"
#include "flrw/oracle.hpp"
#include "helpers.hpp"

using namespace flrw;
using C = Complex;

TEST_CASE("mode solution against frozen values") {
  const CosmologyParams p(2.0 / 3.0, 1.0, 1.0);
  SpinorMode mode{{1.0, 0.0, 0.0}, {C(1.0), C(0.0), C(0.0), C(0.0)}, {}};
  const Spinor psi = solve_dirac_mode(mode, p, 3.0);
  CHECK_CLOSE(psi[0], fixtures::kDirac0, 1e-7);
  CHECK_CLOSE(psi[1], fixtures::kDirac1, 1e-7);
  CHECK_CLOSE(psi[2], fixtures::kDirac2, 1e-7);
  CHECK_CLOSE(psi[3], fixtures::kDirac3, 1e-7);
}

TEST_CASE("initial data and residual") {
  const CosmologyParams p(0.5, C(0.7, 0.2), 1.0);
  SpinorMode mode{{0.5, -1.0, 0.3},
                  {C(0.3, 0.1), C(-0.2), C(0.0, 0.4), C(0.1, -0.1)},
                  [](double t) {
                    return Spinor{C(std::exp(-t)), C(0.0), C(0.0, 0.5 * std::cos(t)), C(0.1)};
                  }};
  const Spinor at_eps = solve_dirac_mode(mode, p, 1.0);
  CHECK(max_abs(at_eps - mode.amplitude) <= 1e-8);
  for (double t : {1.5, 3.0}) {
    const Spinor r = dirac_residual(mode, p, t);
    CHECK(max_abs(r) <= 1e-5 * (1.0 + max_abs(mode.source(t))));
  }
  const auto ref = oracle_dirac_mode(mode.k, mode.amplitude, mode.source, p, {2.5});
  CHECK(max_abs(solve_dirac_mode(mode, p, 2.5) - ref.front()) <= 1e-5 * (1 + max_abs(ref.front())));
}

TEST_CASE("field superposition") {
  const CosmologyParams p(0.0, 0.5, 1.0);
  FourierField field;
  field.modes.push_back({{1.0, 0.0, 0.0}, {C(1.0), C(0.0), C(0.0), C(0.0)}, {}});
  field.modes.push_back({{0.0, 2.0, 0.0}, {C(0.0), C(0.0), C(1.0), C(0.0)}, {}});
  const Point x = {0.3, -0.2, 0.0};
  const auto values = solve_dirac_field(field, p, {2.0}, {x});
  Spinor sum{};
  for (const auto& m : field.modes) {
    const C phase = std::exp(C(0, m.k[0] * x[0] + m.k[1] * x[1] + m.k[2] * x[2]));
    sum = sum + phase * solve_dirac_mode(m, p, 2.0);
  }
  CHECK(max_abs(values[0][0] - sum) <= 1e-14);

  FourierField duplicate = field;
  duplicate.modes.push_back(field.modes.front());
  CHECK_THROWS(solve_dirac_field(duplicate, p, {2.0}, {x}));
  CHECK_THROWS(solve_dirac_field(FourierField{}, p, {2.0}, {x}));
}

TEST_CASE("time bump") {
  CHECK(time_bump_shape(0.0) == 1.0);
  CHECK(time_bump_shape(1.0) == 0.0);
  CHECK(time_bump_shape(-1.5) == 0.0);
  CHECK(time_bump_shape(0.5) == doctest::Approx(0.421875));
}

TEST_CASE("propagator samples") {
  const CosmologyParams p(0.5, 0.5, 1.0);
  PropagatorOptions o;
  o.sigma = 0.6;
  o.band = {10.0, 1.0};
  SUBCASE("Cauchy propagator at eps is the mollifier") {
    const auto s = sample_cauchy_propagator({0.0, 0.0, 0.0}, 1.0, {0.0, 0.0, 0.0}, p, o);
    const double g = std::pow(2.0 * M_PI * o.sigma * o.sigma, -1.5);
    CHECK(std::abs(s.value(0, 0) - g) <= 1e-6 * g);
    CHECK(std::abs(s.value(0, 1)) <= 1e-12);
  }
  SUBCASE("ordering and domain") {
    CHECK_THROWS_KIND(sample_retarded_propagator({0.0, 0.0, 0.0}, 1.5, {0.0, 0.0, 0.0}, 2.0, p, o),
                      ErrorKind::Ordering);
    CHECK_THROWS_KIND(sample_retarded_propagator({0.0, 0.0, 0.0}, 1.5, {0.0, 0.0, 0.0}, 0.5, p, o),
                      ErrorKind::Domain);
  }
  SUBCASE("band diagnostics") {
    PropagatorOptions narrow = o;
    narrow.band = {3.0, 1.0};
    const auto s = sample_retarded_propagator({0.0, 0.0, 0.0}, 1.5, {0.0, 0.0, 0.0}, 1.2, p, narrow);
    CHECK_FALSE(s.band_warning.empty());
    narrow.strict_band = true;
    CHECK_THROWS_KIND(
        sample_retarded_propagator({0.0, 0.0, 0.0}, 1.5, {0.0, 0.0, 0.0}, 1.2, p, narrow),
        ErrorKind::BandLimit);
  }
  SUBCASE("radial interpolation matches direct shells") {
    PropagatorOptions direct = o;
    direct.radial_nodes = 0;
    const Point x = {0.4, 0.1, 0.0};
    const auto a = sample_retarded_propagator(x, 1.6, {0.0, 0.0, 0.0}, 1.2, p, o);
    const auto b = sample_retarded_propagator(x, 1.6, {0.0, 0.0, 0.0}, 1.2, p, direct);
    CHECK((a.value - b.value).max_abs() <= 1e-8 * (1.0 + b.value.max_abs()));
    CHECK(a.cone_distance == doctest::Approx(std::hypot(0.4, 0.1) - (phi(1.6, p) - phi(1.2, p))));
  }
}
