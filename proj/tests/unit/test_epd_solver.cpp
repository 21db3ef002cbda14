#include <cmath>

#include "../fixtures.hpp"
#include "doctest.h"
#include "flrw/epd_solver.hpp"
#include "flrw/error.hpp"
#include "flrw/oracle.hpp"
#include "helpers.hpp"

using namespace flrw;
using C = Complex;

TEST_CASE("wave mode propagator") {
  CHECK(wave_mode_propagator({-4.0}, 0.0) == C(1.0));
  CHECK_CLOSE(wave_mode_propagator({-4.0}, 0.3), std::cos(0.6), 1e-15);
  CHECK_CLOSE(wave_mode_propagator({9.0}, 0.3), std::cosh(0.9), 1e-15);
}

TEST_CASE("tau-form solution") {
  ModeCauchyData data{1.0, C(0, 0.5), [](double s) { return C(std::exp(-s)); }};
  CHECK_CLOSE(solve_epd_tau({-1.0}, 0.8, data, 2.0), fixtures::kEpdTau, 1e-9);
  CHECK(solve_epd_tau({-1.0}, 0.8, data, 0.0) == C(1.0));
}

TEST_CASE("massless tau solution is d'Alembert") {
  const double w = 1.3;
  ModeCauchyData data{0.4, C(0.2, -0.1), {}};
  for (double tau : {0.5, 2.0}) {
    const C exact = data.phi0 * std::cos(w * tau) + data.phi1 * std::sin(w * tau) / w;
    CHECK_CLOSE(solve_epd_tau({-w * w}, 0.0, data, tau), exact, 1e-10);
  }
}

TEST_CASE("original-time solution") {
  const CosmologyParams p(2.0 / 3.0, 0.3, 1.0);
  ModeCauchyData data{C(0.8, -0.1), C(0.3, 0.5),
                      [](double t) { return C(0.5, 0.2) * std::exp(-t); }};
  CHECK_CLOSE(solve_epd_t({-1.0}, p, data, 3.0), fixtures::kEpdTime, 1e-9);
  CHECK(solve_epd_t({-1.0}, p, data, 1.0) == data.phi0);
  CHECK_THROWS_KIND(solve_epd_t({-1.0}, p, data, 0.5), ErrorKind::Domain);
}

TEST_CASE("matches the mode oracle") {
  for (double ell : {-1.0, 0.5}) {
    const CosmologyParams p(ell, C(0.7, 0.1), 1.0);
    ModeCauchyData data{C(0.2, 0.1), C(-0.4, 0.3), [](double t) { return C(std::sin(t)); }};
    const std::vector<double> ts = {1.5, 4.0};
    const auto ref = oracle_epd_mode_t({-2.0}, p, data, ts);
    for (std::size_t i = 0; i < ts.size(); ++i) {
      CHECK_CLOSE(solve_epd_t({-2.0}, p, data, ts[i]), ref[i], 1e-8);
    }
  }
}

TEST_CASE("source support window") {
  const auto f = [](double s) { return s > 0.5 && s < 1.0 ? C(1.0) : C(0.0); };
  ModeCauchyData full{0.0, 0.0, f};
  ModeCauchyData clipped{0.0, 0.0, f, 0.5, 1.0};
  CHECK_CLOSE(solve_epd_tau({-1.0}, 0.4, clipped, 2.0),
              oracle_epd_mode_tau({-1.0}, 0.4, full, {2.0}).front(), 1e-8);
}

TEST_CASE("retarded and fundamental modes") {
  CHECK_CLOSE(epd_retarded_mode({-2.0}, 0.6, 2.0, 0.5), fixtures::kRetarded, 1e-10);
  CHECK_CLOSE(epd_retarded_mode({-2.0}, 0.6, 2.0, 0.5),
              oracle_epd_retarded_tau({-2.0}, 0.6, 0.5, {2.0}).front(), 1e-9);
  const auto [e0, e1] = epd_fundamental_modes({-1.0}, 0.5, 1.0);
  CHECK_CLOSE(e0, fixtures::kFundamental0, 1e-10);
  CHECK_CLOSE(e1, fixtures::kFundamental1, 1e-10);
  CHECK_THROWS_KIND(epd_retarded_mode({-1.0}, 0.5, 1.0, 1.0), ErrorKind::Ordering);
  CHECK_THROWS_KIND(epd_retarded_mode({-1.0}, 0.5, 1.0, -0.1), ErrorKind::Domain);
}
