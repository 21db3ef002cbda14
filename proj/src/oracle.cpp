#include "flrw/oracle.hpp"

#include <boost/numeric/odeint.hpp>
#include <cmath>
#include <string>

#include "flrw/error.hpp"

namespace flrw {
namespace {

namespace odeint = boost::numeric::odeint;

const Complex kI(0.0, 1.0);
constexpr std::size_t kMaxSteps = 2000000;

void check_grid(double t0, const std::vector<double>& times) {
  double prev = t0;
  for (double t : times) {
    if (!(t >= prev) || !std::isfinite(t)) {
      throw Error(ErrorKind::Domain,
                  "oracle: time grid must be ascending and start at or after " +
                      std::to_string(t0));
    }
    prev = t;
  }
}

}  // namespace

std::vector<State> integrate(const OdeProblem& prob,
                             const std::vector<double>& times) {
  if (prob.y0.size() != prob.dimension || !prob.rhs) {
    throw Error(ErrorKind::Domain, "integrate: inconsistent problem");
  }
  if (!(prob.rel_tol > 0.0) || !(prob.abs_tol > 0.0)) {
    throw Error(ErrorKind::Domain, "integrate: tolerances must be positive");
  }
  check_grid(prob.t0, times);

  std::vector<State> history;
  history.reserve(times.size());
  State y = prob.y0;
  double t = prob.t0;
  auto stepper = odeint::make_controlled(
      prob.abs_tol, prob.rel_tol, odeint::runge_kutta_dopri5<State>());
  const auto system = [&](const State& x, State& dxdt, double s) {
    prob.rhs(s, x, dxdt);
  };

  for (double target : times) {
    if (target == t) {
      history.push_back(y);
      continue;
    }
    std::size_t steps = 0;
    double last = t;
    const auto watch = [&](const State&, double s) {
      if (s != t && !(s - last > 1e-14 * std::abs(s))) {
        throw Error(ErrorKind::StepUnderflow,
                    "integrate: step size underflow at t = " +
                        std::to_string(s));
      }
      if (++steps > kMaxSteps) {
        throw Error(ErrorKind::StepUnderflow,
                    "integrate: step budget exhausted at t = " +
                        std::to_string(s));
      }
      last = s;
    };
    try {
      odeint::integrate_adaptive(stepper, system, y, t, target,
                                 1e-3 * (target - t), watch);
    } catch (const odeint::step_adjustment_error& e) {
      throw Error(ErrorKind::StepUnderflow,
                  std::string("integrate: ") + e.what());
    }
    for (const Complex& c : y) {
      if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
        throw Error(ErrorKind::StepUnderflow,
                    "integrate: non-finite state at t = " +
                        std::to_string(target));
      }
    }
    t = target;
    history.push_back(y);
  }
  return history;
}

State integrate(const OdeProblem& prob, double t_end) {
  return integrate(prob, std::vector<double>{t_end}).back();
}

std::vector<Complex> oracle_epd_mode_t(const ModeSymbol& symbol,
                                       const CosmologyParams& p,
                                       const ModeCauchyData& data,
                                       const std::vector<double>& times,
                                       const OracleOptions& options) {
  const double ell = p.ell();
  const Complex damping = ell + 2.0 * kI * p.mass();
  OdeProblem prob;
  prob.dimension = 2;
  prob.t0 = p.epsilon();
  prob.y0 = {data.phi0, data.phi1};
  prob.rel_tol = options.rel_tol;
  prob.abs_tol = options.abs_tol;
  prob.rhs = [&](double t, const State& y, State& dy) {
    const Complex f = data.source ? data.source(t) : Complex(0.0);
    dy[0] = y[1];
    dy[1] = f + symbol.lambda * std::pow(t, -2.0 * ell) * y[0] -
            damping * y[1] / t;
  };
  std::vector<Complex> out;
  for (const State& s : integrate(prob, times)) out.push_back(s[0]);
  return out;
}

std::vector<Complex> oracle_epd_mode_tau(const ModeSymbol& symbol, Complex m,
                                         const ModeCauchyData& data,
                                         const std::vector<double>& taus,
                                         const OracleOptions& options) {
  OdeProblem prob;
  prob.dimension = 2;
  prob.t0 = 0.0;
  prob.y0 = {data.phi0, data.phi1};
  prob.rel_tol = options.rel_tol;
  prob.abs_tol = options.abs_tol;
  prob.rhs = [&](double tau, const State& y, State& dy) {
    const Complex f = data.source ? data.source(tau) : Complex(0.0);
    dy[0] = y[1];
    dy[1] = f + symbol.lambda * y[0] - 2.0 * kI * m * y[1] / (tau + 1.0);
  };
  std::vector<Complex> out;
  for (const State& s : integrate(prob, taus)) out.push_back(s[0]);
  return out;
}

std::vector<Complex> oracle_epd_retarded_tau(const ModeSymbol& symbol,
                                             Complex m, double tau0,
                                             const std::vector<double>& taus,
                                             const OracleOptions& options) {
  OdeProblem prob;
  prob.dimension = 2;
  prob.t0 = tau0;
  prob.y0 = {0.0, 1.0};
  prob.rel_tol = options.rel_tol;
  prob.abs_tol = options.abs_tol;
  prob.rhs = [&](double tau, const State& y, State& dy) {
    dy[0] = y[1];
    dy[1] = symbol.lambda * y[0] - 2.0 * kI * m * y[1] / (tau + 1.0);
  };
  std::vector<Complex> out;
  for (const State& s : integrate(prob, taus)) out.push_back(s[0]);
  return out;
}

std::vector<Spinor> oracle_dirac_mode(
    const WaveVector& k, const Spinor& psi_eps,
    const std::function<Spinor(double)>& source, const CosmologyParams& p,
    const std::vector<double>& times, const OracleOptions& options) {
  const double ell = p.ell();
  const Complex m = p.mass();
  // sigma . k = [[k3, k1 - i k2], [k1 + i k2, -k3]]
  const Complex s00 = k[2], s01 = Complex(k[0], -k[1]);
  const Complex s10 = Complex(k[0], k[1]), s11 = -k[2];

  OdeProblem prob;
  prob.dimension = 4;
  prob.t0 = p.epsilon();
  prob.y0.assign(psi_eps.begin(), psi_eps.end());
  prob.rel_tol = options.rel_tol;
  prob.abs_tol = options.abs_tol;
  prob.rhs = [&](double t, const State& y, State& dy) {
    Spinor f{};
    if (source) f = source(t);
    const double w = std::pow(t, -ell);
    const double decay = 1.5 * ell / t;
    const Complex mt = m / t;
    const Complex u0 = y[0], u1 = y[1], l0 = y[2], l1 = y[3];
    const Complex skl0 = s00 * l0 + s01 * l1, skl1 = s10 * l0 + s11 * l1;
    const Complex sku0 = s00 * u0 + s01 * u1, sku1 = s10 * u0 + s11 * u1;
    dy[0] = -kI * (f[0] + w * skl0 + mt * u0) - decay * u0;
    dy[1] = -kI * (f[1] + w * skl1 + mt * u1) - decay * u1;
    dy[2] = kI * (f[2] - w * sku0 + mt * l0) - decay * l0;
    dy[3] = kI * (f[3] - w * sku1 + mt * l1) - decay * l1;
  };
  std::vector<Spinor> out;
  for (const State& s : integrate(prob, times)) {
    out.push_back({s[0], s[1], s[2], s[3]});
  }
  return out;
}

}  // namespace flrw
