#include "flrw/verify.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <map>

#include "flrw/dirac_algebra.hpp"
#include "flrw/dirac_solver.hpp"
#include "flrw/epd_solver.hpp"
#include "flrw/error.hpp"
#include "flrw/finite_difference.hpp"
#include "flrw/kernels.hpp"
#include "flrw/oracle.hpp"
#include "flrw/parallel.hpp"

namespace flrw {
namespace {

const Complex kI(0.0, 1.0);

std::string fmt(const char* format, double a) {
  char buf[64];
  std::snprintf(buf, sizeof buf, format, a);
  return buf;
}

std::string mass_label(Complex m) {
  if (m.imag() == 0.0) return fmt("%g", m.real());
  char buf[64];
  std::snprintf(buf, sizeof buf, "%g%+gi", m.real(), m.imag());
  return buf;
}

CaseResult make_case(std::string id, double error, double tolerance) {
  return {std::move(id), error, tolerance, error <= tolerance};
}

const std::vector<Complex>& kernel_masses() {
  static const std::vector<Complex> masses = {0.3, 1.0, 2.0, Complex(0.5, 0.5)};
  return masses;
}

// Runs `n` independent cases in parallel and returns them in index order.
std::vector<CaseResult> run_cases(std::size_t n,
                                  const std::function<CaseResult(std::size_t)>& f) {
  std::vector<CaseResult> out(n);
  parallel_for(n, [&](std::size_t i) { out[i] = f(i); });
  return out;
}

// Residual of k_tt - k_rr + 2im/(tau+1) k_t at (r, tau), relative to the
// largest term.
double epd_residual(const std::function<Complex(double, double)>& k, double r,
                    double tau, Complex m, double h) {
  const auto along_tau = [&](double s) { return k(r, s); };
  const auto along_r = [&](double s) { return k(s, tau); };
  const Complex k_tt = central_second(along_tau, tau, h);
  const Complex k_rr = central_second(along_r, r, h);
  const Complex damp = 2.0 * kI * m / (tau + 1.0) * central_first(along_tau, tau, h);
  const double scale = std::max({std::abs(k(r, tau)), std::abs(k_tt),
                                 std::abs(k_rr), std::abs(damp)});
  return std::abs(k_tt - k_rr + damp) / scale;
}

}  // namespace

bool SuiteReport::pass() const {
  return std::all_of(cases.begin(), cases.end(),
                     [](const CaseResult& c) { return c.pass; });
}

double SuiteReport::worst_ratio() const {
  double worst = 0.0;
  for (const auto& c : cases) {
    const double r = c.tolerance > 0.0 ? c.error / c.tolerance
                                       : (c.error > 0.0 ? HUGE_VAL : 0.0);
    worst = std::max(worst, r);
  }
  return worst;
}

double UniformStream::next() {
  std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  z ^= z >> 31;
  return static_cast<double>(z >> 11) * 0x1.0p-53;
}

SuiteReport verify_kernel_pde(const VerifyOptions&) {
  const std::vector<double> taus = {0.25, 0.5, 1.0, 1.5, 2.0, 3.0, 4.0, 6.0};
  const std::vector<double> b_frac = {0.0, 0.1, 0.3, 0.6};
  const std::vector<double> r_frac = {0.1, 0.3, 0.5, 0.7, 0.9};
  const auto& masses = kernel_masses();
  SuiteReport report{"kernel_pde", {}};
  report.cases = run_cases(3 * masses.size(), [&](std::size_t idx) {
    const int kind = static_cast<int>(idx / masses.size());
    const Complex m = masses[idx % masses.size()];
    double worst = 0.0;
    for (double tau : taus) {
      for (double bf : (kind == 0 ? b_frac : std::vector<double>{0.0})) {
        const double b = bf * tau;
        const auto k = [&](double r, double s) -> Complex {
          switch (kind) {
            case 0: return kernel_E_tau(r, s, b, m).value;
            case 1: return kernel_K1_tau(r, s, m).value;
            default: return kernel_K0_tau(r, s, m).value;
          }
        };
        for (double rf : r_frac) {
          const double r = rf * (tau - b);
          const double h = std::min(2e-3 * (1.0 + tau),
                                    0.25 * std::min(r, tau - b - r));
          worst = std::max(worst, epd_residual(k, r, tau, m, h));
        }
      }
    }
    static const char* names[] = {"E", "K1", "K0"};
    return make_case(std::string(names[kind]) + "/m=" + mass_label(m), worst,
                     1e-6);
  });
  return report;
}

SuiteReport verify_kernel_diagonal(const VerifyOptions&) {
  const std::vector<double> taus = {0.5, 1.0, 2.0, 4.0};
  const auto& masses = kernel_masses();
  SuiteReport report{"kernel_diagonal", {}};
  report.cases = run_cases(3 * masses.size(), [&](std::size_t idx) {
    const int kind = static_cast<int>(idx / masses.size());
    const Complex m = masses[idx % masses.size()];
    double worst = 0.0;
    for (double tau : taus) {
      const double h = 1e-3 * (1.0 + tau);
      const double damp = 1.0 / (tau + 1.0);
      if (kind == 0) {
        for (double bf : {0.0, 0.3, 0.6}) {
          const double b = bf * tau;
          const auto d = [&](double s) {
            return kernel_E_tau(s - b, s, b, m).value;
          };
          const Complex v = d(tau), dv = central_first(d, tau, h);
          const Complex res = dv + kI * m * damp * v;
          worst = std::max(worst, std::abs(res) / (std::abs(dv) + std::abs(v)));
        }
      } else if (kind == 1) {
        const auto d = [&](double s) { return kernel_K1_tau(s, s, m).value; };
        const Complex v = d(tau), dv = central_first(d, tau, h);
        const Complex res = dv + kI * m * damp * v;
        worst = std::max(worst, std::abs(res) / (std::abs(dv) + std::abs(v)));
      } else {
        const auto d = [&](double s) { return kernel_K0_tau(s, s, m).value; };
        const Complex v = d(tau), dv = central_first(d, tau, h);
        const Complex rhs = -m * (m + kI) * cpow(tau + 1.0, -2.0 - kI * m);
        const Complex res = 2.0 * dv + 2.0 * kI * m * damp * v - rhs;
        worst = std::max(worst, std::abs(res) / (std::abs(2.0 * dv) +
                                                 std::abs(v) + std::abs(rhs)));
      }
    }
    static const char* names[] = {"E", "K1", "K0"};
    return make_case(std::string(names[kind]) + "/m=" + mass_label(m), worst,
                     1e-6);
  });
  return report;
}

SuiteReport verify_kernel_limits(const VerifyOptions&) {
  const auto& masses = kernel_masses();
  SuiteReport report{"kernel_limits", {}};
  // error: largest relative spread of deviation / tau over tau = 1e-2..1e-6.
  report.cases = run_cases(2 * masses.size(), [&](std::size_t idx) {
    const bool fused = idx >= masses.size();
    const Complex m = masses[idx % masses.size()];
    std::vector<double> slopes;
    for (int k = 2; k <= 6; ++k) {
      const double tau = std::pow(10.0, -k);
      const Complex dev =
          fused ? kernel_K0_tau(tau, tau, m).value +
                      2.0 * kI * m * kernel_K1_tau(tau, tau, m).value - kI * m
                : kernel_K1_tau(tau, tau, m).value - 1.0;
      slopes.push_back(std::abs(dev) / tau);
    }
    const double ref = slopes.back();
    double spread = 0.0;
    for (double s : slopes) spread = std::max(spread, std::abs(s - ref) / ref);
    return make_case(std::string(fused ? "K0+2imK1->im" : "K1->1") + "/m=" +
                         mass_label(m),
                     spread, 0.25);
  });
  return report;
}

SuiteReport verify_massless(const VerifyOptions&) {
  SuiteReport report{"massless", {}};
  double kernel_dev = 0.0;
  for (double tau : {0.3, 1.0, 4.0}) {
    for (double rf : {0.0, 0.5, 1.0}) {
      const double r = rf * tau;
      kernel_dev = std::max(kernel_dev, std::abs(kernel_K1_tau(r, tau, 0.0).value - 1.0));
      kernel_dev = std::max(kernel_dev, std::abs(kernel_K0_tau(r, tau, 0.0).value));
      kernel_dev = std::max(kernel_dev, std::abs(kernel_K0_fused_tau(r, tau, 0.0).value));
      for (double bf : {0.0, 0.4}) {
        const double b = bf * tau;
        if (r <= tau - b) {
          kernel_dev = std::max(kernel_dev,
                                std::abs(kernel_E_tau(r, tau, b, 0.0).value - 1.0));
        }
      }
    }
  }
  report.cases.push_back(make_case("kernels={1,1,0}", kernel_dev, 0.0));

  const std::vector<double> kappas = {0.0, 1.0, 5.0};
  const std::vector<double> taus = {0.5, 1.0, 3.0};
  const auto rel = [](Complex a, Complex b) {
    return std::abs(a - b) / (1.0 + std::abs(b));
  };
  for (double kappa : kappas) {
    const ModeSymbol sym{-kappa * kappa};
    double e_cos = 0.0, e_sin = 0.0, e_duhamel = 0.0, e_ret = 0.0;
    for (double tau : taus) {
      const double sinc = kappa == 0.0 ? tau : std::sin(kappa * tau) / kappa;
      e_cos = std::max(e_cos, rel(solve_epd_tau(sym, 0.0, {1.0, 0.0, {}}, tau),
                                  std::cos(kappa * tau)));
      e_sin = std::max(e_sin, rel(solve_epd_tau(sym, 0.0, {0.0, 1.0, {}}, tau), sinc));
      const double duhamel =
          (std::exp(-tau) - std::cos(kappa * tau) + sinc) / (1.0 + kappa * kappa);
      e_duhamel = std::max(
          e_duhamel,
          rel(solve_epd_tau(sym, 0.0,
                            {0.0, 0.0, [](double s) { return Complex(std::exp(-s)); }},
                            tau),
              duhamel));
      const double tau0 = 0.2;
      const double gap = tau + 0.5 - tau0;
      e_ret = std::max(e_ret, rel(epd_retarded_mode(sym, 0.0, tau + 0.5, tau0),
                                  kappa == 0.0 ? gap : std::sin(kappa * gap) / kappa));
    }
    const std::string k = "/kappa=" + fmt("%g", kappa);
    report.cases.push_back(make_case("cos" + k, e_cos, 1e-10));
    report.cases.push_back(make_case("sin" + k, e_sin, 1e-10));
    report.cases.push_back(make_case("duhamel" + k, e_duhamel, 1e-10));
    report.cases.push_back(make_case("retarded" + k, e_ret, 1e-10));
  }
  return report;
}

namespace {

const std::vector<double>& grid_ells() {
  static const std::vector<double> v = {-1.0, 0.0, 0.5, 2.0 / 3.0};
  return v;
}
const std::vector<Complex>& grid_masses() {
  static const std::vector<Complex> v = {0.0, 0.7, Complex(1.0, 0.5)};
  return v;
}
const std::vector<WaveVector>& grid_wave_vectors() {
  static const std::vector<WaveVector> v = {
      {0.0, 0.0, 0.0}, {1.0, 0.0, 0.0}, {1.0, 1.0, 1.0}};
  return v;
}

std::string ell_label(double ell) {
  if (std::abs(ell - 2.0 / 3.0) < 1e-15) return "2/3";
  if (ell == 0.5) return "1/2";
  return fmt("%g", ell);
}

std::string k_label(const WaveVector& k) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "(%g,%g,%g)", k[0], k[1], k[2]);
  return buf;
}

SpinorMode grid_mode(const WaveVector& k, bool sourced) {
  SpinorMode mode{k,
                  {Complex(1.0, 0.2), Complex(-0.3, 0.5), Complex(0.4, 0.0),
                   Complex(0.0, -0.7)},
                  {}};
  if (sourced) {
    mode.source = [](double t) {
      const double e = std::exp(1.0 - t);
      return Spinor{Complex(0.5 * e, 0.0), Complex(0.0, 0.3 * std::sin(t)),
                    Complex(0.2 / t, 0.1 * e), Complex(0.1, -0.1)};
    };
  }
  return mode;
}

std::vector<double> time_grid(double eps, bool quick) {
  if (quick) return {eps, 2.0 * eps, 10.0 * eps};
  return {eps, 1.5 * eps, 3.0 * eps, 6.0 * eps, 10.0 * eps};
}

}  // namespace

SuiteReport verify_epd_oracle(const VerifyOptions& options) {
  const std::vector<double> lambdas = {0.0, -1.0, -25.0};
  struct Job {
    double ell;
    Complex m;
    double lambda;
  };
  std::vector<Job> jobs;
  for (double ell : grid_ells())
    for (Complex m : grid_masses())
      for (double lambda : lambdas) jobs.push_back({ell, m, lambda});
  SuiteReport report{"epd_oracle", {}};
  report.cases = run_cases(jobs.size(), [&](std::size_t i) {
    const Job& j = jobs[i];
    const CosmologyParams p(j.ell, j.m, 1.0);
    const ModeCauchyData data{Complex(0.8, -0.3), Complex(-0.2, 0.6), [](double t) {
      return Complex(0.4, 0.3) * std::exp(1.0 - t) * std::cos(t);
    }};
    const auto times = time_grid(p.epsilon(), options.quick);
    const auto oracle = oracle_epd_mode_t({j.lambda}, p, data, times);
    double worst = 0.0;
    for (std::size_t it = 0; it < times.size(); ++it) {
      const Complex u = solve_epd_t({j.lambda}, p, data, times[it]);
      worst = std::max(worst, std::abs(u - oracle[it]) / (1.0 + std::abs(oracle[it])));
    }
    return make_case("ell=" + ell_label(j.ell) + "/m=" + mass_label(j.m) +
                         "/lambda=" + fmt("%g", j.lambda),
                     worst, 1e-6);
  });
  return report;
}

SuiteReport verify_dirac_oracle(const VerifyOptions& options) {
  struct Job {
    double ell;
    Complex m;
    WaveVector k;
    bool sourced;
  };
  std::vector<Job> jobs;
  for (double ell : grid_ells())
    for (Complex m : grid_masses())
      for (const auto& k : grid_wave_vectors())
        for (bool sourced : {false, true}) jobs.push_back({ell, m, k, sourced});
  SuiteReport report{"dirac_oracle", {}};
  std::vector<std::vector<CaseResult>> per_job(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const Job& j = jobs[i];
    const CosmologyParams p(j.ell, j.m, 1.0);
    const SpinorMode mode = grid_mode(j.k, j.sourced);
    const auto times = time_grid(p.epsilon(), options.quick);
    const auto oracle = oracle_dirac_mode(j.k, mode.amplitude, mode.source, p, times);
    const auto psi = solve_dirac_mode(mode, p, times);
    double worst = 0.0, worst_closed = 0.0;
    const bool closed = j.k == WaveVector{0.0, 0.0, 0.0} && !j.sourced;
    for (std::size_t it = 0; it < times.size(); ++it) {
      worst = std::max(worst, max_abs(psi[it] - oracle[it]) / (1.0 + max_abs(oracle[it])));
      if (closed) {
        const double x = times[it] / p.epsilon();
        Spinor exact{};
        for (int c = 0; c < 4; ++c) {
          const Complex e = -1.5 * j.ell + (c < 2 ? -kI : kI) * j.m;
          exact[c] = mode.amplitude[c] * cpow(x, e);
        }
        worst_closed = std::max(worst_closed,
                                max_abs(psi[it] - exact) / max_abs(exact));
      }
    }
    const std::string id = "ell=" + ell_label(j.ell) + "/m=" + mass_label(j.m) +
                           "/k=" + k_label(j.k) +
                           (j.sourced ? "/sourced" : "/free");
    per_job[i].push_back(make_case(id, worst, 1e-5));
    if (closed) per_job[i].push_back(make_case(id + "/power_law", worst_closed, 1e-8));
  });
  for (auto& v : per_job)
    for (auto& c : v) report.cases.push_back(std::move(c));
  return report;
}

SuiteReport verify_charge(const VerifyOptions& options) {
  struct Job {
    double ell;
    double m;
    WaveVector k;
  };
  std::vector<Job> jobs;
  for (double ell : grid_ells())
    for (double m : {0.0, 0.7})
      for (const auto& k : grid_wave_vectors()) jobs.push_back({ell, m, k});
  SuiteReport report{"charge", {}};
  report.cases = run_cases(jobs.size(), [&](std::size_t i) {
    const Job& j = jobs[i];
    const CosmologyParams p(j.ell, j.m, 1.0);
    const SpinorMode mode = grid_mode(j.k, false);
    const auto times = time_grid(p.epsilon(), options.quick);
    const auto psi = solve_dirac_mode(mode, p, times);
    const double q0 = std::pow(times[0], 3.0 * j.ell) * norm2(psi[0]);
    double worst = 0.0;
    for (std::size_t it = 1; it < times.size(); ++it) {
      const double q = std::pow(times[it], 3.0 * j.ell) * norm2(psi[it]);
      worst = std::max(worst, std::abs(q / q0 - 1.0));
    }
    return make_case("ell=" + ell_label(j.ell) + "/m=" + fmt("%g", j.m) +
                         "/k=" + k_label(j.k),
                     worst, 1e-6);
  });
  return report;
}

SuiteReport verify_composition_suite(const VerifyOptions& options) {
  UniformStream rng(options.seed);
  double worst = 0.0;
  for (int draw = 0; draw < 100; ++draw) {
    const double t = rng.next(0.1, 5.0);
    const WaveVector k = {rng.next(-3.0, 3.0), rng.next(-3.0, 3.0), rng.next(-3.0, 3.0)};
    const double ell = rng.next(-1.0, 0.9);
    const Complex m(rng.next(-2.0, 2.0), rng.next(-2.0, 2.0));
    PolynomialSpinor psi;
    for (auto& row : psi.coefficients)
      for (auto& c : row) c = Complex(rng.next(-1.0, 1.0), rng.next(-1.0, 1.0));
    worst = std::max(worst, verify_composition(t, k, CosmologyParams(ell, m, 0.1), psi));
  }
  return {"composition", {make_case("100_random_draws", worst, 1e-11)}};
}

SuiteReport verify_condition13_suite(const VerifyOptions& options) {
  UniformStream rng(options.seed ^ 0x5DEECE66DULL);
  const std::vector<double> ts = {0.1, 0.5, 1.0, 3.0, 10.0};
  double worst = 0.0;
  for (double t : ts) {
    for (int draw = 0; draw < 40; ++draw) {
      const double radius = 2.0 * std::sqrt(rng.next());
      const double angle = rng.next(0.0, 2.0 * M_PI);
      const Complex m = std::polar(radius, angle);
      WaveVector k = {rng.next(-1.0, 1.0), rng.next(-1.0, 1.0), rng.next(-1.0, 1.0)};
      const double norm = std::sqrt(k[0] * k[0] + k[1] * k[1] + k[2] * k[2]);
      const double kmag = 5.0 * rng.next();
      for (double& kj : k) kj *= kmag / norm;
      worst = std::max(worst, verify_condition13(k, t, m));
    }
    // box corners: |k| = 5 along axes and diagonal, |m| = 2
    for (const WaveVector& k : {WaveVector{5, 0, 0}, WaveVector{0, 0, 5},
                                WaveVector{5 / std::sqrt(3.0), 5 / std::sqrt(3.0),
                                           -5 / std::sqrt(3.0)}}) {
      for (Complex m : {Complex(2.0), Complex(0.0, 2.0), Complex(0.0, -2.0)}) {
        worst = std::max(worst, verify_condition13(k, t, m));
      }
    }
  }
  return {"condition13", {make_case("parameter_box", worst, 1e-14)}};
}

SuiteReport verify_cone_support(const VerifyOptions& options) {
  struct Job {
    double ell;
    double m;
  };
  const std::vector<Job> jobs = {{2.0 / 3.0, 1.0}, {0.5, 0.5}};
  const double sigma = options.quick ? 0.4 : 0.3;
  const double dk = 0.5;
  const double t0 = 1.0, t = 2.0;
  SuiteReport report{"cone_support", {}};
  for (const Job& j : jobs) {
    const CosmologyParams p(j.ell, j.m, 1.0);
    const double radius = phi(t, p) - phi(t0, p);
    const auto sigma_eff = [&](double s) { return s + std::pow(t0, -j.ell) * s; };
    const double probe_coarse = radius + 5.0 * sigma_eff(sigma);
    const double probe_fine = radius + 5.0 * sigma_eff(0.5 * sigma);
    std::vector<Point> xs;
    for (int i = 0; i <= 10; ++i) {
      const double d = radius * i / 10.0;
      xs.push_back({d, 0.0, 0.0});
      xs.push_back({d / std::sqrt(3.0), d / std::sqrt(3.0), d / std::sqrt(3.0)});
    }
    const std::size_t interior = xs.size();
    for (const double probe : {probe_coarse, probe_fine}) {
      const double c = probe / std::sqrt(3.0);
      xs.push_back({probe, 0.0, 0.0});
      xs.push_back({c, c, c});
    }
    const auto run = [&](double s) {
      PropagatorOptions o;
      o.sigma = s;
      o.band = {std::ceil(5.0 / s / dk) * dk + 1e-12, dk};
      const auto samples = sample_retarded_propagator(xs, t, {0.0, 0.0, 0.0}, t0, p, o);
      double peak = 0.0;
      for (std::size_t i = 0; i < interior; ++i) peak = std::max(peak, samples[i].value.max_abs());
      const auto exterior = [&](std::size_t i) {
        return std::max(samples[i].value.max_abs(), samples[i + 1].value.max_abs()) / peak;
      };
      return std::make_pair(exterior(interior), exterior(interior + 2));
    };
    const auto coarse = run(sigma);
    const auto fine = run(0.5 * sigma);
    const std::string id = "ell=" + ell_label(j.ell) + "/m=" + fmt("%g", j.m);
    report.cases.push_back(make_case(id + "/exterior_over_peak", coarse.first, 1e-3));
    report.cases.push_back(make_case(id + "/exterior_over_peak_half_sigma", fine.second, 1e-3));
    report.cases.push_back(make_case(id + "/sigma_halving_ratio", fine.second / coarse.second, 1.0));
  }
  return report;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {
      "kernel_pde",  "kernel_diagonal", "kernel_limits", "massless",
      "composition", "condition13",     "epd_oracle",    "dirac_oracle",
      "charge",      "cone_support"};
  return names;
}

SuiteReport run_suite(const std::string& name, const VerifyOptions& options) {
  static const std::map<std::string, SuiteReport (*)(const VerifyOptions&)> table = {
      {"kernel_pde", verify_kernel_pde},
      {"kernel_diagonal", verify_kernel_diagonal},
      {"kernel_limits", verify_kernel_limits},
      {"massless", verify_massless},
      {"composition", verify_composition_suite},
      {"condition13", verify_condition13_suite},
      {"epd_oracle", verify_epd_oracle},
      {"dirac_oracle", verify_dirac_oracle},
      {"charge", verify_charge},
      {"cone_support", verify_cone_support},
  };
  const auto it = table.find(name);
  if (it == table.end()) {
    throw Error(ErrorKind::Config, "unknown verification suite '" + name + "'");
  }
  return it->second(options);
}

}  // namespace flrw
