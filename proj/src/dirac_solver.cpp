#include "flrw/dirac_solver.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>

#include "flrw/error.hpp"
#include "flrw/parallel.hpp"

namespace flrw {
namespace {

const Complex kI(0.0, 1.0);
constexpr double kPi = 3.14159265358979323846;
constexpr double kRadialWarn = 1e-6;

struct Stencil {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// Richardson-extrapolated first derivative at nodes[0] = t. Central with
// steps h and h/2; one-sided (t, t + h/2, t + h, t + 2h) when t is within
// 10h of the lower end of the domain.
Stencil derivative_stencil(double t, double h, double lower) {
  if (t - lower < 10.0 * h) {
    return {{t, t + 0.5 * h, t + h, t + 2.0 * h},
            {-3.5 / h, 16.0 / (3.0 * h), -2.0 / h, 1.0 / (6.0 * h)}};
  }
  return {{t, t - h, t - 0.5 * h, t + 0.5 * h, t + h},
          {0.0, 1.0 / (6.0 * h), -4.0 / (3.0 * h), 4.0 / (3.0 * h),
           -1.0 / (6.0 * h)}};
}

double dot(const WaveVector& k, const Point& x) {
  return k[0] * x[0] + k[1] * x[1] + k[2] * x[2];
}

double norm_sq(const WaveVector& k) {
  return k[0] * k[0] + k[1] * k[1] + k[2] * k[2];
}

// Block c < 2 carries mass +m, c >= 2 mass -m; a_c = ell/2 - i mass_c.
struct Block {
  CosmologyParams params;
  Complex a;
  double data_sign;  // Phi_c'(eps) = data_sign * i * eps^a_c * Psi_c
};

Block block(const CosmologyParams& p, int c) {
  const CosmologyParams pc = c < 2 ? p : p.with_mass(-p.mass());
  return {pc, 0.5 * pc.ell() - kI * pc.mass(), c < 2 ? -1.0 : 1.0};
}

Spinor phi_at(const SpinorMode& mode, const CosmologyParams& p, double t,
              const DiracOptions& options) {
  const ModeSymbol symbol = ModeSymbol::laplacian(norm_sq(mode.k));
  const double eps = p.epsilon();
  Spinor out{};
  if (!mode.source) {
    // Phi_c is a multiple of the unit-data solution of its block.
    for (int half = 0; half < 2; ++half) {
      const Block b = block(p, 2 * half);
      const Complex g =
          solve_epd_t(symbol, b.params, {0.0, 1.0, {}}, t, options.epd);
      for (int c = 2 * half; c < 2 * half + 2; ++c) {
        out[c] = b.data_sign * kI * cpow(eps, b.a) * mode.amplitude[c] * g;
      }
    }
    return out;
  }
  for (int c = 0; c < 4; ++c) {
    const Block b = block(p, c);
    ModeCauchyData data{
        0.0, b.data_sign * kI * cpow(eps, b.a) * mode.amplitude[c],
        [&, c, a = b.a](double s) { return -cpow(s, a) * mode.source(s)[c]; }};
    out[c] = solve_epd_t(symbol, b.params, data, t, options.epd);
  }
  return out;
}

void check_mode(const SpinorMode& mode) {
  for (double kj : mode.k) {
    if (!std::isfinite(kj)) {
      throw Error(ErrorKind::Domain, "dirac: wave vector must be finite");
    }
  }
  for (const Complex& c : mode.amplitude) {
    if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
      throw Error(ErrorKind::Domain, "dirac: amplitude must be finite");
    }
  }
}

}  // namespace

Spinor solve_dirac_mode(const SpinorMode& mode, const CosmologyParams& p,
                        double t, const DiracOptions& options) {
  check_mode(mode);
  const double eps = p.epsilon();
  if (!(t >= eps)) {
    throw Error(ErrorKind::Domain,
                "solve_dirac_mode: t must be >= epsilon, got " +
                    std::to_string(t));
  }
  if (t == eps) return mode.amplitude;
  if (!(options.fd_step > 0.0)) {
    throw Error(ErrorKind::Domain, "solve_dirac_mode: fd_step must be > 0");
  }
  const Stencil st = derivative_stencil(t, options.fd_step * t, eps);
  Spinor value{}, derivative{};
  for (std::size_t i = 0; i < st.nodes.size(); ++i) {
    const Spinor phi_i = phi_at(mode, p, st.nodes[i], options);
    if (i == 0) value = phi_i;
    derivative = derivative + Complex(st.weights[i]) * phi_i;
  }
  return apply_symbol(dco_symbol(t, mode.k, p), value, derivative);
}

std::vector<Spinor> solve_dirac_mode(const SpinorMode& mode,
                                     const CosmologyParams& p,
                                     const std::vector<double>& times,
                                     const DiracOptions& options) {
  std::vector<Spinor> out;
  out.reserve(times.size());
  for (double t : times) out.push_back(solve_dirac_mode(mode, p, t, options));
  return out;
}

Spinor dirac_residual(const SpinorMode& mode, const CosmologyParams& p,
                      double t, double step, const DiracOptions& options) {
  const double h = step * t;
  if (!(t - h > p.epsilon())) {
    throw Error(ErrorKind::Domain,
                "dirac_residual: stencil reaches below epsilon");
  }
  const Stencil st = derivative_stencil(t, h, -HUGE_VAL);
  Spinor value{}, derivative{};
  for (std::size_t i = 0; i < st.nodes.size(); ++i) {
    const Spinor psi = solve_dirac_mode(mode, p, st.nodes[i], options);
    if (i == 0) value = psi;
    derivative = derivative + Complex(st.weights[i]) * psi;
  }
  Spinor r = apply_symbol(dirac_symbol(t, mode.k, p), value, derivative);
  if (mode.source) r = r - mode.source(t);
  return r;
}

std::vector<std::vector<Spinor>> solve_dirac_field(
    const FourierField& field, const CosmologyParams& p,
    const std::vector<double>& times, const std::vector<Point>& points,
    const DiracOptions& options) {
  if (field.modes.empty()) {
    throw Error(ErrorKind::Domain, "solve_dirac_field: field has no modes");
  }
  std::set<WaveVector> seen;
  for (const auto& mode : field.modes) {
    if (!seen.insert(mode.k).second) {
      throw Error(ErrorKind::Domain,
                  "solve_dirac_field: duplicate wave vector in field");
    }
  }
  std::vector<std::vector<Spinor>> per_mode(field.modes.size());
  parallel_for(field.modes.size(), [&](std::size_t i) {
    per_mode[i] = solve_dirac_mode(field.modes[i], p, times, options);
  });
  std::vector<std::vector<Spinor>> out(times.size(),
                                       std::vector<Spinor>(points.size()));
  for (std::size_t it = 0; it < times.size(); ++it) {
    for (std::size_t ip = 0; ip < points.size(); ++ip) {
      Spinor sum{};
      for (std::size_t m = 0; m < field.modes.size(); ++m) {
        const double arg = dot(field.modes[m].k, points[ip]);
        sum = sum + Complex(std::cos(arg), std::sin(arg)) * per_mode[m][it];
      }
      out[it][ip] = sum;
    }
  }
  return out;
}

int KGrid::half_width() const {
  if (!(dk > 0.0) || !(k_max >= 0.0) || !std::isfinite(k_max)) {
    throw Error(ErrorKind::Domain, "KGrid: need dk > 0 and k_max >= 0");
  }
  return static_cast<int>(std::floor(k_max / dk + 1e-9));
}

double KGrid::period() const { return 2.0 * kPi / dk; }

double time_bump_shape(double u) {
  if (!(std::abs(u) < 1.0)) return 0.0;
  const double w = 1.0 - u * u;
  return w * w * w;
}

namespace {

// Integral of (1 - u^2)^3 from -1 to u.
double bump_primitive(double u) {
  const auto f = [](double x) {
    const double x2 = x * x;
    return x * (1.0 - x2 + 0.6 * x2 * x2 - x2 * x2 * x2 / 7.0);
  };
  return f(std::clamp(u, -1.0, 1.0)) - f(-1.0);
}

// Scalar response g and dg/dt of one block to the mollified point source,
// for one |k|^2; index 0 is the upper (+m) block, 1 the lower.
struct ModeResponse {
  std::array<Complex, 2> g{};
  std::array<Complex, 2> dg{};
};

enum class Problem { Retarded, Cauchy };

struct Setup {
  Problem problem;
  double t;
  double t0;
  double time_sigma;
};

ModeResponse response(double k_sq, const Setup& s, const CosmologyParams& p,
                      const PropagatorOptions& options) {
  const ModeSymbol symbol = ModeSymbol::laplacian(k_sq);
  const EpdOptions& epd = options.dirac.epd;
  const double eps = p.epsilon();
  const double h = options.dirac.fd_step * s.t;
  ModeResponse out;
  for (int half = 0; half < 2; ++half) {
    const Block b = block(p, 2 * half);
    std::function<Complex(double)> g;
    double lower = eps;
    if (s.problem == Problem::Cauchy) {
      const Complex phi1 = b.data_sign * kI * cpow(eps, b.a);
      g = [&, phi1](double t) {
        return solve_epd_t(symbol, b.params, {0.0, phi1, {}}, t, epd);
      };
    } else if (s.time_sigma == 0.0) {
      // The impulse makes Psi jump by -i g0 e_c at t0; evolve from there.
      const CosmologyParams from_t0(p.ell(), b.params.mass(), s.t0);
      const Complex phi1 = -cpow(s.t0, b.a);
      lower = s.t0;
      g = [&, from_t0, phi1](double t) {
        return solve_epd_t(symbol, from_t0, {0.0, phi1, {}}, t, epd);
      };
    } else {
      const double w = s.time_sigma;
      const double from = std::max(eps, s.t0 - w);
      const double norm = w * bump_primitive(1.0) -
                          w * bump_primitive((from - s.t0) / w);
      ModeCauchyData data{
          0.0, 0.0,
          [&, w, norm, a = b.a](double x) {
            return -cpow(x, a) * time_bump_shape((x - s.t0) / w) / norm;
          },
          from, s.t0 + w};
      g = [&, data](double t) {
        return solve_epd_t(symbol, b.params, data, t, epd);
      };
    }
    const Stencil st = derivative_stencil(s.t, h, lower);
    for (std::size_t i = 0; i < st.nodes.size(); ++i) {
      const Complex gi = g(st.nodes[i]);
      if (i == 0) out.g[half] = gi;
      out.dg[half] += st.weights[i] * gi;
    }
  }
  return out;
}

// Barycentric interpolation on the Chebyshev-Lobatto nodes, using every
// `stride`-th node (stride 2 gives the half-degree interpolant).
ModeResponse interpolate(const std::vector<double>& kappa,
                         const std::vector<ModeResponse>& values, double k,
                         int stride) {
  const int last = static_cast<int>(kappa.size()) - 1;
  ModeResponse num;
  double den = 0.0;
  for (int j = 0; j <= last; j += stride) {
    const int idx = j / stride;
    double w = (idx % 2 == 0) ? 1.0 : -1.0;
    if (j == 0 || j == last) w *= 0.5;
    const double diff = k - kappa[j];
    if (diff == 0.0) return values[j];
    const double c = w / diff;
    den += c;
    for (int b = 0; b < 2; ++b) {
      num.g[b] += c * values[j].g[b];
      num.dg[b] += c * values[j].dg[b];
    }
  }
  for (int b = 0; b < 2; ++b) {
    num.g[b] /= den;
    num.dg[b] /= den;
  }
  return num;
}

std::vector<PropagatorSample> sample_propagator(const std::vector<Point>& xs,
                                                const Setup& s,
                                                const Point& x0,
                                                const CosmologyParams& p,
                                                const PropagatorOptions& options) {
  const double sigma = options.sigma;
  if (!(sigma > 0.0)) {
    throw Error(ErrorKind::Domain, "propagator: sigma must be > 0");
  }
  const int n = options.band.half_width();
  const double dk = options.band.dk;
  const double radius = phi(s.t, p) - phi(s.problem == Problem::Retarded ? s.t0 : p.epsilon(), p);
  const double sigma_eff =
      s.problem == Problem::Retarded
          ? sigma + std::pow(s.t0, -p.ell()) * s.time_sigma
          : sigma;

  std::string spectral_warning;
  if (sigma * n * dk < 5.0) {
    spectral_warning = "sigma * k_max = " + std::to_string(sigma * n * dk) +
                       " < 5: mollifier spectrum truncated";
  }

  // Distinct |k|^2 = dk^2 (i^2 + j^2 + l^2) on the lattice.
  std::set<int> key_set;
  for (int i = 0; i <= n; ++i)
    for (int j = 0; j <= n; ++j)
      for (int l = 0; l <= n; ++l) key_set.insert(i * i + j * j + l * l);
  const std::vector<int> keys(key_set.begin(), key_set.end());
  std::map<int, std::size_t> key_index;
  for (std::size_t i = 0; i < keys.size(); ++i) key_index[keys[i]] = i;

  const bool at_start = s.problem == Problem::Cauchy && s.t == p.epsilon();
  std::vector<ModeResponse> responses(keys.size());
  double radial_error = 0.0;
  if (!at_start) {
    // The responses are entire in |k|: solve on Chebyshev-Lobatto nodes and
    // interpolate, unless the lattice has fewer distinct shells than nodes.
    const int nodes = options.radial_nodes;
    const double k_top = dk * std::sqrt(static_cast<double>(keys.back()));
    if (nodes <= 0 || keys.size() <= static_cast<std::size_t>(nodes) + 1) {
      parallel_for(keys.size(), [&](std::size_t i) {
        responses[i] = response(dk * dk * keys[i], s, p, options);
      });
    } else {
      std::vector<double> kappa(nodes + 1);
      for (int j = 0; j <= nodes; ++j) {
        kappa[j] = 0.5 * k_top * (1.0 - std::cos(kPi * j / nodes));
      }
      std::vector<ModeResponse> at_node(nodes + 1);
      parallel_for(at_node.size(), [&](std::size_t j) {
        at_node[j] = response(kappa[j] * kappa[j], s, p, options);
      });
      double scale = 0.0;
      for (const auto& r : at_node) {
        for (int b = 0; b < 2; ++b) {
          scale = std::max({scale, std::abs(r.g[b]), std::abs(r.dg[b])});
        }
      }
      for (std::size_t i = 0; i < keys.size(); ++i) {
        const double k = dk * std::sqrt(static_cast<double>(keys[i]));
        const ModeResponse fine = interpolate(kappa, at_node, k, 1);
        const ModeResponse coarse = interpolate(kappa, at_node, k, 2);
        for (int b = 0; b < 2; ++b) {
          radial_error =
              std::max({radial_error, std::abs(fine.g[b] - coarse.g[b]),
                        std::abs(fine.dg[b] - coarse.dg[b])});
        }
        responses[i] = fine;
      }
      if (scale > 0.0) radial_error /= scale;
    }
  }

  const OperatorSymbol base = dco_symbol(s.t, {0.0, 0.0, 0.0}, p);
  std::array<Matrix4c, 3> per_k;
  for (int j = 0; j < 3; ++j) {
    WaveVector e{};
    e[j] = 1.0;
    per_k[j] = dco_symbol(s.t, e, p).coeff_0;
  }
  const double weight = std::pow(dk / (2.0 * kPi), 3);
  const int side = 2 * n + 1;

  std::vector<PropagatorSample> out(xs.size());
  parallel_for(xs.size(), [&](std::size_t ix) {
    const Point& x = xs[ix];
    std::array<std::vector<Complex>, 3> phase;
    double sup = 0.0, dist_sq = 0.0;
    for (int d = 0; d < 3; ++d) {
      const double delta = x[d] - x0[d];
      sup = std::max(sup, std::abs(delta));
      dist_sq += delta * delta;
      phase[d].resize(side);
      for (int i = -n; i <= n; ++i) {
        const double arg = dk * i * delta;
        phase[d][i + n] = Complex(std::cos(arg), std::sin(arg));
      }
    }
    // Accumulate sum_k A_k e^{ik(x-x0)} {g, dg, k_j g} per block.
    std::array<Complex, 2> sum_g{}, sum_dg{};
    std::array<std::array<Complex, 2>, 3> sum_kg{};
    for (int i = -n; i <= n; ++i) {
      for (int j = -n; j <= n; ++j) {
        const Complex pij = phase[0][i + n] * phase[1][j + n];
        for (int l = -n; l <= n; ++l) {
          const int key = i * i + j * j + l * l;
          const Complex w = weight *
                            std::exp(-0.5 * sigma * sigma * dk * dk * key) *
                            pij * phase[2][l + n];
          if (at_start) {
            sum_g[0] += w;
            continue;
          }
          const ModeResponse& r = responses[key_index.at(key)];
          const std::array<double, 3> kv = {dk * i, dk * j, dk * l};
          for (int b = 0; b < 2; ++b) {
            sum_g[b] += w * r.g[b];
            sum_dg[b] += w * r.dg[b];
            for (int d = 0; d < 3; ++d) sum_kg[d][b] += w * kv[d] * r.g[b];
          }
        }
      }
    }
    PropagatorSample& sample = out[ix];
    sample.x = x;
    sample.t = s.t;
    sample.x0 = x0;
    sample.t0 = s.problem == Problem::Retarded ? s.t0 : p.epsilon();
    sample.mollifier_sigma = sigma;
    sample.sigma_eff = sigma_eff;
    sample.cone_distance = std::sqrt(dist_sq) - radius;
    if (at_start) {
      sample.value = Matrix4c::identity();
      sample.value *= sum_g[0];
    } else {
      for (int c = 0; c < 4; ++c) {
        const int b = c < 2 ? 0 : 1;
        for (int row = 0; row < 4; ++row) {
          Complex v = base.coeff_dt(row, c) * sum_dg[b];
          for (int d = 0; d < 3; ++d) v += per_k[d](row, c) * sum_kg[d][b];
          sample.value(row, c) = v;
        }
      }
    }
    sample.band_warning = spectral_warning;
    sample.radial_interpolation_error = radial_error;
    if (radial_error > kRadialWarn) {
      if (!sample.band_warning.empty()) sample.band_warning += "; ";
      sample.band_warning += "radial interpolation error estimate " +
                             std::to_string(radial_error);
    }
    if (sup + radius + 5.0 * sigma_eff >= options.band.period()) {
      if (!sample.band_warning.empty()) sample.band_warning += "; ";
      sample.band_warning += "periodic images within reach: 2 pi / dk = " +
                             std::to_string(options.band.period());
    }
  });
  if (options.strict_band) {
    for (const auto& sample : out) {
      if (!sample.band_warning.empty()) {
        throw Error(ErrorKind::BandLimit, "propagator: " + sample.band_warning);
      }
    }
  }
  return out;
}

}  // namespace

std::vector<PropagatorSample> sample_retarded_propagator(
    const std::vector<Point>& xs, double t, const Point& x0, double t0,
    const CosmologyParams& p, const PropagatorOptions& options) {
  if (!(t0 >= p.epsilon())) {
    throw Error(ErrorKind::Domain,
                "sample_retarded_propagator: need t0 >= epsilon");
  }
  if (!(t > t0)) {
    throw Error(ErrorKind::Ordering,
                "sample_retarded_propagator: need t > t0, got t = " +
                    std::to_string(t) + ", t0 = " + std::to_string(t0));
  }
  return sample_propagator(
      xs, {Problem::Retarded, t, t0, options.effective_time_sigma()}, x0, p,
      options);
}

PropagatorSample sample_retarded_propagator(const Point& x, double t,
                                            const Point& x0, double t0,
                                            const CosmologyParams& p,
                                            const PropagatorOptions& options) {
  return sample_retarded_propagator(std::vector<Point>{x}, t, x0, t0, p,
                                    options)
      .front();
}

std::vector<PropagatorSample> sample_cauchy_propagator(
    const std::vector<Point>& xs, double t, const Point& x0,
    const CosmologyParams& p, const PropagatorOptions& options) {
  if (!(t >= p.epsilon())) {
    throw Error(ErrorKind::Domain,
                "sample_cauchy_propagator: need t >= epsilon");
  }
  return sample_propagator(xs, {Problem::Cauchy, t, p.epsilon(), 0.0}, x0, p,
                           options);
}

PropagatorSample sample_cauchy_propagator(const Point& x, double t,
                                          const Point& x0,
                                          const CosmologyParams& p,
                                          const PropagatorOptions& options) {
  return sample_cauchy_propagator(std::vector<Point>{x}, t, x0, p, options)
      .front();
}

}  // namespace flrw
