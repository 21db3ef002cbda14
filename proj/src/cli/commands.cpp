#include "flrw/cli/commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>

#include "flrw/dirac_solver.hpp"
#include "flrw/epd_solver.hpp"
#include "flrw/error.hpp"
#include "flrw/kernels.hpp"
#include "flrw/oracle.hpp"
#include "flrw/parallel.hpp"
#include "flrw/verify.hpp"
#include "json.hpp"

namespace flrw::cli {
namespace {

using Json = nlohmann::ordered_json;

std::vector<KeySpec> with_common(std::vector<KeySpec> keys) {
  std::vector<KeySpec> all = cosmology_keys();
  all.insert(all.end(), keys.begin(), keys.end());
  all.push_back({"output", "", "output path; standard output when empty"});
  return all;
}

class CsvWriter {
 public:
  explicit CsvWriter(std::ostream& out) : out_(out) {}
  void header(const std::vector<std::string>& names) {
    for (std::size_t i = 0; i < names.size(); ++i) out_ << (i ? "," : "") << names[i];
    out_ << '\n';
  }
  CsvWriter& operator<<(double x) { return field(format_number(x)); }
  CsvWriter& operator<<(Complex z) { return *this << z.real() << z.imag(); }
  CsvWriter& field(const std::string& s) {
    out_ << (first_ ? "" : ",") << s;
    first_ = false;
    return *this;
  }
  void end() {
    out_ << '\n';
    first_ = true;
  }

 private:
  std::ostream& out_;
  bool first_ = true;
};

void complex_columns(std::vector<std::string>& names, const std::string& base) {
  names.push_back(base + "_re");
  names.push_back(base + "_im");
}

QuadratureConfig quadrature(const RunConfig& c) {
  QuadratureConfig q;
  q.rel_tol = c.number("rel_tol");
  q.abs_tol = c.number("abs_tol");
  if (!(q.rel_tol > 0.0) || !(q.abs_tol > 0.0)) {
    throw Error(ErrorKind::Config, "tolerances rel_tol and abs_tol must be positive");
  }
  return q;
}

std::vector<double> require_list(const RunConfig& c, const std::string& key) {
  auto v = c.list(key);
  if (v.empty()) throw Error(ErrorKind::Config, "key '" + key + "' must not be empty");
  return v;
}

Spinor spinor(const RunConfig& c, const std::string& key) {
  const auto v = c.list(key);
  if (v.size() != 8) {
    throw Error(ErrorKind::Config, "key '" + key + "' needs 8 numbers (re, im per component)");
  }
  return {Complex(v[0], v[1]), Complex(v[2], v[3]), Complex(v[4], v[5]), Complex(v[6], v[7])};
}

const char* branch_name(KernelBranch b) {
  return b == KernelBranch::Regular ? "regular" : "near_diagonal";
}

// ---- kernel ---------------------------------------------------------------

int run_kernel(const RunConfig& c, std::ostream& out, std::ostream&) {
  const CosmologyParams p = c.cosmology();
  const std::string kind = c.text("kernel");
  const std::string variable = c.text("variable");
  if (kind != "E" && kind != "K1" && kind != "K0" && kind != "K0_fused") {
    throw Error(ErrorKind::Config, "key 'kernel' must be E, K1, K0 or K0_fused");
  }
  if (variable != "tau" && variable != "t") {
    throw Error(ErrorKind::Config, "key 'variable' must be tau or t");
  }
  const bool in_tau = variable == "tau";
  const long n = c.integer("r_points");
  if (n < 2) throw Error(ErrorKind::Config, "key 'r_points' must be at least 2");
  KernelOptions ko;
  ko.near_diagonal_switch = c.number("near_diagonal_switch");
  const double b = c.is_set("b") ? c.number("b") : (in_tau ? 0.0 : p.epsilon());
  const Complex m = p.reduced_mass();

  CsvWriter csv(out);
  csv.header({"r", in_tau ? "tau" : "t", "value_re", "value_im", "branch"});
  for (const double s : require_list(c, "times")) {
    double radius = 0.0;
    if (in_tau) {
      radius = kind == "E" ? s - b : s;
    } else {
      radius = phi(s, p) - phi(kind == "E" ? b : p.epsilon(), p);
    }
    for (long i = 0; i < n; ++i) {
      const double r = radius * static_cast<double>(i) / static_cast<double>(n - 1);
      KernelValue v;
      if (in_tau) {
        if (kind == "E") v = kernel_E_tau(r, s, b, m, ko);
        if (kind == "K1") v = kernel_K1_tau(r, s, m, ko);
        if (kind == "K0") v = kernel_K0_tau(r, s, m, ko);
        if (kind == "K0_fused") v = kernel_K0_fused_tau(r, s, m, ko);
      } else {
        if (kind == "E") v = kernel_E_t(r, s, b, p, ko);
        if (kind == "K1") v = kernel_K1_t(r, s, p, ko);
        if (kind == "K0") v = kernel_K0_t(r, s, p, ko);
        if (kind == "K0_fused") v = kernel_K0_fused_t(r, s, p, ko);
      }
      csv << r << s << v.value;
      csv.field(branch_name(v.branch)).end();
    }
  }
  return kExitOk;
}

// ---- epd ------------------------------------------------------------------

int run_epd(const RunConfig& c, std::ostream& out, std::ostream&) {
  const CosmologyParams p = c.cosmology();
  const std::string variable = c.text("variable");
  if (variable != "tau" && variable != "t") {
    throw Error(ErrorKind::Config, "key 'variable' must be tau or t");
  }
  const bool in_tau = variable == "tau";
  const ModeSymbol symbol{c.complex("lambda_re", "lambda_im")};
  const Complex amplitude = c.complex("source_re", "source_im");
  const double rate = c.number("source_rate");
  const double start = in_tau ? 0.0 : p.epsilon();
  ModeCauchyData data{c.complex("phi0_re", "phi0_im"), c.complex("phi1_re", "phi1_im"), {}};
  if (amplitude != 0.0) {
    data.source = [=](double s) { return amplitude * std::exp(-rate * (s - start)); };
  }
  EpdOptions eo;
  eo.quadrature = quadrature(c);
  auto times = require_list(c, "times");
  if (!std::is_sorted(times.begin(), times.end())) {
    throw Error(ErrorKind::Config, "key 'times' must be ascending");
  }
  std::vector<Complex> reference;
  const bool with_oracle = c.flag("oracle");
  if (with_oracle) {
    reference = in_tau ? oracle_epd_mode_tau(symbol, p.reduced_mass(), data, times)
                       : oracle_epd_mode_t(symbol, p, data, times);
  }
  CsvWriter csv(out);
  std::vector<std::string> names = {in_tau ? "tau" : "t"};
  complex_columns(names, "u");
  complex_columns(names, "oracle");
  names.push_back("abs_err");
  csv.header(names);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const Complex u = in_tau ? solve_epd_tau(symbol, p.reduced_mass(), data, times[i], eo)
                             : solve_epd_t(symbol, p, data, times[i], eo);
    csv << times[i] << u;
    if (with_oracle) {
      csv << reference[i] << std::abs(u - reference[i]);
    } else {
      csv.field("").field("").field("");
    }
    csv.end();
  }
  return kExitOk;
}

// ---- dirac ----------------------------------------------------------------

int run_dirac(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const CosmologyParams p = c.cosmology();
  const auto ks = c.triples("k");
  if (ks.empty()) throw Error(ErrorKind::Config, "key 'k' must list at least one wave vector");
  const Spinor amplitude = spinor(c, "amplitude");
  const Spinor source = spinor(c, "source");
  const double rate = c.number("source_rate");
  const double eps = p.epsilon();
  const bool sourced = max_abs(source) > 0.0;
  auto times = require_list(c, "times");
  if (!std::is_sorted(times.begin(), times.end()) || times.front() < eps) {
    throw Error(ErrorKind::Config, "key 'times' must be ascending and >= epsilon");
  }
  const auto points = c.triples("points");
  if (points.empty()) throw Error(ErrorKind::Config, "key 'points' must not be empty");

  DiracOptions opts;
  opts.epd.quadrature = quadrature(c);
  FourierField field;
  for (const auto& k : ks) {
    SpinorMode mode{k, amplitude, {}};
    if (sourced) {
      mode.source = [=](double t) { return Complex(std::exp(-rate * (t - eps))) * source; };
    }
    field.modes.push_back(mode);
  }
  const auto psi = solve_dirac_field(field, p, times, points, opts);

  // Per-mode residuals and oracle histories; combined per point below.
  const double step = 1e-3;
  std::vector<std::vector<Spinor>> residual(field.modes.size()), oracle(field.modes.size());
  std::vector<char> has_residual(times.size());
  for (std::size_t i = 0; i < times.size(); ++i) has_residual[i] = times[i] * (1 - step) > eps;
  parallel_for(field.modes.size(), [&](std::size_t j) {
    const SpinorMode& mode = field.modes[j];
    oracle[j] = oracle_dirac_mode(mode.k, mode.amplitude, mode.source, p, times);
    residual[j].resize(times.size());
    for (std::size_t i = 0; i < times.size(); ++i) {
      if (has_residual[i]) residual[j][i] = dirac_residual(mode, p, times[i], step, opts);
    }
  });

  CsvWriter csv(out);
  std::vector<std::string> names = {"t", "x", "y", "z"};
  for (int comp = 0; comp < 4; ++comp) complex_columns(names, "psi" + std::to_string(comp));
  names.push_back("residual");
  names.push_back("oracle_err");
  csv.header(names);
  double worst_residual = 0.0, worst_oracle = 0.0;
  for (std::size_t i = 0; i < times.size(); ++i) {
    for (std::size_t q = 0; q < points.size(); ++q) {
      const auto& x = points[q];
      Spinor res{}, ref{};
      for (std::size_t j = 0; j < field.modes.size(); ++j) {
        const auto& k = field.modes[j].k;
        const Complex phase = std::exp(Complex(0.0, k[0] * x[0] + k[1] * x[1] + k[2] * x[2]));
        ref = ref + phase * oracle[j][i];
        if (has_residual[i]) res = res + phase * residual[j][i];
      }
      const double oracle_err = max_abs(psi[i][q] - ref) / (1.0 + max_abs(ref));
      worst_oracle = std::max(worst_oracle, oracle_err);
      csv << times[i] << x[0] << x[1] << x[2];
      for (const Complex& z : psi[i][q]) csv << z;
      if (has_residual[i]) {
        worst_residual = std::max(worst_residual, max_abs(res));
        csv << max_abs(res);
      } else {
        csv.field("");
      }
      csv << oracle_err;
      csv.end();
    }
  }
  if (c.is_set("report")) {
    Json report;
    report["schema_version"] = kReportSchemaVersion;
    report["command"] = "dirac";
    report["modes"] = field.modes.size();
    report["max_residual"] = worst_residual;
    report["max_oracle_error"] = worst_oracle;
    std::FILE* f = std::fopen(c.text("report").c_str(), "w");
    if (!f) throw Error(ErrorKind::Config, "cannot write report '" + c.text("report") + "'");
    const std::string s = report.dump(2) + "\n";
    std::fputs(s.c_str(), f);
    std::fclose(f);
  }
  (void)err;
  return kExitOk;
}

// ---- propagator -----------------------------------------------------------

int run_propagator(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const CosmologyParams p = c.cosmology();
  const std::string kind = c.text("kind");
  if (kind != "retarded" && kind != "cauchy") {
    throw Error(ErrorKind::Config, "key 'kind' must be retarded or cauchy");
  }
  PropagatorOptions o;
  o.sigma = c.number("sigma");
  o.time_sigma = c.number("time_sigma");
  o.band = {c.number("k_max"), c.number("dk")};
  o.radial_nodes = static_cast<int>(c.integer("radial_nodes"));
  o.strict_band = c.flag("strict_band");
  o.dirac.epd.quadrature = quadrature(c);
  if (!(o.sigma > 0.0) || !(o.band.dk > 0.0) || !(o.band.k_max > 0.0) || o.radial_nodes < 0) {
    throw Error(ErrorKind::Config, "sigma, k_max, dk must be positive and radial_nodes >= 0");
  }
  const auto x0s = c.triples("x0");
  if (x0s.size() != 1) throw Error(ErrorKind::Config, "key 'x0' must be one x,y,z triple");
  const auto points = c.triples("points");
  if (points.empty()) throw Error(ErrorKind::Config, "key 'points' must not be empty");
  const double t = c.number("t");
  const auto samples = kind == "retarded"
                           ? sample_retarded_propagator(points, t, x0s[0], c.number("t0"), p, o)
                           : sample_cauchy_propagator(points, t, x0s[0], p, o);
  std::set<std::string> warned;
  for (const auto& s : samples) {
    if (!s.band_warning.empty() && warned.insert(s.band_warning).second) {
      err << "warning: " << s.band_warning << '\n';
    }
  }
  CsvWriter csv(out);
  std::vector<std::string> names = {"x", "y", "z", "t", "cone_distance", "sigma_eff",
                                    "radial_error"};
  for (int r = 0; r < 4; ++r) {
    for (int col = 0; col < 4; ++col) {
      complex_columns(names, "e" + std::to_string(r) + std::to_string(col));
    }
  }
  csv.header(names);
  for (const auto& s : samples) {
    csv << s.x[0] << s.x[1] << s.x[2] << s.t << s.cone_distance << s.sigma_eff
        << s.radial_interpolation_error;
    for (std::size_t r = 0; r < 4; ++r) {
      for (std::size_t col = 0; col < 4; ++col) csv << s.value(r, col);
    }
    csv.end();
  }
  return kExitOk;
}

// ---- verify ---------------------------------------------------------------

int run_verify(const RunConfig& c, std::ostream& out, std::ostream& err) {
  const auto suites = select_suites(c.text("suite"));
  VerifyOptions vo;
  const long seed = c.integer("seed");
  if (seed < 0) throw Error(ErrorKind::Config, "key 'seed' must be non-negative");
  vo.seed = static_cast<std::uint64_t>(seed);
  vo.quick = c.flag("quick");

  Json report;
  report["schema_version"] = kReportSchemaVersion;
  report["seed"] = vo.seed;
  report["quick"] = vo.quick;
  Json list = Json::array();
  bool all_pass = true;
  for (const std::string& name : suites) {
    const SuiteReport r = run_suite(name, vo);
    all_pass = all_pass && r.pass();
    Json cases = Json::array();
    for (const CaseResult& cr : r.cases) {
      cases.push_back({{"id", cr.id},
                       {"error", cr.error},
                       {"tolerance", cr.tolerance},
                       {"pass", cr.pass}});
      if (!cr.pass) err << "FAIL " << name << ' ' << cr.id << '\n';
    }
    list.push_back({{"name", r.name},
                    {"pass", r.pass()},
                    {"worst_ratio", r.worst_ratio()},
                    {"cases", cases}});
  }
  report["pass"] = all_pass;
  report["suites"] = list;
  out << report.dump(2) << '\n';
  return all_pass ? kExitOk : kExitVerificationFailed;
}

}  // namespace

std::string format_number(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::vector<std::string> select_suites(const std::string& selection) {
  static const std::map<std::string, std::vector<std::string>> aliases = {
      {"kernels", {"kernel_pde", "kernel_diagonal", "kernel_limits"}},
      {"algebra", {"composition", "condition13"}},
      {"epd", {"epd_oracle", "massless"}},
      {"dirac", {"dirac_oracle", "charge"}},
      {"propagator", {"cone_support"}},
  };
  std::set<std::string> chosen;
  std::string item;
  for (std::size_t pos = 0; pos <= selection.size(); ++pos) {
    if (pos < selection.size() && selection[pos] != ',') {
      if (selection[pos] != ' ') item += selection[pos];
      continue;
    }
    if (item.empty()) continue;
    const auto& names = suite_names();
    if (item == "all") {
      chosen.insert(names.begin(), names.end());
    } else if (const auto it = aliases.find(item); it != aliases.end()) {
      chosen.insert(it->second.begin(), it->second.end());
    } else if (std::find(names.begin(), names.end(), item) != names.end()) {
      chosen.insert(item);
    } else {
      throw Error(ErrorKind::Config, "unknown suite '" + item + "'");
    }
    item.clear();
  }
  if (chosen.empty()) throw Error(ErrorKind::Config, "empty suite selection");
  std::vector<std::string> ordered;
  for (const auto& n : suite_names()) {
    if (chosen.count(n)) ordered.push_back(n);
  }
  return ordered;
}

const std::vector<Command>& commands() {
  static const std::vector<KeySpec> tolerances = {{"rel_tol", "1e-10", "quadrature relative tolerance"},
                                                  {"abs_tol", "1e-14", "quadrature absolute tolerance"}};
  const auto plus = [](std::vector<KeySpec> a, const std::vector<KeySpec>& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
  };
  static const std::vector<Command> list = {
      {"kernel", "tabulate a kernel over r from 0 to the cone edge",
       with_common({{"kernel", "K1", "E, K1, K0 or K0_fused"},
                    {"variable", "tau", "tau or t"},
                    {"times", "1,2", "comma-separated tau or t values"},
                    {"b", "", "source time of E (tau, or t0 in t); default 0 / epsilon"},
                    {"r_points", "11", "samples from r = 0 to the cone edge"},
                    {"near_diagonal_switch", "1e-3", "K0 branch threshold"}}),
       run_kernel},
      {"epd", "solve one EPD mode by the kernel formula and by the ODE oracle",
       with_common(plus({{"variable", "t", "tau or t"},
                         {"lambda_re", "-1", "mode symbol, real part"},
                         {"lambda_im", "0", "mode symbol, imaginary part"},
                         {"phi0_re", "1", ""},
                         {"phi0_im", "0", ""},
                         {"phi1_re", "0", ""},
                         {"phi1_im", "0", ""},
                         {"source_re", "0", "source amplitude s in s exp(-rate (t - start))"},
                         {"source_im", "0", ""},
                         {"source_rate", "1", ""},
                         {"times", "1,2,4", "ascending"},
                         {"oracle", "true", "add oracle columns"}},
                        tolerances)),
       run_epd},
      {"dirac", "solve a Dirac field made of plane-wave modes",
       with_common(plus({{"k", "1,0,0", "wave vectors x,y,z separated by ';'"},
                         {"amplitude", "1,0,0,0,0,0,0,0", "spinor at epsilon (re, im pairs)"},
                         {"source", "0,0,0,0,0,0,0,0", "source spinor S in S exp(-rate (t - eps))"},
                         {"source_rate", "1", ""},
                         {"times", "1,2,3", "ascending, >= epsilon"},
                         {"points", "0,0,0", "sample points x,y,z separated by ';'"},
                         {"report", "", "optional JSON summary path"}},
                        {{"rel_tol", "1e-11", "quadrature relative tolerance"},
                         {"abs_tol", "1e-15", "quadrature absolute tolerance"}})),
       run_dirac},
      {"propagator", "sample the mollified retarded or Cauchy propagator",
       with_common({{"kind", "retarded", "retarded or cauchy"},
                    {"t", "2", ""},
                    {"t0", "1.2", "impulse time (retarded)"},
                    {"x0", "0,0,0", ""},
                    {"points", "0,0,0", "sample points x,y,z separated by ';'"},
                    {"sigma", "0.25", "spatial mollifier width"},
                    {"time_sigma", "-1", "time bump half-width; < 0 means sigma, 0 exact"},
                    {"k_max", "16", "lattice half-width"},
                    {"dk", "1", "lattice spacing"},
                    {"radial_nodes", "96", "|k| interpolation nodes; 0 solves every shell"},
                    {"strict_band", "false", "turn band warnings into errors"},
                    {"rel_tol", "1e-9", "quadrature relative tolerance"},
                    {"abs_tol", "1e-13", "quadrature absolute tolerance"}}),
       run_propagator},
      {"verify", "run verification suites and print a JSON report",
       {{"suite", "all", "suite names or aliases, comma-separated"},
        {"quick", "false", "smaller oracle and propagator grids"},
        {"seed", "20240611", "seed for randomized draws"},
        {"output", "", "output path; standard output when empty"}},
       run_verify},
  };
  return list;
}

}  // namespace flrw::cli
