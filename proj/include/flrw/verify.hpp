#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace flrw {

/// One checked property. `error` is compared against `tolerance`; the
/// meaning of `error` (relative residual, relative oracle error, ...) is
/// fixed per suite and described in docs/formats.md.
struct CaseResult {
  std::string id;
  double error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

struct SuiteReport {
  std::string name;
  std::vector<CaseResult> cases;

  [[nodiscard]] bool pass() const;
  [[nodiscard]] double worst_ratio() const;  // max error / tolerance
};

struct VerifyOptions {
  std::uint64_t seed = 20240611;
  /// Smaller grids for the oracle and propagator suites.
  bool quick = false;
};

/// Names accepted by run_suite, in the default run order.
const std::vector<std::string>& suite_names();

/// Throws ErrorKind::Config for an unknown name.
SuiteReport run_suite(const std::string& name, const VerifyOptions& options = {});

// Individual suites.
SuiteReport verify_kernel_pde(const VerifyOptions& options = {});
SuiteReport verify_kernel_diagonal(const VerifyOptions& options = {});
SuiteReport verify_kernel_limits(const VerifyOptions& options = {});
SuiteReport verify_massless(const VerifyOptions& options = {});
SuiteReport verify_epd_oracle(const VerifyOptions& options = {});
SuiteReport verify_dirac_oracle(const VerifyOptions& options = {});
SuiteReport verify_charge(const VerifyOptions& options = {});
SuiteReport verify_composition_suite(const VerifyOptions& options = {});
SuiteReport verify_condition13_suite(const VerifyOptions& options = {});
SuiteReport verify_cone_support(const VerifyOptions& options = {});

/// Deterministic uniform draws in [0, 1) from a 64-bit seed (splitmix64), so
/// random verification grids are identical on every platform.
class UniformStream {
 public:
  explicit UniformStream(std::uint64_t seed) : state_(seed) {}
  double next();
  double next(double lo, double hi) { return lo + (hi - lo) * next(); }

 private:
  std::uint64_t state_;
};

}  // namespace flrw
