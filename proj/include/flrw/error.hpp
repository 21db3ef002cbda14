#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace flrw {

enum class ErrorKind {
  Domain,             // argument outside the function's domain
  GammaPole,          // ln_gamma at a non-positive integer
  NonConvergence,     // series or quadrature budget exhausted
  DegenerateParameters,
  ConeViolation,      // kernel evaluated outside the light cone
  UnsupportedExponent,
  Ordering,           // retarded sample with t <= t0
  StepUnderflow,      // ODE oracle step size collapsed
  Config,
  BandLimit,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Single exception type for the library; `kind()` distinguishes the cause.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  [[nodiscard]] ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace flrw
