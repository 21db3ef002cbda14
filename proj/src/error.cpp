#include "flrw/error.hpp"

namespace flrw {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::Domain: return "domain";
    case ErrorKind::GammaPole: return "gamma-pole";
    case ErrorKind::NonConvergence: return "non-convergence";
    case ErrorKind::DegenerateParameters: return "degenerate-parameters";
    case ErrorKind::ConeViolation: return "cone-violation";
    case ErrorKind::UnsupportedExponent: return "unsupported-exponent";
    case ErrorKind::Ordering: return "ordering";
    case ErrorKind::StepUnderflow: return "step-underflow";
    case ErrorKind::Config: return "config";
    case ErrorKind::BandLimit: return "band-limit";
  }
  return "unknown";
}

}  // namespace flrw
