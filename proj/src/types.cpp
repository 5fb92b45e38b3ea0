#include "slopegeo/types.hpp"

namespace slopegeo {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::domain_error: return "DomainError";
    case ErrorCode::zero_vector: return "ZeroVector";
    case ErrorCode::convexity_violation: return "ConvexityViolation";
    case ErrorCode::range_error: return "RangeError";
    case ErrorCode::non_convex_limacon: return "NonConvexLimacon";
    case ErrorCode::degenerate_denominator: return "DegenerateDenominator";
    case ErrorCode::unattainable: return "Unattainable";
    case ErrorCode::ambiguous_branch: return "AmbiguousBranch";
    case ErrorCode::quadrature_failure: return "QuadratureFailure";
    case ErrorCode::config_error: return "ConfigError";
  }
  return "UnknownError";
}

}  // namespace slopegeo
