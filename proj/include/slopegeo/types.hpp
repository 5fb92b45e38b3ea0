#pragma once

#include <Eigen/Dense>

#include <stdexcept>
#include <string>

namespace slopegeo {

/// Tangent-vector components in the chart basis (u̇,v̇ on revolution charts,
/// ẋ,ẏ on graphs).
using Vec2 = Eigen::Vector2d;

/// 2x2 matrices (metric tensors, fundamental tensors).
using Mat2 = Eigen::Matrix2d;

/// Chart coordinates of a surface point. Kept distinct from Vec2 so that
/// positions and directions cannot be mixed up at call sites.
struct Point2 {
  double c1 = 0.0;
  double c2 = 0.0;
};

/// Open interval (lo, hi).
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
  bool contains(double x) const { return x > lo && x < hi; }
};

/// Closed axis-aligned rectangle in chart coordinates.
struct Region {
  double c1_lo = 0.0;
  double c1_hi = 0.0;
  double c2_lo = 0.0;
  double c2_hi = 0.0;
  double chart_measure() const { return (c1_hi - c1_lo) * (c2_hi - c2_lo); }
};

enum class ErrorCode {
  domain_error,
  zero_vector,
  convexity_violation,
  range_error,
  non_convex_limacon,
  degenerate_denominator,
  unattainable,
  ambiguous_branch,
  quadrature_failure,
  config_error,
};

const char* error_code_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& message) {
  throw Error(code, message);
}

}  // namespace slopegeo
