#pragma once

#include "slopegeo/types.hpp"

#include <cstddef>
#include <functional>

namespace slopegeo {

struct QuadratureResult {
  double value = 0.0;
  double error_estimate = 0.0;
  std::size_t evaluations = 0;
};

/// Adaptive Gauss-Kronrod 7-15 with bisection. Accepts a panel when the
/// Kronrod error estimate meets the locally apportioned tolerance; throws
/// quadrature_failure when the subdivision budget is exhausted first.
/// Integrable endpoint singularities converge (slowly) through the depth
/// allowance.
QuadratureResult integrate_adaptive(const std::function<double(double)>& f,
                                    double a, double b, double abs_tol,
                                    double rel_tol = 0.0, int max_depth = 60,
                                    std::size_t max_evaluations = 20'000'000);

}  // namespace slopegeo
