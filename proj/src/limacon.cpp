#include "slopegeo/limacon.hpp"

#include <cmath>

namespace slopegeo {

double okubo_norm(const Limacon& lim, double X, double Y) {
  if (X == 0.0 && Y == 0.0) {
    fail(ErrorCode::zero_vector, "okubo_norm at the origin");
  }
  if (!lim.strongly_convex()) {
    fail(ErrorCode::non_convex_limacon,
         "limacon with c = " + std::to_string(lim.c) + ", a = " + std::to_string(lim.a) +
             " is not strongly convex (needs c > 2a)");
  }
  const double r = std::hypot(X, Y);
  return (X * X + Y * Y) / (lim.c * r + lim.a * X);
}

std::pair<double, double> limacon_point(const Limacon& lim, double theta) {
  const double r = lim.c + lim.a * std::cos(theta);
  return {r * std::cos(theta), r * std::sin(theta)};
}

}  // namespace slopegeo
