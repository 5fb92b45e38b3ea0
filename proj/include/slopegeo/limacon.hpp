#pragma once

#include "slopegeo/types.hpp"

#include <utility>

namespace slopegeo {

/// Unit-time destination curve r = c + a cos(theta) in a tangent plane.
/// c is the ground speed, a the downhill gravity component; the curve is
/// strongly convex iff c > 2a.
struct Limacon {
  double c = 1.0;
  double a = 0.0;
  bool strongly_convex() const { return c > 2.0 * a; }
};

/// Minkowski norm recovered from the limacon indicatrix:
///   F(X,Y) = (X^2+Y^2) / (c sqrt(X^2+Y^2) + a X).
/// X is measured along the steepest downhill axis. F = 1 exactly on the
/// limacon. Throws non_convex_limacon when c <= 2a, zero_vector at the origin.
double okubo_norm(const Limacon& lim, double X, double Y);

/// Point of the limacon at polar angle theta.
std::pair<double, double> limacon_point(const Limacon& lim, double theta);

}  // namespace slopegeo
