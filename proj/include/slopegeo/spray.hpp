#pragma once

#include "slopegeo/metric.hpp"
#include "slopegeo/surface.hpp"

namespace slopegeo {

/// Covariant derivative data of the 1-form on a revolution chart. The mixed
/// component and all skew parts vanish identically, and the r00 quadratic
/// form equals -2 G^1_alpha.
struct CovariantData {
  double b11 = 0.0;  // b_{1|1} = -m' m'' / (1+m'^2)
  double b22 = 0.0;  // b_{2|2} =  m  m' / (1+m'^2)
  double b12 = 0.0;  // identically zero
  bool s_vanishes = true;
  double r00(const Vec2& y) const { return b11 * y(0) * y(0) + b22 * y(1) * y(1); }
};

/// Correction scalars of the deformed spray at (p, y):
///   Q = 1/(1-2s),  Psi = alpha/((2b^2+1) alpha - 3 beta),
///   Theta = (alpha - 4 beta) Psi / (2 alpha).
struct SprayTerms {
  double Q = 0.0;
  double Theta = 0.0;
  double Psi = 0.0;
};

/// Spray coefficients of the induced Riemannian metric, with the factor-2
/// convention of the geodesic equations  u'' + 2 G^1 = 0:
///   2 G^1_a = (m'm''/(1+m'^2)) (y^1)^2 - (m m'/(1+m'^2)) (y^2)^2
///   2 G^2_a = 2 (m'/m) y^1 y^2.
Vec2 riemannian_spray(const SurfaceOfRevolution& surface, const Point2& p, const Vec2& y);

CovariantData covariant_data(const SurfaceOfRevolution& surface, const Point2& p);

/// Throws degenerate_denominator when (2b^2+1) alpha - 3 beta is not
/// positive (never happens on strongly convex profiles).
SprayTerms ab_correction_terms(const SurfaceOfRevolution& surface, const Point2& p,
                               const Vec2& y);

/// Slope-metric spray from the specialised closed forms:
///   G^1 = G^1_a (alpha-2beta)^2 / (alpha D)
///   G^2 = G^2_a - G^1_a (alpha-4beta) y^2 / (alpha D),   D = (2b^2+1) alpha - 3 beta.
Vec2 slope_spray_closed(const SurfaceOfRevolution& surface, const Point2& p, const Vec2& y);

/// Same coefficients assembled through the general deformation route
///   G^i = G^i_a + r00 [ Theta y^i / alpha + Psi b^i ]
/// (all skew terms vanish here). Serves as the independent cross-check of
/// slope_spray_closed.
Vec2 slope_spray_generic(const SurfaceOfRevolution& surface, const Point2& p, const Vec2& y);

}  // namespace slopegeo
