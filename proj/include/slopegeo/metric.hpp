#pragma once

#include "slopegeo/surface.hpp"

namespace slopegeo {

/// Directions with s = beta/alpha at or above 1/2 - kAdmissibilityTol are
/// rejected: rho -> 0 there and the fundamental tensor degenerates.
inline constexpr double kAdmissibilityTol = 1e-12;

/// phi(s) = 1/(1-s) and its derivatives, plus the coefficient triple of the
/// fundamental tensor. rho/rho0/rho1 use the s-closed forms
///   rho  = (2s-1)/(s-1)^3,  rho0 = 3/(s-1)^4,  rho1 = (1-4s)/(s-1)^4,
/// which lose less to cancellation near s -> 1/2 than the generic
/// phi-chain products (those stay available in tests as an oracle).
struct PhiChain {
  double phi, phi1, phi2;
  double rho, rho0, rho1;
};

PhiChain phi_quantities(double s);            // RangeError for s >= 1/2 - tol
PhiChain phi_quantities_unchecked(double s);  // any s != 1; degeneracy probes

/// (alpha, beta) of a tangent vector: alpha = sqrt(y^T a y), beta = <b, y>.
struct AlphaBeta {
  double alpha, beta;
};
AlphaBeta alpha_beta(const Surface& surface, const Point2& p, const Vec2& y);

/// alpha-norm of the 1-form: b = sqrt(a^{ij} b_i b_j) in [0,1).
double b_norm(const Surface& surface, const Point2& p);

/// Slope-metric norm F = alpha^2/(alpha-beta). Requires strong convexity at
/// p (b < 1/2), which makes alpha - beta > alpha/2 > 0.
double slope_norm(const Surface& surface, const Point2& p, const Vec2& y);

/// Fundamental tensor assembled from pointwise data, no admissibility gate:
///   g_ij = rho a_ij + rho0 b_i b_j + rho1 (b_i l_j + b_j l_i) - s rho1 l_i l_j
/// with l_i = a_ij y^j / alpha. Evaluable beyond s = 1/2 so degeneracy of the
/// indicatrix can be probed directly.
Mat2 fundamental_tensor(const Mat2& a, const Vec2& b_cov, const Vec2& y);

/// Checked fundamental tensor g_ij at (p, y); ConvexityViolation when the
/// direction is inadmissible.
Mat2 hessian(const Surface& surface, const Point2& p, const Vec2& y);

/// Every pointwise quantity of the metric at (p, y).
struct MetricSample {
  double alpha, beta;
  double s, b2;
  double phi, phi1, phi2;
  double rho, rho0, rho1;
  Mat2 g;
  double F;
};
MetricSample metric_sample(const Surface& surface, const Point2& p, const Vec2& y);

struct ConvexityReport {
  bool holds = false;
  double worst_b = 0.0;
  Point2 worst_point;
  double margin = 0.0;  // 1/2 - worst_b (negative when violated)
};

struct ConvexityOptions {
  int grid = 201;             // samples per axis
  double tol_margin = 1e-9;   // holds iff sup b < 1/2 - tol_margin
};

/// Grid scan of b over the region plus one golden-section refinement pass
/// around the worst sample.
ConvexityReport convexity_check(const Surface& surface, const Region& region,
                                const ConvexityOptions& options = {});
ConvexityReport convexity_check(const Surface& surface,
                                const ConvexityOptions& options = {});

}  // namespace slopegeo
