#include "slopegeo/metric.hpp"

#include "slopegeo/detail/pointwise.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

namespace slopegeo {

namespace {

void require_direction(const Vec2& y) {
  if (y(0) == 0.0 && y(1) == 0.0) {
    fail(ErrorCode::zero_vector, "direction must be nonzero");
  }
}

PhiChain phi_chain_at(double s) {
  const double w = 1.0 - s;
  PhiChain c;
  c.phi = 1.0 / w;
  c.phi1 = 1.0 / (w * w);
  c.phi2 = 2.0 / (w * w * w);
  c.rho = (2.0 * s - 1.0) / ((s - 1.0) * (s - 1.0) * (s - 1.0));
  const double w4 = (s - 1.0) * (s - 1.0) * (s - 1.0) * (s - 1.0);
  c.rho0 = 3.0 / w4;
  c.rho1 = (1.0 - 4.0 * s) / w4;
  return c;
}

struct Pointwise {
  Mat2 a;
  Vec2 b_cov;
  double alpha, beta, s, b2;
};

Pointwise pointwise(const Surface& surface, const Point2& p, const Vec2& y) {
  require_in_domain(surface, p);
  require_direction(y);
  Pointwise pw;
  pw.a = detail::metric_raw(surface, p.c1, p.c2);
  pw.b_cov = detail::one_form_raw(surface, p.c1, p.c2);
  pw.alpha = std::sqrt(y.dot(pw.a * y));
  pw.beta = pw.b_cov.dot(y);
  pw.s = pw.beta / pw.alpha;
  pw.b2 = detail::b2_raw(surface, p.c1, p.c2);
  return pw;
}

}  // namespace

PhiChain phi_quantities_unchecked(double s) { return phi_chain_at(s); }

PhiChain phi_quantities(double s) {
  if (!(s < 0.5 - kAdmissibilityTol)) {
    fail(ErrorCode::range_error,
         "s = " + std::to_string(s) + " is outside the admissible range s < 1/2");
  }
  return phi_chain_at(s);
}

AlphaBeta alpha_beta(const Surface& surface, const Point2& p, const Vec2& y) {
  const Pointwise pw = pointwise(surface, p, y);
  return AlphaBeta{pw.alpha, pw.beta};
}

double b_norm(const Surface& surface, const Point2& p) {
  require_in_domain(surface, p);
  return std::sqrt(detail::b2_raw(surface, p.c1, p.c2));
}

double slope_norm(const Surface& surface, const Point2& p, const Vec2& y) {
  const Pointwise pw = pointwise(surface, p, y);
  const double b = std::sqrt(pw.b2);
  if (!(b < 0.5)) {
    fail(ErrorCode::convexity_violation,
         "b = " + std::to_string(b) + " >= 1/2 at (" + std::to_string(p.c1) + ", " +
             std::to_string(p.c2) + ")");
  }
  return pw.alpha * pw.alpha / (pw.alpha - pw.beta);
}

Mat2 fundamental_tensor(const Mat2& a, const Vec2& b_cov, const Vec2& y) {
  const double alpha = std::sqrt(y.dot(a * y));
  const double s = b_cov.dot(y) / alpha;
  const PhiChain c = phi_chain_at(s);
  const Vec2 l = (a * y) / alpha;  // l_i = d alpha / d y^i
  Mat2 g = c.rho * a;
  g += c.rho0 * (b_cov * b_cov.transpose());
  g += c.rho1 * (b_cov * l.transpose() + l * b_cov.transpose());
  g -= s * c.rho1 * (l * l.transpose());
  return g;
}

Mat2 hessian(const Surface& surface, const Point2& p, const Vec2& y) {
  const Pointwise pw = pointwise(surface, p, y);
  if (!(pw.s < 0.5 - kAdmissibilityTol)) {
    fail(ErrorCode::convexity_violation,
         "direction with s = " + std::to_string(pw.s) + " is inadmissible");
  }
  return fundamental_tensor(pw.a, pw.b_cov, y);
}

MetricSample metric_sample(const Surface& surface, const Point2& p, const Vec2& y) {
  const Pointwise pw = pointwise(surface, p, y);
  if (!(pw.s < 0.5 - kAdmissibilityTol)) {
    fail(ErrorCode::convexity_violation,
         "direction with s = " + std::to_string(pw.s) + " is inadmissible");
  }
  MetricSample out;
  out.alpha = pw.alpha;
  out.beta = pw.beta;
  out.s = pw.s;
  out.b2 = pw.b2;
  const PhiChain c = phi_chain_at(pw.s);
  out.phi = c.phi;
  out.phi1 = c.phi1;
  out.phi2 = c.phi2;
  out.rho = c.rho;
  out.rho0 = c.rho0;
  out.rho1 = c.rho1;
  out.g = fundamental_tensor(pw.a, pw.b_cov, y);
  out.F = pw.alpha * c.phi;
  return out;
}

namespace {

// b along one chart axis, the other coordinate frozen
double golden_max(const std::function<double(double)>& f, double lo, double hi,
                  double& arg) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = lo, b = hi;
  double x1 = b - inv_phi * (b - a);
  double x2 = a + inv_phi * (b - a);
  double f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 80 && b - a > 1e-14 * (1.0 + std::abs(a) + std::abs(b)); ++it) {
    if (f1 < f2) {
      a = x1;
      x1 = x2;
      f1 = f2;
      x2 = a + inv_phi * (b - a);
      f2 = f(x2);
    } else {
      b = x2;
      x2 = x1;
      f2 = f1;
      x1 = b - inv_phi * (b - a);
      f1 = f(x1);
    }
  }
  arg = 0.5 * (a + b);
  return f(arg);
}

}  // namespace

ConvexityReport convexity_check(const Surface& surface, const Region& region,
                                const ConvexityOptions& options) {
  if (!region_in_domain(surface, region)) {
    fail(ErrorCode::domain_error, "region outside the domain of surface '" +
                                      surface_name(surface) + "'");
  }
  const int n = std::max(2, options.grid);
  auto b_at = [&](double c1, double c2) {
    return std::sqrt(detail::b2_raw(surface, c1, c2));
  };

  ConvexityReport report;
  report.worst_b = -1.0;

  const bool revolution = std::holds_alternative<SurfaceOfRevolution>(surface);
  const double mid2 = 0.5 * (region.c2_lo + region.c2_hi);
  // On revolution charts b depends on u only; collapse the second axis.
  const int n2 = revolution ? 1 : n;

  int worst_i = 0, worst_j = 0;
  for (int i = 0; i < n; ++i) {
    const double c1 =
        region.c1_lo + (region.c1_hi - region.c1_lo) * i / double(n - 1);
    for (int j = 0; j < n2; ++j) {
      const double c2 =
          revolution
              ? mid2
              : region.c2_lo + (region.c2_hi - region.c2_lo) * j / double(n2 - 1);
      const double b = b_at(c1, c2);
      if (b > report.worst_b) {
        report.worst_b = b;
        report.worst_point = Point2{c1, c2};
        worst_i = i;
        worst_j = j;
      }
    }
  }

  // One refinement pass: golden-section over the cells bracketing the worst
  // sample, coordinate-wise on graphs.
  const double h1 = (region.c1_hi - region.c1_lo) / double(n - 1);
  double lo1 = std::max(region.c1_lo, region.c1_lo + (worst_i - 1) * h1);
  double hi1 = std::min(region.c1_hi, region.c1_lo + (worst_i + 1) * h1);
  double c1 = report.worst_point.c1, c2 = report.worst_point.c2;
  if (revolution) {
    if (hi1 > lo1) {
      double arg = c1;
      const double b = golden_max([&](double u) { return b_at(u, mid2); }, lo1, hi1, arg);
      if (b > report.worst_b) {
        report.worst_b = b;
        report.worst_point = Point2{arg, mid2};
      }
    }
  } else {
    const double h2 = (region.c2_hi - region.c2_lo) / double(n - 1);
    double lo2 = std::max(region.c2_lo, region.c2_lo + (worst_j - 1) * h2);
    double hi2 = std::min(region.c2_hi, region.c2_lo + (worst_j + 1) * h2);
    for (int sweep = 0; sweep < 6; ++sweep) {
      if (hi1 > lo1) {
        double arg = c1;
        golden_max([&](double x) { return b_at(x, c2); }, lo1, hi1, arg);
        c1 = arg;
      }
      if (hi2 > lo2) {
        double arg = c2;
        golden_max([&](double y) { return b_at(c1, y); }, lo2, hi2, arg);
        c2 = arg;
      }
    }
    const double b = b_at(c1, c2);
    if (b > report.worst_b) {
      report.worst_b = b;
      report.worst_point = Point2{c1, c2};
    }
  }

  report.margin = 0.5 - report.worst_b;
  report.holds = report.worst_b < 0.5 - options.tol_margin;
  return report;
}

ConvexityReport convexity_check(const Surface& surface, const ConvexityOptions& options) {
  return convexity_check(surface, chart_bounds(surface), options);
}

}  // namespace slopegeo
