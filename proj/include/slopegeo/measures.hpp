#pragma once

#include "slopegeo/surface.hpp"

#include <utility>

namespace slopegeo {

/// Coefficients above 1/2 - this guard are rejected; the comparison
/// inequalities are strict on the open interval.
inline constexpr double kCoefficientGuard = 1e-12;

/// Direction density of the Holmes-Thompson coefficient (n = 2):
///   T(s) = (1 - 3s + 2b^2) / (1-s)^4,  |s| <= b < 1/2.
double ht_integrand(double s, double b);

struct VolumeCoefficients {
  double b = 0.0;
  double f = 1.0;       // Busemann-Hausdorff:  2/(2+b^2)
  double g = 1.0;       // Holmes-Thompson:     (2-3b^2)/(2(1-b^2)^{3/2})
  double h = 1.0;       // g/f = (2+b^2)(2-3b^2)/(4(1-b^2)^{3/2})
  double f_quad = 1.0;  // quadrature counterparts of f and g
  double g_quad = 1.0;
};

/// Closed forms only (f, g, h).
VolumeCoefficients volume_coefficients_closed(double b);

/// Quadrature of the defining direction integrals (adaptive, abs tol 1e-11):
///   f_quad = pi / int_0^pi (1 - b cos t)^2 dt,
///   g_quad = (1/pi) int_0^pi T(b cos t) dt.
std::pair<double, double> volume_coefficients_quadrature(double b);

/// Closed forms plus quadrature counterparts.
VolumeCoefficients volume_coefficients(double b);

enum class AreaMeasure { alpha, busemann_hausdorff, holmes_thompson };

/// Area of a chart rectangle under sigma(b) sqrt(det a) du dv with
/// sigma in {1, f(b), g(b)}. Revolution charts reduce to a 1-D u-integral
/// times the v-extent; graphs use iterated 2-D adaptive quadrature.
/// BH/HT require strong convexity on the region.
double area(const Surface& surface, const Region& region, AreaMeasure measure,
            double rel_tol = 1e-7);

struct AreaRatios {
  double bh_alpha = 0.0;
  double ht_alpha = 0.0;
  double ht_bh = 0.0;
};

struct AreaVerdicts {
  bool chain = false;        // BH < HT < alpha
  bool bh_alpha = false;     // BH/alpha in [8/9, 1]
  bool ht_alpha = false;     // HT/alpha in [5 sqrt3/9, 1]
  bool ht_bh = false;        // HT/BH in [1, 5 sqrt3/8]
  bool all() const { return chain && bh_alpha && ht_alpha && ht_bh; }
};

struct AreaReport {
  Region region;
  double area_alpha = 0.0;
  double area_bh = 0.0;
  double area_ht = 0.0;
  AreaRatios ratios;
  AreaVerdicts verdicts;
  double quad_error = 0.0;
  bool degenerate = false;  // zero chart measure: areas 0, ratios undefined
};

/// All three areas plus ratio verdicts, each checked with quadrature-error
/// slack. Degenerate regions report zero areas and vacuously true verdicts.
AreaReport area_compare(const Surface& surface, const Region& region,
                        double rel_tol = 1e-7);

}  // namespace slopegeo
