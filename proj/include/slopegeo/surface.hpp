#pragma once

#include "slopegeo/types.hpp"

#include <functional>
#include <string>
#include <variant>

namespace slopegeo {

/// Surface of revolution (u,v) -> (m(u) cos v, m(u) sin v, u) with radius
/// profile m > 0 on an open u-interval. Analytic first and second profile
/// derivatives are supplied by the constructor site; geodesic right-hand
/// sides must be noise-free, so no internal finite differencing happens here.
struct SurfaceOfRevolution {
  std::function<double(double)> profile;     // m(u)
  std::function<double(double)> profile_d1;  // m'(u)
  std::function<double(double)> profile_d2;  // m''(u)
  Interval domain;                           // open (u_min, u_max)
  std::string name;
};

/// Height-field graph z = f(x,y) over a closed rectangle, with analytic
/// gradient.
struct GraphSurface {
  std::function<double(double, double)> height;  // f(x,y)
  std::function<Vec2(double, double)> grad;      // (f_x, f_y)
  Region domain;
  std::string name;
};

using Surface = std::variant<SurfaceOfRevolution, GraphSurface>;

const std::string& surface_name(const Surface& surface);

/// For revolution charts only the u-coordinate is constrained (v is 2pi
/// periodic); for graphs both coordinates must lie in the rectangle.
bool in_domain(const Surface& surface, const Point2& p);
void require_in_domain(const Surface& surface, const Point2& p);

/// Largest rectangle covered by the chart: u-domain x [0,2pi] for revolution
/// surfaces, the declared rectangle for graphs.
Region chart_bounds(const Surface& surface);

bool region_in_domain(const Surface& surface, const Region& region);

/// Induced Riemannian metric a_ij at p: diag(1+m'^2, m^2) on revolution
/// charts, [[1+fx^2, fx fy],[fx fy, 1+fy^2]] on graphs.
Mat2 riemannian_metric_at(const Surface& surface, const Point2& p);

/// Covector of the deformation 1-form: (1,0) on revolution charts, the
/// height gradient on graphs.
Vec2 one_form_at(const Surface& surface, const Point2& p);

const SurfaceOfRevolution& as_revolution(const Surface& surface);

}  // namespace slopegeo
