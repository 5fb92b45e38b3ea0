#pragma once

// Ungated pointwise evaluators shared by the convexity scan, the area
// integrands, and the geodesic right-hand side. These skip the public
// domain gates: callers stay within the closure of the declared chart,
// where every gallery profile is still evaluable.

#include "slopegeo/surface.hpp"

#include <variant>

namespace slopegeo::detail {

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

inline Mat2 metric_raw(const Surface& surface, double c1, double c2) {
  return std::visit(
      Overload{
          [&](const SurfaceOfRevolution& s) {
            const double m = s.profile(c1);
            const double m1 = s.profile_d1(c1);
            Mat2 a;
            a << 1.0 + m1 * m1, 0.0, 0.0, m * m;
            return a;
          },
          [&](const GraphSurface& s) {
            const Vec2 g = s.grad(c1, c2);
            Mat2 a;
            a << 1.0 + g(0) * g(0), g(0) * g(1), g(0) * g(1), 1.0 + g(1) * g(1);
            return a;
          },
      },
      surface);
}

inline Vec2 one_form_raw(const Surface& surface, double c1, double c2) {
  return std::visit(
      Overload{
          [&](const SurfaceOfRevolution&) { return Vec2{1.0, 0.0}; },
          [&](const GraphSurface& s) { return s.grad(c1, c2); },
      },
      surface);
}

// b^2 = a^{ij} b_i b_j through the closed forms: |grad|^2/(1+|grad|^2) on
// graphs, 1/(1+m'^2) on revolution charts.
inline double b2_raw(const Surface& surface, double c1, double c2) {
  return std::visit(
      Overload{
          [&](const SurfaceOfRevolution& s) {
            const double m1 = s.profile_d1(c1);
            return 1.0 / (1.0 + m1 * m1);
          },
          [&](const GraphSurface& s) {
            const Vec2 g = s.grad(c1, c2);
            const double q = g.squaredNorm();
            return q / (1.0 + q);
          },
      },
      surface);
}

}  // namespace slopegeo::detail
