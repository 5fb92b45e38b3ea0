#include "slopegeo/surface.hpp"

#include <cmath>
#include <numbers>

namespace slopegeo {

namespace {

template <class... Ts>
struct Overload : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

}  // namespace

const std::string& surface_name(const Surface& surface) {
  return std::visit([](const auto& s) -> const std::string& { return s.name; }, surface);
}

bool in_domain(const Surface& surface, const Point2& p) {
  return std::visit(
      Overload{
          [&](const SurfaceOfRevolution& s) { return s.domain.contains(p.c1); },
          [&](const GraphSurface& s) {
            return p.c1 >= s.domain.c1_lo && p.c1 <= s.domain.c1_hi &&
                   p.c2 >= s.domain.c2_lo && p.c2 <= s.domain.c2_hi;
          },
      },
      surface);
}

void require_in_domain(const Surface& surface, const Point2& p) {
  if (!in_domain(surface, p)) {
    fail(ErrorCode::domain_error,
         "point (" + std::to_string(p.c1) + ", " + std::to_string(p.c2) +
             ") outside the domain of surface '" + surface_name(surface) + "'");
  }
}

Region chart_bounds(const Surface& surface) {
  return std::visit(
      Overload{
          [](const SurfaceOfRevolution& s) {
            return Region{s.domain.lo, s.domain.hi, 0.0, 2.0 * std::numbers::pi};
          },
          [](const GraphSurface& s) { return s.domain; },
      },
      surface);
}

bool region_in_domain(const Surface& surface, const Region& region) {
  if (region.c1_lo > region.c1_hi || region.c2_lo > region.c2_hi) return false;
  // Regions live in the closure of the chart; the declared endpoints are
  // already inset from any singular profile point.
  return std::visit(
      Overload{
          [&](const SurfaceOfRevolution& s) {
            return region.c1_lo >= s.domain.lo && region.c1_hi <= s.domain.hi;
          },
          [&](const GraphSurface& s) {
            return region.c1_lo >= s.domain.c1_lo && region.c1_hi <= s.domain.c1_hi &&
                   region.c2_lo >= s.domain.c2_lo && region.c2_hi <= s.domain.c2_hi;
          },
      },
      surface);
}

Mat2 riemannian_metric_at(const Surface& surface, const Point2& p) {
  require_in_domain(surface, p);
  return std::visit(
      Overload{
          [&](const SurfaceOfRevolution& s) {
            const double m = s.profile(p.c1);
            const double m1 = s.profile_d1(p.c1);
            Mat2 a;
            a << 1.0 + m1 * m1, 0.0, 0.0, m * m;
            return a;
          },
          [&](const GraphSurface& s) {
            const Vec2 grad = s.grad(p.c1, p.c2);
            Mat2 a;
            a << 1.0 + grad(0) * grad(0), grad(0) * grad(1),
                 grad(0) * grad(1), 1.0 + grad(1) * grad(1);
            return a;
          },
      },
      surface);
}

Vec2 one_form_at(const Surface& surface, const Point2& p) {
  require_in_domain(surface, p);
  return std::visit(
      Overload{
          [&](const SurfaceOfRevolution&) { return Vec2{1.0, 0.0}; },
          [&](const GraphSurface& s) { return s.grad(p.c1, p.c2); },
      },
      surface);
}

const SurfaceOfRevolution& as_revolution(const Surface& surface) {
  const auto* rev = std::get_if<SurfaceOfRevolution>(&surface);
  if (rev == nullptr) {
    fail(ErrorCode::domain_error,
         "surface '" + surface_name(surface) + "' is not a surface of revolution");
  }
  return *rev;
}

}  // namespace slopegeo
