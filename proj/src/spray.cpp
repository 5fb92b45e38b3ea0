#include "slopegeo/spray.hpp"

#include <cmath>

namespace slopegeo {

namespace {

struct RevPoint {
  double m, m1, m2, W;  // profile, derivatives, W = 1 + m'^2
};

RevPoint rev_point(const SurfaceOfRevolution& surface, double u) {
  RevPoint r;
  r.m = surface.profile(u);
  r.m1 = surface.profile_d1(u);
  r.m2 = surface.profile_d2(u);
  r.W = 1.0 + r.m1 * r.m1;
  return r;
}

void require_u(const SurfaceOfRevolution& surface, double u) {
  if (!surface.domain.contains(u)) {
    fail(ErrorCode::domain_error,
         "u = " + std::to_string(u) + " outside the profile domain of '" +
             surface.name + "'");
  }
}

void require_direction(const Vec2& y) {
  if (y(0) == 0.0 && y(1) == 0.0) {
    fail(ErrorCode::zero_vector, "direction must be nonzero");
  }
}

struct SprayData {
  RevPoint rp;
  double alpha, beta, s, b2, D;  // D = (2b^2+1) alpha - 3 beta
  Vec2 Ga;                       // Riemannian spray
};

SprayData spray_data(const SurfaceOfRevolution& surface, const Point2& p, const Vec2& y) {
  require_u(surface, p.c1);
  require_direction(y);
  SprayData d;
  d.rp = rev_point(surface, p.c1);
  d.alpha = std::sqrt(d.rp.W * y(0) * y(0) + d.rp.m * d.rp.m * y(1) * y(1));
  d.beta = y(0);
  d.s = d.beta / d.alpha;
  d.b2 = 1.0 / d.rp.W;
  d.D = (2.0 * d.b2 + 1.0) * d.alpha - 3.0 * d.beta;
  d.Ga = Vec2{0.5 * (d.rp.m1 * d.rp.m2 * y(0) * y(0) -
                     d.rp.m * d.rp.m1 * y(1) * y(1)) /
                  d.rp.W,
              d.rp.m1 / d.rp.m * y(0) * y(1)};
  return d;
}

void require_admissible(const SprayData& d) {
  if (!(d.s < 0.5 - kAdmissibilityTol)) {
    fail(ErrorCode::convexity_violation,
         "direction with s = " + std::to_string(d.s) + " is inadmissible");
  }
  if (!(d.D > 1e-12 * d.alpha)) {
    fail(ErrorCode::degenerate_denominator,
         "(2b^2+1) alpha - 3 beta = " + std::to_string(d.D) + " is not positive");
  }
}

}  // namespace

Vec2 riemannian_spray(const SurfaceOfRevolution& surface, const Point2& p, const Vec2& y) {
  return spray_data(surface, p, y).Ga;
}

CovariantData covariant_data(const SurfaceOfRevolution& surface, const Point2& p) {
  require_u(surface, p.c1);
  const RevPoint r = rev_point(surface, p.c1);
  CovariantData data;
  data.b11 = -r.m1 * r.m2 / r.W;
  data.b22 = r.m * r.m1 / r.W;
  data.b12 = 0.0;
  data.s_vanishes = true;
  return data;
}

SprayTerms ab_correction_terms(const SurfaceOfRevolution& surface, const Point2& p,
                               const Vec2& y) {
  const SprayData d = spray_data(surface, p, y);
  require_admissible(d);
  SprayTerms t;
  t.Q = 1.0 / (1.0 - 2.0 * d.s);
  t.Psi = d.alpha / d.D;
  t.Theta = (d.alpha - 4.0 * d.beta) / (2.0 * d.D);
  return t;
}

Vec2 slope_spray_closed(const SurfaceOfRevolution& surface, const Point2& p, const Vec2& y) {
  const SprayData d = spray_data(surface, p, y);
  require_admissible(d);
  const double num = (d.alpha - 2.0 * d.beta) * (d.alpha - 2.0 * d.beta);
  const double G1 = d.Ga(0) * num / (d.alpha * d.D);
  // both contributions to G^2 carry a y^2 factor; keep meridians exact
  const double G2 = y(1) == 0.0
                        ? 0.0
                        : d.Ga(1) - d.Ga(0) * (d.alpha - 4.0 * d.beta) * y(1) /
                                        (d.alpha * d.D);
  return Vec2{G1, G2};
}

Vec2 slope_spray_generic(const SurfaceOfRevolution& surface, const Point2& p, const Vec2& y) {
  const SprayData d = spray_data(surface, p, y);
  require_admissible(d);
  const CovariantData cov = covariant_data(surface, p);
  const SprayTerms t = ab_correction_terms(surface, p, y);
  const double r00 = cov.r00(y);
  const Vec2 b_contra{1.0 / d.rp.W, 0.0};  // b^i = a^{ij} b_j
  Vec2 G = d.Ga;
  G(0) += r00 * (t.Theta * y(0) / d.alpha + t.Psi * b_contra(0));
  G(1) += r00 * (t.Theta * y(1) / d.alpha + t.Psi * b_contra(1));
  return G;
}

}  // namespace slopegeo
