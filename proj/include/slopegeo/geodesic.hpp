#pragma once

#include "slopegeo/surface.hpp"

#include <cstddef>
#include <vector>

namespace slopegeo {

enum class StepMethod { rk4_fixed, rk45_adaptive };

/// Which spray drives the run: the slope metric (arclength = F-arclength,
/// renormalisation keeps F = 1) or the induced Riemannian metric
/// (alpha-arclength, alpha = 1).
enum class GeodesicModel { slope, riemannian };

struct IntegratorOptions {
  StepMethod method = StepMethod::rk45_adaptive;
  double step = 1e-3;                    // fixed step / initial adaptive step
  double tol = 1e-10;                    // adaptive local-error tolerance
  std::size_t max_steps = 10'000'000;
  std::size_t renormalize_every = 100;   // 0 = off
  GeodesicModel model = GeodesicModel::slope;
  double drift_tol = 1e-7;               // flags stats.drift_exceeded only
};

struct GeodesicState {
  double u = 0.0, v = 0.0;
  double du = 0.0, dv = 0.0;  // du/ds, dv/ds
  double s = 0.0;             // arclength
};

enum class ExitReason { completed, domain_exit, step_failure };

struct TraceStats {
  std::size_t accepted = 0;
  std::size_t rejected = 0;
  double max_speed_drift = 0.0;           // max |F-1| (or |alpha-1|)
  double max_clairaut_drift = 0.0;        // max |nu_F(s) - nu_F(0)|
  double max_riem_clairaut_drift = 0.0;   // max |m^2 dv (s) - m^2 dv (0)|
  bool drift_exceeded = false;
};

struct GeodesicTrace {
  std::vector<GeodesicState> states;
  std::vector<double> clairaut;       // nu_F per state
  std::vector<double> clairaut_riem;  // m^2 dv/ds per state
  ExitReason exit_reason = ExitReason::completed;
  TraceStats stats;
};

/// Rescales y to unit slope-metric speed, y / F(p,y). Positive homogeneity
/// only: the direction is never reversed.
Vec2 unit_normalize(const Surface& surface, const Point2& p, const Vec2& y);

/// Conserved rotational momentum of the slope metric,
///   nu_F = rho m^2(u) dv/ds,   rho = alpha^2 (alpha-2beta)/(alpha-beta)^3.
/// On unit vectors this equals the momentum F dF/d(dv).
double clairaut_value(const SurfaceOfRevolution& surface, const GeodesicState& state);

/// Riemannian counterpart m^2(u) dv/ds.
double riemannian_clairaut_value(const SurfaceOfRevolution& surface,
                                 const GeodesicState& state);

/// Unit chart velocity at angle theta in the orthonormal frame {e1 downhill
/// meridian, e2 parallel}: (du,dv) proportional to (-cos t/sqrt(1+m'^2),
/// sin t/m), normalised to F = 1. theta = 0 points down the meridian,
/// theta = pi/2 along the parallel.
Vec2 angle_direction(const SurfaceOfRevolution& surface, double u, double theta);

/// Integrates the unit-speed geodesic ODE from init over the given
/// arclength. Every accepted step is recorded. Leaving the declared chart is
/// a non-fatal outcome: the partial trace is returned with
/// exit_reason = domain_exit.
GeodesicTrace integrate_geodesic(const SurfaceOfRevolution& surface,
                                 const GeodesicState& init, double length,
                                 const IntegratorOptions& options = {});

enum class ClairautBranch { du_positive, du_negative };

/// Reconstructs the unit velocity at height u with prescribed Clairaut
/// constant by bracketed root-finding over the frame angle (the quartic the
/// algebraic system reduces to is deliberately avoided). |nu_F| <= m(u) is
/// attainable; the boundary value returns the parallel-tangent vector.
Vec2 velocity_from_clairaut(const SurfaceOfRevolution& surface, double u, double nu_F,
                            ClairautBranch branch);

enum class TurningVerdict { pass, fail, not_applicable };

struct TurningPointReport {
  TurningVerdict verdict = TurningVerdict::not_applicable;
  double min_margin = 0.0;       // min over interior samples of m(u(s)) - m(u0)
  std::size_t worst_index = 0;
};

/// For traces started tangent to a parallel, verifies m(u(s)) > m(u(0)) - 1e-9
/// at every interior sample. Meridian or oblique starts are not applicable.
TurningPointReport turning_point_check(const SurfaceOfRevolution& surface,
                                       const GeodesicTrace& trace);

}  // namespace slopegeo
