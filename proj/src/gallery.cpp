#include "slopegeo/gallery.hpp"

#include <cmath>

namespace slopegeo {

namespace {

// 1/(2 sqrt 6): common amplitude that puts the steepest examples exactly at
// the convexity budget |grad f|^2 < 1/3 with room to spare.
const double kAmp = 1.0 / (2.0 * std::sqrt(6.0));

double inv_sqrt6() { return 1.0 / std::sqrt(6.0); }

Region graph_domain(const DomainOverride& dom) {
  return Region{dom.c1_lo.value_or(-kDomainCap), dom.c1_hi.value_or(kDomainCap),
                dom.c2_lo.value_or(-kDomainCap), dom.c2_hi.value_or(kDomainCap)};
}

void check_rect(const Region& r, const std::string& family) {
  if (!(r.c1_lo < r.c1_hi) || !(r.c2_lo < r.c2_hi)) {
    fail(ErrorCode::config_error, "empty domain rectangle for family '" + family + "'");
  }
}

void check_interval(const Interval& iv, const std::string& family) {
  if (!(iv.lo < iv.hi)) {
    fail(ErrorCode::config_error, "empty u-interval for family '" + family + "'");
  }
}

double param(const std::map<std::string, double>& params, const std::string& key,
             double fallback) {
  auto it = params.find(key);
  return it == params.end() ? fallback : it->second;
}

// numerically stable w - log(e^w + 1); the naive form cancels to zero in
// doubles already for w ~ 40
double softplus_gap(double w) {
  return w > 0.0 ? -std::log1p(std::exp(-w)) : w - std::log1p(std::exp(w));
}

GraphSurface make_graph(std::string name, std::function<double(double, double)> f,
                        std::function<Vec2(double, double)> grad, Region domain) {
  return GraphSurface{std::move(f), std::move(grad), domain, std::move(name)};
}

}  // namespace

Surface make_surface(const std::string& family,
                     const std::map<std::string, double>& params,
                     const DomainOverride& domain) {
  for (const auto& [key, value] : params) {
    (void)value;
    if (family == "plane" && (key == "p" || key == "q" || key == "r")) continue;
    fail(ErrorCode::config_error,
         "unknown parameter '" + key + "' for family '" + family + "'");
  }

  if (family == "plane") {
    const double p = param(params, "p", 0.0);
    const double q = param(params, "q", 0.0);
    const double r = param(params, "r", 0.0);
    Region dom = graph_domain(domain);
    check_rect(dom, family);
    return make_graph(
        "plane", [=](double x, double y) { return p * x + q * y + r; },
        [=](double, double) { return Vec2{p, q}; }, dom);
  }
  if (family == "paraboloid") {
    Region dom = graph_domain(domain);
    check_rect(dom, family);
    return make_graph(
        "paraboloid", [](double x, double y) { return 100.0 - x * x - y * y; },
        [](double x, double y) { return Vec2{-2.0 * x, -2.0 * y}; }, dom);
  }
  if (family == "gaussian-bump") {
    Region dom = graph_domain(domain);
    check_rect(dom, family);
    return make_graph(
        "gaussian-bump",
        [](double x, double y) { return kAmp * std::exp(-(x * x + y * y)); },
        [](double x, double y) {
          const double e = kAmp * std::exp(-(x * x + y * y));
          return Vec2{-2.0 * x * e, -2.0 * y * e};
        },
        dom);
  }
  if (family == "ridge") {
    Region dom = graph_domain(domain);
    check_rect(dom, family);
    return make_graph(
        "ridge",
        [](double x, double y) {
          (void)y;
          return kAmp * std::exp(-(x + 2.0) * (x + 2.0));
        },
        [](double x, double) {
          const double e = kAmp * std::exp(-(x + 2.0) * (x + 2.0));
          return Vec2{-2.0 * (x + 2.0) * e, 0.0};
        },
        dom);
  }
  if (family == "arctan-slope") {
    Region dom = graph_domain(domain);
    check_rect(dom, family);
    return make_graph(
        "arctan-slope",
        [](double x, double y) { return kAmp * std::atan(x + y); },
        [](double x, double y) {
          const double w = x + y;
          const double d = kAmp / (1.0 + w * w);
          return Vec2{d, d};
        },
        dom);
  }
  if (family == "softplus-slope") {
    Region dom = graph_domain(domain);
    check_rect(dom, family);
    return make_graph(
        "softplus-slope",
        [](double x, double y) { return kAmp * softplus_gap(x + y); },
        [](double x, double y) {
          const double d = kAmp / (1.0 + std::exp(x + y));
          return Vec2{d, d};
        },
        dom);
  }
  if (family == "asinh-slope") {
    Region dom = graph_domain(domain);
    check_rect(dom, family);
    return make_graph(
        "asinh-slope",
        [](double x, double y) { return kAmp * std::asinh(x + y); },
        [](double x, double y) {
          const double w = x + y;
          const double d = kAmp / std::sqrt(1.0 + w * w);
          return Vec2{d, d};
        },
        dom);
  }
  if (family == "revolution-sqrt") {
    Interval dom{domain.c1_lo.value_or(inv_sqrt6() + kSingularMargin),
                 domain.c1_hi.value_or(kDomainCap)};
    check_interval(dom, family);
    if (dom.lo <= inv_sqrt6()) {
      fail(ErrorCode::domain_error,
           "revolution-sqrt domain must stay above the singular endpoint 1/sqrt(6)");
    }
    return SurfaceOfRevolution{
        [](double u) { return std::sqrt(6.0 * u * u - 1.0); },
        [](double u) { return 6.0 * u / std::sqrt(6.0 * u * u - 1.0); },
        [](double u) { return -6.0 / std::pow(6.0 * u * u - 1.0, 1.5); },
        dom, "revolution-sqrt"};
  }
  if (family == "revolution-log") {
    const double u_top = 1.0 / (2.0 * std::sqrt(6.0));
    Interval dom{domain.c1_lo.value_or(kSingularMargin),
                 domain.c1_hi.value_or(u_top - kSingularMargin)};
    check_interval(dom, family);
    if (dom.lo <= 0.0 || dom.hi >= u_top) {
      fail(ErrorCode::domain_error,
           "revolution-log domain must stay inside (0, 1/(2 sqrt 6))");
    }
    auto m = [](double u) { return 0.5 * std::sqrt(-2.0 * std::log(24.0 * u * u)); };
    return SurfaceOfRevolution{
        m,
        [m](double u) { return -1.0 / (2.0 * m(u) * u); },
        [m](double u) {
          const double mu = m(u);
          const double m1 = -1.0 / (2.0 * mu * u);
          return (m1 * u + mu) / (2.0 * mu * mu * u * u);
        },
        dom, "revolution-log"};
  }
  fail(ErrorCode::config_error, "unknown surface family '" + family + "'");
}

std::vector<Surface> gallery() {
  return {
      make_surface("plane"),          make_surface("paraboloid"),
      make_surface("gaussian-bump"),  make_surface("ridge"),
      make_surface("arctan-slope"),   make_surface("softplus-slope"),
      make_surface("asinh-slope"),    make_surface("revolution-sqrt"),
      make_surface("revolution-log"),
  };
}

Surface gallery_surface(const std::string& name) {
  for (auto& surface : gallery()) {
    if (surface_name(surface) == name) return surface;
  }
  fail(ErrorCode::config_error, "no gallery surface named '" + name + "'");
}

std::vector<std::string> gallery_revolution_names() {
  return {"revolution-sqrt", "revolution-log"};
}

std::vector<std::string> gallery_convex_graph_names() {
  return {"gaussian-bump", "ridge", "arctan-slope", "softplus-slope", "asinh-slope"};
}

}  // namespace slopegeo
