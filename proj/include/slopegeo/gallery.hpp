#pragma once

#include "slopegeo/surface.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace slopegeo {

/// Domain override for surface builders. For revolution families c1 is the
/// u-interval; for graphs c1/c2 are the x/y extents.
struct DomainOverride {
  std::optional<double> c1_lo, c1_hi, c2_lo, c2_hi;
};

/// Unbounded default charts are capped at |coordinate| <= 50 and singular
/// profile endpoints are inset by this margin.
inline constexpr double kDomainCap = 50.0;
inline constexpr double kSingularMargin = 1e-3;

/// Builds one of the named closed-form families:
///   plane            z = p x + q y + r            (params p, q, r)
///   paraboloid       z = 100 - x^2 - y^2
///   gaussian-bump    z = exp(-(x^2+y^2)) / (2 sqrt 6)
///   ridge            z = exp(-(x+2)^2) / (2 sqrt 6)
///   arctan-slope     z = arctan(x+y) / (2 sqrt 6)
///   softplus-slope   z = ((x+y) - log(e^{x+y}+1)) / (2 sqrt 6)
///   asinh-slope      z = asinh(x+y) / (2 sqrt 6)
///   revolution-sqrt  m(u) = sqrt(6u^2 - 1),           u in (1/sqrt6 + margin, 50)
///   revolution-log   m(u) = sqrt(-2 log(24 u^2)) / 2, u in (margin, 1/(2 sqrt 6) - margin)
/// Throws config_error for unknown families/params, domain_error for domain
/// overrides that reach a singular endpoint.
Surface make_surface(const std::string& family,
                     const std::map<std::string, double>& params = {},
                     const DomainOverride& domain = {});

/// All prebuilt surfaces with default parameters and domains.
std::vector<Surface> gallery();

/// Gallery lookup by name; throws config_error when absent.
Surface gallery_surface(const std::string& name);

/// Names of the gallery revolution surfaces (both profile families).
std::vector<std::string> gallery_revolution_names();

/// Names of the five globally convex graph examples (everything except the
/// plane and the paraboloid).
std::vector<std::string> gallery_convex_graph_names();

}  // namespace slopegeo
