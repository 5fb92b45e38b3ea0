#pragma once

#include "slopegeo/geodesic.hpp"
#include "slopegeo/limacon.hpp"
#include "slopegeo/measures.hpp"
#include "slopegeo/metric.hpp"

#include <ostream>
#include <string>
#include <vector>

namespace slopegeo {

/// 17 significant digits, '.' decimal point — round-trip exact for doubles,
/// so identical runs diff clean.
std::string format_double(double x);

const char* exit_reason_name(ExitReason reason);

/// CSV columns, in this exact order: s,u,v,du,dv,F,nu_F.
void write_trace_csv(std::ostream& out, const GeodesicTrace& trace);
void write_trace_json(std::ostream& out, const GeodesicTrace& trace);

void write_convexity_csv(std::ostream& out, const ConvexityReport& report);
void write_convexity_json(std::ostream& out, const ConvexityReport& report);

void write_area_csv(std::ostream& out, const AreaReport& report);
void write_area_json(std::ostream& out, const AreaReport& report);

struct IndicatrixSample {
  double theta = 0.0;
  double X = 0.0, Y = 0.0;
  double F = 0.0;  // okubo_norm at (X,Y); 1 on the curve
};

std::vector<IndicatrixSample> sample_indicatrix(const Limacon& lim, int count);

void write_indicatrix_csv(std::ostream& out, const std::vector<IndicatrixSample>& samples);
void write_indicatrix_json(std::ostream& out, const std::vector<IndicatrixSample>& samples);

struct VolumeCoefficientTable {
  std::vector<VolumeCoefficients> rows;
  bool f_decreasing = false;
  bool g_decreasing = false;
  bool h_increasing = false;
  bool monotone() const { return f_decreasing && g_decreasing && h_increasing; }
};

VolumeCoefficientTable volume_coefficient_table(const std::vector<double>& b_grid);

/// Columns b,f,g,h,f_quad,g_quad plus a monotonicity verdict footer row.
void write_volcoeff_csv(std::ostream& out, const VolumeCoefficientTable& table);
void write_volcoeff_json(std::ostream& out, const VolumeCoefficientTable& table);

}  // namespace slopegeo
