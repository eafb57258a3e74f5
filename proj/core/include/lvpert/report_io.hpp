#pragma once

#include <filesystem>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "lvpert/diagnostics.hpp"

namespace lvpert {

/// printf("%.17g"): enough digits for an exact IEEE-754 double round trip.
std::string format_double(double v);

inline constexpr std::string_view kTimeSeriesHeader = "t,x_ref,y_ref,x_approx,y_approx,C_ref,C_approx";
inline constexpr std::string_view kPhaseHeader = "x_ref,y_ref,x_approx,y_approx";

/// One row per grid time. C columns are left empty where a coordinate is not
/// strictly positive.
void write_timeseries_csv(std::ostream& out, const ComparisonRun& run, const ModelParams& p);

/// Phase-plane coordinates, row-aligned by time index.
void write_phase_csv(std::ostream& out, const ComparisonRun& run);

/// Report as a JSON document (2-space indent, trailing newline).
std::string report_json(const DiagnosticsReport& report, std::string_view preset_name);

/// Self-contained 800x600 SVG of both phase curves, crossing point marked.
void write_phase_svg(std::ostream& out, const ComparisonRun& run, std::string_view title);

struct OutputFormats {
  bool csv = true;
  bool json = true;
  bool svg = false;
};

/// Writes <stem>_timeseries.csv, <stem>_phase.csv, <stem>_report.json and
/// <stem>_phase.svg (as selected) into dir, creating it if needed.
/// Returns the written paths. Throws IoError.
std::vector<std::filesystem::path> write_outputs(const std::filesystem::path& dir, std::string_view stem,
                                                 const OutputFormats& formats, const ComparisonRun& run,
                                                 const ModelParams& p, std::string_view preset_name);

}  // namespace lvpert
