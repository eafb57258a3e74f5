#include "lvpert/report_io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <limits>
#include <ostream>

#include <json.hpp>

#include "lvpert/errors.hpp"

namespace lvpert {
namespace {

std::string conserved_or_empty(const ModelParams& p, double x, double y) {
  if (x <= 0.0 || y <= 0.0) return {};
  return format_double(conserved_quantity(p, {x, y}));
}

std::string fixed3(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  return buf;
}

struct Viewport {
  static constexpr double kWidth = 800.0;
  static constexpr double kHeight = 600.0;
  static constexpr double kMargin = 0.05;

  double x_min = std::numeric_limits<double>::infinity();
  double x_max = -std::numeric_limits<double>::infinity();
  double y_min = std::numeric_limits<double>::infinity();
  double y_max = -std::numeric_limits<double>::infinity();

  void include(double x, double y) {
    x_min = std::min(x_min, x);
    x_max = std::max(x_max, x);
    y_min = std::min(y_min, y);
    y_max = std::max(y_max, y);
  }

  /// Grows each axis range by `fraction` of its extent on both sides.
  void widen(double fraction) {
    const double dx = (x_max - x_min) * fraction;
    const double dy = (y_max - y_min) * fraction;
    x_min -= dx;
    x_max += dx;
    y_min -= dy;
    y_max += dy;
  }

  void pad_degenerate() {
    if (x_max <= x_min) {
      x_min -= 0.5;
      x_max += 0.5;
    }
    if (y_max <= y_min) {
      y_min -= 0.5;
      y_max += 0.5;
    }
  }

  double px(double x) const {
    const double lo = kMargin * kWidth;
    return lo + (x - x_min) / (x_max - x_min) * (kWidth - 2.0 * lo);
  }
  double py(double y) const {
    const double lo = kMargin * kHeight;
    return kHeight - lo - (y - y_min) / (y_max - y_min) * (kHeight - 2.0 * lo);
  }
};

void polyline(std::ostream& out, const Trajectory& traj, const Viewport& vp, std::string_view style) {
  out << "  <polyline fill=\"none\" " << style << " points=\"";
  bool first = true;
  for (const Sample& s : traj) {
    if (!first) out << ' ';
    first = false;
    out << fixed3(vp.px(s.x)) << ',' << fixed3(vp.py(s.y));
  }
  out << "\"/>\n";
}

std::string escape_xml(std::string_view text) {
  std::string out;
  for (const char c : text) {
    switch (c) {
      case '<':
        out += "&lt;";
        break;
      case '>':
        out += "&gt;";
        break;
      case '&':
        out += "&amp;";
        break;
      default:
        out += c;
    }
  }
  return out;
}

}  // namespace

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void write_timeseries_csv(std::ostream& out, const ComparisonRun& run, const ModelParams& p) {
  out << kTimeSeriesHeader << '\n';
  for (std::size_t k = 0; k < run.reference.size(); ++k) {
    const Sample& r = run.reference[k];
    const Sample& a = run.approx[k];
    out << format_double(r.t) << ',' << format_double(r.x) << ',' << format_double(r.y) << ','
        << format_double(a.x) << ',' << format_double(a.y) << ',' << conserved_or_empty(p, r.x, r.y) << ','
        << conserved_or_empty(p, a.x, a.y) << '\n';
  }
}

void write_phase_csv(std::ostream& out, const ComparisonRun& run) {
  out << kPhaseHeader << '\n';
  for (std::size_t k = 0; k < run.reference.size(); ++k) {
    const Sample& r = run.reference[k];
    const Sample& a = run.approx[k];
    out << format_double(r.x) << ',' << format_double(r.y) << ',' << format_double(a.x) << ','
        << format_double(a.y) << '\n';
  }
}

std::string report_json(const DiagnosticsReport& report, std::string_view preset_name) {
  using nlohmann::ordered_json;
  ordered_json j;
  j["preset"] = std::string(preset_name);
  j["method"] = std::string(to_string(report.method));
  j["order"] = report.order;
  j["t_end"] = report.t_end;
  j["divergence_time"] = report.divergence_time ? ordered_json(*report.divergence_time) : ordered_json(nullptr);
  j["max_invariant_drift_ref"] = report.max_invariant_drift_ref;
  j["max_invariant_drift_approx"] = report.max_invariant_drift;
  if (report.self_intersection) {
    const SelfIntersection& si = *report.self_intersection;
    j["self_intersection"] = ordered_json{{"i", si.i}, {"j", si.j}, {"x", si.x}, {"y", si.y}};
  } else {
    j["self_intersection"] = nullptr;
  }
  j["closed_orbit_ref"] = report.closed_orbit_ref;
  j["closed_orbit_approx"] = report.closed_orbit;
  j["period_estimate"] = report.period_estimate ? ordered_json(*report.period_estimate) : ordered_json(nullptr);
  return j.dump(2) + "\n";
}

void write_phase_svg(std::ostream& out, const ComparisonRun& run, std::string_view title) {
  // Axes frame the reference orbit; the approximant is clipped to the plot area.
  Viewport vp;
  for (const Sample& s : run.reference) vp.include(s.x, s.y);
  if (run.report.self_intersection) vp.include(run.report.self_intersection->x, run.report.self_intersection->y);
  vp.pad_degenerate();
  vp.widen(0.5);

  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"800\" height=\"600\" viewBox=\"0 0 800 600\">\n";
  out << "  <title>" << escape_xml(title) << "</title>\n";
  out << "  <rect x=\"0\" y=\"0\" width=\"800\" height=\"600\" fill=\"white\"/>\n";
  out << "  <defs><clipPath id=\"plot\"><rect x=\"40\" y=\"30\" width=\"720\" height=\"540\"/></clipPath></defs>\n";
  out << "  <rect x=\"40\" y=\"30\" width=\"720\" height=\"540\" fill=\"none\" stroke=\"#999999\"/>\n";
  polyline(out, run.reference, vp, "stroke=\"black\" stroke-width=\"1.5\" class=\"reference\"");
  polyline(out, run.approx, vp,
           "stroke=\"#c0392b\" stroke-width=\"1.5\" stroke-dasharray=\"6,4\" clip-path=\"url(#plot)\" class=\"approx\"");
  if (run.report.self_intersection) {
    const SelfIntersection& si = *run.report.self_intersection;
    out << "  <circle class=\"crossing\" cx=\"" << fixed3(vp.px(si.x)) << "\" cy=\"" << fixed3(vp.py(si.y))
        << "\" r=\"5\" fill=\"none\" stroke=\"#2471a3\" stroke-width=\"2\"/>\n";
  }
  out << "  <text x=\"40\" y=\"20\" font-family=\"sans-serif\" font-size=\"12\">x: [" << fixed3(vp.x_min) << ", "
      << fixed3(vp.x_max) << "]  y: [" << fixed3(vp.y_min) << ", " << fixed3(vp.y_max) << "]</text>\n";
  out << "</svg>\n";
}

std::vector<std::filesystem::path> write_outputs(const std::filesystem::path& dir, std::string_view stem,
                                                 const OutputFormats& formats, const ComparisonRun& run,
                                                 const ModelParams& p, std::string_view preset_name) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec || !std::filesystem::is_directory(dir)) {
    throw IoError("cannot create output directory '" + dir.string() + "'");
  }

  std::vector<std::filesystem::path> written;
  const auto emit = [&](std::string_view suffix, auto&& writer) {
    const std::filesystem::path path = dir / (std::string(stem) + std::string(suffix));
    std::ofstream file(path, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot open '" + path.string() + "' for writing");
    writer(file);
    file.flush();
    if (!file) throw IoError("failed writing '" + path.string() + "'");
    written.push_back(path);
  };

  if (formats.csv) {
    emit("_timeseries.csv", [&](std::ostream& o) { write_timeseries_csv(o, run, p); });
    emit("_phase.csv", [&](std::ostream& o) { write_phase_csv(o, run); });
  }
  if (formats.json) {
    emit("_report.json", [&](std::ostream& o) { o << report_json(run.report, preset_name); });
  }
  if (formats.svg) {
    const std::string title = std::string(preset_name) + " " + std::string(to_string(run.report.method)) +
                              " order " + std::to_string(run.report.order);
    emit("_phase.svg", [&](std::ostream& o) { write_phase_svg(o, run, title); });
  }
  return written;
}

}  // namespace lvpert
