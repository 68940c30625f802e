#pragma once

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "qnoise/csv.hpp"
#include "qnoise/errors.hpp"

namespace qnoise {

/// Deterministic static SVG rendering: same CSV input, byte-identical file.
struct PlotSpec {
  enum class Kind { MeanBand, MetricsLog };
  Kind kind = Kind::MeanBand;
  std::string title;
  bool log_y = false;
};

namespace detail {

inline std::string fmt_coord(double v) {
  char buf[32];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return std::string(buf);
}

struct Axis {
  double lo = 0.0, hi = 1.0;
  bool log = false;

  double to_unit(double v) const {
    if (log) return (std::log10(v) - std::log10(lo)) / (std::log10(hi) - std::log10(lo));
    return (v - lo) / (hi - lo);
  }
};

inline void polyline(std::ostream& out, const std::vector<double>& xs,
                     const std::vector<double>& ys, const Axis& ax, const Axis& ay,
                     double w, double h, double mx, double my, const char* color,
                     const char* dash) {
  out << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\"";
  if (dash[0] != '\0') out << " stroke-dasharray=\"" << dash << "\"";
  out << " points=\"";
  for (std::size_t i = 0; i < xs.size(); ++i) {
    const double px = mx + ax.to_unit(xs[i]) * w;
    const double py = my + h - ay.to_unit(ys[i]) * h;
    out << fmt_coord(px) << ',' << fmt_coord(py) << ' ';
  }
  out << "\"/>\n";
}

}  // namespace detail

/// Renders a CSV into a static SVG. MeanBand expects columns t,mean,std
/// (extras ignored) and draws the mean with a +/- 1 std band; MetricsLog
/// expects the qubit metrics schema and draws the three mean series.
inline void emit_plot(const std::filesystem::path& csv_path, const PlotSpec& spec,
                      const std::filesystem::path& out_path) {
  const CsvTable table = read_csv(csv_path);
  if (table.rows.size() < 2)
    throw ConfigError("emit_plot: '" + csv_path.string() + "' has fewer than 2 data rows");

  auto require_columns = [&](const std::vector<std::string>& want) {
    if (table.columns.size() < want.size())
      throw ConfigError("emit_plot: '" + csv_path.string() + "' column mismatch");
    for (std::size_t i = 0; i < want.size(); ++i)
      if (table.columns[i] != want[i])
        throw ConfigError("emit_plot: '" + csv_path.string() + "' expected column '" +
                          want[i] + "', got '" + table.columns[i] + "'");
  };

  std::vector<double> xs(table.rows.size());
  for (std::size_t r = 0; r < table.rows.size(); ++r) xs[r] = table.rows[r][0];

  struct Series {
    std::vector<double> ys;
    const char* color;
    const char* dash;
    std::string label;
  };
  std::vector<Series> series;
  std::vector<double> band_lo, band_hi;

  if (spec.kind == PlotSpec::Kind::MeanBand) {
    require_columns({"t", "mean", "std"});
    Series mean_series{std::vector<double>(table.rows.size()), "#206090", "", "mean"};
    band_lo.resize(table.rows.size());
    band_hi.resize(table.rows.size());
    for (std::size_t r = 0; r < table.rows.size(); ++r) {
      mean_series.ys[r] = table.rows[r][1];
      band_lo[r] = table.rows[r][1] - table.rows[r][2];
      band_hi[r] = table.rows[r][1] + table.rows[r][2];
    }
    series.push_back(std::move(mean_series));
  } else {
    require_columns({"t", "fidelity_mean", "fidelity_std", "coherence_mean",
                     "coherence_std", "pe_mean", "pe_std"});
    auto pick = [&](std::size_t col, const char* color, const char* dash,
                    const char* label) {
      Series s{std::vector<double>(table.rows.size()), color, dash, label};
      for (std::size_t r = 0; r < table.rows.size(); ++r) s.ys[r] = table.rows[r][col];
      series.push_back(std::move(s));
    };
    pick(1, "#c03030", "", "fidelity");
    pick(3, "#309040", "6,3", "coherence");
    pick(5, "#b030b0", "2,3", "Pe");
  }

  detail::Axis ax{xs.front(), xs.back(), false};
  if (!(ax.hi > ax.lo)) throw ConfigError("emit_plot: degenerate time axis");

  double ylo = std::numeric_limits<double>::infinity();
  double yhi = -std::numeric_limits<double>::infinity();
  auto scan = [&](const std::vector<double>& ys) {
    for (double v : ys) {
      if (spec.log_y && !(v > 0.0)) continue;
      ylo = std::min(ylo, v);
      yhi = std::max(yhi, v);
    }
  };
  for (const Series& s : series) scan(s.ys);
  if (!band_lo.empty()) {
    scan(band_lo);
    scan(band_hi);
  }
  if (!(yhi > ylo)) {
    ylo -= 0.5;
    yhi += 0.5;
  }
  if (spec.log_y && !(ylo > 0.0))
    throw ConfigError("emit_plot: log axis requires positive data");
  detail::Axis ay{ylo, yhi, spec.log_y};

  const double width = 800, height = 500, ml = 70, mr = 20, mt = 40, mb = 50;
  const double pw = width - ml - mr, ph = height - mt - mb;

  std::ostringstream svg;
  svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << width << "\" height=\""
      << height << "\" viewBox=\"0 0 " << width << ' ' << height << "\">\n";
  svg << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  svg << "<text x=\"" << ml << "\" y=\"24\" font-family=\"sans-serif\" font-size=\"16\">"
      << spec.title << "</text>\n";

  if (!band_lo.empty()) {
    svg << "<polygon fill=\"#90b0d8\" fill-opacity=\"0.45\" stroke=\"none\" points=\"";
    for (std::size_t i = 0; i < xs.size(); ++i)
      svg << detail::fmt_coord(ml + ax.to_unit(xs[i]) * pw) << ','
          << detail::fmt_coord(mt + ph - ay.to_unit(std::clamp(band_hi[i], ylo, yhi)) * ph)
          << ' ';
    for (std::size_t i = xs.size(); i-- > 0;)
      svg << detail::fmt_coord(ml + ax.to_unit(xs[i]) * pw) << ','
          << detail::fmt_coord(mt + ph - ay.to_unit(std::clamp(band_lo[i], ylo, yhi)) * ph)
          << ' ';
    svg << "\"/>\n";
  }

  for (Series& s : series) {
    if (spec.log_y)
      for (double& v : s.ys) v = std::max(v, ylo);
    detail::polyline(svg, xs, s.ys, ax, ay, pw, ph, ml, mt, s.color, s.dash);
  }

  // frame + ticks
  svg << "<rect x=\"" << ml << "\" y=\"" << mt << "\" width=\"" << pw << "\" height=\""
      << ph << "\" fill=\"none\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    const double fx = static_cast<double>(i) / 4.0;
    const double xv = ax.lo + fx * (ax.hi - ax.lo);
    svg << "<text x=\"" << detail::fmt_coord(ml + fx * pw) << "\" y=\"" << height - 28
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"middle\">"
        << detail::fmt_coord(xv) << "</text>\n";
    const double yv = spec.log_y
                          ? std::pow(10.0, std::log10(ay.lo) + fx * (std::log10(ay.hi) -
                                                                     std::log10(ay.lo)))
                          : ay.lo + fx * (ay.hi - ay.lo);
    svg << "<text x=\"" << ml - 8 << "\" y=\"" << detail::fmt_coord(mt + ph - fx * ph + 4)
        << "\" font-family=\"sans-serif\" font-size=\"11\" text-anchor=\"end\">"
        << detail::fmt_coord(yv) << "</text>\n";
  }

  // legend
  double ly = mt + 16;
  for (const Series& s : series) {
    svg << "<text x=\"" << width - mr - 150 << "\" y=\"" << detail::fmt_coord(ly)
        << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"" << s.color << "\">"
        << s.label << "</text>\n";
    ly += 16;
  }
  svg << "</svg>\n";

  std::ofstream out(out_path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot open for writing: " + out_path.string());
  out << svg.str();
}

}  // namespace qnoise
