#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

namespace winfour {

struct PlotSeries {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

struct PlotAxes {
  bool log_x = false;
  bool log_y = false;
  std::string title;
  std::string x_label;
  std::string y_label;
};

/// Self-contained SVG line plot with axes, ticks and a legend. Pure
/// function of its arguments, so identical input renders byte-identical
/// output. Throws on empty input or non-positive values on a log axis.
std::string render_svg_lineplot(std::span<const PlotSeries> series,
                                const PlotAxes& axes);

/// render_svg_lineplot written to a file.
void emit_svg_lineplot(std::span<const PlotSeries> series,
                       const PlotAxes& axes, const std::string& path);

}  // namespace winfour
