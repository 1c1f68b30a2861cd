#include "winfour/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace winfour {

namespace {

constexpr double kWidth = 840.0;
constexpr double kHeight = 560.0;
constexpr double kLeft = 80.0;
constexpr double kRight = 810.0;
constexpr double kTop = 50.0;
constexpr double kBottom = 500.0;

const char* kPalette[] = {"#d95f02", "#1b9e77", "#7570b3",
                          "#e7298a", "#66a61e", "#1f78b4"};

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6g", v);
  return buf;
}

struct AxisScale {
  double lo = 0.0, hi = 1.0;
  bool log = false;

  double map(double v, double pix_lo, double pix_hi) const {
    const double a = log ? std::log10(v) : v;
    const double l = log ? std::log10(lo) : lo;
    const double h = log ? std::log10(hi) : hi;
    const double u = (h == l) ? 0.5 : (a - l) / (h - l);
    return pix_lo + u * (pix_hi - pix_lo);
  }

  std::vector<double> ticks() const {
    std::vector<double> out;
    if (log) {
      const int e0 = static_cast<int>(std::ceil(std::log10(lo) - 1e-9));
      const int e1 = static_cast<int>(std::floor(std::log10(hi) + 1e-9));
      const int stride = std::max(1, (e1 - e0) / 10 + ((e1 - e0) % 10 ? 1 : 0));
      for (int e = e0; e <= e1; e += stride) out.push_back(std::pow(10.0, e));
      if (out.empty()) out = {lo, hi};
      return out;
    }
    const double range = hi - lo;
    if (range <= 0.0) return {lo};
    const double raw = range / 6.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    if (raw / mag > 5.0) {
      step = 10.0 * mag;
    } else if (raw / mag > 2.0) {
      step = 5.0 * mag;
    } else if (raw / mag > 1.0) {
      step = 2.0 * mag;
    }
    for (double v = std::ceil(lo / step) * step; v <= hi + 0.5 * step;
         v += step) {
      out.push_back(std::abs(v) < 1e-12 * step ? 0.0 : v);
    }
    return out;
  }
};

}  // namespace

std::string render_svg_lineplot(std::span<const PlotSeries> series,
                                const PlotAxes& axes) {
  if (series.empty()) {
    throw std::invalid_argument("render_svg_lineplot: no series");
  }
  double x_lo = 0.0, x_hi = 0.0, y_lo = 0.0, y_hi = 0.0;
  bool first = true;
  for (const auto& s : series) {
    if (s.points.empty()) {
      throw std::invalid_argument("render_svg_lineplot: empty series '" +
                                  s.label + "'");
    }
    for (const auto& [x, y] : s.points) {
      if ((axes.log_x && x <= 0.0) || (axes.log_y && y <= 0.0)) {
        throw std::invalid_argument(
            "render_svg_lineplot: non-positive value on a log axis");
      }
      if (first) {
        x_lo = x_hi = x;
        y_lo = y_hi = y;
        first = false;
      } else {
        x_lo = std::min(x_lo, x);
        x_hi = std::max(x_hi, x);
        y_lo = std::min(y_lo, y);
        y_hi = std::max(y_hi, y);
      }
    }
  }
  if (x_lo == x_hi) {
    x_lo -= 0.5;
    x_hi += 0.5;
  }
  if (y_lo == y_hi) {
    y_lo = axes.log_y ? y_lo * 0.5 : y_lo - 0.5;
    y_hi = axes.log_y ? y_hi * 2.0 : y_hi + 0.5;
  }
  const AxisScale xs{x_lo, x_hi, axes.log_x};
  const AxisScale ys{y_lo, y_hi, axes.log_y};

  std::string svg;
  svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + fmt(kWidth) +
         "\" height=\"" + fmt(kHeight) + "\" viewBox=\"0 0 " + fmt(kWidth) +
         " " + fmt(kHeight) + "\">\n";
  svg += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  if (!axes.title.empty()) {
    svg += "<text x=\"" + fmt((kLeft + kRight) / 2.0) +
           "\" y=\"28\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"17\">" +
           axes.title + "</text>\n";
  }

  for (double v : xs.ticks()) {
    const double px = xs.map(v, kLeft, kRight);
    svg += "<line x1=\"" + fmt(px) + "\" y1=\"" + fmt(kTop) + "\" x2=\"" +
           fmt(px) + "\" y2=\"" + fmt(kBottom) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + fmt(px) + "\" y=\"" + fmt(kBottom + 20.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"12\">" +
           fmt(v) + "</text>\n";
  }
  for (double v : ys.ticks()) {
    const double py = ys.map(v, kBottom, kTop);
    svg += "<line x1=\"" + fmt(kLeft) + "\" y1=\"" + fmt(py) + "\" x2=\"" +
           fmt(kRight) + "\" y2=\"" + fmt(py) +
           "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
    svg += "<text x=\"" + fmt(kLeft - 8.0) + "\" y=\"" + fmt(py + 4.0) +
           "\" text-anchor=\"end\" font-family=\"sans-serif\" "
           "font-size=\"12\">" +
           fmt(v) + "</text>\n";
  }
  svg += "<rect x=\"" + fmt(kLeft) + "\" y=\"" + fmt(kTop) + "\" width=\"" +
         fmt(kRight - kLeft) + "\" height=\"" + fmt(kBottom - kTop) +
         "\" fill=\"none\" stroke=\"black\" stroke-width=\"1\"/>\n";
  if (!axes.x_label.empty()) {
    svg += "<text x=\"" + fmt((kLeft + kRight) / 2.0) + "\" y=\"" +
           fmt(kHeight - 12.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\">" +
           axes.x_label + "</text>\n";
  }
  if (!axes.y_label.empty()) {
    svg += "<text x=\"20\" y=\"" + fmt((kTop + kBottom) / 2.0) +
           "\" text-anchor=\"middle\" font-family=\"sans-serif\" "
           "font-size=\"14\" transform=\"rotate(-90 20 " +
           fmt((kTop + kBottom) / 2.0) + ")\">" + axes.y_label + "</text>\n";
  }

  for (std::size_t i = 0; i < series.size(); ++i) {
    const char* color = kPalette[i % (sizeof(kPalette) / sizeof(kPalette[0]))];
    svg += "<polyline fill=\"none\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"1.6\" points=\"";
    for (const auto& [x, y] : series[i].points) {
      svg += fmt(xs.map(x, kLeft, kRight)) + "," +
             fmt(ys.map(y, kBottom, kTop)) + " ";
    }
    svg += "\"/>\n";
    const double ly = kTop + 18.0 + 20.0 * static_cast<double>(i);
    svg += "<line x1=\"" + fmt(kRight - 150.0) + "\" y1=\"" + fmt(ly - 4.0) +
           "\" x2=\"" + fmt(kRight - 120.0) + "\" y2=\"" + fmt(ly - 4.0) +
           "\" stroke=\"";
    svg += color;
    svg += "\" stroke-width=\"2\"/>\n";
    svg += "<text x=\"" + fmt(kRight - 112.0) + "\" y=\"" + fmt(ly) +
           "\" font-family=\"sans-serif\" font-size=\"13\">" +
           series[i].label + "</text>\n";
  }
  svg += "</svg>\n";
  return svg;
}

void emit_svg_lineplot(std::span<const PlotSeries> series,
                       const PlotAxes& axes, const std::string& path) {
  const std::string svg = render_svg_lineplot(series, axes);
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("emit_svg_lineplot: cannot open " + path);
  }
  out << svg;
  if (!out) {
    throw std::runtime_error("emit_svg_lineplot: write failed for " + path);
  }
}

}  // namespace winfour
