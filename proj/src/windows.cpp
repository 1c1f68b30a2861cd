#include "winfour/windows.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "winfour/finite_difference.hpp"

namespace winfour {

namespace {

constexpr double kPi = std::numbers::pi;

double hann_value(double lambda, double x) {
  const double ax = std::abs(x);
  if (ax >= lambda) return 0.0;
  const double c = std::cos(kPi * ax / (2.0 * lambda));
  return c * c;
}

double tukey_value(double lambda, double alpha, double rho, double x) {
  const double ax = std::abs(x);
  if (ax >= lambda) return 0.0;
  if (ax <= rho) return 1.0;
  return 0.5 * (1.0 - std::cos(kPi * ax / (alpha * lambda) - kPi / alpha));
}

double smooth_bump_value(double lambda, double rho, double x) {
  const double ax = std::abs(x);
  if (ax >= lambda) return 0.0;
  if (ax <= rho) return 1.0;
  // exp argument runs to +inf at the outer edge and -inf at the plateau;
  // IEEE overflow to inf yields the correct limits 0 and 1.
  const double e = std::exp(1.0 / (lambda - ax) + 1.0 / (rho - ax));
  return 1.0 / (e + 1.0);
}

}  // namespace

std::string to_string(WindowKind kind) {
  switch (kind) {
    case WindowKind::Rectangular: return "rect";
    case WindowKind::Hann: return "hann";
    case WindowKind::Tukey: return "tukey";
    case WindowKind::SmoothBump: return "bump";
  }
  return "unknown";
}

WindowSpec WindowSpec::rectangular(const AnalysisFrame& frame) {
  return WindowSpec(WindowKind::Rectangular, frame, 1.0);
}

WindowSpec WindowSpec::hann(const AnalysisFrame& frame) {
  if (frame.plateau != 0.0) {
    throw std::invalid_argument("hann window has no plateau; frame.plateau must be 0");
  }
  return WindowSpec(WindowKind::Hann, frame, 1.0);
}

WindowSpec WindowSpec::tukey(const AnalysisFrame& frame, double alpha) {
  if (!(alpha > 0.0) || alpha > 1.0) {
    throw std::invalid_argument("tukey window needs alpha in (0, 1]");
  }
  const double rho = (1.0 - alpha) * frame.half_width;
  if (std::abs(frame.plateau - rho) > 1e-12 * frame.half_width) {
    throw std::invalid_argument(
        "tukey window: frame.plateau must equal (1 - alpha) * half_width");
  }
  return WindowSpec(WindowKind::Tukey, frame, alpha);
}

WindowSpec WindowSpec::tukey(const AnalysisFrame& frame) {
  return tukey(frame, 1.0 - frame.plateau / frame.half_width);
}

WindowSpec WindowSpec::smooth_bump(const AnalysisFrame& frame) {
  return WindowSpec(WindowKind::SmoothBump, frame, 1.0);
}

double window_eval(const WindowSpec& spec, double x) {
  if (std::isnan(x)) {
    throw std::invalid_argument("window_eval: NaN argument");
  }
  const double lambda = spec.frame().half_width;
  switch (spec.kind()) {
    case WindowKind::Rectangular:
      return std::abs(x) >= lambda ? 0.0 : 1.0;
    case WindowKind::Hann:
      return hann_value(lambda, x);
    case WindowKind::Tukey:
      return tukey_value(lambda, spec.alpha(), spec.frame().plateau, x);
    case WindowKind::SmoothBump:
      return smooth_bump_value(lambda, spec.frame().plateau, x);
  }
  return 0.0;
}

double window_edge_limit(const WindowSpec& spec) {
  return spec.kind() == WindowKind::Rectangular ? 1.0 : 0.0;
}

double hann_superposition(double tau, int m, double x) {
  if (!(tau > 0.0)) {
    throw std::invalid_argument("hann_superposition: tau must be positive");
  }
  if (m < 0) {
    throw std::invalid_argument("hann_superposition: m must be >= 0");
  }
  double sum = 0.0;
  for (int k = -m; k <= m; ++k) {
    sum += hann_value(tau, x - static_cast<double>(k) * tau);
  }
  return sum;
}

double window_derivative_sup(const WindowSpec& spec, int order) {
  if (order < 1) {
    throw std::invalid_argument("window_derivative_sup: order must be >= 1");
  }
  const double lambda = spec.frame().half_width;
  switch (spec.kind()) {
    case WindowKind::Rectangular:
      throw std::invalid_argument(
          "window_derivative_sup: rectangular window is not differentiable "
          "at its support edges");
    case WindowKind::Hann: {
      // w = (1 + cos(pi x / lambda)) / 2; every derivative is a shifted
      // cosine of amplitude (pi/lambda)^order / 2, attained inside the
      // support.
      return 0.5 * std::pow(kPi / lambda, order);
    }
    case WindowKind::Tukey: {
      // Taper is (1 - cos(pi x/(alpha lambda) - pi/alpha)) / 2 over a full
      // half period, so the amplitude is attained for every order.
      return 0.5 * std::pow(kPi / (spec.alpha() * lambda), order);
    }
    case WindowKind::SmoothBump: {
      const double rho = spec.frame().plateau;
      const double width = lambda - rho;
      const double delta = 1e-6 * width;
      const double h = width / 2048.0;
      auto f = [&spec](double x) { return window_eval(spec, x); };
      return grid_derivative_sup(f, rho + delta, lambda - delta, order,
                                 1 << 14, h);
    }
  }
  throw std::invalid_argument("window_derivative_sup: unsupported window kind");
}

}  // namespace winfour
