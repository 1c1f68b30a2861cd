#pragma once

#include <stdexcept>

namespace winfour {

/// Interval geometry of one analysis window: the interval
/// (center - half_width, center + half_width) with an optional inner
/// plateau [center - plateau, center + plateau].
struct AnalysisFrame {
  double center = 0.0;      // t
  double half_width = 1.0;  // lambda > 0
  double plateau = 0.0;     // rho, 0 <= rho < lambda

  AnalysisFrame() = default;

  AnalysisFrame(double t, double lambda, double rho = 0.0)
      : center(t), half_width(lambda), plateau(rho) {
    if (!(lambda > 0.0)) {
      throw std::invalid_argument("AnalysisFrame: half_width must be positive");
    }
    if (!(rho >= 0.0) || rho >= lambda) {
      throw std::invalid_argument(
          "AnalysisFrame: plateau must satisfy 0 <= plateau < half_width");
    }
  }
};

}  // namespace winfour
