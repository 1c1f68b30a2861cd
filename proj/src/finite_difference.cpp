#include "winfour/finite_difference.hpp"

#include <cmath>
#include <stdexcept>

namespace winfour {

namespace {

// 8th-order central first derivative on offsets -4..4 (divided by h).
constexpr double kBase[9] = {
    1.0 / 280.0,  -4.0 / 105.0, 1.0 / 5.0,  -4.0 / 5.0, 0.0,
    4.0 / 5.0,    -1.0 / 5.0,   4.0 / 105.0, -1.0 / 280.0};

}  // namespace

std::vector<double> iterated_central_stencil(int order) {
  if (order < 1) {
    throw std::invalid_argument("iterated_central_stencil: order >= 1");
  }
  std::vector<double> acc(kBase, kBase + 9);
  for (int it = 1; it < order; ++it) {
    std::vector<double> next(acc.size() + 8, 0.0);
    for (std::size_t i = 0; i < acc.size(); ++i) {
      for (int j = 0; j < 9; ++j) {
        next[i + static_cast<std::size_t>(j)] += acc[i] * kBase[j];
      }
    }
    acc = std::move(next);
  }
  return acc;
}

double derivative_estimate(const std::function<double(double)>& f, double x,
                           int order, double h) {
  if (!(h > 0.0)) {
    throw std::invalid_argument("derivative_estimate: step must be positive");
  }
  const std::vector<double> w = iterated_central_stencil(order);
  const int half = 4 * order;
  double sum = 0.0;
  for (int i = -half; i <= half; ++i) {
    const double c = w[static_cast<std::size_t>(i + half)];
    if (c != 0.0) sum += c * f(x + h * static_cast<double>(i));
  }
  return sum / std::pow(h, order);
}

double grid_derivative_sup(const std::function<double(double)>& f, double a,
                           double b, int order, int grid_points, double h) {
  if (!(b > a)) {
    throw std::invalid_argument("grid_derivative_sup: need b > a");
  }
  if (grid_points < 2) {
    throw std::invalid_argument("grid_derivative_sup: need >= 2 grid points");
  }
  const std::vector<double> w = iterated_central_stencil(order);
  const int half = 4 * order;
  const double hp = std::pow(h, order);
  const double dx = (b - a) / static_cast<double>(grid_points - 1);
  double sup = 0.0;
  for (int g = 0; g < grid_points; ++g) {
    const double x = a + dx * static_cast<double>(g);
    double sum = 0.0;
    for (int i = -half; i <= half; ++i) {
      const double c = w[static_cast<std::size_t>(i + half)];
      if (c != 0.0) sum += c * f(x + h * static_cast<double>(i));
    }
    sup = std::max(sup, std::abs(sum / hp));
  }
  return sup;
}

}  // namespace winfour
