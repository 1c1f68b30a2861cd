#include "winfour/real_function.hpp"

#include <cmath>
#include <memory>
#include <stdexcept>

namespace winfour {

RealFunction RealFunction::from_samples(double x0, double x1,
                                        std::vector<double> values) {
  if (!(x1 > x0)) {
    throw std::invalid_argument("from_samples: need x1 > x0");
  }
  if (values.size() < 2) {
    throw std::invalid_argument("from_samples: need at least two samples");
  }
  auto table = std::make_shared<std::vector<double>>(std::move(values));
  const std::size_t n = table->size();
  const double dx = (x1 - x0) / static_cast<double>(n - 1);

  RealFunction f([table, x0, x1, dx, n](double x) {
    if (x < x0 || x > x1) {
      throw std::domain_error("sampled function evaluated outside [x0, x1]");
    }
    const double pos = (x - x0) / dx;
    std::size_t i = static_cast<std::size_t>(pos);
    if (i >= n - 1) i = n - 2;
    const double frac = pos - static_cast<double>(i);
    return (*table)[i] + frac * ((*table)[i + 1] - (*table)[i]);
  });
  f.samples_ = n;
  return f;
}

double RealFunction::operator()(double x) const {
  if (!eval_) {
    throw std::logic_error("RealFunction: evaluating an empty function");
  }
  if (std::isnan(x)) {
    throw std::invalid_argument("RealFunction: NaN argument");
  }
  return eval_(x);
}

RealFunction translate(RealFunction f, double t) {
  return RealFunction([f = std::move(f), t](double x) { return f(x + t); });
}

RealFunction scale(RealFunction f, double a) {
  if (!(a > 0.0)) {
    throw std::invalid_argument("scale: factor must be positive");
  }
  return RealFunction([f = std::move(f), a](double x) { return f(a * x); });
}

RealFunction periodize(RealFunction f, double lambda) {
  if (!(lambda > 0.0)) {
    throw std::invalid_argument("periodize: lambda must be positive");
  }
  return RealFunction([f = std::move(f), lambda](double x) {
    const double period = 2.0 * lambda;
    double y = x;
    if (!(y > -lambda && y < lambda)) {
      y = x - period * std::floor((x + lambda) / period);
      if (y >= lambda) y -= period;
      if (y < -lambda) y += period;
    }
    // Odd multiples of lambda reduce onto the interval edge, where the
    // periodization takes the average of the two one-sided limits.
    if (y == -lambda || y == lambda) {
      const double inner = lambda * (1.0 - 1e-12);
      return 0.5 * (f(-inner) + f(inner));
    }
    return f(y);
  });
}

}  // namespace winfour
