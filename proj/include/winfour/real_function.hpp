#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

namespace winfour {

/// An evaluable map R -> R. Either a closed-form callable or a uniform
/// sample table with linear interpolation between samples. Evaluation is
/// deterministic; sampled functions are only defined on [x0, x1] and throw
/// outside that range.
class RealFunction {
 public:
  RealFunction() = default;

  RealFunction(std::function<double(double)> f) : eval_(std::move(f)) {}

  /// Uniform sample table on [x0, x1] with linear interpolation.
  static RealFunction from_samples(double x0, double x1,
                                   std::vector<double> values);

  double operator()(double x) const;

  /// Number of stored samples. Engaged only for table-backed functions.
  std::optional<std::size_t> sample_count() const { return samples_; }

 private:
  std::function<double(double)> eval_;
  std::optional<std::size_t> samples_;
};

/// result(x) = f(x + t).
RealFunction translate(RealFunction f, double t);

/// result(x) = f(a * x); requires a > 0.
RealFunction scale(RealFunction f, double a);

/// 2*lambda-periodic extension of f. Equals f on (-lambda, lambda); at odd
/// multiples of lambda returns the average of the two one-sided limits,
/// approximated by evaluating at +/- lambda*(1 - 1e-12).
RealFunction periodize(RealFunction f, double lambda);

}  // namespace winfour
