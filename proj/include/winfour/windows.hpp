#pragma once

#include <string>

#include "winfour/frame.hpp"

namespace winfour {

enum class WindowKind { Rectangular, Hann, Tukey, SmoothBump };

std::string to_string(WindowKind kind);

/// Immutable description of one window instance. All evaluation happens in
/// centered coordinates: the window lives on (-half_width, half_width) and
/// callers shift by the frame center themselves.
class WindowSpec {
 public:
  static WindowSpec rectangular(const AnalysisFrame& frame);
  static WindowSpec hann(const AnalysisFrame& frame);
  /// Cosine-tapered window; alpha in (0, 1], plateau = (1 - alpha) * lambda.
  /// The frame plateau must match that value.
  static WindowSpec tukey(const AnalysisFrame& frame, double alpha);
  /// Tukey with alpha derived from the frame plateau: alpha = 1 - rho/lambda.
  static WindowSpec tukey(const AnalysisFrame& frame);
  static WindowSpec smooth_bump(const AnalysisFrame& frame);

  WindowKind kind() const { return kind_; }
  const AnalysisFrame& frame() const { return frame_; }
  double alpha() const { return alpha_; }

 private:
  WindowSpec(WindowKind kind, AnalysisFrame frame, double alpha)
      : kind_(kind), frame_(frame), alpha_(alpha) {}

  WindowKind kind_;
  AnalysisFrame frame_;
  double alpha_;  // Tukey only
};

/// Window value at centered coordinate x. Always in [0, 1], zero for
/// |x| >= half_width, even in x, and exactly 1 on the plateau for the
/// Tukey and smooth-bump families.
double window_eval(const WindowSpec& spec, double x);

/// One-sided interior limit of the window at the support edge |x| = lambda.
/// 1 for the rectangular window, 0 for the continuous tapers. This is the
/// value quadrature rules must use at the interval endpoints.
double window_edge_limit(const WindowSpec& spec);

/// Sum of 2m+1 Hann windows of half-width tau placed tau apart,
/// evaluated at x. Coincides with the Tukey window of parameter
/// alpha = 1/(m+1) on half-width (m+1)*tau.
double hann_superposition(double tau, int m, double x);

/// Supremum of |w^(order)| over the support.
///
/// Hann and Tukey tapers are trigonometric, so the supremum is the exact
/// amplitude of the differentiated cosine. The smooth bump has no closed
/// form; its supremum is estimated with an iterated 9-point central
/// difference (8th-order first-derivative stencil convolved with itself)
/// sampled on a 2^14-point grid across the open taper, so the estimate
/// carries the stencil's O(h^8) truncation error. The rectangular window is
/// rejected: it is not differentiable at the support edges.
double window_derivative_sup(const WindowSpec& spec, int order);

}  // namespace winfour
