#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

#include "winfour/frame.hpp"
#include "winfour/real_function.hpp"
#include "winfour/windows.hpp"

namespace winfour {

enum class TestFunctionId { Saw, Parabola, HermiteGauss };

/// Closed-form evaluator for one of the built-in test functions:
///   Saw          x
///   Parabola     x^2
///   HermiteGauss (8x^3 - 24x^2 + 12x + 4) exp(-(x-1)^2/2)
RealFunction test_function(TestFunctionId id);

std::string to_string(TestFunctionId id);

/// Windows with known closed-form coefficient tables.
enum class AnalyticWindow { Plain, Hann };

/// Exact Fourier coefficient c(k) of the test function on its standard
/// frame, optionally Hann-windowed. Only Saw and Parabola have closed
/// forms; other combinations throw.
std::complex<double> analytic_coefficient(TestFunctionId fn,
                                          AnalyticWindow window, long k);

/// Functions with closed-form coefficients at real (fractional) frequency.
enum class ExtendedFunctionId { One, Saw };

/// Fourier coefficient at real frequency xi of the 2*pi-periodic extension:
/// sinc(xi) for the constant function, and the saw-wave formula otherwise.
/// Agrees with analytic_coefficient at integer xi.
std::complex<double> analytic_extended_coefficient(ExtendedFunctionId fn,
                                                   double xi);

struct ReportedConstants {
  double k_inf = 0.0;
  double k2 = 0.0;
  /// The recorded saw-wave pair matches the definitions only after swapping
  /// the two values; the flag marks that provenance dispute.
  bool possibly_transposed = false;
};

struct ExperimentPreset {
  std::string name;
  TestFunctionId function;
  AnalysisFrame frame;
  std::vector<WindowKind> windows;
  double tukey_alpha = 1.0;  // used when windows contains Tukey
  int reconstruction_order = 10;
  std::optional<ReportedConstants> reported;
};

/// The built-in experiment presets: saw, parabola-rho025, parabola-rho08,
/// hermite.
const std::vector<ExperimentPreset>& experiment_presets();

const ExperimentPreset& preset_by_name(const std::string& name);

/// Recorded reference constants for the Hann-window experiments; empty for
/// presets without reference values.
std::optional<ReportedConstants> reported_constants(
    const ExperimentPreset& preset);

}  // namespace winfour
