#include "winfour/corpus.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace winfour {

namespace {

constexpr double kPi = std::numbers::pi;

double saw(double x) { return x; }

double parabola(double x) { return x * x; }

double hermite_gauss(double x) {
  const double p = ((8.0 * x - 24.0) * x + 12.0) * x + 4.0;
  const double d = x - 1.0;
  return p * std::exp(-0.5 * d * d);
}

std::complex<double> saw_plain(long k) {
  if (k == 0) return {0.0, 0.0};
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return {0.0, sign / static_cast<double>(k)};
}

std::complex<double> saw_hann(long k) {
  if (k == 0) return {0.0, 0.0};
  if (k == 1) return {0.0, -3.0 / 8.0};
  if (k == -1) return {0.0, 3.0 / 8.0};
  const double kk = static_cast<double>(k);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return {0.0, -sign / (2.0 * kk * (kk * kk - 1.0))};
}

std::complex<double> parabola_plain(long k) {
  if (k == 0) return {1.0 / 3.0, 0.0};
  const double kk = static_cast<double>(k);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  return {2.0 * sign / (kk * kk * kPi * kPi), 0.0};
}

std::complex<double> parabola_hann(long k) {
  if (k == 0) return {1.0 / 6.0 - 1.0 / (kPi * kPi), 0.0};
  if (k == 1 || k == -1) return {1.0 / 12.0 - 7.0 / (8.0 * kPi * kPi), 0.0};
  const double kk = static_cast<double>(k);
  const double sign = (k % 2 == 0) ? 1.0 : -1.0;
  const double den = kk * kk * (kk * kk - 1.0) * (kk * kk - 1.0) * kPi * kPi;
  return {sign * (1.0 - 3.0 * kk * kk) / den, 0.0};
}

}  // namespace

RealFunction test_function(TestFunctionId id) {
  switch (id) {
    case TestFunctionId::Saw: return RealFunction(saw);
    case TestFunctionId::Parabola: return RealFunction(parabola);
    case TestFunctionId::HermiteGauss: return RealFunction(hermite_gauss);
  }
  throw std::invalid_argument("test_function: unknown id");
}

std::string to_string(TestFunctionId id) {
  switch (id) {
    case TestFunctionId::Saw: return "saw";
    case TestFunctionId::Parabola: return "parabola";
    case TestFunctionId::HermiteGauss: return "hermite";
  }
  return "unknown";
}

std::complex<double> analytic_coefficient(TestFunctionId fn,
                                          AnalyticWindow window, long k) {
  if (fn == TestFunctionId::Saw) {
    return window == AnalyticWindow::Plain ? saw_plain(k) : saw_hann(k);
  }
  if (fn == TestFunctionId::Parabola) {
    return window == AnalyticWindow::Plain ? parabola_plain(k)
                                           : parabola_hann(k);
  }
  throw std::invalid_argument(
      "analytic_coefficient: no closed form for this function/window pair");
}

std::complex<double> analytic_extended_coefficient(ExtendedFunctionId fn,
                                                   double xi) {
  if (fn == ExtendedFunctionId::One) {
    if (xi == 0.0) return {1.0, 0.0};
    return {std::sin(kPi * xi) / (kPi * xi), 0.0};
  }
  if (xi == 0.0) return {0.0, 0.0};
  const double px = kPi * xi;
  return {0.0, (px * std::cos(px) - std::sin(px)) / (kPi * xi * xi)};
}

const std::vector<ExperimentPreset>& experiment_presets() {
  static const std::vector<ExperimentPreset> presets = [] {
    std::vector<ExperimentPreset> p;
    p.push_back({"saw",
                 TestFunctionId::Saw,
                 AnalysisFrame(0.0, kPi, 0.9 * kPi),
                 {WindowKind::Rectangular, WindowKind::Hann,
                  WindowKind::SmoothBump},
                 1.0,
                 10,
                 ReportedConstants{8.91, 2.76, true}});
    p.push_back({"parabola-rho025",
                 TestFunctionId::Parabola,
                 AnalysisFrame(0.0, 1.0, 0.25),
                 {WindowKind::Rectangular, WindowKind::Hann,
                  WindowKind::SmoothBump},
                 1.0,
                 50,
                 ReportedConstants{9.1e-3, 4.7e-6, false}});
    p.push_back({"parabola-rho08",
                 TestFunctionId::Parabola,
                 AnalysisFrame(0.0, 1.0, 0.8),
                 {WindowKind::Rectangular, WindowKind::Hann,
                  WindowKind::SmoothBump},
                 1.0,
                 50,
                 ReportedConstants{0.58, 0.075, false}});
    const double hermite_lambda = 2.0 * kPi;
    const double hermite_rho = 5.9;
    p.push_back({"hermite",
                 TestFunctionId::HermiteGauss,
                 AnalysisFrame(1.0, hermite_lambda, hermite_rho),
                 {WindowKind::Rectangular, WindowKind::Tukey,
                  WindowKind::SmoothBump},
                 1.0 - hermite_rho / hermite_lambda,
                 10,
                 std::nullopt});
    return p;
  }();
  return presets;
}

const ExperimentPreset& preset_by_name(const std::string& name) {
  for (const auto& p : experiment_presets()) {
    if (p.name == name) return p;
  }
  throw std::invalid_argument("unknown preset: " + name);
}

std::optional<ReportedConstants> reported_constants(
    const ExperimentPreset& preset) {
  return preset.reported;
}

}  // namespace winfour
