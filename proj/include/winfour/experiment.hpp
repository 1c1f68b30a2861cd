#pragma once

#include <optional>
#include <string>
#include <vector>

#include "winfour/corpus.hpp"
#include "winfour/frame.hpp"
#include "winfour/windows.hpp"

namespace winfour {

/// Everything one experiment run needs. Either a preset name or a custom
/// function/window/frame combination; numeric parameters have the defaults
/// used throughout the project.
struct RunConfig {
  std::string preset;  // empty for custom runs
  TestFunctionId function = TestFunctionId::Saw;
  std::vector<WindowKind> windows;
  AnalysisFrame frame{0.0, 1.0, 0.0};
  double tukey_alpha = 1.0;

  std::size_t samples = 1u << 12;    // m
  std::size_t transform = 1u << 14;  // N
  long k_max = 512;
  std::vector<int> n_list;           // default: 1..20, 30, 50, 100, 200
  std::optional<double> rho_eval;    // default: frame plateau
  int grid_points = (1 << 16) + 1;
  int recon_order = 10;
  std::string output_dir = ".";
  bool emit_plots = false;
};

std::vector<int> default_n_list();

/// RunConfig with function, frame, windows and reconstruction order filled
/// in from a named preset.
RunConfig config_from_preset(const std::string& name);

struct ExperimentResult {
  std::vector<std::string> files;
  /// Set when a measured error escaped its envelope band on a row where the
  /// band applies. The CLI maps this to the numerical-validation exit code.
  bool envelope_violation = false;
};

/// Writes coefficient-decay, error-vs-n and reconstruction-curve CSV files
/// (one per window), plus optional SVG plots, into config.output_dir.
/// Deterministic for a fixed config.
ExperimentResult run_experiment(const RunConfig& config);

/// Window instance for one kind on the experiment geometry; the plateau for
/// Hann/Rectangular windows is degenerate regardless of the frame plateau.
WindowSpec make_window(WindowKind kind, const AnalysisFrame& frame,
                       double tukey_alpha);

}  // namespace winfour
