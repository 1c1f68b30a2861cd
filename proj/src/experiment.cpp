#include "winfour/experiment.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <stdexcept>

#include "winfour/bounds.hpp"
#include "winfour/reconstruct.hpp"
#include "winfour/spectral.hpp"
#include "winfour/svg.hpp"

namespace winfour {

namespace {

std::ofstream open_output(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  return out;
}

std::string run_name(const RunConfig& config) {
  return config.preset.empty() ? to_string(config.function) : config.preset;
}

}  // namespace

std::vector<int> default_n_list() {
  std::vector<int> n;
  for (int i = 1; i <= 20; ++i) n.push_back(i);
  n.push_back(30);
  n.push_back(50);
  n.push_back(100);
  n.push_back(200);
  return n;
}

RunConfig config_from_preset(const std::string& name) {
  const ExperimentPreset& preset = preset_by_name(name);
  RunConfig config;
  config.preset = preset.name;
  config.function = preset.function;
  config.windows = preset.windows;
  config.frame = preset.frame;
  config.tukey_alpha = preset.tukey_alpha;
  config.recon_order = preset.reconstruction_order;
  config.n_list = default_n_list();
  return config;
}

WindowSpec make_window(WindowKind kind, const AnalysisFrame& frame,
                       double tukey_alpha) {
  switch (kind) {
    case WindowKind::Rectangular:
      return WindowSpec::rectangular(
          AnalysisFrame(frame.center, frame.half_width, 0.0));
    case WindowKind::Hann:
      return WindowSpec::hann(
          AnalysisFrame(frame.center, frame.half_width, 0.0));
    case WindowKind::Tukey: {
      const double rho = (1.0 - tukey_alpha) * frame.half_width;
      return WindowSpec::tukey(
          AnalysisFrame(frame.center, frame.half_width, rho), tukey_alpha);
    }
    case WindowKind::SmoothBump:
      return WindowSpec::smooth_bump(frame);
  }
  throw std::invalid_argument("make_window: unknown window kind");
}

ExperimentResult run_experiment(const RunConfig& config) {
  if (config.windows.empty()) {
    throw std::invalid_argument("run_experiment: no windows selected");
  }
  const QuadratureGrid grid(config.frame, config.samples, config.transform);
  if (config.k_max < 1 ||
      static_cast<std::size_t>(config.k_max) > config.samples / 2) {
    throw std::invalid_argument("run_experiment: need 1 <= k_max <= m/2");
  }
  const std::vector<int> n_list =
      config.n_list.empty() ? default_n_list() : config.n_list;
  for (int n : n_list) {
    if (n < 0 || n > config.k_max) {
      throw std::invalid_argument(
          "run_experiment: n_list entries must lie in [0, k_max]");
    }
  }
  const double rho_eval = config.rho_eval.value_or(config.frame.plateau);
  if (!(rho_eval > 0.0) || rho_eval >= config.frame.half_width) {
    throw std::invalid_argument(
        "run_experiment: evaluation half-width must be in (0, half_width)");
  }
  if (config.recon_order < 0 || config.recon_order > config.k_max) {
    throw std::invalid_argument(
        "run_experiment: reconstruction order must lie in [0, k_max]");
  }
  std::filesystem::create_directories(config.output_dir);

  const RealFunction psi = test_function(config.function);
  const std::string base = config.output_dir + "/" + run_name(config);

  ExperimentResult result;
  std::vector<PlotSeries> coeff_series;
  std::vector<PlotSeries> error_series;
  std::vector<PlotSeries> recon_series;

  for (WindowKind kind : config.windows) {
    const WindowSpec spec = make_window(kind, config.frame, config.tukey_alpha);
    const std::string tag = to_string(kind);

    const CoefficientSet coeffs =
        coefficients_fft(psi, spec, grid, config.k_max);
    {
      auto out = open_output(base + "_coeffs_" + tag + ".csv");
      write_csv(coeffs, out);
      result.files.push_back(base + "_coeffs_" + tag + ".csv");
    }

    const std::vector<ErrorReport> reports =
        measure_errors(psi, coeffs, n_list, rho_eval, config.grid_points);

    std::vector<ErrorEnvelope> envelopes(reports.size());
    if (kind != WindowKind::Rectangular) {
      const int s = 1;
      const double k_inf =
          k_inf_constant(psi, spec, rho_eval, config.grid_points);
      const double k2 = k2_constant(psi, spec, rho_eval, config.grid_points);
      const double l_s =
          measure_lipschitz(standardized_windowed(psi, spec), s, (1 << 14) + 1);
      for (std::size_t i = 0; i < reports.size(); ++i) {
        const int n = reports[i].order;
        if (n < 1) continue;
        const auto [slo, shi] = sup_error_envelope(k_inf, l_s, s, n);
        const auto [llo, lhi] =
            l2_error_envelope(k2, k_inf, l_s, rho_eval, s, n);
        envelopes[i] = {k_inf, k2, slo, shi, llo, lhi, true};
        if (reports[i].sup_error < slo || reports[i].sup_error > shi ||
            reports[i].l2_error_sq < llo || reports[i].l2_error_sq > lhi) {
          result.envelope_violation = true;
        }
      }
    }
    {
      auto out = open_output(base + "_errors_" + tag + ".csv");
      write_csv(reports, envelopes, out);
      result.files.push_back(base + "_errors_" + tag + ".csv");
    }

    // Reconstruction curve at the preset order, sampled densely across the
    // evaluation interval.
    {
      const int curve_points = 1025;
      auto out = open_output(base + "_recon_" + tag + ".csv");
      out << "x,psi,recon,residual_imag\n";
      char buf[160];
      std::vector<std::pair<double, double>> curve;
      const double dx =
          2.0 * rho_eval / static_cast<double>(curve_points - 1);
      for (int i = 0; i < curve_points; ++i) {
        const double x =
            config.frame.center - rho_eval + dx * static_cast<double>(i);
        const std::complex<double> v =
            partial_sum(coeffs, config.recon_order, x);
        std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", x,
                      psi(x), v.real(), v.imag());
        out << buf;
        curve.emplace_back(x, v.real());
      }
      result.files.push_back(base + "_recon_" + tag + ".csv");
      recon_series.push_back({tag, std::move(curve)});
    }

    if (config.emit_plots) {
      PlotSeries cs{tag, {}};
      for (long k = 1; k <= config.k_max; ++k) {
        const double a2 = std::norm(coeffs.at(static_cast<double>(k)));
        if (a2 > 0.0) cs.points.emplace_back(static_cast<double>(k), a2);
      }
      if (!cs.points.empty()) coeff_series.push_back(std::move(cs));

      PlotSeries es{tag, {}};
      for (const ErrorReport& r : reports) {
        if (r.order >= 1 && r.sup_error > 0.0) {
          es.points.emplace_back(static_cast<double>(r.order), r.sup_error);
        }
      }
      if (!es.points.empty()) error_series.push_back(std::move(es));
    }
  }

  if (config.emit_plots) {
    const std::string name = run_name(config);
    if (!coeff_series.empty()) {
      emit_svg_lineplot(coeff_series,
                        {true, true, name + ": squared coefficient magnitude",
                         "k", "|c(k)|^2"},
                        base + "_coeffs.svg");
      result.files.push_back(base + "_coeffs.svg");
    }
    if (!error_series.empty()) {
      emit_svg_lineplot(error_series,
                        {false, true, name + ": sup reconstruction error",
                         "n", "sup error"},
                        base + "_errors.svg");
      result.files.push_back(base + "_errors.svg");
    }
    {
      PlotSeries orig{"psi", {}};
      const int curve_points = 1025;
      const double dx =
          2.0 * rho_eval / static_cast<double>(curve_points - 1);
      for (int i = 0; i < curve_points; ++i) {
        const double x =
            config.frame.center - rho_eval + dx * static_cast<double>(i);
        orig.points.emplace_back(x, psi(x));
      }
      recon_series.insert(recon_series.begin(), std::move(orig));
      emit_svg_lineplot(recon_series,
                        {false, false,
                         name + ": reconstruction at n = " +
                             std::to_string(config.recon_order),
                         "x", "value"},
                        base + "_recon.svg");
      result.files.push_back(base + "_recon.svg");
    }
  }
  return result;
}

}  // namespace winfour
