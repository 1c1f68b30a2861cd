// Command-line harness: coefficient tables, reconstructions, error tables,
// combinatorial-constant tables and the built-in experiment presets.

#include <cmath>
#include <complex>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <numbers>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "winfour/bounds.hpp"
#include "winfour/corpus.hpp"
#include "winfour/experiment.hpp"
#include "winfour/reconstruct.hpp"
#include "winfour/spectral.hpp"

namespace {

using namespace winfour;

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitValidation = 3;

struct Options {
  std::string function = "saw";
  std::string window = "hann";
  double lambda = std::numbers::pi;
  double rho = 0.0;
  double alpha = 0.5;
  double center = 0.0;
  std::size_t m = 1u << 12;
  std::size_t big_n = 1u << 14;
  long k_max = 512;
  std::string out;
  bool plots = false;

  int order = 10;              // reconstruct
  double rho_eval = 0.0;       // reconstruct/errors; 0 means lambda/2
  int curve_points = 1025;     // reconstruct
  std::vector<int> n_list;     // errors
  int grid_points = (1 << 16) + 1;
  double xi_max = 512.0;       // extended
  int s_max = 12;              // bounds
};

TestFunctionId parse_function(const std::string& name) {
  if (name == "saw") return TestFunctionId::Saw;
  if (name == "parabola") return TestFunctionId::Parabola;
  if (name == "hermite") return TestFunctionId::HermiteGauss;
  throw CLI::ValidationError("--function",
                             "expected one of saw|parabola|hermite");
}

WindowKind parse_window(const std::string& name) {
  if (name == "rect") return WindowKind::Rectangular;
  if (name == "hann") return WindowKind::Hann;
  if (name == "tukey") return WindowKind::Tukey;
  if (name == "bump") return WindowKind::SmoothBump;
  throw CLI::ValidationError("--window",
                             "expected one of rect|hann|tukey|bump");
}

WindowSpec window_from_options(const Options& opt) {
  const WindowKind kind = parse_window(opt.window);
  const double rho =
      kind == WindowKind::Tukey ? (1.0 - opt.alpha) * opt.lambda : opt.rho;
  return make_window(kind, AnalysisFrame(opt.center, opt.lambda, rho),
                     opt.alpha);
}

std::ostream& output_stream(const std::string& path, std::ofstream& file) {
  if (path.empty()) return std::cout;
  file.open(path, std::ios::binary);
  if (!file) {
    throw std::runtime_error("cannot open output file: " + path);
  }
  return file;
}

int cmd_coeffs(const Options& opt) {
  const WindowSpec spec = window_from_options(opt);
  const QuadratureGrid grid(spec.frame(), opt.m, opt.big_n);
  const CoefficientSet coeffs =
      coefficients_fft(test_function(parse_function(opt.function)), spec,
                       grid, opt.k_max);
  std::ofstream file;
  write_csv(coeffs, output_stream(opt.out, file));
  return kExitOk;
}

int cmd_extended(const Options& opt) {
  const WindowSpec spec = window_from_options(opt);
  const QuadratureGrid grid(spec.frame(), opt.m, opt.big_n);
  CoefficientSet coeffs = extended_coefficients(
      test_function(parse_function(opt.function)), spec, grid);
  std::size_t keep = coeffs.frequencies.size();
  while (keep > 0 && coeffs.frequencies[keep - 1] > opt.xi_max) --keep;
  coeffs.frequencies.resize(keep);
  coeffs.values.resize(keep);
  std::ofstream file;
  write_csv(coeffs, output_stream(opt.out, file));
  return kExitOk;
}

int cmd_reconstruct(const Options& opt) {
  const WindowSpec spec = window_from_options(opt);
  const QuadratureGrid grid(spec.frame(), opt.m, opt.big_n);
  const RealFunction psi = test_function(parse_function(opt.function));
  const CoefficientSet coeffs = coefficients_fft(psi, spec, grid, opt.k_max);
  const double half = opt.rho_eval > 0.0 ? opt.rho_eval : opt.lambda / 2.0;
  if (opt.curve_points < 2) {
    throw std::invalid_argument("need at least two curve points");
  }

  std::ofstream file;
  std::ostream& out = output_stream(opt.out, file);
  out << "x,psi,recon,residual_imag\n";
  char buf[160];
  const double dx = 2.0 * half / static_cast<double>(opt.curve_points - 1);
  for (int i = 0; i < opt.curve_points; ++i) {
    const double x = opt.center - half + dx * static_cast<double>(i);
    const std::complex<double> v = partial_sum(coeffs, opt.order, x);
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n", x, psi(x),
                  v.real(), v.imag());
    out << buf;
  }
  return kExitOk;
}

int cmd_errors(const Options& opt) {
  const WindowSpec spec = window_from_options(opt);
  const QuadratureGrid grid(spec.frame(), opt.m, opt.big_n);
  const RealFunction psi = test_function(parse_function(opt.function));
  const CoefficientSet coeffs = coefficients_fft(psi, spec, grid, opt.k_max);
  const std::vector<int> n_list =
      opt.n_list.empty() ? default_n_list() : opt.n_list;
  const double half = opt.rho_eval > 0.0 ? opt.rho_eval : opt.lambda / 2.0;

  const std::vector<ErrorReport> reports =
      measure_errors(psi, coeffs, n_list, half, opt.grid_points);
  std::vector<ErrorEnvelope> envelopes(reports.size());
  bool violation = false;
  if (spec.kind() != WindowKind::Rectangular) {
    const int s = 1;
    const double k_inf = k_inf_constant(psi, spec, half, opt.grid_points);
    const double k2 = k2_constant(psi, spec, half, opt.grid_points);
    const double l_s =
        measure_lipschitz(standardized_windowed(psi, spec), s, (1 << 14) + 1);
    for (std::size_t i = 0; i < reports.size(); ++i) {
      if (reports[i].order < 1) continue;
      const auto [slo, shi] =
          sup_error_envelope(k_inf, l_s, s, reports[i].order);
      const auto [llo, lhi] =
          l2_error_envelope(k2, k_inf, l_s, half, s, reports[i].order);
      envelopes[i] = {k_inf, k2, slo, shi, llo, lhi, true};
      if (reports[i].sup_error < slo || reports[i].sup_error > shi ||
          reports[i].l2_error_sq < llo || reports[i].l2_error_sq > lhi) {
        violation = true;
      }
    }
  }
  std::ofstream file;
  write_csv(reports, envelopes, output_stream(opt.out, file));
  if (violation) {
    std::cerr << "error: measured errors escaped the envelope band\n";
    return kExitValidation;
  }
  return kExitOk;
}

int cmd_bounds(const Options& opt) {
  std::ofstream file;
  std::ostream& out = output_stream(opt.out, file);
  out << "s,K_s,K_s_upper,ratio,ln_Ks,ln_stirling\n";
  char buf[200];
  for (int s = 1; s <= opt.s_max; ++s) {
    std::string ks_text;
    std::string upper_text;
    std::string ratio_text;
    try {
      ks_text = ks_closed(s).to_string();
      if (s >= 2) {
        const ExactRatio upper = ks_upper(s);
        std::snprintf(buf, sizeof(buf), "%.17g", upper.to_double());
        upper_text = buf;
        std::snprintf(buf, sizeof(buf), "%.17g",
                      2.0 * s / static_cast<double>(s + 2));
        ratio_text = buf;
      }
    } catch (const std::overflow_error&) {
      ks_text.clear();
      upper_text.clear();
      ratio_text.clear();
    }
    std::snprintf(buf, sizeof(buf), "%d,%s,%s,%s,%.17g,%.17g\n", s,
                  ks_text.c_str(), upper_text.c_str(), ratio_text.c_str(),
                  ks_log_exact(s), ks_log_asymptotic(s));
    out << buf;
  }
  return kExitOk;
}

int cmd_experiment(const Options& opt, const std::string& preset) {
  RunConfig config = config_from_preset(preset);
  config.output_dir = opt.out.empty() ? "." : opt.out;
  config.emit_plots = opt.plots;
  config.samples = opt.m;
  config.transform = opt.big_n;
  config.k_max = opt.k_max;
  config.grid_points = opt.grid_points;
  if (!opt.n_list.empty()) config.n_list = opt.n_list;
  if (opt.rho_eval > 0.0) config.rho_eval = opt.rho_eval;
  const ExperimentResult result = run_experiment(config);
  for (const std::string& f : result.files) {
    std::cout << f << "\n";
  }
  if (result.envelope_violation) {
    std::cerr << "error: measured errors escaped the envelope band\n";
    return kExitValidation;
  }
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Windowed Fourier analysis: plateau bump windows, coefficient decay "
      "and reconstruction error bounds"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "flat key=value configuration file");

  Options opt;
  app.add_option("--function", opt.function, "saw|parabola|hermite");
  app.add_option("--window", opt.window, "rect|hann|tukey|bump");
  app.add_option("--lambda", opt.lambda, "interval half-width")
      ->check(CLI::PositiveNumber);
  app.add_option("--rho", opt.rho, "plateau half-width");
  app.add_option("--alpha", opt.alpha, "tukey taper fraction in (0,1]");
  app.add_option("--t", opt.center, "interval center");
  app.add_option("--m", opt.m, "quadrature samples (power of two)");
  app.add_option("--bigN", opt.big_n, "transform length (power of two)");
  app.add_option("--kmax", opt.k_max, "largest coefficient order");
  app.add_option("--out", opt.out,
                 "output file (tables) or directory (experiment)");
  app.add_flag("--plots", opt.plots, "emit SVG plots (experiment)");
  app.add_option("--n", opt.order, "truncation order (reconstruct)");
  app.add_option("--rho-eval", opt.rho_eval,
                 "evaluation half-width (default lambda/2)");
  app.add_option("--curve-points", opt.curve_points,
                 "curve samples (reconstruct)");
  app.add_option("--nlist", opt.n_list, "truncation orders (errors)");
  app.add_option("--grid-points", opt.grid_points,
                 "evaluation grid size, odd (errors)");
  app.add_option("--ximax", opt.xi_max, "largest xi row to keep (extended)");
  app.add_option("--smax", opt.s_max, "largest s (bounds)")
      ->check(CLI::PositiveNumber);

  auto* coeffs = app.add_subcommand(
      "coeffs", "windowed Fourier coefficients as CSV (xi,re,im,abs2)");
  auto* extended = app.add_subcommand(
      "extended", "coefficients at fractional frequencies xi = m*n/N");
  auto* reconstruct =
      app.add_subcommand("reconstruct", "partial-sum reconstruction curve");
  auto* errors =
      app.add_subcommand("errors", "sup/L2 error table with envelope bands");
  auto* bounds = app.add_subcommand(
      "bounds", "combinatorial constant table (s, K_s, bound, asymptotics)");
  auto* experiment = app.add_subcommand(
      "experiment", "run a named preset and write its artifact files");
  std::string preset;
  experiment
      ->add_option("preset", preset,
                   "saw|parabola-rho025|parabola-rho08|hermite")
      ->required();
  for (CLI::App* sub :
       {coeffs, extended, reconstruct, errors, bounds, experiment}) {
    sub->fallthrough();
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (coeffs->parsed()) return cmd_coeffs(opt);
    if (extended->parsed()) return cmd_extended(opt);
    if (reconstruct->parsed()) return cmd_reconstruct(opt);
    if (errors->parsed()) return cmd_errors(opt);
    if (bounds->parsed()) return cmd_bounds(opt);
    if (experiment->parsed()) return cmd_experiment(opt, preset);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  }
  return kExitConfig;
}
