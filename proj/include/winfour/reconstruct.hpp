#pragma once

#include <complex>
#include <iosfwd>
#include <span>
#include <vector>

#include "winfour/real_function.hpp"
#include "winfour/spectral.hpp"

namespace winfour {

/// Measured reconstruction errors for one truncation order.
struct ErrorReport {
  int order = 0;             // n
  double sup_error = 0.0;    // max |psi - Re partial_sum| on the interval
  double l2_error_sq = 0.0;  // integral of the squared error
  double eval_half_width = 0.0;  // rho'
  int grid_points = 0;
  double max_imag_residue = 0.0;  // accuracy diagnostic of the partial sums
  bool beyond_plateau = false;    // rho' exceeds the frame plateau
};

/// Partial sum of the coefficient series at x: sum over k = -n..n of
/// c(k) e^{i k pi x / lambda}. All integer frequencies -n..n must be
/// present.
std::complex<double> partial_sum(const CoefficientSet& coeffs, int n,
                                 double x);

/// Sup and L^2 errors of the reconstruction against psi over
/// [t - rho_eval, t + rho_eval], one report per requested order. The sup is
/// a dense-grid maximum and the L^2 integral is a composite Simpson sum on
/// the same grid, so grid_points must be odd.
std::vector<ErrorReport> measure_errors(const RealFunction& psi,
                                        const CoefficientSet& coeffs,
                                        std::span<const int> n_list,
                                        double rho_eval, int grid_points);

/// Envelope bands to accompany one report row in the CSV output.
struct ErrorEnvelope {
  double k_inf = 0.0;
  double k2 = 0.0;
  double sup_lo = 0.0;
  double sup_hi = 0.0;
  double l2_lo = 0.0;
  double l2_hi = 0.0;
  bool valid = false;  // false when the window lacks the needed smoothness
};

/// CSV with header
/// n,sup_err,l2_err_sq,k_inf,k_2,envelope_sup_lo,envelope_sup_hi,
/// sup_err_sq,envelope_l2_lo,envelope_l2_hi.
/// Envelope columns are nan for rows without a valid envelope.
void write_csv(std::span<const ErrorReport> reports,
               std::span<const ErrorEnvelope> envelopes, std::ostream& out);

}  // namespace winfour
