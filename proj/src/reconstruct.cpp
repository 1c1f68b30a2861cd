#include "winfour/reconstruct.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace winfour {

namespace {

constexpr double kPi = std::numbers::pi;

/// Index of frequency 0 in a set containing consecutive integers -n..n.
std::size_t zero_index(const CoefficientSet& coeffs) {
  const auto it = std::lower_bound(coeffs.frequencies.begin(),
                                   coeffs.frequencies.end(), 0.0);
  if (it == coeffs.frequencies.end() || *it != 0.0) {
    throw std::invalid_argument("coefficient set has no zero frequency");
  }
  return static_cast<std::size_t>(it - coeffs.frequencies.begin());
}

}  // namespace

std::complex<double> partial_sum(const CoefficientSet& coeffs, int n,
                                 double x) {
  if (n < 0) {
    throw std::invalid_argument("partial_sum: order must be >= 0");
  }
  const std::size_t zero = zero_index(coeffs);
  if (zero < static_cast<std::size_t>(n) ||
      zero + static_cast<std::size_t>(n) >= coeffs.frequencies.size()) {
    throw std::invalid_argument(
        "partial_sum: coefficient set does not cover -n..n");
  }
  for (int k = 1; k <= n; ++k) {
    if (coeffs.frequencies[zero + static_cast<std::size_t>(k)] !=
            static_cast<double>(k) ||
        coeffs.frequencies[zero - static_cast<std::size_t>(k)] !=
            static_cast<double>(-k)) {
      throw std::invalid_argument(
          "partial_sum: integer frequencies -n..n are not contiguous");
    }
  }
  const double lambda = coeffs.frame.half_width;
  const std::complex<double> rot = std::polar(1.0, kPi * x / lambda);
  std::complex<double> fwd = 1.0;
  std::complex<double> sum = coeffs.values[zero];
  for (int k = 1; k <= n; ++k) {
    fwd *= rot;
    sum += coeffs.values[zero + static_cast<std::size_t>(k)] * fwd +
           coeffs.values[zero - static_cast<std::size_t>(k)] * std::conj(fwd);
  }
  return sum;
}

std::vector<ErrorReport> measure_errors(const RealFunction& psi,
                                        const CoefficientSet& coeffs,
                                        std::span<const int> n_list,
                                        double rho_eval, int grid_points) {
  if (grid_points < 3 || grid_points % 2 == 0) {
    throw std::invalid_argument(
        "measure_errors: grid_points must be odd and >= 3");
  }
  if (!(rho_eval > 0.0)) {
    throw std::invalid_argument("measure_errors: rho_eval must be positive");
  }
  std::vector<int> orders(n_list.begin(), n_list.end());
  std::sort(orders.begin(), orders.end());
  orders.erase(std::unique(orders.begin(), orders.end()), orders.end());
  if (orders.empty()) return {};
  if (orders.front() < 0) {
    throw std::invalid_argument("measure_errors: orders must be >= 0");
  }
  const int n_max = orders.back();

  const std::size_t zero = zero_index(coeffs);
  if (zero < static_cast<std::size_t>(n_max) ||
      zero + static_cast<std::size_t>(n_max) >= coeffs.frequencies.size()) {
    throw std::invalid_argument(
        "measure_errors: coefficient set does not cover the largest order");
  }

  const double lambda = coeffs.frame.half_width;
  const double t = coeffs.frame.center;
  const double dx =
      2.0 * rho_eval / static_cast<double>(grid_points - 1);

  std::vector<double> sup(orders.size(), 0.0);
  std::vector<double> l2(orders.size(), 0.0);
  std::vector<double> imag(orders.size(), 0.0);

  for (int g = 0; g < grid_points; ++g) {
    const double x = t - rho_eval + dx * static_cast<double>(g);
    const double target = psi(x);
    // Simpson weights 1,4,2,...,2,4,1.
    const double sw =
        (g == 0 || g == grid_points - 1) ? 1.0 : (g % 2 == 1 ? 4.0 : 2.0);
    const std::complex<double> rot = std::polar(1.0, kPi * x / lambda);
    std::complex<double> fwd = 1.0;
    std::complex<double> sum = coeffs.values[zero];
    std::size_t next = 0;
    for (int k = 0; k <= n_max; ++k) {
      if (k > 0) {
        fwd *= rot;
        sum += coeffs.values[zero + static_cast<std::size_t>(k)] * fwd +
               coeffs.values[zero - static_cast<std::size_t>(k)] *
                   std::conj(fwd);
      }
      while (next < orders.size() && orders[next] == k) {
        const double err = std::abs(target - sum.real());
        sup[next] = std::max(sup[next], err);
        l2[next] += sw * err * err;
        imag[next] = std::max(imag[next], std::abs(sum.imag()));
        ++next;
      }
    }
  }

  std::vector<ErrorReport> reports;
  reports.reserve(orders.size());
  for (std::size_t i = 0; i < orders.size(); ++i) {
    ErrorReport r;
    r.order = orders[i];
    r.sup_error = sup[i];
    r.l2_error_sq = l2[i] * dx / 3.0;
    r.eval_half_width = rho_eval;
    r.grid_points = grid_points;
    r.max_imag_residue = imag[i];
    r.beyond_plateau = rho_eval > coeffs.frame.plateau;
    reports.push_back(r);
  }
  return reports;
}

void write_csv(std::span<const ErrorReport> reports,
               std::span<const ErrorEnvelope> envelopes, std::ostream& out) {
  if (!envelopes.empty() && envelopes.size() != reports.size()) {
    throw std::invalid_argument("write_csv: envelope/report size mismatch");
  }
  out << "n,sup_err,l2_err_sq,k_inf,k_2,envelope_sup_lo,envelope_sup_hi,"
         "sup_err_sq,envelope_l2_lo,envelope_l2_hi\n";
  char buf[320];
  const double nan = std::numeric_limits<double>::quiet_NaN();
  for (std::size_t i = 0; i < reports.size(); ++i) {
    const ErrorReport& r = reports[i];
    ErrorEnvelope e;
    if (!envelopes.empty()) e = envelopes[i];
    const bool v = e.valid;
    std::snprintf(buf, sizeof(buf),
                  "%d,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g,%.17g\n",
                  r.order, r.sup_error, r.l2_error_sq, v ? e.k_inf : nan,
                  v ? e.k2 : nan, v ? e.sup_lo : nan, v ? e.sup_hi : nan,
                  r.sup_error * r.sup_error, v ? e.l2_lo : nan,
                  v ? e.l2_hi : nan);
    out << buf;
  }
}

}  // namespace winfour
