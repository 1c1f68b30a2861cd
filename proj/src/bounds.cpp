#include "winfour/bounds.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "winfour/finite_difference.hpp"

namespace winfour {

namespace {

constexpr double kPi = std::numbers::pi;

double pow_int(double base, int exp) {
  double r = 1.0;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

double factorial_double(int n) {
  double r = 1.0;
  for (int i = 2; i <= n; ++i) r *= static_cast<double>(i);
  return r;
}

}  // namespace

ExactUint exact_factorial(int n) {
  if (n < 0) throw std::invalid_argument("exact_factorial: negative n");
  ExactUint r(1);
  for (int i = 2; i <= n; ++i) r = r * ExactUint(static_cast<std::uint64_t>(i));
  return r;
}

ExactUint exact_binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) {
    throw std::invalid_argument("exact_binomial: need 0 <= k <= n");
  }
  if (k > n - k) k = n - k;
  ExactUint r(1);
  for (int i = 1; i <= k; ++i) {
    r = (r * ExactUint(static_cast<std::uint64_t>(n - k + i)))
            .divide_exact(ExactUint(static_cast<std::uint64_t>(i)));
  }
  return r;
}

double jackson_sup_bound(double total_variation, int s, int n) {
  if (total_variation < 0.0) {
    throw std::invalid_argument("jackson_sup_bound: variation must be >= 0");
  }
  if (s < 1) throw std::invalid_argument("jackson_sup_bound: s must be >= 1");
  if (n < 1) throw std::invalid_argument("jackson_sup_bound: n must be >= 1");
  return 2.0 * total_variation /
         (static_cast<double>(s) * kPi * pow_int(static_cast<double>(n), s));
}

double coefficient_decay_bound(double variation_s, int s, long k) {
  if (variation_s < 0.0) {
    throw std::invalid_argument("coefficient_decay_bound: variation >= 0");
  }
  if (s < 1) throw std::invalid_argument("coefficient_decay_bound: s >= 1");
  if (k == 0) {
    throw std::invalid_argument("coefficient_decay_bound: k must be nonzero");
  }
  return variation_s /
         (kPi * pow_int(std::abs(static_cast<double>(k)), s + 1));
}

double variation_coefficient_bound(double total_variation) {
  if (total_variation < 0.0) {
    throw std::invalid_argument(
        "variation_coefficient_bound: variation must be >= 0");
  }
  return total_variation / (2.0 * kPi);
}

ExactUint k_small(int i, int s) {
  if (s < 1 || i < 1 || i > s) {
    throw std::invalid_argument("k_small: need 1 <= i <= s");
  }
  // K(i,s) = s/(s+i) * 2^{2i} * i! * C(s+i, 2i); the numerator product is
  // divisible by s+i, so the division comes last and stays exact.
  ExactUint pow4(1);
  for (int j = 0; j < i; ++j) pow4 = pow4 * ExactUint(4);
  const ExactUint num = pow4 * exact_factorial(i) *
                        exact_binomial(s + i, 2 * i) *
                        ExactUint(static_cast<std::uint64_t>(s));
  return num.divide_exact(ExactUint(static_cast<std::uint64_t>(s + i)));
}

double ore_intermediate_bound(int i, int s, double c_sf, double width) {
  if (c_sf < 0.0) {
    throw std::invalid_argument("ore_intermediate_bound: c_sf must be >= 0");
  }
  if (!(width > 0.0)) {
    throw std::invalid_argument("ore_intermediate_bound: width must be > 0");
  }
  return k_small(i, s).to_double() * c_sf / pow_int(width, i);
}

double c_constant(double m_f, double m_f_s1, double width, int s) {
  if (m_f < 0.0 || m_f_s1 < 0.0) {
    throw std::invalid_argument("c_constant: suprema must be >= 0");
  }
  if (!(width > 0.0)) {
    throw std::invalid_argument("c_constant: width must be > 0");
  }
  if (s < 1) throw std::invalid_argument("c_constant: s must be >= 1");
  return m_f + pow_int(width, s + 1) / factorial_double(s + 1) * m_f_s1;
}

double product_derivative_bound(double mf, double mg, double mf_s1,
                                double mg_s1, double csf, double csg,
                                double width, int s) {
  if (mf < 0.0 || mg < 0.0 || mf_s1 < 0.0 || mg_s1 < 0.0 || csf < 0.0 ||
      csg < 0.0) {
    throw std::invalid_argument(
        "product_derivative_bound: suprema must be >= 0");
  }
  if (!(width > 0.0)) {
    throw std::invalid_argument("product_derivative_bound: width must be > 0");
  }
  return mf * mg_s1 + mf_s1 * mg +
         csf * csg * ks_closed(s).to_double() / pow_int(width, s + 1);
}

ExactUint ks_sum(int s) {
  if (s < 1) throw std::invalid_argument("ks_sum: s must be >= 1");
  ExactUint total(0);
  for (int k = 1; k <= s; ++k) {
    total = total +
            exact_binomial(s + 1, k) * k_small(s + 1 - k, s) * k_small(k, s);
  }
  return total;
}

ExactUint ks_closed(int s) {
  if (s < 1) throw std::invalid_argument("ks_closed: s must be >= 1");
  // 2^{2s+1} s^2 (3s)!/(2s+1)! with the factorial quotient expanded as the
  // product (2s+2)(2s+3)...(3s).
  ExactUint r(1);
  for (int i = 0; i < 2 * s + 1; ++i) r = r * ExactUint(2);
  r = r * ExactUint(static_cast<std::uint64_t>(s)) *
      ExactUint(static_cast<std::uint64_t>(s));
  for (int j = 2 * s + 2; j <= 3 * s; ++j) {
    r = r * ExactUint(static_cast<std::uint64_t>(j));
  }
  return r;
}

ExactRatio ks_upper(int s) {
  if (s < 2) throw std::invalid_argument("ks_upper: s must be >= 2");
  const ExactUint num =
      ks_closed(s) * ExactUint(static_cast<std::uint64_t>(2 * s));
  return ExactRatio(num, ExactUint(static_cast<std::uint64_t>(s + 2)));
}

double ks_log_asymptotic(int s) {
  if (s < 1) throw std::invalid_argument("ks_log_asymptotic: s must be >= 1");
  const double sd = static_cast<double>(s);
  return std::log(sd) + 0.5 * std::log(1.5) +
         sd * (std::log(27.0) + std::log(sd) - 1.0);
}

double ks_log_exact(int s) {
  if (s < 1) throw std::invalid_argument("ks_log_exact: s must be >= 1");
  const double sd = static_cast<double>(s);
  return (2.0 * sd + 1.0) * std::log(2.0) + 2.0 * std::log(sd) +
         std::lgamma(3.0 * sd + 1.0) - std::lgamma(2.0 * sd + 2.0);
}

double lipschitz_bound(const SmoothnessData& data) {
  const int s = data.smoothness;
  if (s < 1) throw std::invalid_argument("lipschitz_bound: s must be >= 1");
  if (data.m_psi < 0.0 || data.m_psi_s1 < 0.0 || data.w_s1_sup < 0.0) {
    throw std::invalid_argument("lipschitz_bound: suprema must be >= 0");
  }
  const double width = 2.0 * kPi;
  const double c_psi = c_constant(data.m_psi, data.m_psi_s1, width, s);
  const double c_w = c_constant(1.0, data.w_s1_sup, width, s);
  return data.m_psi_s1 + data.m_psi * data.w_s1_sup +
         c_psi * c_w * ks_closed(s).to_double() / pow_int(width, s + 1);
}

double k_inf_constant(const RealFunction& psi, const WindowSpec& w,
                      double rho_eval, int grid_points) {
  if (!(rho_eval > 0.0) || rho_eval >= w.frame().half_width) {
    throw std::invalid_argument(
        "k_inf_constant: need 0 < rho_eval < half_width");
  }
  if (grid_points < 2) {
    throw std::invalid_argument("k_inf_constant: need >= 2 grid points");
  }
  const double t = w.frame().center;
  auto objective = [&](double off) {
    return std::abs(psi(t + off)) * (1.0 - window_eval(w, off));
  };
  const double dx = 2.0 * rho_eval / static_cast<double>(grid_points - 1);
  double best = 0.0;
  double best_off = -rho_eval;
  for (int g = 0; g < grid_points; ++g) {
    const double off = -rho_eval + dx * static_cast<double>(g);
    const double v = objective(off);
    if (v > best) {
      best = v;
      best_off = off;
    }
  }
  // One Newton polish from the best node, using central differences at the
  // grid scale; only accepted when it stays inside the neighboring cells
  // and actually improves the objective.
  const double h = dx;
  if (best_off - h > -rho_eval && best_off + h < rho_eval) {
    const double f0 = objective(best_off);
    const double fp = objective(best_off + h);
    const double fm = objective(best_off - h);
    const double d1 = (fp - fm) / (2.0 * h);
    const double d2 = (fp - 2.0 * f0 + fm) / (h * h);
    if (d2 < 0.0) {
      const double step = -d1 / d2;
      if (std::abs(step) <= h) {
        best = std::max(best, objective(best_off + step));
      }
    }
  }
  return best;
}

double k2_constant(const RealFunction& psi, const WindowSpec& w,
                   double rho_eval, int grid_points) {
  if (!(rho_eval > 0.0) || rho_eval >= w.frame().half_width) {
    throw std::invalid_argument(
        "k2_constant: need 0 < rho_eval < half_width");
  }
  if (grid_points < 3 || grid_points % 2 == 0) {
    throw std::invalid_argument("k2_constant: grid_points must be odd >= 3");
  }
  const double t = w.frame().center;
  const double dx = 2.0 * rho_eval / static_cast<double>(grid_points - 1);
  double acc = 0.0;
  for (int g = 0; g < grid_points; ++g) {
    const double off = -rho_eval + dx * static_cast<double>(g);
    const double r = std::abs(psi(t + off)) * (1.0 - window_eval(w, off));
    const double sw =
        (g == 0 || g == grid_points - 1) ? 1.0 : (g % 2 == 1 ? 4.0 : 2.0);
    acc += sw * r * r;
  }
  return acc * dx / 3.0;
}

std::pair<double, double> sup_error_envelope(double k_inf, double l_s, int s,
                                             int n) {
  if (n < 1) throw std::invalid_argument("sup_error_envelope: n must be >= 1");
  if (s < 1) throw std::invalid_argument("sup_error_envelope: s must be >= 1");
  const double band =
      4.0 * l_s / (static_cast<double>(s) * pow_int(static_cast<double>(n), s));
  return {std::max(0.0, k_inf - band), k_inf + band};
}

std::pair<double, double> l2_error_envelope(double k2, double k_inf,
                                            double l_s, double rho, int s,
                                            int n) {
  if (n < 1) throw std::invalid_argument("l2_error_envelope: n must be >= 1");
  if (s < 1) throw std::invalid_argument("l2_error_envelope: s must be >= 1");
  const double ns = pow_int(static_cast<double>(n), s);
  const double sd = static_cast<double>(s);
  const double band = 16.0 * rho * l_s * k_inf / (sd * ns) +
                      32.0 * rho * l_s * l_s / (sd * sd * ns * ns);
  return {std::max(0.0, k2 - band), k2 + band};
}

double measure_lipschitz(const RealFunction& psi_w, int s, int grid_points) {
  if (s < 1) throw std::invalid_argument("measure_lipschitz: s must be >= 1");
  if (s + 1 > 5) {
    throw std::invalid_argument(
        "measure_lipschitz: derivative order above 5 is not supported");
  }
  if (grid_points < 2) {
    throw std::invalid_argument("measure_lipschitz: need >= 2 grid points");
  }
  const double delta = 1e-6;
  const double h = 2.0 * kPi / 4096.0;
  auto f = [&psi_w](double x) { return psi_w(x); };
  return grid_derivative_sup(f, -kPi + delta, kPi - delta, s + 1, grid_points,
                             h);
}

RealFunction standardized_windowed(const RealFunction& psi,
                                   const WindowSpec& w) {
  const double t = w.frame().center;
  const double lambda = w.frame().half_width;
  return RealFunction([psi, w, t, lambda](double y) {
    const double off = lambda * y / kPi;
    return psi(t + off) * window_eval(w, off);
  });
}

}  // namespace winfour
