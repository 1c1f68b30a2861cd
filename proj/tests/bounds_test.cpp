#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>
#include <vector>

#include "winfour/bounds.hpp"
#include "winfour/corpus.hpp"
#include "winfour/finite_difference.hpp"
#include "winfour/windows.hpp"

using namespace winfour;

namespace {

constexpr double kPi = std::numbers::pi;

// Monomial coefficients of the Chebyshev polynomial T_s via the recurrence
// T_{n+1} = 2 x T_n - T_{n-1}; exact in double for the small degrees used.
std::vector<double> chebyshev_coeffs(int s) {
  std::vector<double> prev = {1.0};
  if (s == 0) return prev;
  std::vector<double> cur = {0.0, 1.0};
  for (int n = 2; n <= s; ++n) {
    std::vector<double> next(static_cast<std::size_t>(n) + 1, 0.0);
    for (std::size_t i = 0; i < cur.size(); ++i) next[i + 1] += 2.0 * cur[i];
    for (std::size_t i = 0; i < prev.size(); ++i) next[i] -= prev[i];
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

std::vector<double> poly_derivative(const std::vector<double>& c) {
  if (c.size() <= 1) return {0.0};
  std::vector<double> d(c.size() - 1);
  for (std::size_t i = 1; i < c.size(); ++i) {
    d[i - 1] = c[i] * static_cast<double>(i);
  }
  return d;
}

double poly_eval(const std::vector<double>& c, double x) {
  double acc = 0.0;
  for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + c[i];
  return acc;
}

// T_s^{(i)}(1) = prod_{j=0}^{i-1} (s^2 - j^2) / (2j + 1), evaluated in exact
// integer arithmetic with the division performed last.
ExactUint chebyshev_derivative_at_one(int i, int s) {
  ExactUint num(1), den(1);
  for (int j = 0; j < i; ++j) {
    num = num * ExactUint(static_cast<std::uint64_t>(s * s - j * j));
    den = den * ExactUint(static_cast<std::uint64_t>(2 * j + 1));
  }
  return num.divide_exact(den);
}

}  // namespace

TEST_CASE("jackson bound") {
  CHECK(jackson_sup_bound(0.0, 1, 5) == 0.0);
  CHECK(jackson_sup_bound(1.0, 1, 10) ==
        doctest::Approx(2.0 / (10.0 * kPi)).epsilon(1e-15));
  CHECK(jackson_sup_bound(kPi, 2, 4) == doctest::Approx(1.0 / 16.0));
  CHECK_THROWS_AS(jackson_sup_bound(1.0, 1, 0), std::invalid_argument);
}

TEST_CASE("coefficient decay bound") {
  CHECK(coefficient_decay_bound(0.0, 1, 3) == 0.0);
  CHECK(coefficient_decay_bound(kPi, 1, 2) == doctest::Approx(0.25));
  CHECK(coefficient_decay_bound(kPi, 3, -2) == doctest::Approx(1.0 / 16.0));
  CHECK_THROWS_AS(coefficient_decay_bound(1.0, 1, 0), std::invalid_argument);
}

TEST_CASE("variation coefficient bound") {
  CHECK(variation_coefficient_bound(0.0) == 0.0);
  CHECK(variation_coefficient_bound(2.0 * kPi) == doctest::Approx(1.0));
  // Saw periodization: variation 2 pi across the interval plus a jump of
  // height 2 pi, so the bound is 2 and |k c(k)| = 1 stays below it.
  const double bound = variation_coefficient_bound(4.0 * kPi);
  CHECK(bound == doctest::Approx(2.0));
  for (long k = 1; k <= 100; ++k) {
    const double kck =
        std::abs(analytic_coefficient(TestFunctionId::Saw,
                                      AnalyticWindow::Plain, k)) *
        static_cast<double>(k);
    CHECK(kck <= bound);
  }
}

TEST_CASE("combinatorial constant K(i,s)") {
  CHECK(k_small(1, 1) == ExactUint(2));
  CHECK(k_small(1, 2) == ExactUint(8));
  CHECK(k_small(2, 2) == ExactUint(16));
  CHECK(k_small(1, 3) == ExactUint(18));
  CHECK_THROWS_AS(k_small(0, 1), std::invalid_argument);
  CHECK_THROWS_AS(k_small(3, 2), std::invalid_argument);
}

TEST_CASE("markoff sharpness against chebyshev derivatives") {
  for (int s = 1; s <= 6; ++s) {
    for (int i = 1; i <= s; ++i) {
      ExactUint lhs = chebyshev_derivative_at_one(i, s);
      for (int p = 0; p < i; ++p) lhs = lhs * ExactUint(2);
      CHECK(lhs == k_small(i, s));
    }
  }
}

TEST_CASE("ore intermediate derivative bound") {
  CHECK(ore_intermediate_bound(1, 1, 0.0, 2.0) == 0.0);
  CHECK(ore_intermediate_bound(1, 1, 1.0, 2.0) == doctest::Approx(1.0));
  CHECK(ore_intermediate_bound(2, 2, 1.0, 2.0) == doctest::Approx(4.0));
  CHECK_THROWS_AS(ore_intermediate_bound(3, 2, 1.0, 2.0),
                  std::invalid_argument);
}

TEST_CASE("ore bound dominates chebyshev derivatives on (-1,1)") {
  for (int s = 2; s <= 6; ++s) {
    const double c_sf = c_constant(1.0, 0.0, 2.0, s);
    std::vector<double> coeffs = chebyshev_coeffs(s);
    for (int i = 1; i <= s; ++i) {
      coeffs = poly_derivative(coeffs);
      double sup = 0.0;
      for (int g = 0; g <= 10000; ++g) {
        const double x = -1.0 + 2.0 * static_cast<double>(g) / 10000.0;
        sup = std::max(sup, std::abs(poly_eval(coeffs, x)));
      }
      CHECK(sup <=
            ore_intermediate_bound(i, s, c_sf, 2.0) * (1.0 + 1e-12));
    }
  }
}

TEST_CASE("c constant") {
  CHECK(c_constant(1.0, 0.0, 2.0, 1) == 1.0);
  CHECK(c_constant(0.0, 2.0, 2.0, 1) == doctest::Approx(4.0));
  CHECK(c_constant(1.0, 1.0, 2.0 * kPi, 1) ==
        doctest::Approx(1.0 + 2.0 * kPi * kPi).epsilon(1e-15));
}

TEST_CASE("product derivative bound") {
  CHECK(product_derivative_bound(0, 0, 0, 0, 0, 0, 1.0, 1) == 0.0);
  // f = g = x on (-1,1), s = 1: the bound equals K_1 / 4 = 2, which is the
  // exact supremum of |(x^2)''|.
  CHECK(product_derivative_bound(1.0, 1.0, 0.0, 0.0, 1.0, 1.0, 2.0, 1) ==
        doctest::Approx(2.0));
}

TEST_CASE("product bound dominates a measured product derivative") {
  std::mt19937 rng(31);
  std::uniform_real_distribution<double> amp(-0.8, 0.8);
  for (int trial = 0; trial < 5; ++trial) {
    const double a0 = amp(rng), a1 = amp(rng), a2 = amp(rng);
    const double b0 = amp(rng), b1 = amp(rng), b2 = amp(rng);
    auto f = [=](double x) {
      return a0 + a1 * std::sin(x) + a2 * std::cos(2.0 * x);
    };
    auto g = [=](double x) {
      return b0 + b1 * std::cos(x) + b2 * std::sin(2.0 * x);
    };
    const int s = 2;
    // |f| <= |a0|+|a1|+|a2| and |f'''| <= |a1| + 8 |a2| on any interval.
    const double mf = std::abs(a0) + std::abs(a1) + std::abs(a2);
    const double mf3 = std::abs(a1) + 8.0 * std::abs(a2);
    const double mg = std::abs(b0) + std::abs(b1) + std::abs(b2);
    const double mg3 = std::abs(b1) + 8.0 * std::abs(b2);
    const double width = 2.0 * kPi;
    const double csf = c_constant(mf, mf3, width, s);
    const double csg = c_constant(mg, mg3, width, s);
    const double bound =
        product_derivative_bound(mf, mg, mf3, mg3, csf, csg, width, s);
    auto prod = [&](double x) { return f(x) * g(x); };
    const double measured =
        grid_derivative_sup(prod, -kPi, kPi, s + 1, 2001, 1e-3);
    CHECK(measured <= bound);
  }
}

TEST_CASE("K_s values and the two routes agree") {
  CHECK(ks_sum(1) == ExactUint(8));
  CHECK(ks_sum(2) == ExactUint(768));
  CHECK(ks_sum(3) == ExactUint(82944));
  CHECK(ks_closed(1) == ExactUint(8));
  CHECK(ks_closed(2) == ExactUint(768));
  CHECK(ks_closed(3) == ExactUint(82944));
  for (int s = 1; s <= 12; ++s) {
    CHECK(ks_sum(s) == ks_closed(s));
  }
}

TEST_CASE("K_s overflow is detected, logs still work") {
  CHECK_NOTHROW(ks_closed(16));
  CHECK_THROWS_AS(ks_closed(17), std::overflow_error);
  CHECK(std::isfinite(ks_log_exact(1000)));
  CHECK(std::isfinite(ks_log_asymptotic(1000)));
}

TEST_CASE("appendix bound ratio") {
  const ExactRatio u2 = ks_upper(2);
  CHECK(u2.is_integral());
  CHECK(u2.num == ExactUint(768));

  const ExactRatio u3 = ks_upper(3);
  CHECK(u3.num == ExactUint(497664));
  CHECK(u3.den == ExactUint(5));

  // Against the independent summation route: upper / ks_sum == 2s/(s+2).
  for (int s = 2; s <= 12; ++s) {
    const ExactRatio upper = ks_upper(s);
    const ExactRatio ratio(upper.num, upper.den * ks_sum(s));
    CHECK(ratio == ExactRatio(ExactUint(static_cast<std::uint64_t>(2 * s)),
                              ExactUint(static_cast<std::uint64_t>(s + 2))));
  }
  CHECK_THROWS_AS(ks_upper(1), std::invalid_argument);
}

TEST_CASE("stirling approximation of K_s") {
  // s = 1: the asymptotic value 27/e * sqrt(3/2) is about 1.52x the true 8.
  const double ratio1 = std::exp(ks_log_asymptotic(1) - ks_log_exact(1));
  CHECK(ratio1 == doctest::Approx(1.52).epsilon(0.01));
  CHECK(std::exp(ks_log_exact(3)) == doctest::Approx(82944.0).epsilon(1e-9));

  const double rel30 =
      std::abs(ks_log_asymptotic(30) - ks_log_exact(30)) / ks_log_exact(30);
  CHECK(rel30 <= 0.01);

  double prev = std::exp(ks_log_asymptotic(5) - ks_log_exact(5));
  for (int s : {10, 20, 40}) {
    const double r = std::exp(ks_log_asymptotic(s) - ks_log_exact(s));
    CHECK(r < prev);
    CHECK(r > 1.0);
    prev = r;
  }
}

TEST_CASE("lipschitz bound") {
  SmoothnessData zero;
  zero.smoothness = 1;
  CHECK(lipschitz_bound(zero) == 0.0);

  // Saw-like data: M_psi = pi, M_psi_2 = 0, s = 1.
  SmoothnessData saw;
  saw.smoothness = 1;
  saw.m_psi = kPi;
  saw.m_psi_s1 = 0.0;
  saw.w_s1_sup = 0.5;  // hann on the normalized frame
  const double c_psi = c_constant(kPi, 0.0, 2.0 * kPi, 1);
  const double c_w = c_constant(1.0, 0.5, 2.0 * kPi, 1);
  const double expect =
      kPi * 0.5 + c_psi * c_w * 8.0 / ((2.0 * kPi) * (2.0 * kPi));
  CHECK(lipschitz_bound(saw) == doctest::Approx(expect).epsilon(1e-15));
}

TEST_CASE("lipschitz bound dominates the measured derivative") {
  for (double rho_frac : {0.25, 0.5}) {
    for (int s : {1, 2}) {
      const AnalysisFrame frame(0.0, kPi, rho_frac * kPi);
      const WindowSpec bump = WindowSpec::smooth_bump(frame);
      const RealFunction psi = test_function(TestFunctionId::Saw);

      SmoothnessData data;
      data.smoothness = s;
      data.m_psi = kPi;
      data.m_psi_s1 = 0.0;
      data.w_s1_sup = window_derivative_sup(bump, s + 1);
      const double bound = lipschitz_bound(data);
      const double measured =
          measure_lipschitz(standardized_windowed(psi, bump), s, 8193);
      CHECK(measured <= bound);
    }
  }
}

TEST_CASE("error floor constants for the saw experiment") {
  const AnalysisFrame frame(0.0, kPi);
  const WindowSpec hann = WindowSpec::hann(frame);
  const RealFunction saw = test_function(TestFunctionId::Saw);
  const double rho = 0.9 * kPi;

  const double k_inf = k_inf_constant(saw, hann, rho, 65537);
  const double s45 = std::sin(0.45 * kPi);
  CHECK(k_inf == doctest::Approx(rho * s45 * s45).epsilon(1e-8));
  CHECK(k_inf == doctest::Approx(2.758).epsilon(1e-3));

  const double k2 = k2_constant(saw, hann, rho, 65537);
  CHECK(k2 == doctest::Approx(8.913).epsilon(1e-3));
}

TEST_CASE("error floor constants for the parabola experiment") {
  const AnalysisFrame frame(0.0, 1.0);
  const WindowSpec hann = WindowSpec::hann(frame);
  const RealFunction parabola = test_function(TestFunctionId::Parabola);

  CHECK(k_inf_constant(parabola, hann, 0.25, 65537) ==
        doctest::Approx(9.1e-3).epsilon(0.02));
  CHECK(k_inf_constant(parabola, hann, 0.8, 65537) ==
        doctest::Approx(0.58).epsilon(0.02));
  CHECK(k2_constant(parabola, hann, 0.25, 65537) ==
        doctest::Approx(4.7e-6).epsilon(0.02));
  CHECK(k2_constant(parabola, hann, 0.8, 65537) ==
        doctest::Approx(0.075).epsilon(0.02));
}

TEST_CASE("floor constants vanish on the plateau") {
  const AnalysisFrame frame(0.0, 1.0, 0.5);
  const WindowSpec bump = WindowSpec::smooth_bump(frame);
  const RealFunction parabola = test_function(TestFunctionId::Parabola);
  CHECK(k_inf_constant(parabola, bump, 0.5, 4097) == 0.0);
  CHECK(k2_constant(parabola, bump, 0.5, 4097) == 0.0);
}

TEST_CASE("error envelopes") {
  CHECK(sup_error_envelope(1.5, 0.0, 1, 7) ==
        std::pair<double, double>(1.5, 1.5));
  CHECK(sup_error_envelope(0.0, 1.0, 1, 4) ==
        std::pair<double, double>(0.0, 1.0));
  const auto [lo, hi] = sup_error_envelope(2.758, 1.0, 1, 1000000);
  CHECK(hi - lo <= 1e-5);

  CHECK(l2_error_envelope(0.3, 0.0, 0.0, 1.0, 1, 2) ==
        std::pair<double, double>(0.3, 0.3));
  const auto [l2lo, l2hi] = l2_error_envelope(0.0, 0.0, 1.0, kPi, 1, 2);
  CHECK(l2lo == 0.0);
  CHECK(l2hi == doctest::Approx(8.0 * kPi));

  // Bands shrink by at least 2x when n doubles while the first-order term
  // dominates.
  const auto [alo, ahi] = l2_error_envelope(0.0, 1.0, 1.0, 1.0, 1, 10);
  const auto [blo, bhi] = l2_error_envelope(0.0, 1.0, 1.0, 1.0, 1, 20);
  CHECK(ahi / bhi >= 2.0);
  CHECK_THROWS_AS(sup_error_envelope(0.0, 1.0, 1, 0), std::invalid_argument);
  CHECK_THROWS_AS(l2_error_envelope(0, 0, 1.0, 1.0, 1, 0),
                  std::invalid_argument);
}

TEST_CASE("jackson consistency of the envelope width") {
  for (int s : {1, 2}) {
    for (int n : {1, 4, 25}) {
      const double l_s = 0.73;
      const auto [lo, hi] = sup_error_envelope(0.0, l_s, s, n);
      const double via_jackson = jackson_sup_bound(2.0 * kPi * l_s, s, n);
      CHECK(hi == doctest::Approx(via_jackson).epsilon(1e-14));
    }
  }
}

TEST_CASE("measured lipschitz constants") {
  const RealFunction sq([](double x) { return x * x; });
  CHECK(measure_lipschitz(sq, 1, 4097) == doctest::Approx(2.0).epsilon(1e-6));

  const RealFunction sine([](double x) { return std::sin(x); });
  CHECK(measure_lipschitz(sine, 2, 4097) == doctest::Approx(1.0).epsilon(1e-5));

  CHECK_THROWS_AS(measure_lipschitz(sq, 5, 128), std::invalid_argument);
}
