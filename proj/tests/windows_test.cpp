#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "winfour/real_function.hpp"
#include "winfour/windows.hpp"

using namespace winfour;

namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_CASE("frame validation") {
  CHECK_THROWS_AS(AnalysisFrame(0.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(AnalysisFrame(0.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(AnalysisFrame(0.0, 1.0, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(AnalysisFrame(0.0, 1.0, -0.1), std::invalid_argument);
  CHECK_NOTHROW(AnalysisFrame(0.0, 1.0, 0.0));  // degenerate bump allowed
}

TEST_CASE("hann window values") {
  const WindowSpec w = WindowSpec::hann(AnalysisFrame(0.0, kPi));
  CHECK(window_eval(w, 0.0) == 1.0);
  CHECK(window_eval(w, kPi / 2.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(window_eval(w, kPi) == 0.0);
  CHECK(window_eval(w, -kPi) == 0.0);
  CHECK(window_eval(w, 2.0 * kPi) == 0.0);
}

TEST_CASE("smooth bump values") {
  // Degenerate bump at half of its taper: both exp terms cancel.
  const WindowSpec w = WindowSpec::smooth_bump(AnalysisFrame(0.0, 2.0, 0.0));
  CHECK(window_eval(w, 1.0) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(window_eval(w, 0.0) == 1.0);
  CHECK(window_eval(w, 2.0) == 0.0);

  const WindowSpec b = WindowSpec::smooth_bump(AnalysisFrame(0.0, 1.0, 0.25));
  CHECK(window_eval(b, 0.25) == 1.0);
  CHECK(window_eval(b, 0.999999) >= 0.0);
  CHECK(window_eval(b, 0.999999) < 1e-6);
}

TEST_CASE("NaN rejected") {
  const WindowSpec w = WindowSpec::hann(AnalysisFrame(0.0, 1.0));
  CHECK_THROWS_AS(window_eval(w, std::nan("")), std::invalid_argument);
}

TEST_CASE("tukey alpha=1 equals hann") {
  const WindowSpec h = WindowSpec::hann(AnalysisFrame(0.0, 1.7));
  const WindowSpec t = WindowSpec::tukey(AnalysisFrame(0.0, 1.7, 0.0), 1.0);
  for (int i = 0; i <= 100000; ++i) {
    const double x = -2.0 + 4.0 * static_cast<double>(i) / 100000.0;
    CHECK(std::abs(window_eval(h, x) - window_eval(t, x)) <= 1e-15);
  }
}

TEST_CASE("window range, support and symmetry") {
  const AnalysisFrame frame(0.0, 1.3, 0.4);
  const WindowSpec specs[] = {
      WindowSpec::rectangular(frame), WindowSpec::hann(AnalysisFrame(0.0, 1.3)),
      WindowSpec::tukey(frame), WindowSpec::smooth_bump(frame)};
  std::mt19937 rng(12345);
  std::uniform_real_distribution<double> dist(-3.0, 3.0);
  for (int i = 0; i < 1000000; ++i) {
    const double x = dist(rng);
    for (const WindowSpec& w : specs) {
      const double v = window_eval(w, x);
      CHECK(v >= 0.0);
      CHECK(v <= 1.0);
      if (std::abs(x) >= 1.3) CHECK(v == 0.0);
      CHECK(v == window_eval(w, -x));
    }
  }
}

TEST_CASE("plateau is exactly one") {
  const AnalysisFrame frame(0.0, 1.3, 0.4);
  const WindowSpec tukey = WindowSpec::tukey(frame);
  const WindowSpec bump = WindowSpec::smooth_bump(frame);
  std::mt19937 rng(99);
  std::uniform_real_distribution<double> dist(-0.4, 0.4);
  for (int i = 0; i < 10000; ++i) {
    const double x = dist(rng);
    CHECK(window_eval(tukey, x) == 1.0);
    CHECK(window_eval(bump, x) == 1.0);
  }
  CHECK(window_eval(tukey, 0.4) == 1.0);
  CHECK(window_eval(bump, 0.4) == 1.0);
}

TEST_CASE("hann superposition lemma") {
  // Single term reduces to one Hann window.
  for (double x : {-0.2, 0.0, 0.35, 0.9}) {
    const WindowSpec h = WindowSpec::hann(AnalysisFrame(0.0, 1.0));
    CHECK(hann_superposition(1.0, 0, x) ==
          doctest::Approx(window_eval(h, x)).epsilon(1e-15));
  }
  // Interior plateau value.
  CHECK(hann_superposition(0.7, 3, 0.0) == doctest::Approx(1.0).epsilon(1e-13));

  for (double tau : {0.3, 0.7, 1.0}) {
    for (int m : {0, 1, 2, 3}) {
      const double alpha = 1.0 / static_cast<double>(m + 1);
      const double lambda = static_cast<double>(m + 1) * tau;
      const WindowSpec t = WindowSpec::tukey(
          AnalysisFrame(0.0, lambda, (1.0 - alpha) * lambda), alpha);
      double max_dev = 0.0;
      for (int i = 0; i <= 4000; ++i) {
        const double x =
            -1.5 * lambda + 3.0 * lambda * static_cast<double>(i) / 4000.0;
        max_dev = std::max(max_dev, std::abs(hann_superposition(tau, m, x) -
                                             window_eval(t, x)));
      }
      CHECK(max_dev <= 1e-12);
    }
  }
}

TEST_CASE("translate and scale operators") {
  const RealFunction id([](double x) { return x; });
  const RealFunction sq([](double x) { return x * x; });
  CHECK(translate(id, 1.0)(0.0) == 1.0);
  CHECK(translate(sq, -2.0)(0.0) == 4.0);
  CHECK(scale(id, 2.0)(3.0) == 6.0);
  CHECK_THROWS_AS(scale(id, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(scale(id, -1.0), std::invalid_argument);

  // Inverse pairs restore the input exactly on rational points.
  const RealFunction f([](double x) { return 3.0 * x - 0.5; });
  const RealFunction tt = translate(translate(f, 0.25), -0.25);
  const RealFunction ss = scale(scale(f, 4.0), 0.25);
  for (double x : {-2.0, -0.5, 0.0, 0.75, 3.0}) {
    CHECK(tt(x) == f(x));
    CHECK(ss(x) == f(x));
  }

  // Rescaling a Hann window onto another support.
  const WindowSpec hpi = WindowSpec::hann(AnalysisFrame(0.0, kPi));
  const WindowSpec h2 = WindowSpec::hann(AnalysisFrame(0.0, 2.0));
  const RealFunction hpi_fn([&](double x) { return window_eval(hpi, x); });
  const RealFunction rescaled = scale(hpi_fn, kPi / 2.0);
  for (int i = 0; i <= 1000; ++i) {
    const double x = -2.2 + 4.4 * static_cast<double>(i) / 1000.0;
    CHECK(rescaled(x) == doctest::Approx(window_eval(h2, x)).epsilon(1e-14));
  }
}

TEST_CASE("sampled function interpolation") {
  // x^2 sampled at -1, 0, 1; linear interpolation between samples.
  const RealFunction f = RealFunction::from_samples(-1.0, 1.0, {1.0, 0.0, 1.0});
  CHECK(f(-1.0) == 1.0);
  CHECK(f(0.0) == 0.0);
  CHECK(f(0.5) == 0.5);
  CHECK(f(-0.25) == 0.25);
  CHECK(f.sample_count().value() == 3);
  CHECK_THROWS_AS(f(1.5), std::domain_error);
  CHECK_THROWS_AS(RealFunction::from_samples(-1.0, 1.0, {1.0}),
                  std::invalid_argument);
  CHECK_THROWS_AS(RealFunction::from_samples(1.0, -1.0, {1.0, 2.0}),
                  std::invalid_argument);

  const RealFunction g([](double x) { return x; });
  CHECK_FALSE(g.sample_count().has_value());
}

TEST_CASE("periodization") {
  const RealFunction id([](double x) { return x; });
  const RealFunction per = periodize(id, kPi);
  CHECK(per(kPi) == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(per(kPi / 2.0 + 2.0 * kPi) == doctest::Approx(kPi / 2.0));
  CHECK(per(0.3) == 0.3);

  const RealFunction sq([](double x) { return x * x; });
  const RealFunction per2 = periodize(sq, 1.0);
  CHECK(per2(1.0) == doctest::Approx(1.0).epsilon(1e-9));

  // 2-lambda periodicity, exact for exactly representable shifts.
  const RealFunction per3 = periodize(id, 1.0);
  for (double x : {-0.75, -0.25, 0.0, 0.5}) {
    CHECK(per3(x + 2.0) == per3(x));
    CHECK(per3(x - 2.0) == per3(x));
  }
}

TEST_CASE("window derivative suprema") {
  const WindowSpec hann = WindowSpec::hann(AnalysisFrame(0.0, kPi));
  CHECK(window_derivative_sup(hann, 1) == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(window_derivative_sup(hann, 2) == doctest::Approx(0.5).epsilon(1e-15));

  const WindowSpec hann1 = WindowSpec::hann(AnalysisFrame(0.0, 1.0));
  CHECK(window_derivative_sup(hann1, 1) ==
        doctest::Approx(0.5 * kPi).epsilon(1e-15));

  // Tukey with alpha = 1 matches Hann.
  const WindowSpec tk = WindowSpec::tukey(AnalysisFrame(0.0, kPi, 0.0), 1.0);
  CHECK(window_derivative_sup(tk, 3) ==
        doctest::Approx(window_derivative_sup(hann, 3)));

  const WindowSpec rect = WindowSpec::rectangular(AnalysisFrame(0.0, 1.0));
  CHECK_THROWS_AS(window_derivative_sup(rect, 1), std::invalid_argument);
  CHECK_THROWS_AS(window_derivative_sup(hann, 0), std::invalid_argument);

  // A steeper taper has the larger first-derivative supremum.
  const WindowSpec narrow =
      WindowSpec::smooth_bump(AnalysisFrame(0.0, 1.0, 0.8));
  const WindowSpec wide =
      WindowSpec::smooth_bump(AnalysisFrame(0.0, 1.0, 0.25));
  CHECK(window_derivative_sup(narrow, 1) > window_derivative_sup(wide, 1));
}

TEST_CASE("smooth bump derivative estimate is consistent") {
  // For a Hann-sized taper the bump's first derivative never exceeds the
  // scale set by the taper width; sanity-check the estimator's magnitude.
  const WindowSpec bump =
      WindowSpec::smooth_bump(AnalysisFrame(0.0, 1.0, 0.5));
  const double d1 = window_derivative_sup(bump, 1);
  CHECK(d1 > 1.0);
  CHECK(d1 < 20.0);
  const double d2 = window_derivative_sup(bump, 2);
  CHECK(d2 > d1);
}
