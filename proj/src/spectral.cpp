#include "winfour/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <ostream>
#include <stdexcept>

namespace winfour {

namespace {

constexpr double kPi = std::numbers::pi;

bool is_pow2(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

/// Integrand samples g_j = psi(x_j) w(x_j - t) for j = 0..m, with the
/// window taken by its interior limit at the two support endpoints.
std::vector<double> sample_integrand(const RealFunction& psi,
                                     const WindowSpec& w,
                                     const QuadratureGrid& grid) {
  const double lambda = grid.frame.half_width;
  const double t = grid.frame.center;
  const std::size_t m = grid.samples;
  if (auto count = psi.sample_count(); count && *count < m + 1) {
    throw std::invalid_argument(
        "sampled function has fewer samples than quadrature nodes");
  }
  const double delta = grid.spacing();
  std::vector<double> g(m + 1);
  for (std::size_t j = 0; j <= m; ++j) {
    const double off =
        (j == m) ? lambda : -lambda + delta * static_cast<double>(j);
    const double wv = (j == 0 || j == m) ? window_edge_limit(w)
                                         : window_eval(w, off);
    g[j] = psi(t + off) * wv;
  }
  return g;
}

/// Assembly of one coefficient from the transform value at its bin:
/// c(xi) = e^{-i xi pi t / lambda} e^{i xi pi} / m *
///         (r1 e^{-2 pi i xi} - r2 + vhat).
std::complex<double> assemble(double xi, double t, double lambda,
                              std::size_t m, double r1, double r2,
                              const std::complex<double>& vhat) {
  const std::complex<double> corr =
      std::polar(r1, -2.0 * kPi * xi) - std::complex<double>(r2, 0.0);
  const std::complex<double> phase =
      std::polar(1.0, -xi * kPi * t / lambda + xi * kPi);
  return phase * (corr + vhat) / static_cast<double>(m);
}

void validate_window_frame(const WindowSpec& w, const QuadratureGrid& grid) {
  if (w.frame().half_width != grid.frame.half_width) {
    throw std::invalid_argument(
        "window support does not match the quadrature frame");
  }
}

}  // namespace

QuadratureGrid::QuadratureGrid(const AnalysisFrame& f, std::size_t m,
                               std::size_t n)
    : frame(f), samples(m), transform(n) {
  if (!is_pow2(m) || m < 2) {
    throw std::invalid_argument(
        "QuadratureGrid: sample count must be a power of two >= 2");
  }
  if (!is_pow2(n) || n < m) {
    throw std::invalid_argument(
        "QuadratureGrid: transform length must be a power of two >= samples");
  }
}

std::complex<double> CoefficientSet::at(double xi) const {
  const auto it =
      std::lower_bound(frequencies.begin(), frequencies.end(), xi);
  if (it == frequencies.end() || *it != xi) {
    throw std::invalid_argument("CoefficientSet: frequency not present");
  }
  return values[static_cast<std::size_t>(it - frequencies.begin())];
}

bool CoefficientSet::has(double xi) const {
  const auto it =
      std::lower_bound(frequencies.begin(), frequencies.end(), xi);
  return it != frequencies.end() && *it == xi;
}

std::vector<std::complex<double>> dft(
    const std::vector<std::complex<double>>& v) {
  const std::size_t d = v.size();
  if (d == 0) {
    throw std::invalid_argument("dft: empty input");
  }
  if (!is_pow2(d)) {
    // Direct O(d^2) fallback for general lengths.
    std::vector<std::complex<double>> out(d);
    for (std::size_t l = 0; l < d; ++l) {
      std::complex<double> acc = 0.0;
      for (std::size_t j = 0; j < d; ++j) {
        const double angle = -2.0 * kPi *
                             static_cast<double>((j * l) % d) /
                             static_cast<double>(d);
        acc += v[j] * std::polar(1.0, angle);
      }
      out[l] = acc;
    }
    return out;
  }

  // Iterative radix-2 with bit-reversal permutation.
  std::vector<std::complex<double>> a = v;
  const std::size_t n = d;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const double angle = -2.0 * kPi / static_cast<double>(len);
    std::vector<std::complex<double>> roots(len / 2);
    for (std::size_t k = 0; k < len / 2; ++k) {
      roots[k] = std::polar(1.0, angle * static_cast<double>(k));
    }
    for (std::size_t i = 0; i < n; i += len) {
      for (std::size_t k = 0; k < len / 2; ++k) {
        const std::complex<double> u = a[i + k];
        const std::complex<double> w = roots[k] * a[i + k + len / 2];
        a[i + k] = u + w;
        a[i + k + len / 2] = u - w;
      }
    }
  }
  return a;
}

CoefficientSet coefficients_fft(const RealFunction& psi, const WindowSpec& w,
                                const QuadratureGrid& grid, long k_max) {
  validate_window_frame(w, grid);
  const std::size_t m = grid.samples;
  const std::size_t n = grid.transform;
  if (k_max < 0 || static_cast<std::size_t>(k_max) > m / 2) {
    throw std::invalid_argument("coefficients_fft: need 0 <= k_max <= m/2");
  }
  const std::vector<double> g = sample_integrand(psi, w, grid);
  const double r1 = 0.5 * g[m];
  const double r2 = 0.5 * g[0];

  std::vector<std::complex<double>> v(n, 0.0);
  for (std::size_t j = 0; j < m; ++j) v[j] = g[j];
  const std::vector<std::complex<double>> vhat = dft(v);

  const std::size_t stride = n / m;
  CoefficientSet out;
  out.frame = grid.frame;
  out.window = w.kind();
  out.method = CoefficientMethod::Fft;
  out.frequencies.reserve(static_cast<std::size_t>(2 * k_max + 1));
  out.values.reserve(static_cast<std::size_t>(2 * k_max + 1));
  for (long k = -k_max; k <= k_max; ++k) {
    // k_max <= m/2 keeps the wrapped bin inside 0..n-1.
    const std::size_t bin =
        k >= 0 ? static_cast<std::size_t>(k) * stride
               : n - static_cast<std::size_t>(-k) * stride;
    out.frequencies.push_back(static_cast<double>(k));
    out.values.push_back(assemble(static_cast<double>(k), grid.frame.center,
                                  grid.frame.half_width, m, r1, r2,
                                  vhat[bin]));
  }
  return out;
}

CoefficientSet coefficients_direct(const RealFunction& psi,
                                   const WindowSpec& w,
                                   const QuadratureGrid& grid,
                                   std::span<const long> k_list) {
  validate_window_frame(w, grid);
  const std::size_t m = grid.samples;
  const double lambda = grid.frame.half_width;
  const double t = grid.frame.center;
  const double delta = grid.spacing();
  const std::vector<double> g = sample_integrand(psi, w, grid);

  std::vector<long> ks(k_list.begin(), k_list.end());
  std::sort(ks.begin(), ks.end());
  ks.erase(std::unique(ks.begin(), ks.end()), ks.end());

  CoefficientSet out;
  out.frame = grid.frame;
  out.window = w.kind();
  out.method = CoefficientMethod::DirectTrapezoid;
  out.frequencies.reserve(ks.size());
  out.values.reserve(ks.size());
  for (long k : ks) {
    // Trapezoid weights: half at both endpoint nodes.
    long double acc_re = 0.0L, acc_im = 0.0L;
    for (std::size_t j = 0; j <= m; ++j) {
      const double x = (j == m) ? t + lambda
                                : t - lambda + delta * static_cast<double>(j);
      const double weight = (j == 0 || j == m) ? 0.5 : 1.0;
      const double angle = -static_cast<double>(k) * kPi * x / lambda;
      acc_re += static_cast<long double>(weight * g[j] * std::cos(angle));
      acc_im += static_cast<long double>(weight * g[j] * std::sin(angle));
    }
    const double norm = delta / (2.0 * lambda);
    out.frequencies.push_back(static_cast<double>(k));
    out.values.emplace_back(static_cast<double>(acc_re) * norm,
                            static_cast<double>(acc_im) * norm);
  }
  return out;
}

CoefficientSet extended_coefficients(const RealFunction& psi,
                                     const WindowSpec& w,
                                     const QuadratureGrid& grid) {
  validate_window_frame(w, grid);
  const std::size_t m = grid.samples;
  const std::size_t n = grid.transform;
  const std::vector<double> g = sample_integrand(psi, w, grid);
  const double r1 = 0.5 * g[m];
  const double r2 = 0.5 * g[0];

  std::vector<std::complex<double>> v(n, 0.0);
  for (std::size_t j = 0; j < m; ++j) v[j] = g[j];
  const std::vector<std::complex<double>> vhat = dft(v);

  CoefficientSet out;
  out.frame = grid.frame;
  out.window = w.kind();
  out.method = CoefficientMethod::Fft;
  out.frequencies.resize(n);
  out.values.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const double xi = static_cast<double>(m) * static_cast<double>(i) /
                      static_cast<double>(n);
    out.frequencies[i] = xi;
    out.values[i] = assemble(xi, grid.frame.center, grid.frame.half_width, m,
                             r1, r2, vhat[i]);
  }
  return out;
}

void write_csv(const CoefficientSet& coeffs, std::ostream& out) {
  out << "xi,re,im,abs2\n";
  char buf[128];
  for (std::size_t i = 0; i < coeffs.frequencies.size(); ++i) {
    const std::complex<double> c = coeffs.values[i];
    std::snprintf(buf, sizeof(buf), "%.17g,%.17g,%.17g,%.17g\n",
                  coeffs.frequencies[i], c.real(), c.imag(), std::norm(c));
    out << buf;
  }
}

}  // namespace winfour
