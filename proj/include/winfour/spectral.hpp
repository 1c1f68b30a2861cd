#pragma once

#include <complex>
#include <cstddef>
#include <iosfwd>
#include <span>
#include <vector>

#include "winfour/frame.hpp"
#include "winfour/real_function.hpp"
#include "winfour/windows.hpp"

namespace winfour {

/// Composite-trapezoid sampling plan: m + 1 nodes spaced 2*lambda/m across
/// the frame interval, zero-padded to a length-N transform. Both m and N
/// must be powers of two with m <= N, so every integer frequency k <= m/2
/// falls on the transform bin k*N/m.
struct QuadratureGrid {
  AnalysisFrame frame;
  std::size_t samples = 1u << 12;    // m
  std::size_t transform = 1u << 14;  // N

  QuadratureGrid(const AnalysisFrame& f, std::size_t m, std::size_t n);

  double spacing() const {
    return 2.0 * frame.half_width / static_cast<double>(samples);
  }
};

enum class CoefficientMethod { Fft, DirectTrapezoid, Analytic };

/// Fourier coefficients c(xi) on a frame, at integer or fractional
/// frequencies, stored with the 1/(2*lambda) normalization so that partial
/// sums reconstruct the windowed function directly.
struct CoefficientSet {
  AnalysisFrame frame;
  std::vector<double> frequencies;  // strictly increasing
  std::vector<std::complex<double>> values;
  WindowKind window = WindowKind::Rectangular;
  CoefficientMethod method = CoefficientMethod::Fft;

  /// Value at frequency xi; throws if xi is not present.
  std::complex<double> at(double xi) const;
  bool has(double xi) const;
};

/// Unnormalized DFT with the e^{-2 pi i jl/d} convention. Radix-2 FFT for
/// power-of-two lengths, direct summation otherwise.
std::vector<std::complex<double>> dft(
    const std::vector<std::complex<double>>& v);

/// Windowed coefficients c(k), k = -k_max..k_max, via one zero-padded FFT
/// of the trapezoid samples plus the endpoint corrections.
CoefficientSet coefficients_fft(const RealFunction& psi, const WindowSpec& w,
                                const QuadratureGrid& grid, long k_max);

/// Same trapezoid sum evaluated termwise per frequency; the verification
/// oracle for the FFT assembly.
CoefficientSet coefficients_direct(const RealFunction& psi,
                                   const WindowSpec& w,
                                   const QuadratureGrid& grid,
                                   std::span<const long> k_list);

/// Coefficients at the N fractional frequencies xi_n = m*n/N, n = 0..N-1.
/// Integer xi entries coincide with coefficients_fft outputs.
CoefficientSet extended_coefficients(const RealFunction& psi,
                                     const WindowSpec& w,
                                     const QuadratureGrid& grid);

/// CSV with header xi,re,im,abs2 at 17 significant digits.
void write_csv(const CoefficientSet& coeffs, std::ostream& out);

}  // namespace winfour
