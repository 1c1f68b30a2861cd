#pragma once

#include <utility>

#include "winfour/exact.hpp"
#include "winfour/real_function.hpp"
#include "winfour/windows.hpp"

namespace winfour {

/// Inputs of the windowed-Lipschitz bound on the normalized frame
/// (half-width pi, center 0).
struct SmoothnessData {
  int smoothness = 1;       // s >= 1
  double m_psi = 0.0;       // sup |psi| on (-pi, pi)
  double m_psi_s1 = 0.0;    // sup |psi^(s+1)|
  double w_s1_sup = 0.0;    // sup |w^(s+1)|
};

/// Jackson's partial-sum error bound 2V / (s pi n^s) for a 2*pi-periodic
/// function whose s-th derivative has total variation V.
double jackson_sup_bound(double total_variation, int s, int n);

/// Coefficient decay V_s / (pi |k|^{s+1}).
double coefficient_decay_bound(double variation_s, int s, long k);

/// Bound on |k c(k)| for a BV function: V / (2 pi).
double variation_coefficient_bound(double total_variation);

/// Intermediate-derivative constant
/// K(i,s) = 2^i s^2 (s^2-1) ... (s^2-(i-1)^2) / (1*3*...*(2i-1)),
/// computed through the equivalent form s/(s+i) * 2^{2i} * i! * C(s+i, 2i)
/// with the division performed last.
ExactUint k_small(int i, int s);

/// |f^(i)| <= K(i,s) * c_sf / width^i.
double ore_intermediate_bound(int i, int s, double c_sf, double width);

/// C_{s,f} = sup|f| + width^{s+1}/(s+1)! * sup|f^{(s+1)}|.
double c_constant(double m_f, double m_f_s1, double width, int s);

/// Product-rule bound on sup |(fg)^{(s+1)}|.
double product_derivative_bound(double mf, double mg, double mf_s1,
                                double mg_s1, double csf, double csg,
                                double width, int s);

/// K_s as the binomial convolution sum over K(i,s).
ExactUint ks_sum(int s);

/// K_s in closed form 2^{2s+1} s^2 (3s)! / (2s+1)!.
ExactUint ks_closed(int s);

/// The upper bound K_s * 2s/(s+2); exact rational, s >= 2.
ExactRatio ks_upper(int s);

/// ln of the Stirling approximation s sqrt(3/2) (27 s / e)^s.
double ks_log_asymptotic(int s);

/// ln K_s exactly, via log-gamma; valid for any s without overflow.
double ks_log_exact(int s);

/// Lipschitz bound M_{psi_{s+1}} + M_psi ||w^{(s+1)}||_inf
/// + C_{s,psi} C_{s,w} K_s / (2 pi)^{s+1} on the normalized frame.
double lipschitz_bound(const SmoothnessData& data);

/// Error-floor constant sup over [t-rho_eval, t+rho_eval] of
/// |psi(x)| (1 - w(x - t)), maximized on a dense grid with one Newton
/// refinement from the best node.
double k_inf_constant(const RealFunction& psi, const WindowSpec& w,
                      double rho_eval, int grid_points);

/// Error-floor constant: integral over the same interval of
/// |psi|^2 (1 - w)^2, by composite Simpson (grid_points odd).
double k2_constant(const RealFunction& psi, const WindowSpec& w,
                   double rho_eval, int grid_points);

/// Two-sided band k_inf -+ 4 L_s / (s n^s), lower edge clamped at 0.
std::pair<double, double> sup_error_envelope(double k_inf, double l_s, int s,
                                             int n);

/// Two-sided band k2 -+ (16 rho L_s K_inf / (s n^s)
/// + 32 rho L_s^2 / (s^2 n^{2s})), lower edge clamped at 0.
std::pair<double, double> l2_error_envelope(double k2, double k_inf,
                                            double l_s, double rho, int s,
                                            int n);

/// Finite-difference estimate of sup |f^{(s+1)}| over (-pi, pi) for an
/// already windowed and normalized function; s + 1 <= 5.
double measure_lipschitz(const RealFunction& psi_w, int s, int grid_points);

/// psi and its window composed onto the normalized frame: the returned
/// function maps y to psi(t + lambda y / pi) * w(lambda y / pi), which is
/// 2*pi-supported and centered so that the normalized-frame bounds apply.
RealFunction standardized_windowed(const RealFunction& psi,
                                   const WindowSpec& w);

}  // namespace winfour
