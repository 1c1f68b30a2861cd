#pragma once

#include <functional>
#include <vector>

namespace winfour {

/// Stencil weights for the n-fold iterate of the 9-point (8th order)
/// central first-derivative rule. 8*order + 1 entries, symmetric offsets;
/// the weights still need division by h^order.
std::vector<double> iterated_central_stencil(int order);

/// d^order f / dx^order at x, step h, using the iterated stencil above.
double derivative_estimate(const std::function<double(double)>& f, double x,
                           int order, double h);

/// max over an n-point uniform grid on [a, b] of |f^(order)|.
double grid_derivative_sup(const std::function<double(double)>& f, double a,
                           double b, int order, int grid_points, double h);

}  // namespace winfour
