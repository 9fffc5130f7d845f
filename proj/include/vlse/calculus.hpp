#pragma once

#include <vector>

#include "vlse/grid.hpp"

namespace vlse {

// A real function sampled on every node of a grid.
struct GriddedFunction {
  TimeGrid grid;
  std::vector<double> values;  // length n+1

  GriddedFunction(TimeGrid g, std::vector<double> v);
};

// Trapezoidal rule for dt-integrals; exact for affine integrands.
double integrate_dt(const GriddedFunction& f);

// Left-point Riemann-Stieltjes sum  sum_i f_i (g_{i+1} - g_i).
// Converges to the Young integral when the Hoelder orders sum above 1; the
// left-point choice makes the integration-by-parts residual an exact closed
// form (the discrete quadratic covariation), which is the test oracle.
double integrate_rs(const GriddedFunction& f, const GriddedFunction& g);

// f_n g_n - f_0 g_0 - integrate_rs(g, f) - integrate_rs(f, g).
// Algebraically equals sum_i (f_{i+1}-f_i)(g_{i+1}-g_i).
double ibp_residual(const GriddedFunction& f, const GriddedFunction& g);

// Cumulative trapezoid: F_i = integral of f over [0, t_i].
GriddedFunction cumulative_dt(const GriddedFunction& f);

void require_same_grid(const GriddedFunction& f, const GriddedFunction& g);

}  // namespace vlse
