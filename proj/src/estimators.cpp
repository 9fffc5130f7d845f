#include "vlse/estimators.hpp"

#include <cmath>

#include "vlse/errors.hpp"
#include "vlse/stats.hpp"

namespace vlse {

namespace {

constexpr double kDegeneracyTol = 1e-14;  // relative to T * int_x2

struct SeriesFunctionals {
  double x_T, int_x, int_x2;
};

SeriesFunctionals series_functionals(const TimeGrid& grid, const std::vector<double>& x) {
  GriddedFunction fx(grid, x);
  std::vector<double> x2(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) x2[i] = x[i] * x[i];
  return {x.back(), integrate_dt(fx), integrate_dt(GriddedFunction(grid, std::move(x2)))};
}

// Shared denominator and ratio assembly once the X dX surrogate is chosen.
EstimateTriple assemble(const TimeGrid& grid, const SeriesFunctionals& f, double int_x_dx,
                        EstimatorVariant variant) {
  const double T = grid.horizon;
  const double denom = T * f.int_x2 - f.int_x * f.int_x;
  if (!(denom > kDegeneracyTol * T * f.int_x2))
    throw DegeneratePath("estimate: T*int(X^2) - (int X)^2 is degenerate (constant path?)");

  EstimateTriple out;
  out.horizon = T;
  out.intervals = grid.intervals;
  out.variant = variant;
  out.theta_hat = (T * int_x_dx - f.x_T * f.int_x) / denom;
  out.alpha_hat = (f.x_T * f.int_x2 - int_x_dx * f.int_x) / denom;
  if (out.theta_hat == 0.0)
    throw DegeneratePath("estimate: theta estimate is exactly zero, mu undefined");
  out.mu_hat = out.alpha_hat / out.theta_hat;
  // keep the triple internally consistent to the last bit
  out.alpha_hat = out.mu_hat * out.theta_hat;
  return out;
}

}  // namespace

const char* variant_name(EstimatorVariant v) {
  return v == EstimatorVariant::EXTENDED ? "extended" : "young";
}

EstimateTriple estimate_series(const TimeGrid& grid, const std::vector<double>& x) {
  const SeriesFunctionals f = series_functionals(grid, x);
  return assemble(grid, f, 0.5 * f.x_T * f.x_T, EstimatorVariant::EXTENDED);
}

EstimateTriple estimate(const VasicekPath& path) {
  return estimate_series(path.grid, path.values);
}

EstimateTriple estimate_young(const VasicekPath& path) {
  const SeriesFunctionals f = series_functionals(path.grid, path.values);
  GriddedFunction fx(path.grid, path.values);
  EstimateTriple out = assemble(path.grid, f, integrate_rs(fx, fx), EstimatorVariant::YOUNG);
  out.young_regularity_ok = path.spec.gamma() > 0.5;
  return out;
}

double remainder_rt(const VasicekPath& path) {
  const TimeGrid& grid = path.grid;
  const int n = grid.intervals;
  const double T = grid.horizon;
  const double theta = path.params.theta;
  const double mu = path.params.mu;
  const std::vector<double>& g = path.driver.values;

  // M_t = integral of e^{theta s} G_s over [0, t], by the same stable
  // recurrence as the explicit scheme: track e^{-theta t} M_t instead.
  const double dt = grid.step();
  const double decay = std::exp(-theta * dt);

  std::vector<double> g2(n + 1), outer(n + 1);
  double damped_m = 0.0;  // e^{-theta t_i} M_{t_i}
  outer[0] = 0.0;
  for (int i = 0; i <= n; ++i) {
    g2[i] = g[i] * g[i];
    if (i > 0) {
      damped_m = damped_m * decay + 0.5 * dt * (decay * g[i - 1] + g[i]);
      // e^{-theta t} G_t M_t = G_t * (e^{-theta t} M_t)
      outer[i] = g[i] * damped_m;
    }
  }

  const double int_x = integrate_dt(GriddedFunction(grid, path.values));
  const double int_g2 = integrate_dt(GriddedFunction(grid, std::move(g2)));
  const double int_outer = integrate_dt(GriddedFunction(grid, std::move(outer)));

  const double g_T = g[n];
  // the (mu theta T)^2 / 2 terms cancel exactly and are dropped
  return 0.5 * g_T * g_T - mu * g_T - (g_T / T) * int_x - theta * int_g2
         + theta * theta * int_outer;
}

}  // namespace vlse
