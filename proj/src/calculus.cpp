#include "vlse/calculus.hpp"

#include "vlse/errors.hpp"
#include "vlse/stats.hpp"

namespace vlse {

GriddedFunction::GriddedFunction(TimeGrid g, std::vector<double> v)
    : grid(g), values(std::move(v)) {
  if (values.size() != static_cast<std::size_t>(grid.points()))
    throw GridMismatch("GriddedFunction: values length must be n+1");
}

void require_same_grid(const GriddedFunction& f, const GriddedFunction& g) {
  if (f.grid != g.grid) throw GridMismatch("gridded functions live on different grids");
}

double integrate_dt(const GriddedFunction& f) {
  const double half_step = 0.5 * f.grid.step();
  NeumaierSum acc;
  for (int i = 0; i < f.grid.intervals; ++i)
    acc.add(half_step * (f.values[i] + f.values[i + 1]));
  return acc.value();
}

double integrate_rs(const GriddedFunction& f, const GriddedFunction& g) {
  require_same_grid(f, g);
  NeumaierSum acc;
  for (int i = 0; i < f.grid.intervals; ++i)
    acc.add(f.values[i] * (g.values[i + 1] - g.values[i]));
  return acc.value();
}

double ibp_residual(const GriddedFunction& f, const GriddedFunction& g) {
  require_same_grid(f, g);
  const double boundary = f.values.back() * g.values.back() - f.values.front() * g.values.front();
  return boundary - integrate_rs(g, f) - integrate_rs(f, g);
}

GriddedFunction cumulative_dt(const GriddedFunction& f) {
  const double half_step = 0.5 * f.grid.step();
  std::vector<double> out(f.values.size());
  NeumaierSum acc;
  out[0] = 0.0;
  for (int i = 0; i < f.grid.intervals; ++i) {
    acc.add(half_step * (f.values[i] + f.values[i + 1]));
    out[i + 1] = acc.value();
  }
  return GriddedFunction(f.grid, std::move(out));
}

}  // namespace vlse
