#pragma once

#include "vlse/calculus.hpp"
#include "vlse/sampler.hpp"

namespace vlse {

// Drift parameters of dX = theta(mu + X)dt + dG with theta > 0.
struct VasicekParams {
  double theta = 1.0;
  double mu = 0.0;
  double alpha = 0.0;  // theta * mu, stored

  VasicekParams(double theta_, double mu_);
};

struct VasicekPath {
  TimeGrid grid;
  VasicekParams params;
  KernelSpec spec;
  std::vector<double> values;  // x_0..x_n, x_0 = 0
  GaussianPath driver;
};

// Explicit first-order scheme x_{i+1} = x_i + theta(mu + x_i) dt + dg_i.
VasicekPath euler_maruyama(const VasicekParams& params, const GaussianPath& driver);

// Evaluates the closed-form solution through the dt-integral of the driver
// only (no dG-integral), so it is valid for every increment exponent in (0,1).
VasicekPath explicit_solution(const VasicekParams& params, const GaussianPath& driver);

// The path integrals consumed by the estimators and the growth diagnostics.
struct PathFunctionals {
  double x_T = 0.0;
  double int_x = 0.0;    // integral of X dt
  double int_x2 = 0.0;   // integral of X^2 dt
  double int_sx = 0.0;   // integral of s X dt
  GriddedFunction sigma; // running integral of X
  double zeta_T = 0.0;   // e^{-theta T} G_T + theta Z_T
  double z_T = 0.0;      // integral of e^{-theta s} G_s ds
};

PathFunctionals functionals(const VasicekPath& path);

}  // namespace vlse
