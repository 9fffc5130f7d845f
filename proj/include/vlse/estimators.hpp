#pragma once

#include "vlse/vasicek.hpp"

namespace vlse {

enum class EstimatorVariant { EXTENDED, YOUNG };

struct EstimateTriple {
  double theta_hat = 0.0;
  double mu_hat = 0.0;
  double alpha_hat = 0.0;  // mu_hat * theta_hat, bit-exact by construction
  double horizon = 0.0;
  int intervals = 0;
  EstimatorVariant variant = EstimatorVariant::EXTENDED;
  // false when the driver's increment exponent makes the pathwise
  // integral of X dX ill-defined (gamma <= 1/2); YOUNG results are then
  // flagged rather than rejected.
  bool young_regularity_ok = true;
};

const char* variant_name(EstimatorVariant v);

// Least-squares-type estimators in the extended form that replaces the
// pathwise integral of X dX by X_T^2/2, valid for every gamma in (0,1).
EstimateTriple estimate(const VasicekPath& path);

// Core entry point shared with file-based estimation: only the observed
// series is needed.
EstimateTriple estimate_series(const TimeGrid& grid, const std::vector<double>& x);

// Same least-squares formulas with the left-point Riemann-Stieltjes sum for
// the integral of X dX; differs from `estimate` by the discrete
// integration-by-parts residual.
EstimateTriple estimate_young(const VasicekPath& path);

// Lemma-style remainder diagnostic; every term carries the driver, so a zero
// driver gives exactly zero.
double remainder_rt(const VasicekPath& path);

}  // namespace vlse
