#include "vlse/asymptotics.hpp"

#include <cmath>

#include "vlse/errors.hpp"
#include "vlse/grid.hpp"
#include "vlse/quad.hpp"
#include "vlse/rng.hpp"
#include "vlse/stats.hpp"

namespace vlse {

namespace {

void check_theta(double theta) {
  if (!(theta > 0.0) || !std::isfinite(theta)) throw DomainError("theta must be positive");
}

const quad::Rule& panel_rule() {
  static const quad::Rule rule = quad::gauss_legendre(20);
  return rule;
}

const quad::Rule& hermite_rule() {
  static const quad::Rule rule = quad::gauss_hermite(64);
  return rule;
}

}  // namespace

KlmIntegrals klm_integrals(double H, double theta) {
  if (!(H > 0.0 && H < 1.0)) throw DomainError("klm_integrals: H must lie in (0,1)");
  check_theta(theta);
  const double denom = std::pow(theta, 2.0 * H + 2.0);
  const double kl = std::tgamma(2.0 * H + 1.0) / denom;
  return {kl, kl, std::tgamma(2.0 * H + 2.0) / denom};
}

double var_zeta_by_quadrature(const KernelSpec& spec, double theta) {
  check_theta(theta);
  auto integrand = [&](double s, double t) {
    return std::exp(-theta * (s + t)) * covariance(spec, s, t);
  };
  auto eval = [&](double tstar) {
    return quad::integrate_square(integrand, tstar, panel_rule());
  };
  // e^{-theta t} envelope: geometric tail decay, doubling from 20
  const double integral = quad::improper_sweep(eval, 20.0, 1e-8, 7);
  return theta * theta * integral;
}

LimitConstants limit_constants(const KernelSpec& spec, double theta) {
  check_theta(theta);
  const double H = spec.hurst;
  LimitConstants c;
  c.theta = theta;
  c.eta = spec.eta();
  switch (spec.family) {
    case KernelFamily::FBM:
      c.lambda_sq = 1.0;
      c.sigma_sq = H * std::tgamma(2.0 * H) / std::pow(theta, 2.0 * H);
      c.var_zeta_inf = c.sigma_sq;
      break;
    case KernelFamily::SUBFBM:
      c.lambda_sq = 2.0 - std::pow(2.0, 2.0 * H - 1.0);
      c.sigma_sq = H * std::tgamma(2.0 * H) / std::pow(theta, 2.0 * H);
      c.var_zeta_inf = (1.0 - H) * std::tgamma(2.0 * H + 1.0) / std::pow(theta, 2.0 * H);
      break;
    case KernelFamily::BIFBM: {
      const double hk = spec.gamma();
      c.lambda_sq = 1.0;
      c.sigma_sq = hk * std::tgamma(2.0 * hk) / std::pow(theta, 2.0 * hk);
      c.var_zeta_inf = var_zeta_by_quadrature(spec, theta);
      break;
    }
  }
  return c;
}

double sample_theta_limit(const LimitConstants& c, double mu, std::uint64_t seed) {
  CounterRng rng{seed};
  const double n2 = rng.normal(0);
  const double zeta = std::sqrt(c.var_zeta_inf) * rng.normal(1);
  // denominator exactly zero has probability 0; +-inf propagates to consumers
  return 2.0 * c.theta * std::sqrt(c.sigma_sq) * n2 / (mu + zeta);
}

double sample_mu_limit(const LimitConstants& c, std::uint64_t seed) {
  CounterRng rng{seed};
  return std::sqrt(c.lambda_sq) / c.theta * rng.normal(0);
}

double sample_alpha_limit(const LimitConstants& c, std::uint64_t seed) {
  CounterRng rng{seed};
  return std::sqrt(c.lambda_sq) * rng.normal(0);
}

std::pair<double, double> sample_joint_limit(const LimitConstants& c, double mu,
                                             std::uint64_t seed) {
  CounterRng rng{seed};
  const double n1 = rng.normal(0);
  const double n2 = rng.normal(1);
  const double zeta = std::sqrt(c.var_zeta_inf) * rng.normal(2);
  const double theta_coord = 2.0 * c.theta * std::sqrt(c.sigma_sq) * n2 / (mu + zeta);
  const double mu_coord = std::sqrt(c.lambda_sq) / c.theta * n1;
  return {theta_coord, mu_coord};
}

double theta_limit_cdf(const LimitConstants& c, double mu, double x) {
  if (std::isinf(x)) return x > 0.0 ? 1.0 : 0.0;
  const double scale = 2.0 * c.theta * std::sqrt(c.sigma_sq);
  if (scale == 0.0) return x >= 0.0 ? 1.0 : 0.0;  // degenerate at 0
  const double sd_zeta = std::sqrt(c.var_zeta_inf);
  if (sd_zeta == 0.0) {
    if (mu > 0.0) return normal_cdf(x * mu / scale);
    if (mu < 0.0) return 1.0 - normal_cdf(x * mu / scale);
    return 0.5;
  }
  const quad::Rule& gh = hermite_rule();
  const double inv_sqrt_pi = 1.0 / std::sqrt(M_PI);
  NeumaierSum acc;
  for (std::size_t i = 0; i < gh.nodes.size(); ++i) {
    const double zeta = M_SQRT2 * sd_zeta * gh.nodes[i];
    const double den = mu + zeta;
    double p;
    if (den > 0.0)
      p = normal_cdf(x * den / scale);
    else if (den < 0.0)
      p = 1.0 - normal_cdf(x * den / scale);
    else
      p = 0.5;
    acc.add(gh.weights[i] * inv_sqrt_pi * p);
  }
  return acc.value();
}

AssumptionReport empirical_assumption_check(const KernelSpec& spec, double theta,
                                            const std::vector<double>& horizons,
                                            int grid_intervals) {
  check_theta(theta);
  if (horizons.empty()) throw DomainError("empirical_assumption_check: no horizons");
  for (std::size_t i = 1; i < horizons.size(); ++i)
    if (!(horizons[i] > horizons[i - 1]))
      throw DomainError("empirical_assumption_check: horizons must increase");

  AssumptionReport report{spec, theta, 1.0, limit_constants(spec, theta), {}};
  const double eta = spec.eta();

  for (double T : horizons) {
    const TimeGrid grid(T, grid_intervals);
    const int n = grid.intervals;
    const double dt = grid.step();

    // The dG-integral is rewritten by integration by parts into a dt-integral
    // of G:  e^{-theta T} int e^{theta s} dG_s = G_T - theta e^{-theta T} int
    // e^{theta t} G_t dt, a linear functional with weights w over t_1..t_n.
    std::vector<double> w(n + 1, 0.0);
    for (int i = 1; i <= n; ++i) {
      const double tau = (i == n) ? 0.5 * dt : dt;  // trapezoid, t_0 term vanishes with G_0
      w[i] = -theta * tau * std::exp(theta * (grid.node(i) - T));
    }
    w[n] += 1.0;

    AssumptionStats row;
    row.horizon = T;
    row.growth_ratio = covariance(spec, T, T) / std::pow(T, 2.0 * eta);

    NeumaierSum var;
    for (int i = 1; i <= n; ++i) {
      const double ti = grid.node(i);
      var.add(w[i] * w[i] * covariance(spec, ti, ti));
      NeumaierSum rowsum;
      for (int j = 1; j < i; ++j) rowsum.add(w[j] * covariance(spec, grid.node(j), ti));
      var.add(2.0 * w[i] * rowsum.value());
    }
    row.dg_variance = var.value();

    row.cross_cov = covariance(spec, report.fixed_s, T) / std::pow(T, eta);

    NeumaierSum cov_gt;
    for (int i = 1; i <= n; ++i) cov_gt.add(w[i] * covariance(spec, grid.node(i), T));
    row.coupling = cov_gt.value() / std::pow(T, eta);

    report.rows.push_back(row);
  }
  return report;
}

}  // namespace vlse
