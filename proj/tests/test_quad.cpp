#include <doctest.h>

#include <cmath>

#include "vlse/errors.hpp"
#include "vlse/quad.hpp"

using namespace vlse;

TEST_CASE("gauss-legendre integrates polynomials exactly") {
  const auto rule = quad::gauss_legendre(20);
  double sum_w = 0.0, sum_x2 = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    sum_w += rule.weights[i];
    sum_x2 += rule.weights[i] * rule.nodes[i] * rule.nodes[i];
  }
  CHECK(sum_w == doctest::Approx(2.0).epsilon(1e-14));
  CHECK(sum_x2 == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
}

TEST_CASE("composite 1d quadrature handles an endpoint singularity") {
  const auto rule = quad::gauss_legendre(20);
  const auto edges = quad::graded_edges(0.0, 1.0, true, false);
  // integral of x^{-1/2} over (0,1] = 2
  const double v = quad::integrate_1d([](double x) { return 1.0 / std::sqrt(x); }, edges, rule);
  CHECK(v == doctest::Approx(2.0).epsilon(1e-9));
}

TEST_CASE("2d square integration on separable smooth integrand") {
  const auto rule = quad::gauss_legendre(20);
  // integral of e^{-s-t} over [0,8]^2 = (1 - e^{-8})^2
  const double v = quad::integrate_square(
      [](double s, double t) { return std::exp(-s - t); }, 8.0, rule);
  const double expect = (1.0 - std::exp(-8.0)) * (1.0 - std::exp(-8.0));
  CHECK(v == doctest::Approx(expect).epsilon(1e-12));
}

TEST_CASE("2d square integration with a diagonal kink") {
  const auto rule = quad::gauss_legendre(20);
  // integral of |t-s| over [0,1]^2 = 1/3
  const double v = quad::integrate_square(
      [](double s, double t) { return std::fabs(t - s); }, 1.0, rule);
  CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
}

TEST_CASE("improper sweep converges on an exponential tail") {
  const auto rule = quad::gauss_legendre(20);
  auto eval = [&](double tstar) {
    return quad::integrate_1d([](double x) { return std::exp(-x); },
                              quad::graded_edges(0.0, tstar, false, false), rule);
  };
  CHECK(quad::improper_sweep(eval, 20.0, 1e-10, 7) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("improper sweep reports non-convergence") {
  auto eval = [](double tstar) { return std::log(tstar); };  // diverges
  CHECK_THROWS_AS(quad::improper_sweep(eval, 20.0, 1e-10, 5), QuadratureNotConverged);
}

TEST_CASE("gauss-hermite nodes integrate gaussian moments") {
  const auto rule = quad::gauss_hermite(64);
  double m0 = 0.0, m2 = 0.0, m4 = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    const double x = rule.nodes[i];
    m0 += rule.weights[i];
    m2 += rule.weights[i] * x * x;
    m4 += rule.weights[i] * x * x * x * x;
  }
  const double sqrt_pi = std::sqrt(M_PI);
  CHECK(m0 == doctest::Approx(sqrt_pi).epsilon(1e-13));
  CHECK(m2 == doctest::Approx(0.5 * sqrt_pi).epsilon(1e-13));
  CHECK(m4 == doctest::Approx(0.75 * sqrt_pi).epsilon(1e-13));
}
