#include <doctest.h>

#include <cmath>

#include "vlse/calculus.hpp"
#include "vlse/errors.hpp"
#include "vlse/kernels.hpp"
#include "vlse/sampler.hpp"

using namespace vlse;

namespace {

GriddedFunction sampled(const TimeGrid& grid, double (*f)(double)) {
  std::vector<double> v(grid.points());
  for (int i = 0; i <= grid.intervals; ++i) v[i] = f(grid.node(i));
  return GriddedFunction(grid, std::move(v));
}

double ident(double t) { return t; }
double square(double t) { return t * t; }
double zero(double) { return 0.0; }
double one(double) { return 1.0; }

}  // namespace

TEST_CASE("trapezoid is exact for affine integrands") {
  for (int n : {2, 7, 100}) {
    const TimeGrid grid(1.0, n);
    CHECK(integrate_dt(sampled(grid, ident)) == doctest::Approx(0.5).epsilon(1e-15));
  }
}

TEST_CASE("trapezoid second-order error on t^2") {
  const TimeGrid grid(1.0, 10000);
  CHECK(integrate_dt(sampled(grid, square)) == doctest::Approx(1.0 / 3.0).epsilon(3e-8));
  CHECK(std::fabs(integrate_dt(sampled(grid, square)) - 1.0 / 3.0) < 1e-8);
}

TEST_CASE("integral of the zero function vanishes") {
  const TimeGrid grid(3.0, 64);
  CHECK(integrate_dt(sampled(grid, zero)) == 0.0);
}

TEST_CASE("left-point RS sum approximates the Young integral of t d(t^2)") {
  const TimeGrid grid(1.0, 10000);
  const double v = integrate_rs(sampled(grid, ident), sampled(grid, square));
  CHECK(v == doctest::Approx(2.0 / 3.0).epsilon(3e-4));
  CHECK(std::fabs(v - 2.0 / 3.0) < 2e-4);
}

TEST_CASE("RS sum against a constant integrand telescopes bit-exactly") {
  const TimeGrid grid(2.0, 513);
  const auto g = sampled(grid, square);
  const double v = integrate_rs(sampled(grid, one), g);
  CHECK(v == g.values.back() - g.values.front());
}

TEST_CASE("RS sum is bilinear to machine precision") {
  const TimeGrid grid(1.0, 257);
  const auto f1 = sampled(grid, ident);
  const auto f2 = sampled(grid, square);
  const auto g = sampled(grid, square);
  const double a = 3.25, b = -1.5;
  std::vector<double> combo(grid.points());
  for (int i = 0; i <= grid.intervals; ++i) combo[i] = a * f1.values[i] + b * f2.values[i];
  const double lhs = integrate_rs(GriddedFunction(grid, std::move(combo)), g);
  const double rhs = a * integrate_rs(f1, g) + b * integrate_rs(f2, g);
  CHECK(lhs == doctest::Approx(rhs).epsilon(1e-13));
}

TEST_CASE("IBP residual equals the discrete quadratic covariation") {
  SUBCASE("closed form for f = g = t") {
    const TimeGrid grid(1.0, 100);
    const auto f = sampled(grid, ident);
    CHECK(ibp_residual(f, f) == doctest::Approx(0.01).epsilon(1e-13));
  }
  SUBCASE("constant f gives zero") {
    const TimeGrid grid(1.0, 128);
    CHECK(ibp_residual(sampled(grid, one), sampled(grid, square)) == 0.0);
  }
  SUBCASE("matches sum of increment products bit-exactly on a rough path") {
    const TimeGrid grid(1.0, 512);
    const auto factor = build_factor(KernelSpec::fbm(0.4), grid);
    const auto path = sample_path(factor, 5);
    const GriddedFunction g(grid, path.values);
    const auto f = sampled(grid, square);
    NeumaierSum cov;
    for (int i = 0; i < grid.intervals; ++i)
      cov.add((f.values[i + 1] - f.values[i]) * (g.values[i + 1] - g.values[i]));
    CHECK(ibp_residual(f, g) == doctest::Approx(cov.value()).epsilon(1e-12));
  }
}

TEST_CASE("IBP residual of an fbm path decays like n^{1-2H}") {
  // H = 0.75: quadratic variation scale T^{2H} n^{1-2H}; regression of the
  // log-residual over dyadic n should give a slope near 1-2H = -0.5
  const double H = 0.75;
  std::vector<double> log_n, log_r;
  for (int p = 8; p <= 12; ++p) {
    const int n = 1 << p;
    const TimeGrid grid(1.0, n);
    const auto factor = build_factor(KernelSpec::fbm(H), grid, FactorMethod::CIRCULANT_FFT);
    double acc = 0.0;
    const int reps = 8;
    for (int r = 0; r < reps; ++r) {
      const auto path = sample_path(factor, 1000 + r);
      const GriddedFunction g(grid, path.values);
      acc += std::fabs(ibp_residual(g, g));
    }
    log_n.push_back(std::log(n));
    log_r.push_back(std::log(acc / reps));
  }
  // least-squares slope
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < log_n.size(); ++i) { mx += log_n[i]; my += log_r[i]; }
  mx /= log_n.size();
  my /= log_r.size();
  double num = 0, den = 0;
  for (std::size_t i = 0; i < log_n.size(); ++i) {
    num += (log_n[i] - mx) * (log_r[i] - my);
    den += (log_n[i] - mx) * (log_n[i] - mx);
  }
  const double slope = num / den;
  CHECK(slope == doctest::Approx(1.0 - 2.0 * H).epsilon(0.35));
}

TEST_CASE("refinement halves the first-order RS error for smooth inputs") {
  auto err = [](int n) {
    const TimeGrid grid(1.0, n);
    std::vector<double> f(grid.points()), g(grid.points());
    for (int i = 0; i <= n; ++i) {
      const double t = grid.node(i);
      f[i] = std::sin(t);
      g[i] = std::cos(t);
    }
    // integral of sin d(cos) over [0,1] = -(t - sin t cos t)/2 at 1
    const double analytic = -0.5 * (1.0 - std::sin(1.0) * std::cos(1.0));
    return std::fabs(integrate_rs(GriddedFunction(grid, f), GriddedFunction(grid, g)) - analytic);
  };
  for (int n : {128, 256, 512, 1024}) {
    const double ratio = err(n) / err(2 * n);
    CHECK(ratio > 1.8);
    CHECK(ratio < 2.2);
  }
}

TEST_CASE("mismatched grids are rejected") {
  const TimeGrid g1(1.0, 64), g2(1.0, 65), g3(2.0, 64);
  const auto f1 = sampled(g1, ident);
  CHECK_THROWS_AS(integrate_rs(f1, sampled(g2, ident)), GridMismatch);
  CHECK_THROWS_AS(ibp_residual(f1, sampled(g3, ident)), GridMismatch);
  CHECK_THROWS_AS(GriddedFunction(g1, std::vector<double>(3)), GridMismatch);
}

TEST_CASE("cumulative trapezoid endpoints match the full integral") {
  const TimeGrid grid(2.0, 777);
  const auto f = sampled(grid, square);
  const auto cum = cumulative_dt(f);
  CHECK(cum.values.front() == 0.0);
  CHECK(cum.values.back() == doctest::Approx(integrate_dt(f)).epsilon(1e-15));
}
