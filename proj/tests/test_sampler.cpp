#include <doctest.h>

#include <cmath>
#include <vector>

#include "vlse/errors.hpp"
#include "vlse/sampler.hpp"
#include "vlse/stats.hpp"

using namespace vlse;

TEST_CASE("2x2 Brownian factor matches the hand factorization") {
  const TimeGrid grid(1.0, 2);
  const auto factor = build_factor(KernelSpec::fbm(0.5), grid);
  REQUIRE(factor.method == FactorMethod::DENSE);
  const double r = std::sqrt(0.5);
  CHECK(factor.chol(0, 0) == doctest::Approx(r).epsilon(1e-12));
  CHECK(factor.chol(1, 0) == doctest::Approx(r).epsilon(1e-12));
  CHECK(factor.chol(1, 1) == doctest::Approx(r).epsilon(1e-12));
  CHECK(factor.jitter_used == 0.0);
}

TEST_CASE("dense factor reconstructs the Gram matrix") {
  const TimeGrid grid(4.0, 96);
  for (const auto& spec : {KernelSpec::fbm(0.7), KernelSpec::subfbm(0.3),
                           KernelSpec::bifbm(0.6, 0.8)}) {
    const auto factor = build_factor(spec, grid);
    const Eigen::MatrixXd rebuilt = factor.chol * factor.chol.transpose();
    double num = 0.0, den = 0.0;
    for (int i = 0; i < grid.intervals; ++i)
      for (int j = 0; j < grid.intervals; ++j) {
        const double c = covariance(spec, grid.node(i + 1), grid.node(j + 1));
        num += (rebuilt(i, j) - c) * (rebuilt(i, j) - c);
        den += c * c;
      }
    CHECK(std::sqrt(num / den) < 1e-8);
  }
}

TEST_CASE("difficult bifbm grid factors within the jitter ladder") {
  const TimeGrid grid(10.0, 512);
  const auto factor = build_factor(KernelSpec::bifbm(0.9, 0.9), grid);
  const double max_diag = covariance(KernelSpec::bifbm(0.9, 0.9), 10.0, 10.0);
  CHECK(factor.jitter_used <= 1e-8 * max_diag);
}

TEST_CASE("same (factor, seed) gives the bit-identical path") {
  const TimeGrid grid(2.0, 128);
  const auto factor = build_factor(KernelSpec::subfbm(0.4), grid);
  const auto a = sample_path(factor, 42);
  const auto b = sample_path(factor, 42);
  CHECK(a.values == b.values);
  const auto c = sample_path(factor, 43);
  CHECK(a.values != c.values);
  CHECK(a.values[0] == 0.0);
  CHECK(a.values.size() == static_cast<std::size_t>(grid.points()));
}

TEST_CASE("normalized endpoint second moment approaches lambda^2") {
  const int reps = 20000;

  SUBCASE("fbm, T=4, n=256") {
    const TimeGrid grid(4.0, 256);
    const auto factor = build_factor(KernelSpec::fbm(0.5), grid);
    NeumaierSum acc;
    for (int r = 0; r < reps; ++r) {
      const auto p = sample_path(factor, 1000 + r);
      acc.add(p.values.back() * p.values.back());
    }
    const double stat = acc.value() / reps / std::pow(4.0, 2.0 * 0.5);
    CHECK(stat == doctest::Approx(1.0).epsilon(0.02));
  }

  SUBCASE("subfbm H=0.3, T=4, n=256") {
    const TimeGrid grid(4.0, 256);
    const auto factor = build_factor(KernelSpec::subfbm(0.3), grid);
    NeumaierSum acc;
    for (int r = 0; r < reps; ++r) {
      const auto p = sample_path(factor, 2000 + r);
      acc.add(p.values.back() * p.values.back());
    }
    const double stat = acc.value() / reps / std::pow(4.0, 2.0 * 0.3);
    CHECK(stat == doctest::Approx(2.0 - std::pow(2.0, -0.4)).epsilon(0.03));
  }
}

TEST_CASE("empirical covariance matches the kernel") {
  const TimeGrid grid(1.0, 64);
  const auto spec = KernelSpec::fbm(0.7);
  const auto factor = build_factor(spec, grid);
  const int reps = 50000;
  std::vector<GaussianPath> paths;
  paths.reserve(reps);
  for (int r = 0; r < reps; ++r) paths.push_back(sample_path(factor, 77000 + r));

  // nodes t_32 = 0.5 and t_64 = 1.0; closed form gives exactly t^{2H}/2 = 0.5
  const double expected = covariance(spec, 0.5, 1.0);
  CHECK(expected == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(empirical_covariance(paths, 32, 64) == doctest::Approx(expected).epsilon(0.03));
  CHECK(std::fabs(empirical_covariance(paths, 32, 64) - expected) < 0.015);

  SUBCASE("coordinate zero is deterministic") {
    CHECK(empirical_covariance(paths, 0, 40) == 0.0);
  }
  SUBCASE("diagonal entry within 3 MC standard errors") {
    const double cexp = covariance(spec, 0.5, 0.5);
    const double se = std::sqrt(2.0 * cexp * cexp / reps);
    CHECK(std::fabs(empirical_covariance(paths, 32, 32) - cexp) < 3.0 * se);
  }
  SUBCASE("insufficient samples are rejected") {
    std::vector<GaussianPath> one{paths[0]};
    CHECK_THROWS_AS(empirical_covariance(one, 1, 2), InsufficientSamples);
  }
}

TEST_CASE("covariance accumulator agrees with the two-pass estimate") {
  const TimeGrid grid(1.0, 16);
  const auto factor = build_factor(KernelSpec::subfbm(0.6), grid);
  std::vector<GaussianPath> paths;
  CovarianceAccumulator acc(grid.intervals);
  for (int r = 0; r < 500; ++r) {
    paths.push_back(sample_path(factor, 31000 + r));
    acc.add(paths.back());
  }
  for (int i = 1; i <= 16; i += 5)
    for (int j = i; j <= 16; j += 4)
      CHECK(acc.covariance(i, j)
            == doctest::Approx(empirical_covariance(paths, i, j)).epsilon(1e-10));
}

TEST_CASE("circulant fast path agrees with the dense factor in distribution") {
  // marginal at the endpoint, two-sample KS below 0.02 at 1e4 samples each
  const TimeGrid grid(2.0, 256);
  const auto spec = KernelSpec::fbm(0.7);
  const auto dense = build_factor(spec, grid, FactorMethod::DENSE);
  const auto fast = build_factor(spec, grid, FactorMethod::CIRCULANT_FFT);
  const int reps = 10000;
  std::vector<double> a, b;
  a.reserve(reps);
  b.reserve(reps);
  for (int r = 0; r < reps; ++r) {
    a.push_back(sample_path(dense, 500000 + r).values.back());
    b.push_back(sample_path(fast, 900000 + r).values.back());
  }
  CHECK(ks_statistic(a, b) < 0.02);
}

TEST_CASE("circulant path covariance matches the kernel exactly in law") {
  const TimeGrid grid(4.0, 128);
  const auto spec = KernelSpec::fbm(0.3);
  const auto factor = build_factor(spec, grid, FactorMethod::CIRCULANT_FFT);
  const int reps = 20000;
  CovarianceAccumulator acc(grid.intervals);
  for (int r = 0; r < reps; ++r) acc.add(sample_path(factor, 60000 + r));
  for (int i : {1, 32, 64, 128})
    for (int j : {1, 64, 128}) {
      const double c = covariance(spec, grid.node(i), grid.node(j));
      const double cii = covariance(spec, grid.node(i), grid.node(i));
      const double cjj = covariance(spec, grid.node(j), grid.node(j));
      const double se = std::sqrt((cii * cjj + c * c) / reps);
      CHECK(std::fabs(acc.covariance(i, j) - c) < 4.0 * se);
    }
}

TEST_CASE("auto method selection is a pure function of spec and grid") {
  CHECK(build_factor(KernelSpec::fbm(0.6), TimeGrid(1.0, 256)).method == FactorMethod::DENSE);
  CHECK(build_factor(KernelSpec::fbm(0.6), TimeGrid(1.0, 2048)).method
        == FactorMethod::CIRCULANT_FFT);
  CHECK(build_factor(KernelSpec::subfbm(0.6), TimeGrid(1.0, 128)).method == FactorMethod::DENSE);
}

TEST_CASE("circulant method rejects non-stationary families") {
  CHECK_THROWS_AS(build_factor(KernelSpec::subfbm(0.5), TimeGrid(1.0, 64),
                               FactorMethod::CIRCULANT_FFT),
                  FactorizationFailed);
}

TEST_CASE("neighbouring seeds give uncorrelated innovations") {
  // for Brownian motion the innovations are the scaled increments
  const int n = 1024;
  const TimeGrid grid(1.0, n);
  const auto factor = build_factor(KernelSpec::fbm(0.5), grid, FactorMethod::DENSE);
  const auto a = sample_path(factor, 1234);
  const auto b = sample_path(factor, 1235);
  std::vector<double> za(n), zb(n);
  for (int i = 0; i < n; ++i) {
    za[i] = a.values[i + 1] - a.values[i];
    zb[i] = b.values[i + 1] - b.values[i];
  }
  CHECK(std::fabs(pearson_rho(za, zb)) < 4.0 / std::sqrt(static_cast<double>(n)));
}
