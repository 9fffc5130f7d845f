#include "vlse/sampler.hpp"

#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>

#include "vlse/errors.hpp"
#include "vlse/rng.hpp"
#include "vlse/stats.hpp"

namespace vlse {

namespace {

constexpr int kDenseLimit = 1024;  // above this, fBm switches to the FFT path

Eigen::MatrixXd gram_matrix(const KernelSpec& spec, const TimeGrid& grid) {
  const int n = grid.intervals;
  Eigen::MatrixXd gram(n, n);
  for (int i = 0; i < n; ++i) {
    const double ti = grid.node(i + 1);
    for (int j = 0; j <= i; ++j) {
      const double c = covariance(spec, grid.node(j + 1), ti);
      gram(i, j) = c;
      gram(j, i) = c;
    }
  }
  return gram;
}

void build_dense(PathFactor& factor) {
  Eigen::MatrixXd gram = gram_matrix(factor.spec, factor.grid);
  const double max_diag = gram.diagonal().maxCoeff();
  const double ladder[] = {0.0, 1e-12, 1e-10, 1e-8};
  for (double eps : ladder) {
    Eigen::MatrixXd work = gram;
    if (eps > 0.0) work.diagonal().array() += eps * max_diag;
    Eigen::LLT<Eigen::MatrixXd> llt(work);
    if (llt.info() == Eigen::Success) {
      factor.chol = llt.matrixL();
      factor.jitter_used = eps * max_diag;
      return;
    }
  }
  throw FactorizationFailed("build_factor: PSD repair exhausted the jitter ladder for " +
                            factor.spec.token());
}

int next_pow2(int x) {
  int m = 1;
  while (m < x) m <<= 1;
  return m;
}

// Davies-Harte: eigenvalues of the circulant embedding of the fGn
// autocovariance. Embedding size M is a power of two >= 2n; lags up to M/2
// come straight from the closed form, so padding beyond 2n stays exact.
void build_circulant(PathFactor& factor) {
  if (factor.spec.family != KernelFamily::FBM)
    throw FactorizationFailed("circulant factor requires stationary increments (fBm only)");
  const int n = factor.grid.intervals;
  const int m = next_pow2(2 * n);
  const double h2 = 2.0 * factor.spec.hurst;
  const double scale = std::pow(factor.grid.step(), h2);

  std::vector<double> row(m);
  auto fgn_cov = [&](int lag) {
    if (lag == 0) return scale;
    const double k = static_cast<double>(lag);
    return 0.5 * scale * (std::pow(k + 1.0, h2) - 2.0 * std::pow(k, h2) + std::pow(k - 1.0, h2));
  };
  for (int lag = 0; lag <= m / 2; ++lag) row[lag] = fgn_cov(lag);
  for (int lag = 1; lag < m / 2; ++lag) row[m - lag] = row[lag];

  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> spec_c(m);
  std::vector<std::complex<double>> in(row.begin(), row.end());
  fft.fwd(spec_c, in);

  double max_eig = 0.0, min_eig = 0.0;
  for (const auto& z : spec_c) {
    max_eig = std::max(max_eig, z.real());
    min_eig = std::min(min_eig, z.real());
  }
  if (min_eig < -1e-9 * max_eig)
    throw FactorizationFailed("circulant embedding is not nonnegative definite");

  factor.sqrt_eigs.resize(m);
  for (int i = 0; i < m; ++i)
    factor.sqrt_eigs[i] = std::sqrt(std::max(spec_c[i].real(), 0.0));
  factor.embedding_size = m;
}

GaussianPath sample_dense(const PathFactor& factor, std::uint64_t seed) {
  const int n = factor.grid.intervals;
  CounterRng rng{seed};
  Eigen::VectorXd z(n);
  for (int i = 0; i < n; ++i) z(i) = rng.normal(static_cast<std::uint64_t>(i));
  Eigen::VectorXd g = factor.chol.triangularView<Eigen::Lower>() * z;

  GaussianPath path{factor.grid, factor.spec, std::vector<double>(n + 1, 0.0), seed};
  for (int i = 0; i < n; ++i) path.values[i + 1] = g(i);
  return path;
}

GaussianPath sample_circulant(const PathFactor& factor, std::uint64_t seed) {
  const int n = factor.grid.intervals;
  const int m = factor.embedding_size;
  CounterRng rng{seed};

  // Hermitian-symmetric complex Gaussian vector with E|V_k|^2 = 1.
  std::vector<std::complex<double>> v(m);
  std::uint64_t ctr = 0;
  v[0] = {rng.normal(ctr++), 0.0};
  v[m / 2] = {rng.normal(ctr++), 0.0};
  const double inv_sqrt2 = 1.0 / std::sqrt(2.0);
  for (int k = 1; k < m / 2; ++k) {
    const double re = rng.normal(ctr++) * inv_sqrt2;
    const double im = rng.normal(ctr++) * inv_sqrt2;
    v[k] = {re, im};
    v[m - k] = {re, -im};
  }
  const double norm = 1.0 / std::sqrt(static_cast<double>(m));
  for (int k = 0; k < m; ++k) v[k] *= factor.sqrt_eigs[k] * norm;

  Eigen::FFT<double> fft;
  std::vector<std::complex<double>> w(m);
  fft.fwd(w, v);

  GaussianPath path{factor.grid, factor.spec, std::vector<double>(n + 1, 0.0), seed};
  NeumaierSum acc;
  for (int i = 0; i < n; ++i) {
    acc.add(w[i].real());  // increments of the path
    path.values[i + 1] = acc.value();
  }
  return path;
}

}  // namespace

PathFactor build_factor(const KernelSpec& spec, const TimeGrid& grid, FactorMethod method) {
  PathFactor factor(grid, spec);
  if (method == FactorMethod::AUTO) {
    method = (spec.family == KernelFamily::FBM && grid.intervals > kDenseLimit)
                 ? FactorMethod::CIRCULANT_FFT
                 : FactorMethod::DENSE;
  }
  factor.method = method;
  if (method == FactorMethod::DENSE)
    build_dense(factor);
  else
    build_circulant(factor);
  return factor;
}

GaussianPath sample_path(const PathFactor& factor, std::uint64_t seed) {
  return factor.method == FactorMethod::DENSE ? sample_dense(factor, seed)
                                              : sample_circulant(factor, seed);
}

double empirical_covariance(const std::vector<GaussianPath>& paths, int i, int j) {
  if (paths.size() < 2) throw InsufficientSamples("empirical_covariance: need at least 2 paths");
  const auto r = static_cast<double>(paths.size());
  NeumaierSum mi, mj;
  for (const auto& p : paths) {
    mi.add(p.values.at(i));
    mj.add(p.values.at(j));
  }
  const double mean_i = mi.value() / r;
  const double mean_j = mj.value() / r;
  NeumaierSum acc;
  for (const auto& p : paths) acc.add((p.values[i] - mean_i) * (p.values[j] - mean_j));
  return acc.value() / (r - 1.0);
}

CovarianceAccumulator::CovarianceAccumulator(int n)
    : n_(n), sum_(Eigen::VectorXd::Zero(n)), cross_(Eigen::MatrixXd::Zero(n, n)) {}

void CovarianceAccumulator::add(const GaussianPath& path) {
  if (path.grid.intervals != n_) throw GridMismatch("CovarianceAccumulator: grid size mismatch");
  Eigen::Map<const Eigen::VectorXd> g(path.values.data() + 1, n_);
  sum_ += g;
  cross_.selfadjointView<Eigen::Lower>().rankUpdate(g, 1.0);
  ++count_;
}

double CovarianceAccumulator::covariance(int i, int j) const {
  if (count_ < 2) throw InsufficientSamples("CovarianceAccumulator: need at least 2 paths");
  const auto r = static_cast<double>(count_);
  const int a = std::max(i, j) - 1, b = std::min(i, j) - 1;
  const double cross = cross_(a, b);
  return (cross - sum_(a) * sum_(b) / r) / (r - 1.0);
}

}  // namespace vlse
