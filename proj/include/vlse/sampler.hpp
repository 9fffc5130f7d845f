#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <memory>
#include <vector>

#include "vlse/grid.hpp"
#include "vlse/kernels.hpp"

namespace vlse {

// One sampled driver path; g_0 = 0 always.
struct GaussianPath {
  TimeGrid grid;
  KernelSpec spec;
  std::vector<double> values;  // length n+1
  std::uint64_t seed = 0;
};

enum class FactorMethod {
  AUTO,          // dense for small grids, circulant FFT for large fBm grids
  DENSE,         // triangular factor of the Gram matrix over t_1..t_n
  CIRCULANT_FFT  // Davies-Harte embedding of fractional Gaussian noise (fBm only)
};

// Immutable sampling factor, shareable across threads. Node t_0 is excluded
// from the Gram matrix since G_0 = 0 deterministically (the full matrix is
// singular by construction).
struct PathFactor {
  TimeGrid grid;
  KernelSpec spec;
  FactorMethod method = FactorMethod::DENSE;
  double jitter_used = 0.0;

  Eigen::MatrixXd chol;            // DENSE: n x n lower triangular
  std::vector<double> sqrt_eigs;   // CIRCULANT_FFT: sqrt of embedding eigenvalues
  int embedding_size = 0;          // CIRCULANT_FFT: M (power of two >= 2n)

  PathFactor(TimeGrid g, KernelSpec s) : grid(g), spec(s) {}
};

// Factorizes the driver law on the grid. Dense mode retries a failed
// factorization with diagonal jitter 1e-12/1e-10/1e-8 times the max diagonal
// and records what was used; exhausting the ladder raises FactorizationFailed.
PathFactor build_factor(const KernelSpec& spec, const TimeGrid& grid,
                        FactorMethod method = FactorMethod::AUTO);

// g = (0, L z) with z standard normals drawn from the counter stream of seed;
// the same (factor, seed) pair always yields the bit-identical path.
GaussianPath sample_path(const PathFactor& factor, std::uint64_t seed);

// Unbiased sample covariance of path coordinates i and j.
double empirical_covariance(const std::vector<GaussianPath>& paths, int i, int j);

// Streaming accumulator for full empirical covariance matrices (node t_0
// excluded), used by the sampler exactness checks.
class CovarianceAccumulator {
 public:
  explicit CovarianceAccumulator(int n);
  void add(const GaussianPath& path);
  long count() const { return count_; }
  // unbiased covariance of coordinates (i, j), 1-based over t_1..t_n
  double covariance(int i, int j) const;

 private:
  int n_;
  long count_ = 0;
  Eigen::VectorXd sum_;
  Eigen::MatrixXd cross_;
};

}  // namespace vlse
