#pragma once

#include <cstdint>
#include <vector>

#include "vlse/asymptotics.hpp"
#include "vlse/estimators.hpp"
#include "vlse/sampler.hpp"
#include "vlse/vasicek.hpp"

namespace vlse {

enum class Scheme { EXPLICIT, EULER };

const char* scheme_name(Scheme s);

struct Horizon {
  double T = 0.0;
  int n = 0;
};

struct ExperimentConfig {
  KernelSpec spec;
  VasicekParams params;
  std::vector<Horizon> horizons;
  int replications = 0;
  std::uint64_t base_seed = 0;
  Scheme scheme = Scheme::EXPLICIT;

  void validate() const;
};

enum class RecordStatus { OK, DEGENERATE };

struct ReplicationRecord {
  int horizon_index = 0;
  int replication = 0;
  std::uint64_t seed = 0;
  RecordStatus status = RecordStatus::OK;
  EstimateTriple est;
  double scaled_theta_err = 0.0;  // e^{theta T} (theta_hat - theta)
  double scaled_mu_err = 0.0;     // T^{1-eta} (mu_hat - mu)
  double scaled_alpha_err = 0.0;  // T^{1-eta} (alpha_hat - alpha)
};

struct CellSummary {
  Horizon horizon;
  int total = 0;
  int failures = 0;
  int infinite_scaled = 0;
  // location/scale of the raw estimates (rank statistics carry the theta
  // cell; the ratio limit has no moments)
  double theta_mean = 0.0, theta_median = 0.0, theta_iqr = 0.0;
  double mu_mean = 0.0, mu_median = 0.0, mu_iqr = 0.0;
  double alpha_mean = 0.0, alpha_median = 0.0, alpha_iqr = 0.0;
  // scaled-error cells
  double scaled_theta_median = 0.0, scaled_theta_iqr = 0.0;
  double scaled_mu_mean = 0.0, scaled_mu_sd = 0.0;
  double scaled_alpha_mean = 0.0, scaled_alpha_sd = 0.0;
  // distribution distances to the limit laws
  double ks_theta = 0.0;  // one-sample vs the ratio-law CDF
  double ks_mu = 0.0;     // one-sample vs N(0, lambda^2/theta^2)
  double ks_alpha = 0.0;  // one-sample vs N(0, lambda^2)
  double spearman_theta_mu = 0.0;
};

struct ExperimentSummary {
  std::vector<ReplicationRecord> records;  // ascending (horizon, replication)
  std::vector<CellSummary> cells;
};

// One sample of the limit experiment: derives child_seed = mix(base_seed,
// horizon_index, r), simulates the driver, builds X by cfg.scheme and runs the
// estimator. DegeneratePath becomes a recorded failure, never a crash.
ReplicationRecord run_replication(const ExperimentConfig& cfg, int horizon_index, int r);
ReplicationRecord run_replication(const ExperimentConfig& cfg, const PathFactor& factor,
                                  int horizon_index, int r);

// Test hook shared with run_replication: estimates from an externally supplied
// driver path.
ReplicationRecord record_from_driver(const ExperimentConfig& cfg, int horizon_index, int r,
                                     const GaussianPath& driver);

// Executes every (horizon, replication) cell; replications run in parallel and
// are reduced in ascending index order, so the summary depends only on cfg.
// Throws DegenerateCell if more than 10% of a cell degenerates.
ExperimentSummary run_experiment(const ExperimentConfig& cfg, int workers = 0);

// Summary assembly from collected records (exposed for tests).
std::vector<CellSummary> summarize(const ExperimentConfig& cfg,
                                   const std::vector<ReplicationRecord>& records);

}  // namespace vlse
