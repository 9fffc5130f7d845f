#include "vlse/montecarlo.hpp"

#include <atomic>
#include <cmath>
#include <thread>

#include "vlse/errors.hpp"
#include "vlse/rng.hpp"
#include "vlse/stats.hpp"

namespace vlse {

const char* scheme_name(Scheme s) { return s == Scheme::EXPLICIT ? "explicit" : "euler"; }

void ExperimentConfig::validate() const {
  if (replications < 2) throw DomainError("ExperimentConfig: need at least 2 replications");
  if (horizons.empty()) throw DomainError("ExperimentConfig: no horizons");
  for (const auto& h : horizons) {
    if (!(h.T > 0.0)) throw DomainError("ExperimentConfig: horizon T must be positive");
    if (h.n < 64) throw DomainError("ExperimentConfig: horizon needs n >= 64");
  }
}

ReplicationRecord record_from_driver(const ExperimentConfig& cfg, int horizon_index, int r,
                                     const GaussianPath& driver) {
  const Horizon& h = cfg.horizons.at(horizon_index);
  ReplicationRecord rec;
  rec.horizon_index = horizon_index;
  rec.replication = r;
  rec.seed = driver.seed;

  VasicekPath path = (cfg.scheme == Scheme::EXPLICIT) ? explicit_solution(cfg.params, driver)
                                                      : euler_maruyama(cfg.params, driver);
  try {
    rec.est = estimate(path);
  } catch (const DegeneratePath&) {
    rec.status = RecordStatus::DEGENERATE;
    return rec;
  }

  const double theta = cfg.params.theta;
  const double eta = cfg.spec.eta();
  if (theta * h.T > 700.0) throw HorizonTooLarge("run_replication: exp(theta*T) overflows");
  const double growth = std::exp(theta * h.T);
  const double poly = std::pow(h.T, 1.0 - eta);
  rec.scaled_theta_err = growth * (rec.est.theta_hat - theta);
  rec.scaled_mu_err = poly * (rec.est.mu_hat - cfg.params.mu);
  rec.scaled_alpha_err = poly * (rec.est.alpha_hat - cfg.params.alpha);
  return rec;
}

ReplicationRecord run_replication(const ExperimentConfig& cfg, const PathFactor& factor,
                                  int horizon_index, int r) {
  const std::uint64_t child = derive_seed(cfg.base_seed, static_cast<std::uint64_t>(horizon_index),
                                          static_cast<std::uint64_t>(r));
  return record_from_driver(cfg, horizon_index, r, sample_path(factor, child));
}

ReplicationRecord run_replication(const ExperimentConfig& cfg, int horizon_index, int r) {
  const Horizon& h = cfg.horizons.at(horizon_index);
  const PathFactor factor = build_factor(cfg.spec, TimeGrid(h.T, h.n));
  return run_replication(cfg, factor, horizon_index, r);
}

namespace {

struct Extracted {
  std::vector<double> theta_hat, mu_hat, alpha_hat;
  std::vector<double> s_theta, s_mu, s_alpha;
  int failures = 0;
  int infinite = 0;
};

Extracted extract_cell(const std::vector<ReplicationRecord>& records, int h, int R) {
  Extracted out;
  for (int r = 0; r < R; ++r) {
    const ReplicationRecord& rec = records[static_cast<std::size_t>(h) * R + r];
    if (rec.status != RecordStatus::OK) {
      ++out.failures;
      continue;
    }
    out.theta_hat.push_back(rec.est.theta_hat);
    out.mu_hat.push_back(rec.est.mu_hat);
    out.alpha_hat.push_back(rec.est.alpha_hat);
    out.s_theta.push_back(rec.scaled_theta_err);
    out.s_mu.push_back(rec.scaled_mu_err);
    out.s_alpha.push_back(rec.scaled_alpha_err);
    if (std::isinf(rec.scaled_theta_err) || std::isinf(rec.scaled_mu_err) ||
        std::isinf(rec.scaled_alpha_err))
      ++out.infinite;
  }
  return out;
}

}  // namespace

std::vector<CellSummary> summarize(const ExperimentConfig& cfg,
                                   const std::vector<ReplicationRecord>& records) {
  const int R = cfg.replications;
  const LimitConstants lim = limit_constants(cfg.spec, cfg.params.theta);
  const double sd_mu = std::sqrt(lim.lambda_sq) / cfg.params.theta;
  const double sd_alpha = std::sqrt(lim.lambda_sq);

  std::vector<CellSummary> cells;
  for (std::size_t h = 0; h < cfg.horizons.size(); ++h) {
    Extracted ex = extract_cell(records, static_cast<int>(h), R);
    CellSummary cell;
    cell.horizon = cfg.horizons[h];
    cell.total = R;
    cell.failures = ex.failures;
    cell.infinite_scaled = ex.infinite;
    if (ex.theta_hat.size() >= 2) {
      cell.theta_mean = mean(ex.theta_hat);
      cell.theta_median = median(ex.theta_hat);
      cell.theta_iqr = iqr(ex.theta_hat);
      cell.mu_mean = mean(ex.mu_hat);
      cell.mu_median = median(ex.mu_hat);
      cell.mu_iqr = iqr(ex.mu_hat);
      cell.alpha_mean = mean(ex.alpha_hat);
      cell.alpha_median = median(ex.alpha_hat);
      cell.alpha_iqr = iqr(ex.alpha_hat);
      cell.scaled_theta_median = median(ex.s_theta);
      cell.scaled_theta_iqr = iqr(ex.s_theta);
      cell.scaled_mu_mean = mean(ex.s_mu);
      cell.scaled_mu_sd = sample_sd(ex.s_mu);
      cell.scaled_alpha_mean = mean(ex.s_alpha);
      cell.scaled_alpha_sd = sample_sd(ex.s_alpha);
    }
    if (ex.s_theta.size() >= 10) {
      const double mu_true = cfg.params.mu;
      cell.ks_theta = ks_statistic(ex.s_theta, [&](double x) {
        return theta_limit_cdf(lim, mu_true, x);
      });
      cell.ks_mu = ks_statistic(ex.s_mu, [&](double x) { return normal_cdf(x / sd_mu); });
      cell.ks_alpha = ks_statistic(ex.s_alpha, [&](double x) { return normal_cdf(x / sd_alpha); });
      cell.spearman_theta_mu = spearman_rho(ex.s_theta, ex.s_mu);
    }
    cells.push_back(cell);
  }
  return cells;
}

ExperimentSummary run_experiment(const ExperimentConfig& cfg, int workers) {
  cfg.validate();
  if (workers <= 0) {
    const unsigned hc = std::thread::hardware_concurrency();
    workers = hc > 0 ? static_cast<int>(hc) : 1;
  }

  const int R = cfg.replications;
  ExperimentSummary summary;
  summary.records.resize(cfg.horizons.size() * static_cast<std::size_t>(R));

  for (std::size_t h = 0; h < cfg.horizons.size(); ++h) {
    const Horizon& horizon = cfg.horizons[h];
    // one factorization per (spec, grid); shared read-only across workers
    const PathFactor factor = build_factor(cfg.spec, TimeGrid(horizon.T, horizon.n));

    std::atomic<int> next{0};
    auto worker_loop = [&]() {
      for (;;) {
        const int r = next.fetch_add(1);
        if (r >= R) return;
        summary.records[h * R + r] =
            run_replication(cfg, factor, static_cast<int>(h), r);
      }
    };
    std::vector<std::thread> pool;
    const int count = std::min(workers, R);
    pool.reserve(count);
    for (int w = 0; w < count; ++w) pool.emplace_back(worker_loop);
    for (auto& t : pool) t.join();
  }

  summary.cells = summarize(cfg, summary.records);
  for (const auto& cell : summary.cells) {
    if (cell.failures * 10 > cell.total)
      throw DegenerateCell("run_experiment: more than 10% of a cell degenerated (T=" +
                           std::to_string(cell.horizon.T) + ")");
  }
  return summary;
}

}  // namespace vlse
