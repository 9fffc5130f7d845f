#include <CLI11.hpp>

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "vlse/asymptotics.hpp"
#include "vlse/csvio.hpp"
#include "vlse/errors.hpp"
#include "vlse/estimators.hpp"
#include "vlse/experiment_config.hpp"
#include "vlse/manifest.hpp"
#include "vlse/montecarlo.hpp"
#include "vlse/numfmt.hpp"
#include "vlse/rng.hpp"
#include "vlse/sampler.hpp"
#include "vlse/stats.hpp"
#include "vlse/svg.hpp"
#include "vlse/vasicek.hpp"

namespace fs = std::filesystem;
using namespace vlse;

namespace {

// exit statuses: 0 success, 2 usage, 3 data/degenerate, 4 internal
constexpr int kOk = 0, kUsage = 2, kData = 3, kInternal = 4;

int run_cli(const std::vector<std::string>& argv, bool allow_replay);

struct Timer {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  }
};

int env_workers() {
  if (const char* s = std::getenv("VASICEK_LSE_WORKERS")) {
    try {
      return static_cast<int>(parse_int(s));
    } catch (const MalformedInput&) {
      throw MalformedInput("VASICEK_LSE_WORKERS must be an integer");
    }
  }
  return 0;
}

Scheme parse_scheme(const std::string& s) {
  if (s == "explicit") return Scheme::EXPLICIT;
  if (s == "euler") return Scheme::EULER;
  throw MalformedInput("scheme must be 'explicit' or 'euler'");
}

void finish_manifest(RunManifest& m, const std::string& file, const Timer& timer) {
  m.version = tool_version();
  m.duration_seconds = timer.seconds();
  write_manifest(file, m);
}

int cmd_simulate(const std::vector<std::string>& argv, const std::string& kernel_token,
                 double theta, double mu, double T, int n, std::uint64_t seed,
                 const std::string& scheme_str, std::string out, bool svg) {
  Timer timer;
  const KernelSpec spec = KernelSpec::parse(kernel_token);
  const VasicekParams params(theta, mu);
  const Scheme scheme = parse_scheme(scheme_str);
  const TimeGrid grid(T, n);

  const PathFactor factor = build_factor(spec, grid);
  const GaussianPath g = sample_path(factor, seed);
  const VasicekPath x =
      scheme == Scheme::EXPLICIT ? explicit_solution(params, g) : euler_maruyama(params, g);

  if (out.empty()) out = path_file_name(spec, T, n, seed);
  write_path_csv(out, x);

  RunManifest m;
  m.command = "simulate";
  m.argv = argv;
  m.add("kernel", spec.token());
  m.add("theta", fmt17(theta));
  m.add("mu", fmt17(mu));
  m.add("T", fmt17(T));
  m.add("n", std::to_string(n));
  m.add("seed", std::to_string(seed));
  m.add("scheme", scheme_name(scheme));
  m.outputs.push_back(out);

  if (svg) {
    SvgSeries series{"X_t", "#1f77b4", {}, {}};
    for (int i = 0; i <= grid.intervals; ++i) {
      series.x.push_back(grid.node(i));
      series.y.push_back(x.values[i]);
    }
    const std::string svg_file = out + ".svg";
    write_text_file(svg_file,
                    render_line_chart("simulated path " + spec.token(), "t", "X_t", {series}));
    m.outputs.push_back(svg_file);
  }
  finish_manifest(m, out + ".manifest.json", timer);
  return kOk;
}

int cmd_estimate(const std::string& file, const std::string& kernel_token,
                 std::optional<double> theta, std::optional<double> mu,
                 std::optional<std::uint64_t> seed) {
  const SeriesCsv series = read_series_csv(file);
  const EstimateTriple est = estimate_series(series.grid, series.x);

  const bool with_scaled = kernel_token.size() && theta && mu;
  std::string out = estimate_csv_header(with_scaled);
  out += estimate_csv_row(seed, kernel_token, theta, mu, est);
  if (with_scaled) {
    const KernelSpec spec = KernelSpec::parse(kernel_token);
    const double T = series.grid.horizon;
    if (*theta * T > 700.0) throw HorizonTooLarge("estimate: exp(theta*T) overflows");
    const double poly = std::pow(T, 1.0 - spec.eta());
    out += ',' + fmt17(std::exp(*theta * T) * (est.theta_hat - *theta));
    out += ',' + fmt17(poly * (est.mu_hat - *mu));
    out += ',' + fmt17(poly * (est.alpha_hat - *theta * *mu));
  }
  std::cout << out << "\n";
  return kOk;
}

int cmd_constants(const std::string& kernel_token, double theta) {
  const KernelSpec spec = KernelSpec::parse(kernel_token);
  const LimitConstants c = limit_constants(spec, theta);
  std::cout << "kernel,theta,eta,lambda_sq,sigma_sq,var_zeta_inf\n"
            << spec.token() << ',' << fmt17(theta) << ',' << fmt17(c.eta) << ','
            << fmt17(c.lambda_sq) << ',' << fmt17(c.sigma_sq) << ',' << fmt17(c.var_zeta_inf)
            << "\n";
  return kOk;
}

int cmd_limit_sample(const std::vector<std::string>& argv, const std::string& kernel_token,
                     double theta, double mu, long count, std::uint64_t seed,
                     const std::string& out) {
  Timer timer;
  if (count < 0) throw MalformedInput("limit-sample: count must be nonnegative");
  const KernelSpec spec = KernelSpec::parse(kernel_token);
  const LimitConstants c = limit_constants(spec, theta);

  std::string body = "draw,theta_limit,mu_limit,alpha_limit\n";
  for (long i = 0; i < count; ++i) {
    const std::uint64_t s = derive_seed(seed, static_cast<std::uint64_t>(i));
    const auto [theta_coord, mu_coord] = sample_joint_limit(c, mu, s);
    body += std::to_string(i);
    body += ',';
    body += fmt17(theta_coord);
    body += ',';
    body += fmt17(mu_coord);
    body += ',';
    body += fmt17(theta * mu_coord);  // alpha coordinate shares N_1 with mu
    body += '\n';
  }
  if (out.empty()) {
    std::cout << body;
  } else {
    write_text_file(out, body);
    RunManifest m;
    m.command = "limit-sample";
    m.argv = argv;
    m.add("kernel", spec.token());
    m.add("theta", fmt17(theta));
    m.add("mu", fmt17(mu));
    m.add("count", std::to_string(count));
    m.add("seed", std::to_string(seed));
    m.outputs.push_back(out);
    finish_manifest(m, out + ".manifest.json", timer);
  }
  return kOk;
}

int cmd_experiment(const std::vector<std::string>& argv, const std::string& config_file,
                   const std::string& out_dir, int workers, bool svg) {
  Timer timer;
  const ExperimentConfig cfg = load_experiment_config(config_file);
  if (workers <= 0) workers = env_workers();

  const ExperimentSummary summary = run_experiment(cfg, workers);

  fs::create_directories(out_dir);
  const std::string raw_file = (fs::path(out_dir) / "raw.csv").string();
  const std::string summary_file = (fs::path(out_dir) / "summary.csv").string();

  std::string raw = raw_records_csv_header();
  for (const auto& rec : summary.records) raw += raw_record_csv_row(cfg, rec);
  write_text_file(raw_file, raw);

  std::string sum = summary_csv_header();
  for (const auto& cell : summary.cells) sum += summary_csv_row(cfg, cell);
  write_text_file(summary_file, sum);

  RunManifest m;
  m.command = "experiment";
  m.argv = argv;
  m.add("config_file", config_file);
  m.add("config", render_experiment_config(cfg));
  m.add("workers_requested", std::to_string(workers));
  m.outputs.push_back(raw_file);
  m.outputs.push_back(summary_file);

  if (svg) {
    SvgSeries med_theta{"median |theta err|", "#1f77b4", {}, {}};
    SvgSeries med_mu{"median |mu err|", "#d62728", {}, {}};
    for (std::size_t h = 0; h < cfg.horizons.size(); ++h) {
      std::vector<double> abs_t, abs_m;
      for (int r = 0; r < cfg.replications; ++r) {
        const auto& rec = summary.records[h * cfg.replications + r];
        if (rec.status != RecordStatus::OK) continue;
        abs_t.push_back(std::fabs(rec.est.theta_hat - cfg.params.theta));
        abs_m.push_back(std::fabs(rec.est.mu_hat - cfg.params.mu));
      }
      if (abs_t.empty()) continue;
      med_theta.x.push_back(cfg.horizons[h].T);
      med_theta.y.push_back(median(abs_t));
      med_mu.x.push_back(cfg.horizons[h].T);
      med_mu.y.push_back(median(abs_m));
    }
    const std::string svg_file = (fs::path(out_dir) / "trend.svg").string();
    write_text_file(svg_file, render_line_chart("estimation error vs horizon " + cfg.spec.token(),
                                                "T", "median abs error", {med_theta, med_mu}));
    m.outputs.push_back(svg_file);
  }
  finish_manifest(m, (fs::path(out_dir) / "manifest.json").string(), timer);

  std::cout << "wrote " << raw_file << " and " << summary_file << "\n";
  return kOk;
}

int cmd_replay(const std::string& manifest_file) {
  const RunManifest m = read_manifest(manifest_file);
  if (m.argv.size() < 2) throw MalformedInput("replay: manifest has no recorded invocation");
  std::vector<std::string> argv(m.argv.begin() + 1, m.argv.end());
  return run_cli(argv, /*allow_replay=*/false);
}

int run_cli(const std::vector<std::string>& args, bool allow_replay) {
  CLI::App app{"simulation and drift inference for non-ergodic Gaussian Vasicek models"};
  app.require_subcommand(1);

  std::vector<std::string> full_argv;
  full_argv.push_back("vasicek-lse");
  full_argv.insert(full_argv.end(), args.begin(), args.end());

  // simulate
  auto* sim = app.add_subcommand("simulate", "sample a driver and solution path, write t,g,x CSV");
  std::string sim_kernel, sim_scheme = "explicit", sim_out;
  double sim_theta = 0.0, sim_mu = 0.0, sim_T = 0.0;
  int sim_n = 0;
  std::uint64_t sim_seed = 0;
  bool sim_svg = false;
  sim->add_option("kernel", sim_kernel, "kernel token, e.g. fbm:H=0.5")->required();
  sim->add_option("--theta", sim_theta)->required();
  sim->add_option("--mu", sim_mu)->required();
  sim->add_option("--T", sim_T)->required();
  sim->add_option("--n", sim_n)->required();
  sim->add_option("--seed", sim_seed)->required();
  sim->add_option("--scheme", sim_scheme, "explicit|euler");
  sim->add_option("--out", sim_out, "output CSV path (default: conventional name)");
  sim->add_flag("--svg", sim_svg, "also write a line chart of X_t");

  // estimate
  auto* est = app.add_subcommand("estimate", "estimate drift parameters from a path CSV");
  std::string est_file, est_kernel;
  double est_theta = 0.0, est_mu = 0.0;
  std::uint64_t est_seed = 0;
  est->add_option("csv", est_file, "CSV with columns t,x (g optional)")->required();
  est->add_option("--kernel", est_kernel, "kernel token, enables scaled errors");
  auto* est_theta_opt = est->add_option("--theta", est_theta, "true theta for scaled errors");
  auto* est_mu_opt = est->add_option("--mu", est_mu, "true mu for scaled errors");
  auto* est_seed_opt = est->add_option("--seed", est_seed, "seed column value");

  // constants
  auto* con = app.add_subcommand("constants", "print the closed-form limit constants");
  std::string con_kernel;
  double con_theta = 0.0;
  con->add_option("kernel", con_kernel)->required();
  con->add_option("--theta", con_theta)->required();

  // limit-sample
  auto* lim = app.add_subcommand("limit-sample", "draw from the limiting laws");
  std::string lim_kernel, lim_out;
  double lim_theta = 0.0, lim_mu = 0.0;
  long lim_count = 0;
  std::uint64_t lim_seed = 0;
  lim->add_option("kernel", lim_kernel)->required();
  lim->add_option("--theta", lim_theta)->required();
  lim->add_option("--mu", lim_mu)->required();
  lim->add_option("--count", lim_count)->required();
  lim->add_option("--seed", lim_seed)->required();
  lim->add_option("--out", lim_out, "write CSV here instead of stdout");

  // experiment
  auto* exp = app.add_subcommand("experiment", "run a seeded replication experiment");
  std::string exp_config, exp_out_dir = ".";
  int exp_workers = 0;
  bool exp_svg = false;
  exp->add_option("config", exp_config, "key = value config file")->required();
  exp->add_option("--out-dir", exp_out_dir, "directory for raw.csv/summary.csv/manifest.json");
  exp->add_option("--workers", exp_workers,
                  "parallel workers (default: VASICEK_LSE_WORKERS or hardware)");
  exp->add_flag("--svg", exp_svg, "also write a consistency-trend chart");

  // replay
  auto* rep = app.add_subcommand("replay", "re-run the invocation stored in a manifest");
  std::string rep_manifest;
  rep->add_option("manifest", rep_manifest)->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());  // CLI11 vector convention
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      std::cout << app.help() << std::flush;
      return kOk;
    }
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  }

  if (sim->parsed())
    return cmd_simulate(full_argv, sim_kernel, sim_theta, sim_mu, sim_T, sim_n, sim_seed,
                        sim_scheme, sim_out, sim_svg);
  if (est->parsed()) {
    std::optional<double> th, mu;
    std::optional<std::uint64_t> sd;
    if (est_theta_opt->count()) th = est_theta;
    if (est_mu_opt->count()) mu = est_mu;
    if (est_seed_opt->count()) sd = est_seed;
    return cmd_estimate(est_file, est_kernel, th, mu, sd);
  }
  if (con->parsed()) return cmd_constants(con_kernel, con_theta);
  if (lim->parsed())
    return cmd_limit_sample(full_argv, lim_kernel, lim_theta, lim_mu, lim_count, lim_seed,
                            lim_out);
  if (exp->parsed()) return cmd_experiment(full_argv, exp_config, exp_out_dir, exp_workers,
                                           exp_svg);
  if (rep->parsed()) {
    if (!allow_replay) throw MalformedInput("replay: nested replay is not allowed");
    return cmd_replay(rep_manifest);
  }
  return kUsage;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return run_cli(args, /*allow_replay=*/true);
  } catch (const MalformedInput& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const DegeneratePath& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kData;
  } catch (const DegenerateCell& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kData;
  } catch (const HorizonTooLarge& e) {
    std::cerr << "data error: " << e.what() << "\n";
    return kData;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInternal;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}
