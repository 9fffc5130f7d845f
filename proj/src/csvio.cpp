#include "vlse/csvio.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "vlse/errors.hpp"
#include "vlse/numfmt.hpp"

namespace vlse {

void write_text_file(const std::string& file, const std::string& content) {
  std::ofstream out(file, std::ios::binary);
  if (!out) throw Error("cannot open for writing: " + file);
  out << content;
  if (!out) throw Error("write failed: " + file);
}

std::string read_text_file(const std::string& file) {
  std::ifstream in(file, std::ios::binary);
  if (!in) throw MalformedInput("cannot open: " + file);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_path_csv(const std::string& file, const GaussianPath& g) {
  std::string out = "t,g\n";
  for (int i = 0; i <= g.grid.intervals; ++i) {
    out += fmt17(g.grid.node(i));
    out += ',';
    out += fmt17(g.values[i]);
    out += '\n';
  }
  write_text_file(file, out);
}

void write_path_csv(const std::string& file, const VasicekPath& x) {
  std::string out = "t,g,x\n";
  for (int i = 0; i <= x.grid.intervals; ++i) {
    out += fmt17(x.grid.node(i));
    out += ',';
    out += fmt17(x.driver.values[i]);
    out += ',';
    out += fmt17(x.values[i]);
    out += '\n';
  }
  write_text_file(file, out);
}

std::string path_file_name(const KernelSpec& spec, double T, int n, std::uint64_t seed) {
  return spec.token() + "_T" + fmt_shortest(T) + "_n" + std::to_string(n) + "_seed" +
         std::to_string(seed) + ".csv";
}

namespace {

std::vector<std::string> split(const std::string& line, char delim) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = line.find(delim, start);
    if (pos == std::string::npos) {
      out.push_back(line.substr(start));
      return out;
    }
    out.push_back(line.substr(start, pos - start));
    start = pos + 1;
  }
}

}  // namespace

SeriesCsv read_series_csv(const std::string& file) {
  std::ifstream in(file);
  if (!in) throw MalformedInput("cannot open: " + file);
  std::string line;
  if (!std::getline(in, line)) throw MalformedInput(file + ": empty file");
  if (!line.empty() && line.back() == '\r') line.pop_back();

  const auto header = split(line, ',');
  int t_col = -1, g_col = -1, x_col = -1;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (header[c] == "t") t_col = static_cast<int>(c);
    else if (header[c] == "g") g_col = static_cast<int>(c);
    else if (header[c] == "x") x_col = static_cast<int>(c);
  }
  if (t_col < 0 || x_col < 0)
    throw MalformedInput(file + ": need a header with at least columns t and x");

  std::vector<double> t, g, x;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto cells = split(line, ',');
    if (cells.size() != header.size())
      throw MalformedInput(file + ": ragged row '" + line + "'");
    t.push_back(parse_double(cells[t_col]));
    x.push_back(parse_double(cells[x_col]));
    if (g_col >= 0) g.push_back(parse_double(cells[g_col]));
  }
  if (t.size() < 3) throw MalformedInput(file + ": need at least 3 rows");
  if (t.front() != 0.0) throw MalformedInput(file + ": grid must start at t=0");
  const int n = static_cast<int>(t.size()) - 1;
  const double T = t.back();

  TimeGrid grid(T, n);
  for (int i = 0; i <= n; ++i) {
    const double expect = grid.node(i);
    if (std::fabs(t[i] - expect) > 1e-9 * std::max(1.0, std::fabs(expect)))
      throw MalformedInput(file + ": grid is not the uniform partition of [0,T]");
  }
  return SeriesCsv{grid, std::move(x), std::move(g)};
}

std::string estimate_csv_header(bool with_scaled) {
  std::string h = "seed,kernel,theta,mu,T,n,variant,theta_hat,mu_hat,alpha_hat";
  if (with_scaled) h += ",scaled_theta_err,scaled_mu_err,scaled_alpha_err";
  return h + "\n";
}

std::string estimate_csv_row(const std::optional<std::uint64_t>& seed, const std::string& kernel,
                             const std::optional<double>& theta, const std::optional<double>& mu,
                             const EstimateTriple& est) {
  std::string row;
  row += seed ? std::to_string(*seed) : "";
  row += ',';
  row += kernel;
  row += ',';
  row += theta ? fmt17(*theta) : "";
  row += ',';
  row += mu ? fmt17(*mu) : "";
  row += ',';
  row += fmt17(est.horizon);
  row += ',';
  row += std::to_string(est.intervals);
  row += ',';
  row += variant_name(est.variant);
  row += ',';
  row += fmt17(est.theta_hat);
  row += ',';
  row += fmt17(est.mu_hat);
  row += ',';
  row += fmt17(est.alpha_hat);
  return row;
}

std::string raw_records_csv_header() {
  return "seed,kernel,theta,mu,T,n,variant,theta_hat,mu_hat,alpha_hat,"
         "scaled_theta_err,scaled_mu_err,scaled_alpha_err,status\n";
}

std::string raw_record_csv_row(const ExperimentConfig& cfg, const ReplicationRecord& rec) {
  const Horizon& h = cfg.horizons.at(rec.horizon_index);
  std::string row;
  row += std::to_string(rec.seed);
  row += ',';
  row += cfg.spec.token();
  row += ',';
  row += fmt17(cfg.params.theta);
  row += ',';
  row += fmt17(cfg.params.mu);
  row += ',';
  row += fmt17(h.T);
  row += ',';
  row += std::to_string(h.n);
  row += ',';
  if (rec.status == RecordStatus::OK) {
    row += variant_name(rec.est.variant);
    row += ',';
    row += fmt17(rec.est.theta_hat);
    row += ',';
    row += fmt17(rec.est.mu_hat);
    row += ',';
    row += fmt17(rec.est.alpha_hat);
    row += ',';
    row += fmt17(rec.scaled_theta_err);
    row += ',';
    row += fmt17(rec.scaled_mu_err);
    row += ',';
    row += fmt17(rec.scaled_alpha_err);
    row += ",ok\n";
  } else {
    row += ",,,,,,,degenerate\n";
  }
  return row;
}

std::string summary_csv_header() {
  return "kernel,theta,mu,T,n,replications,failures,infinite_scaled,"
         "theta_hat_mean,theta_hat_median,theta_hat_iqr,"
         "mu_hat_mean,mu_hat_median,mu_hat_iqr,"
         "alpha_hat_mean,alpha_hat_median,alpha_hat_iqr,"
         "scaled_theta_median,scaled_theta_iqr,"
         "scaled_mu_mean,scaled_mu_sd,scaled_alpha_mean,scaled_alpha_sd,"
         "ks_theta,ks_mu,ks_alpha,spearman_theta_mu\n";
}

std::string summary_csv_row(const ExperimentConfig& cfg, const CellSummary& cell) {
  std::string row;
  row += cfg.spec.token();
  row += ',';
  row += fmt17(cfg.params.theta);
  row += ',';
  row += fmt17(cfg.params.mu);
  row += ',';
  row += fmt17(cell.horizon.T);
  row += ',';
  row += std::to_string(cell.horizon.n);
  row += ',';
  row += std::to_string(cell.total);
  row += ',';
  row += std::to_string(cell.failures);
  row += ',';
  row += std::to_string(cell.infinite_scaled);
  for (double v : {cell.theta_mean, cell.theta_median, cell.theta_iqr, cell.mu_mean,
                   cell.mu_median, cell.mu_iqr, cell.alpha_mean, cell.alpha_median,
                   cell.alpha_iqr, cell.scaled_theta_median, cell.scaled_theta_iqr,
                   cell.scaled_mu_mean, cell.scaled_mu_sd, cell.scaled_alpha_mean,
                   cell.scaled_alpha_sd, cell.ks_theta, cell.ks_mu, cell.ks_alpha,
                   cell.spearman_theta_mu}) {
    row += ',';
    row += fmt17(v);
  }
  row += '\n';
  return row;
}

}  // namespace vlse
