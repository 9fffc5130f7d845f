#include "vlse/experiment_config.hpp"

#include <sstream>

#include "vlse/csvio.hpp"
#include "vlse/errors.hpp"
#include "vlse/numfmt.hpp"

namespace vlse {

namespace {

std::string trim(const std::string& s) {
  const auto a = s.find_first_not_of(" \t");
  if (a == std::string::npos) return "";
  const auto b = s.find_last_not_of(" \t");
  return s.substr(a, b - a + 1);
}

}  // namespace

ExperimentConfig parse_experiment_config(const std::string& text) {
  bool have_kernel = false, have_theta = false, have_mu = false, have_reps = false,
       have_seed = false;
  KernelSpec spec = KernelSpec::fbm(0.5);
  double theta = 1.0, mu = 0.0;
  int reps = 0;
  std::uint64_t base_seed = 0;
  Scheme scheme = Scheme::EXPLICIT;
  std::vector<Horizon> horizons;

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;

    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw MalformedInput("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));

    if (key == "kernel") {
      spec = KernelSpec::parse(value);
      have_kernel = true;
    } else if (key == "theta") {
      theta = parse_double(value);
      have_theta = true;
    } else if (key == "mu") {
      mu = parse_double(value);
      have_mu = true;
    } else if (key == "replications") {
      reps = static_cast<int>(parse_int(value));
      have_reps = true;
    } else if (key == "base_seed") {
      base_seed = static_cast<std::uint64_t>(parse_int(value));
      have_seed = true;
    } else if (key == "scheme") {
      if (value == "explicit") scheme = Scheme::EXPLICIT;
      else if (value == "euler") scheme = Scheme::EULER;
      else throw MalformedInput("config: scheme must be 'explicit' or 'euler'");
    } else if (key == "horizon") {
      const auto comma = value.find(',');
      if (comma == std::string::npos)
        throw MalformedInput("config: horizon expects 'T,n'");
      Horizon h;
      h.T = parse_double(trim(value.substr(0, comma)));
      h.n = static_cast<int>(parse_int(trim(value.substr(comma + 1))));
      horizons.push_back(h);
    } else {
      throw MalformedInput("config line " + std::to_string(lineno) + ": unknown key '" + key +
                           "'");
    }
  }

  if (!have_kernel) throw MalformedInput("config: missing kernel");
  if (!have_theta) throw MalformedInput("config: missing theta");
  if (!have_mu) throw MalformedInput("config: missing mu");
  if (!have_reps) throw MalformedInput("config: missing replications");
  if (!have_seed) throw MalformedInput("config: missing base_seed");
  if (horizons.empty()) throw MalformedInput("config: at least one horizon required");

  ExperimentConfig cfg{spec, VasicekParams(theta, mu), std::move(horizons), reps, base_seed,
                       scheme};
  cfg.validate();
  return cfg;
}

ExperimentConfig load_experiment_config(const std::string& file) {
  return parse_experiment_config(read_text_file(file));
}

std::string render_experiment_config(const ExperimentConfig& cfg) {
  std::string out;
  out += "kernel = " + cfg.spec.token() + "\n";
  out += "theta = " + fmt_shortest(cfg.params.theta) + "\n";
  out += "mu = " + fmt_shortest(cfg.params.mu) + "\n";
  out += "replications = " + std::to_string(cfg.replications) + "\n";
  out += "base_seed = " + std::to_string(cfg.base_seed) + "\n";
  out += std::string("scheme = ") + scheme_name(cfg.scheme) + "\n";
  for (const auto& h : cfg.horizons)
    out += "horizon = " + fmt_shortest(h.T) + "," + std::to_string(h.n) + "\n";
  return out;
}

}  // namespace vlse
