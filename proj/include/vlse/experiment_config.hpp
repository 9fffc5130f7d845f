#pragma once

#include <string>

#include "vlse/montecarlo.hpp"

namespace vlse {

// Flat key-value experiment configuration:
//   # comment
//   kernel = fbm:H=0.5
//   theta = 1
//   mu = 2
//   replications = 500
//   base_seed = 42
//   scheme = explicit
//   horizon = 4,4096        # repeated, one per horizon
// Unknown keys are hard errors.
ExperimentConfig parse_experiment_config(const std::string& text);
ExperimentConfig load_experiment_config(const std::string& file);

std::string render_experiment_config(const ExperimentConfig& cfg);

}  // namespace vlse
