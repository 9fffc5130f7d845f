#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vlse/estimators.hpp"
#include "vlse/montecarlo.hpp"
#include "vlse/sampler.hpp"
#include "vlse/vasicek.hpp"

namespace vlse {

// All numeric CSV output is 17-significant-digit decimal, locale-independent.

void write_path_csv(const std::string& file, const GaussianPath& g);           // t,g
void write_path_csv(const std::string& file, const VasicekPath& x);            // t,g,x

// Convention used when only an output directory is given.
std::string path_file_name(const KernelSpec& spec, double T, int n, std::uint64_t seed);

struct SeriesCsv {
  TimeGrid grid;
  std::vector<double> x;
  std::vector<double> g;  // empty when the file has no g column
};

// Reads `t,x` or `t,g,x` (also accepts sampler output `t,g` as the x series
// being absent -> error). Verifies the grid is uniform from 0.
SeriesCsv read_series_csv(const std::string& file);

std::string estimate_csv_header(bool with_scaled);
std::string estimate_csv_row(const std::optional<std::uint64_t>& seed, const std::string& kernel,
                             const std::optional<double>& theta, const std::optional<double>& mu,
                             const EstimateTriple& est);

std::string raw_records_csv_header();
std::string raw_record_csv_row(const ExperimentConfig& cfg, const ReplicationRecord& rec);
std::string summary_csv_header();
std::string summary_csv_row(const ExperimentConfig& cfg, const CellSummary& cell);

void write_text_file(const std::string& file, const std::string& content);
std::string read_text_file(const std::string& file);

}  // namespace vlse
