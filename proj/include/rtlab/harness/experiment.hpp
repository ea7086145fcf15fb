#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <string>

#include <json.hpp>

#include "rtlab/harness/config.hpp"
#include "rtlab/report.hpp"

namespace rtlab::harness {

inline constexpr const char* kReportSchema = "rtlab-report/1";

// Everything a (q, seed) cell persists, as exact file contents.
struct CellOutput {
  int q = 0;
  std::uint64_t seed = 0;
  std::map<std::string, std::string> files;  // file name -> bytes
  nlohmann::json record;
};

std::string cell_dir_name(int q, std::uint64_t seed);

// Runs one cell in memory. Stage errors are rethrown with the stage name.
CellOutput run_cell(const ExperimentConfig& config, int q, std::uint64_t seed);

struct ExperimentResult {
  nlohmann::json report;
  int hard_failures = 0;
};

// Runs every (q, seed) cell (jobs threads), writes the artifact tree under
// config.out_dir and returns the report (also written as report.json).
ExperimentResult run_experiment(const ExperimentConfig& config, int jobs = 1);

// Aggregates from per-cell records only: OLS fits of log edges on log n and
// of log mean degree on log(lambda q p^2), line-binomial coverage, counts.
nlohmann::json aggregate_records(const nlohmann::json& records);

struct LinearFit {
  double slope = 0.0;
  double intercept = 0.0;
  double slope_se = 0.0;
  int points = 0;
};
LinearFit ols_fit(const std::vector<double>& x, const std::vector<double>& y);

// Regenerates every cell from config.json and byte-compares against the
// stored files, then compares check outcomes. Throws Error(missing_artifact)
// or Error(mismatch) naming the file.
VerificationReport replay(const std::filesystem::path& dir);

// Stored report with aggregates recomputed from the records.
nlohmann::json load_report(const std::filesystem::path& dir);
// One row per (q, seed); columns listed by csv_columns().
std::string report_csv(const nlohmann::json& report);
const std::vector<std::string>& csv_columns();

}  // namespace rtlab::harness
