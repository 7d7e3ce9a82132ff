#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "wormsim/metrics.hpp"
#include "wormsim/scenario.hpp"

namespace wsn {

/// Named scenario configs, each run `repetitions` times at seeds
/// seed, seed+1, ... as baseline/prevention pairs.
///
/// File format: optional global keys (`repetitions`, `output_dir`, or any
/// scenario key as a shared default), then `[name]` sections of scenario keys.
struct ExperimentSpec {
  std::vector<std::pair<std::string, ScenarioConfig>> experiments;
  std::size_t repetitions = 1;
  std::string output_dir;
};

ExperimentSpec parse_experiment(std::istream& is);
ExperimentSpec load_experiment(const std::string& path);

struct SweepRow {
  std::string experiment;
  OverheadRow row;
};

struct AggregateRow {
  std::string experiment;
  int hops = 0;
  std::size_t runs = 0;
  double mean_baseline_time = 0.0;
  double mean_prevention_time = 0.0;
  double mean_baseline_energy = 0.0;
  double mean_prevention_energy = 0.0;
  double max_collection_time = 0.0;
  std::size_t detections = 0;
};

/// Runs every (experiment, seed) pair on up to `jobs` threads. Rows come back
/// ordered by experiment name, then seed.
std::vector<SweepRow> run_sweep(const ExperimentSpec& spec, unsigned jobs);

/// Grouped by experiment, then hop count ascending.
std::vector<AggregateRow> aggregate(const std::vector<SweepRow>& rows);

std::string sweep_csv_header();
std::string sweep_csv_row(const SweepRow& r);
std::string aggregate_csv_header();
std::string aggregate_csv_row(const AggregateRow& r);

}  // namespace wsn
