#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace randcliff {

/// One batch run. Per-trial randomness comes from derive_stream(master_seed,
/// trial_index) only, so records are a pure function of this struct however
/// many workers execute it.
struct ExperimentConfig {
  std::string kind; // chain-eq | distance | depth | thm3

  std::size_t n = 0;
  std::size_t k = 1;
  std::size_t t = 0;  // explicit gate count; 0 defers to c
  double c = 0.0;     // t = ceil(c * n * ceil(log2 n)^2) when t == 0
  std::size_t d = 0;  // distance ensemble: largest d' reported (0 = n)
  std::size_t l0 = 1; // chain-eq start weight
  std::string start_pauli; // chain-eq: explicit start (overrides l0)

  std::vector<std::size_t> n_values; // depth sweep; empty = {n}

  std::size_t trials = 1;
  uint64_t master_seed = 0;
  unsigned workers = 1;

  std::size_t distance_target = 0; // thm3
  std::size_t depth_target = 0;    // thm3

  double tv_limit = 0.0;    // chain-eq: fail if TV above this (0 = report only)
  double ratio_limit = 0.0; // depth: fail if max ratio above this (0 = report only)

  std::string output_path; // report JSON; trial records -> <path>.records.jsonl
  std::string csv_dir;     // optional histogram CSVs

  std::string to_json() const;
  static ExperimentConfig from_json(const std::string& text);
};

struct ExperimentReport {
  bool invariants_ok = false;
  std::string json; // full report document (config echo, aggregates, timing)
};

ExperimentReport run_chain_equivalence(const ExperimentConfig& config);
ExperimentReport run_distance_ensemble(const ExperimentConfig& config);
ExperimentReport run_depth_scaling(const ExperimentConfig& config);
ExperimentReport run_theorem3_demo(const ExperimentConfig& config);

/// Dispatch on config.kind.
ExperimentReport run_experiment(const ExperimentConfig& config);

/// 95% Wilson score interval for x successes in n trials.
struct WilsonInterval {
  double low = 0.0;
  double high = 0.0;
};
WilsonInterval wilson_interval(uint64_t successes, uint64_t trials);

} // namespace randcliff
