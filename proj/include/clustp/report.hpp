#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace clustp {

// Statistics of one batch of repeated solver runs on one instance.
struct TrialReport {
  std::string instance;
  double gamma = 0.0;
  int runs = 0;
  std::vector<double> costs;          // one objective value per run
  std::vector<std::uint64_t> seeds;   // per-run derived seeds
  double best_found = 0.0;            // min(costs)
  double average = 0.0;               // mean(costs)
  double seconds_per_run = 0.0;       // mean wall time
  std::uint64_t master_seed = 0;
};

// One line of a results CSV (a TrialReport without the per-run vectors).
struct ResultsRow {
  std::string instance;
  double gamma = 0.0;
  int runs = 0;
  double best_found = 0.0;
  double average = 0.0;
  double seconds_per_run = 0.0;
  std::uint64_t master_seed = 0;
};

// Published reference results consumed for comparisons; this harness never
// produces these numbers itself.
struct BaselineRow {
  std::string instance;
  std::string algorithm;
  double best_found = 0.0;
  double average = 0.0;
};

}  // namespace clustp
