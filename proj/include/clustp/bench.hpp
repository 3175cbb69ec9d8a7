#pragma once

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <thread>
#include <vector>

#include "clustp/error.hpp"
#include "clustp/instance.hpp"
#include "clustp/io.hpp"
#include "clustp/nrga.hpp"
#include "clustp/report.hpp"
#include "clustp/rng.hpp"
#include "clustp/solution.hpp"

namespace clustp {

// Repeated independent solver runs on one instance. Trial t runs on
// derive_trial_seed(master_seed, t); the reduction happens in index order
// after all trials finish, so any thread count yields the same report.
// threads <= 0 selects the hardware concurrency.
inline TrialReport run_trials(const ClusteredInstance& inst, double gamma, int runs,
                              std::uint64_t master_seed, int threads = 1) {
  if (runs < 1) throw Error(ErrorCode::InvalidParams, "runs must be >= 1");

  TrialReport report;
  report.instance = inst.name();
  report.gamma = gamma;
  report.runs = runs;
  report.master_seed = master_seed;
  report.costs.resize(static_cast<std::size_t>(runs));
  report.seeds.resize(static_cast<std::size_t>(runs));
  std::vector<double> seconds(static_cast<std::size_t>(runs));

  const ClusterCostTable table(inst);
  const ClusterCostTable* shared = table.precomputed() ? &table : nullptr;

  const auto solve_range = [&](int first, int step) {
    for (int t = first; t < runs; t += step) {
      NrgaParams params;
      params.gamma = gamma;
      params.seed = derive_trial_seed(master_seed, static_cast<std::uint64_t>(t));
      NrgaOptions options;
      options.cost_table = shared;  // per-run table when memoization is lazy
      const auto t0 = std::chrono::steady_clock::now();
      const SolutionTree tree = nrga_run(inst, params, options);
      const auto t1 = std::chrono::steady_clock::now();
      report.costs[static_cast<std::size_t>(t)] = *tree.cost_cache;
      report.seeds[static_cast<std::size_t>(t)] = params.seed;
      seconds[static_cast<std::size_t>(t)] =
          std::chrono::duration<double>(t1 - t0).count();
    }
  };

  if (threads <= 0) threads = static_cast<int>(std::thread::hardware_concurrency());
  threads = std::max(1, std::min(threads, runs));
  if (threads == 1) {
    solve_range(0, 1);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(threads));
    for (int w = 0; w < threads; ++w) pool.emplace_back(solve_range, w, threads);
    for (auto& th : pool) th.join();
  }

  KahanSum cost_sum, time_sum;
  report.best_found = report.costs[0];
  for (int t = 0; t < runs; ++t) {
    report.best_found = std::min(report.best_found, report.costs[static_cast<std::size_t>(t)]);
    cost_sum.add(report.costs[static_cast<std::size_t>(t)]);
    time_sum.add(seconds[static_cast<std::size_t>(t)]);
  }
  report.average = cost_sum.value() / runs;
  report.seconds_per_run = time_sum.value() / runs;
  return report;
}

// One report per gamma, all sharing the master seed, so run index r sees the
// same derived seed at every gamma (paired design).
inline std::vector<TrialReport> gamma_sweep(const ClusteredInstance& inst,
                                            std::span<const double> gammas, int runs,
                                            std::uint64_t master_seed, int threads = 1) {
  if (gammas.empty()) throw Error(ErrorCode::InvalidParams, "no gamma values given");
  std::vector<TrialReport> reports;
  reports.reserve(gammas.size());
  for (double gamma : gammas)
    reports.push_back(run_trials(inst, gamma, runs, master_seed, threads));
  return reports;
}

// PI(A,B) = (C_B - C_A) / C_B * 100: the percentage by which cost_a improves
// on the reference cost_b. Positive iff cost_a < cost_b.
inline double performance_improvement(double cost_a, double cost_b) {
  if (!(cost_b > 0.0))
    throw Error(ErrorCode::NonpositiveReference, "reference cost must be positive");
  return (cost_b - cost_a) / cost_b * 100.0;
}

inline std::vector<BaselineRow> parse_baselines_csv(std::string_view text) {
  detail::LineReader reader{text};
  std::string_view line;
  if (!reader.next(line) || line != "instance,algorithm,best_found,average")
    throw Error(ErrorCode::SyntaxError, "bad baselines CSV header");
  std::vector<BaselineRow> rows;
  while (reader.next(line)) {
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    for (std::size_t i = 0; i <= line.size(); ++i)
      if (i == line.size() || line[i] == ',') {
        fields.push_back(line.substr(start, i - start));
        start = i + 1;
      }
    if (fields.size() != 4) reader.fail("expected 4 comma-separated fields");
    rows.push_back({std::string(fields[0]), std::string(fields[1]),
                    detail::parse_weight(fields[2], reader),
                    detail::parse_weight(fields[3], reader)});
  }
  return rows;
}

struct PiRow {
  std::string instance;
  std::string algorithm;
  double ours_best = 0.0;
  double baseline_best = 0.0;
  double pi = 0.0;
};

// Joins our per-instance best costs against every baseline entry for the
// same instance. When several result rows cover one instance (a sweep),
// the best of them is used.
inline std::vector<PiRow> compare_to_baselines(std::span<const ResultsRow> ours,
                                               std::span<const BaselineRow> baselines) {
  std::vector<PiRow> out;
  for (const BaselineRow& base : baselines) {
    bool found = false;
    double best = 0.0;
    for (const ResultsRow& row : ours)
      if (row.instance == base.instance) {
        best = found ? std::min(best, row.best_found) : row.best_found;
        found = true;
      }
    if (!found) continue;
    out.push_back({base.instance, base.algorithm, best, base.best_found,
                   performance_improvement(best, base.best_found)});
  }
  return out;
}

inline double mean_pi(std::span<const PiRow> rows, std::string_view algorithm) {
  KahanSum sum;
  int count = 0;
  for (const PiRow& row : rows)
    if (row.algorithm == algorithm) {
      sum.add(row.pi);
      ++count;
    }
  if (count == 0) throw Error(ErrorCode::NonpositiveReference,
                              "no rows for algorithm " + std::string(algorithm));
  return sum.value() / count;
}

// Markdown rendering mirrors the usual benchmark-table layout: best-found
// and average to one decimal, times to two.

inline std::string render_report_markdown(std::span<const TrialReport> reports) {
  std::string out = "| Instance | gamma | BF | Avg | Time (s) |\n";
  out += "|---|---|---|---|---|\n";
  for (const TrialReport& r : reports)
    out += "| " + r.instance + " | " + format_double(r.gamma) + " | " +
           format_fixed(r.best_found, 1) + " | " + format_fixed(r.average, 1) + " | " +
           format_fixed(r.seconds_per_run, 2) + " |\n";
  return out;
}

// Sweep table: one row per instance, BF/Avg column pair per gamma.
inline std::string render_sweep_markdown(std::span<const TrialReport> reports) {
  std::string header = "| Instance |";
  std::string rule = "|---|";
  std::vector<double> gammas;
  for (const TrialReport& r : reports)
    if (std::find(gammas.begin(), gammas.end(), r.gamma) == gammas.end())
      gammas.push_back(r.gamma);
  for (double g : gammas) {
    header += " gamma=" + format_double(g) + " BF | gamma=" + format_double(g) + " Avg |";
    rule += "---|---|";
  }
  std::string out = header + "\n" + rule + "\n";

  std::vector<std::string> instances;
  for (const TrialReport& r : reports)
    if (std::find(instances.begin(), instances.end(), r.instance) == instances.end())
      instances.push_back(r.instance);
  for (const std::string& name : instances) {
    out += "| " + name + " |";
    for (double g : gammas) {
      bool found = false;
      for (const TrialReport& r : reports)
        if (r.instance == name && r.gamma == g) {
          out += " " + format_fixed(r.best_found, 1) + " | " +
                 format_fixed(r.average, 1) + " |";
          found = true;
          break;
        }
      if (!found) out += " - | - |";
    }
    out += "\n";
  }
  return out;
}

inline std::string render_compare_markdown(std::span<const PiRow> rows) {
  std::string out = "| Instance | Algorithm | Ours BF | Baseline BF | PI (%) |\n";
  out += "|---|---|---|---|---|\n";
  std::vector<std::string> algorithms;
  for (const PiRow& row : rows) {
    out += "| " + row.instance + " | " + row.algorithm + " | " +
           format_fixed(row.ours_best, 1) + " | " + format_fixed(row.baseline_best, 1) +
           " | " + format_fixed(row.pi, 2) + " |\n";
    if (std::find(algorithms.begin(), algorithms.end(), row.algorithm) == algorithms.end())
      algorithms.push_back(row.algorithm);
  }
  for (const std::string& algorithm : algorithms)
    out += "\nAverage PI vs " + algorithm + ": " +
           format_fixed(mean_pi(rows, algorithm), 2) + "%\n";
  return out;
}

}  // namespace clustp
