// Command-line front end: solve instances, sweep gamma, compare against
// published baselines, generate synthetic instances, run the exhaustive
// oracle, and check solution files.
//
// Exit codes: 0 success, 1 usage error, 2 malformed data, 3 infeasible
// input or oracle size cap.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "clustp/clustp.hpp"

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw clustp::Error(clustp::ErrorCode::SyntaxError, "cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw clustp::Error(clustp::ErrorCode::SyntaxError, "cannot write file: " + path);
  out << text;
}

int env_threads() {
  const char* value = std::getenv("CLUSTP_THREADS");
  if (value == nullptr) return 0;  // auto: hardware count
  const int threads = std::atoi(value);
  return threads > 0 ? threads : 0;
}

// Re-derives the tree of the best run of a report.
clustp::SolutionTree best_tree(const clustp::ClusteredInstance& inst,
                               const clustp::TrialReport& report, bool rescan_all) {
  std::size_t best = 0;
  for (std::size_t t = 1; t < report.costs.size(); ++t)
    if (report.costs[t] < report.costs[best]) best = t;
  clustp::NrgaParams params;
  params.gamma = report.gamma;
  params.seed = report.seeds[best];
  clustp::NrgaOptions options;
  options.rescan_all = rescan_all;
  return clustp::nrga_run(inst, params, options);
}

nlohmann::ordered_json report_to_json(const clustp::TrialReport& r) {
  nlohmann::ordered_json j;
  j["instance"] = r.instance;
  j["gamma"] = r.gamma;
  j["runs"] = r.runs;
  j["best_found"] = r.best_found;
  j["average"] = r.average;
  j["seconds_per_run"] = r.seconds_per_run;
  j["master_seed"] = r.master_seed;
  j["costs"] = r.costs;
  j["seeds"] = r.seeds;
  return j;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Clustered shortest-path tree solver and benchmark harness"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Run repeated randomized-greedy trials");
  std::string solve_instance;
  double solve_gamma = 50.0;
  std::uint64_t solve_seed = 0;
  int solve_runs = 30;
  std::string solve_out = "csv";
  std::string solve_solution;
  bool solve_rescan = false;
  solve->add_option("instance", solve_instance, "instance file")->required();
  solve->add_option("--gamma", solve_gamma, "greediness exponent (>= 0)")
      ->check(CLI::NonNegativeNumber);
  solve->add_option("--seed", solve_seed, "master seed");
  solve->add_option("--runs", solve_runs, "number of independent runs")
      ->check(CLI::PositiveNumber);
  solve->add_option("--out", solve_out, "report format")
      ->check(CLI::IsMember({"csv", "md", "json"}));
  solve->add_option("--solution", solve_solution, "write the best tree to this file");
  solve->add_flag("--rescan-all", solve_rescan,
                  "score candidates from every attached cluster (experimental)");

  // sweep
  auto* sweep = app.add_subcommand("sweep", "Run trials across several gamma values");
  std::string sweep_instance;
  std::vector<double> sweep_gammas;
  std::uint64_t sweep_seed = 0;
  int sweep_runs = 30;
  std::string sweep_out = "md";
  sweep->add_option("instance", sweep_instance, "instance file")->required();
  sweep->add_option("--gammas", sweep_gammas, "comma-separated gamma values")
      ->required()
      ->delimiter(',');
  sweep->add_option("--runs", sweep_runs, "number of runs per gamma")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--seed", sweep_seed, "master seed (shared across gammas)");
  sweep->add_option("--out", sweep_out, "report format")
      ->check(CLI::IsMember({"csv", "md"}));

  // compare
  auto* compare = app.add_subcommand("compare", "PI table against published baselines");
  std::string compare_results, compare_baselines;
  compare->add_option("results", compare_results, "results CSV produced by solve/sweep")
      ->required();
  compare->add_option("baselines", compare_baselines,
                      "CSV instance,algorithm,best_found,average")
      ->required();

  // generate
  auto* generate = app.add_subcommand("generate", "Write a synthetic instance");
  generate->require_subcommand(1);
  auto* grid = generate->add_subcommand("grid", "uniform points clustered by grid cell");
  int grid_n = 0, grid_rows = 0, grid_cols = 0;
  double grid_extent = 1000.0;
  std::uint64_t grid_seed = 0;
  std::string grid_out;
  grid->add_option("--n", grid_n, "number of vertices")->required();
  grid->add_option("--rows", grid_rows, "grid rows")->required();
  grid->add_option("--cols", grid_cols, "grid columns")->required();
  grid->add_option("--extent", grid_extent, "coordinate range [0,extent]");
  grid->add_option("--seed", grid_seed, "generator seed");
  grid->add_option("--out", grid_out, "output file")->required();
  auto* clustered = generate->add_subcommand("clustered", "Gaussian clouds around centers");
  int cl_n = 0, cl_k = 0;
  double cl_spread = 20.0, cl_extent = 1000.0;
  std::uint64_t cl_seed = 0;
  std::string cl_out;
  clustered->add_option("--n", cl_n, "number of vertices")->required();
  clustered->add_option("--k", cl_k, "number of clusters")->required();
  clustered->add_option("--spread", cl_spread, "Gaussian standard deviation");
  clustered->add_option("--extent", cl_extent, "coordinate range [0,extent]");
  clustered->add_option("--seed", cl_seed, "generator seed");
  clustered->add_option("--out", cl_out, "output file")->required();

  // oracle
  auto* oracle = app.add_subcommand("oracle", "Exhaustive optimum for tiny instances");
  std::string oracle_instance, oracle_solution;
  oracle->add_option("instance", oracle_instance, "instance file")->required();
  oracle->add_option("--solution", oracle_solution, "write the optimal tree to this file");

  // check
  auto* check = app.add_subcommand("check", "Feasibility verdict and cost of a solution");
  std::string check_instance, check_solution;
  check->add_option("instance", check_instance, "instance file")->required();
  check->add_option("solution", check_solution, "solution file")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (*solve) {
      const auto inst = clustp::parse_instance(read_file(solve_instance));
      // --rescan-all bypasses the shared-table fast path in run_trials
      clustp::TrialReport report;
      if (solve_rescan) {
        report.instance = inst.name();
        report.gamma = solve_gamma;
        report.runs = solve_runs;
        report.master_seed = solve_seed;
        const clustp::ClusterCostTable table(inst);
        clustp::KahanSum cost_sum;
        for (int t = 0; t < solve_runs; ++t) {
          clustp::NrgaParams params;
          params.gamma = solve_gamma;
          params.seed = clustp::derive_trial_seed(solve_seed, static_cast<std::uint64_t>(t));
          clustp::NrgaOptions options;
          options.cost_table = table.precomputed() ? &table : nullptr;
          options.rescan_all = true;
          const auto tree = clustp::nrga_run(inst, params, options);
          report.costs.push_back(*tree.cost_cache);
          report.seeds.push_back(params.seed);
          cost_sum.add(*tree.cost_cache);
        }
        report.best_found = *std::min_element(report.costs.begin(), report.costs.end());
        report.average = cost_sum.value() / solve_runs;
      } else {
        report = clustp::run_trials(inst, solve_gamma, solve_runs, solve_seed, env_threads());
      }
      if (solve_out == "csv")
        std::cout << clustp::write_results_csv({&report, 1});
      else if (solve_out == "md")
        std::cout << clustp::render_report_markdown({&report, 1});
      else
        std::cout << report_to_json(report).dump(2) << "\n";
      if (!solve_solution.empty()) {
        const auto tree = best_tree(inst, report, solve_rescan);
        write_file(solve_solution, clustp::write_solution(tree, *tree.cost_cache));
      }
    } else if (*sweep) {
      const auto inst = clustp::parse_instance(read_file(sweep_instance));
      const auto reports =
          clustp::gamma_sweep(inst, sweep_gammas, sweep_runs, sweep_seed, env_threads());
      if (sweep_out == "csv")
        std::cout << clustp::write_results_csv(reports);
      else
        std::cout << clustp::render_sweep_markdown(reports);
    } else if (*compare) {
      const auto ours = clustp::parse_results_csv(read_file(compare_results));
      const auto baselines = clustp::parse_baselines_csv(read_file(compare_baselines));
      const auto rows = clustp::compare_to_baselines(ours, baselines);
      std::cout << clustp::render_compare_markdown(rows);
    } else if (*grid) {
      const auto inst =
          clustp::generate_grid(grid_n, grid_rows, grid_cols, grid_extent, grid_seed);
      write_file(grid_out, clustp::write_instance(inst));
      std::cout << inst.name() << "\n";
    } else if (*clustered) {
      const auto inst = clustp::generate_clustered(cl_n, cl_k, cl_spread, cl_extent, cl_seed);
      write_file(cl_out, clustp::write_instance(inst));
      std::cout << inst.name() << "\n";
    } else if (*oracle) {
      const auto inst = clustp::parse_instance(read_file(oracle_instance));
      const auto result = clustp::brute_force_optimum(inst);
      std::cout << "optimum: " << clustp::format_double(result.optimum) << "\n";
      if (!oracle_solution.empty())
        write_file(oracle_solution, clustp::write_solution(result.tree, result.optimum));
    } else if (*check) {
      const auto inst = clustp::parse_instance(read_file(check_instance));
      const auto tree = clustp::parse_solution(read_file(check_solution));
      const auto violations = clustp::check_feasible(tree, inst);
      if (!violations.empty()) {
        std::cout << "infeasible\n";
        for (const auto& v : violations)
          std::cout << clustp::to_string(v.kind)
                    << (v.detail.empty() ? "" : ": " + v.detail) << "\n";
        return 3;
      }
      std::cout << "feasible\n";
      std::cout << "cost: " << clustp::format_double(clustp::total_cost(tree, inst)) << "\n";
    }
  } catch (const clustp::Error& e) {
    std::cerr << "error: " << clustp::to_string(e.code()) << ": " << e.what() << "\n";
    return clustp::exit_category(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
