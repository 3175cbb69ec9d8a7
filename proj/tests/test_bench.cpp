#include <catch2/catch_amalgamated.hpp>

#include <fstream>
#include <sstream>

#include "clustp/bench.hpp"
#include "clustp/gen.hpp"
#include "clustp/io.hpp"

using namespace clustp;

namespace {

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool same_report(const TrialReport& a, const TrialReport& b) {
  return a.instance == b.instance && a.gamma == b.gamma && a.runs == b.runs &&
         a.costs == b.costs && a.seeds == b.seeds && a.best_found == b.best_found &&
         a.average == b.average && a.master_seed == b.master_seed;
}

}  // namespace

TEST_CASE("single run collapses the statistics", "[bench]") {
  const auto inst = generate_clustered(20, 3, 10.0, 100.0, 1);
  const auto report = run_trials(inst, 50.0, 1, 5);
  CHECK(report.runs == 1);
  CHECK(report.best_found == report.average);
  CHECK(report.best_found == report.costs[0]);
}

TEST_CASE("reports replay exactly under a fixed master seed", "[bench]") {
  const auto inst = generate_grid(30, 2, 3, 200.0, 2);
  const auto a = run_trials(inst, 50.0, 30, 42);
  const auto b = run_trials(inst, 50.0, 30, 42);
  CHECK(same_report(a, b));
  CHECK(a.seeds[0] == derive_trial_seed(42, 0));
  CHECK(a.seeds[29] == derive_trial_seed(42, 29));
}

TEST_CASE("parallel and serial trials agree", "[bench]") {
  const auto inst = generate_clustered(40, 6, 12.0, 300.0, 3);
  const auto serial = run_trials(inst, 10.0, 16, 7, 1);
  const auto parallel = run_trials(inst, 10.0, 16, 7, 8);
  CHECK(same_report(serial, parallel));
}

TEST_CASE("one cluster means zero variance", "[bench]") {
  const auto inst = generate_clustered(25, 1, 10.0, 100.0, 4);
  const auto report = run_trials(inst, 50.0, 10, 9);
  for (double c : report.costs) CHECK(c == report.costs[0]);
  CHECK(report.best_found == report.average);
}

TEST_CASE("best never exceeds average", "[bench]") {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto inst = generate_clustered(30, 5, 15.0, 300.0, 100 + seed);
    const auto report = run_trials(inst, 1.0, 20, seed);
    CHECK(report.best_found <= report.average);
  }
}

TEST_CASE("gamma sweep pairs seeds across gamma values", "[bench]") {
  const auto inst = generate_grid(30, 2, 2, 200.0, 5);
  const std::vector<double> gammas{1, 5, 10, 20, 30, 40, 50};
  const auto reports = gamma_sweep(inst, gammas, 5, 11);
  REQUIRE(reports.size() == 7);
  for (std::size_t i = 0; i < reports.size(); ++i) {
    CHECK(reports[i].gamma == gammas[i]);
    CHECK(reports[i].seeds == reports[0].seeds);
  }

  const auto twice = gamma_sweep(inst, std::vector<double>{3.0, 3.0}, 5, 11);
  REQUIRE(twice.size() == 2);
  CHECK(same_report(twice[0], twice[1]));
}

TEST_CASE("performance improvement formula", "[bench]") {
  CHECK_THAT(performance_improvement(1713.2, 3027.7),
             Catch::Matchers::WithinAbs(43.42, 0.01));
  CHECK_THAT(performance_improvement(522572.2, 656800.9),
             Catch::Matchers::WithinAbs(20.44, 0.01));
  CHECK(performance_improvement(123.4, 123.4) == 0.0);
  CHECK(performance_improvement(10.0, 20.0) > 0.0);
  CHECK(performance_improvement(20.0, 10.0) < 0.0);
  CHECK_THROWS_AS(performance_improvement(1.0, 0.0), Error);
}

TEST_CASE("baselines CSV parses and joins into a PI table", "[bench]") {
  const auto baselines =
      parse_baselines_csv(slurp(std::string(CLUSTP_DATA_DIR) + "/baselines_type1.csv"));
  CHECK(baselines.size() == 62);

  // pretend-run results carrying the published best-found values
  std::vector<ResultsRow> ours;
  for (const auto& row : baselines)
    if (row.algorithm == "NRGA")
      ours.push_back({row.instance, 50.0, 30, row.best_found, row.average, 0.0, 0});

  const auto pi = compare_to_baselines(ours, baselines);
  bool checked = false;
  for (const auto& row : pi)
    if (row.instance == "10eil51" && row.algorithm == "C-MFEA") {
      CHECK_THAT(row.pi, Catch::Matchers::WithinAbs(43.42, 0.01));
      checked = true;
    }
  CHECK(checked);
  CHECK(mean_pi(pi, "C-MFEA") > 40.0);

  const auto table = render_compare_markdown(pi);
  CHECK(table.find("| 10eil51 | C-MFEA |") != std::string::npos);
  CHECK(table.find("43.42") != std::string::npos);
}

TEST_CASE("markdown sweep table mirrors the per-gamma layout", "[bench]") {
  const auto inst = generate_grid(24, 2, 2, 100.0, 6);
  const auto reports = gamma_sweep(inst, std::vector<double>{1.0, 50.0}, 3, 1);
  const auto table = render_sweep_markdown(reports);
  CHECK(table.find("gamma=1 BF") != std::string::npos);
  CHECK(table.find("gamma=50 Avg") != std::string::npos);
  CHECK(table.find(inst.name()) != std::string::npos);
}
