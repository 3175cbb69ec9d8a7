#include <catch2/catch_amalgamated.hpp>

#include "clustp/gen.hpp"
#include "clustp/oracle.hpp"
#include "clustp/solution.hpp"
#include "clustp/spt.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace clustp;

TEST_CASE("k=1 optimum is the unconstrained shortest-path total", "[oracle]") {
  const auto inst = generate_clustered(7, 1, 10.0, 50.0, 2);
  const auto result = brute_force_optimum(inst);
  const auto fw = testsupport::floyd_warshall_all(inst);
  double expected = 0.0;
  for (int v = 0; v < 7; ++v)
    expected += fw[static_cast<std::size_t>(inst.source())][static_cast<std::size_t>(v)];
  CHECK_THAT(result.optimum, Catch::Matchers::WithinRel(expected, 1e-9));
  CHECK(check_feasible(result.tree, inst).empty());
}

TEST_CASE("two vertices in two clusters leave one tree", "[oracle]") {
  const auto inst =
      build_instance("two", std::vector<Point2>{{0, 0}, {3, 4}}, {{0}, {1}}, 0);
  const auto result = brute_force_optimum(inst);
  CHECK(result.optimum == 5.0);
  CHECK(result.tree.edges == std::vector<EdgeRef>{{0, 1}});
}

TEST_CASE("unit square with two clusters", "[oracle]") {
  // regression constant produced by this enumeration: the cheapest of the
  // four feasible trees keeps (0,1),(2,3) and crosses with (0,2)
  const auto inst = build_instance(
      "square", std::vector<Point2>{{0, 0}, {1, 0}, {0, 1}, {1, 1}}, {{0, 1}, {2, 3}}, 0);
  const auto result = brute_force_optimum(inst);
  CHECK_THAT(result.optimum, Catch::Matchers::WithinRel(4.0, 1e-12));
  CHECK(result.tree.edges == std::vector<EdgeRef>{{0, 1}, {0, 2}, {2, 3}});
  CHECK(result.tree.local_roots == std::vector<Vertex>{0, 2});
  CHECK(result.tree.inter_cluster_edges == std::vector<EdgeRef>{{0, 2}});
}

TEST_CASE("size caps are enforced", "[oracle]") {
  const auto big = generate_clustered(52, 10, 10.0, 500.0, 1);
  try {
    brute_force_optimum(big);
    FAIL("expected InstanceTooLarge");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InstanceTooLarge);
  }
  // 8 vertices are fine, but a complete 8-vertex graph has 28 > 24 edges
  const auto dense = generate_clustered(8, 2, 10.0, 50.0, 1);
  CHECK_THROWS_AS(brute_force_optimum(dense), Error);
}

TEST_CASE("detects that no feasible tree exists", "[oracle]") {
  // cluster {0,1} has no internal edge, so it can never be spanned
  std::vector<std::vector<double>> w(4, std::vector<double>(4, kInfiniteWeight));
  for (int i = 0; i < 4; ++i) w[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0;
  w[2][3] = w[3][2] = 1.0;
  w[0][2] = w[2][0] = 1.0;
  w[1][3] = w[3][1] = 1.0;
  const auto inst = build_instance("nofeas", std::move(w), {{0, 1}, {2, 3}}, 0);
  try {
    brute_force_optimum(inst);
    FAIL("expected NoFeasibleTree");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NoFeasibleTree);
  }
}

TEST_CASE("witness is feasible and no hand-built tree beats it", "[oracle]") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto inst = testsupport::make_small_explicit(7, 2, 3000 + seed);
    const auto result = brute_force_optimum(inst);
    CHECK(check_feasible(result.tree, inst).empty());
    CHECK_THAT(total_cost(result.tree, inst),
               Catch::Matchers::WithinRel(result.optimum, 1e-9));

    // a straightforward feasible competitor: per-cluster trees from the
    // cheapest crossing edge
    SolutionTree rival;
    rival.instance_name = inst.name();
    const ClusterId root_cluster = inst.cluster_of(inst.source());
    const auto spt0 = dijkstra_spt(inst, inst.cluster(root_cluster), inst.source());
    for (const auto& e : spt0.edges()) rival.edges.push_back(e);
    for (ClusterId c = 0; c < inst.num_clusters(); ++c) {
      if (c == root_cluster) continue;
      EdgeRef best{kNoVertex, kNoVertex};
      double best_w = kInfiniteWeight;
      for (Vertex u : inst.cluster(root_cluster))
        for (Vertex v : inst.cluster(c)) {
          const double w = inst.edge_weight(u, v);
          if (w < best_w) {
            best_w = w;
            best = {u, v};
          }
        }
      if (!std::isfinite(best_w)) {
        rival.edges.clear();
        break;
      }
      rival.edges.push_back(best.normalized());
      const auto spt = dijkstra_spt(inst, inst.cluster(c), best.v);
      for (const auto& e : spt.edges()) rival.edges.push_back(e);
    }
    if (!rival.edges.empty() && check_feasible(rival, inst).empty())
      CHECK(total_cost(rival, inst) >= result.optimum - 1e-9);
  }
}
