#include <catch2/catch_amalgamated.hpp>

#include "clustp/gen.hpp"
#include "clustp/spt.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace clustp;

TEST_CASE("singleton cluster yields the trivial tree", "[spt]") {
  const auto inst = build_instance("p", std::vector<Point2>{{0, 0}, {5, 0}}, {{0}, {1}}, 0);
  const auto spt = dijkstra_spt(inst, inst.cluster(0), 0);
  REQUIRE(spt.members.size() == 1);
  CHECK(spt.dist_of(0) == 0.0);
  CHECK(spt.parent_of(0) == kNoVertex);
  CHECK(spt.edges().empty());
}

TEST_CASE("worked-example cluster 2 rooted at its attachment vertex", "[spt]") {
  // cluster {9,10,11,12,13} rooted at 9 (file ids 10..14 rooted at 10)
  const auto inst = testsupport::worked15_instance();
  const auto spt = dijkstra_spt(inst, inst.cluster(1), 9);
  CHECK(spt.dist_of(9) == 0.0);
  CHECK(spt.dist_of(10) == 2.0);
  CHECK(spt.dist_of(11) == 3.0);
  CHECK(spt.dist_of(12) == 6.0);
  CHECK(spt.dist_of(13) == 8.0);
  CHECK(spt.parent_of(10) == 9);
  CHECK(spt.parent_of(11) == 10);
  CHECK(spt.parent_of(12) == 10);
  CHECK(spt.parent_of(13) == 12);
}

TEST_CASE("distances agree with Floyd-Warshall on random clusters", "[spt]") {
  for (std::uint64_t seed = 0; seed < 8; ++seed) {
    const auto inst = generate_clustered(21, 3, 10.0, 200.0, 1000 + seed);
    for (ClusterId c = 0; c < inst.num_clusters(); ++c) {
      const auto& members = inst.cluster(c);
      const auto fw = testsupport::floyd_warshall(inst, members);
      const auto spt = dijkstra_spt(inst, members, members.front());
      for (std::size_t i = 0; i < members.size(); ++i)
        CHECK_THAT(spt.dist[i], Catch::Matchers::WithinRel(fw[0][i], 1e-9));
    }
  }
}

TEST_CASE("parent edges reconstruct the distances", "[spt]") {
  const auto inst = generate_grid(30, 2, 2, 100.0, 5);
  const auto& members = inst.cluster(0);
  const auto spt = dijkstra_spt(inst, members, members.front());
  for (std::size_t i = 0; i < members.size(); ++i) {
    if (spt.parent[i] == kNoVertex) continue;
    CHECK_THAT(spt.dist[i],
               Catch::Matchers::WithinRel(
                   spt.dist_of(spt.parent[i]) +
                       inst.edge_weight(spt.parent[i], spt.members[i]),
                   1e-12));
  }
}

TEST_CASE("repeated runs give identical parent maps", "[spt]") {
  const auto inst = generate_clustered(24, 2, 8.0, 100.0, 77);
  const auto a = dijkstra_spt(inst, inst.cluster(0), inst.cluster(0)[2]);
  const auto b = dijkstra_spt(inst, inst.cluster(0), inst.cluster(0)[2]);
  CHECK(a.parent == b.parent);
  CHECK(a.dist == b.dist);
}

TEST_CASE("errors: missing root and disconnected members", "[spt]") {
  const auto inst = testsupport::worked15_instance();
  CHECK_THROWS_AS(dijkstra_spt(inst, inst.cluster(0), 9), Error);
  // vertices 0 and 14 have no finite edge, so {0,14} cannot be spanned
  const std::vector<Vertex> split{0, 14};
  try {
    dijkstra_spt(inst, split, 0);
    FAIL("expected DisconnectedInducedSubgraph");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DisconnectedInducedSubgraph);
  }
}

TEST_CASE("cost_spt trivial values", "[spt]") {
  const auto one = build_instance("s", std::vector<Point2>{{0, 0}, {1, 1}}, {{0}, {1}}, 0);
  CHECK(cost_spt(one, one.cluster(0), 0) == 0.0);

  const auto pair = build_instance(
      "pair", std::vector<std::vector<double>>{{0, 7}, {7, 0}}, {{0, 1}}, 0);
  CHECK(cost_spt(pair, pair.cluster(0), 0) == 7.0);
  CHECK(cost_spt(pair, pair.cluster(0), 1) == 7.0);
}

TEST_CASE("cost_spt matches exhaustive path enumeration", "[spt]") {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const auto inst = testsupport::make_small_explicit(6, 2, 500 + seed);
    const auto& members = inst.cluster(0);
    for (Vertex v : members) {
      const auto best = testsupport::shortest_by_enumeration(inst, members, v);
      double expected = 0.0;
      for (double d : best) expected += d;
      CHECK_THAT(cost_spt(inst, members, v), Catch::Matchers::WithinRel(expected, 1e-9));
    }
  }
}

TEST_CASE("cost_spt dominates the largest single distance", "[spt]") {
  const auto inst = generate_clustered(30, 3, 12.0, 300.0, 11);
  for (ClusterId c = 0; c < 3; ++c) {
    const auto& members = inst.cluster(c);
    for (Vertex v : members) {
      const auto spt = dijkstra_spt(inst, members, v);
      const double max_d = *std::max_element(spt.dist.begin(), spt.dist.end());
      CHECK(cost_spt(inst, members, v) >= max_d);
    }
  }
}

TEST_CASE("cluster cost table agrees with direct evaluation in both modes", "[spt]") {
  const auto inst = generate_clustered(40, 4, 10.0, 200.0, 23);
  const ClusterCostTable eager(inst, true);
  const ClusterCostTable lazy(inst, false);
  CHECK(eager.precomputed());
  CHECK_FALSE(lazy.precomputed());
  for (ClusterId c = 0; c < inst.num_clusters(); ++c)
    for (Vertex v : inst.cluster(c)) {
      const double direct = cost_spt(inst, inst.cluster(c), v);
      CHECK(eager.cost(c, v) == direct);
      CHECK(lazy.cost(c, v) == direct);
      CHECK(lazy.cost(c, v) == direct);  // memoized second read
    }
}
