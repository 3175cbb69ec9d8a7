#pragma once

#include <algorithm>
#include <cstdint>
#include <utility>
#include <vector>

#include "clustp/error.hpp"
#include "clustp/instance.hpp"
#include "clustp/solution.hpp"

namespace clustp {

struct OracleResult {
  double optimum = kInfiniteWeight;
  SolutionTree tree;
};

// Exhaustive optimum for tiny instances: every (|E| choose |V|-1) edge
// subset is tested for feasibility and costed. Size caps keep the worst
// case near C(24,9) ~ 1.3M subsets. Ties resolve to the lexicographically
// smallest sorted edge list, which the enumeration order yields for free.
inline OracleResult brute_force_optimum(const ClusteredInstance& inst) {
  constexpr int kMaxVertices = 10;
  constexpr int kMaxEdges = 24;

  const int n = inst.num_vertices();
  const int k = inst.num_clusters();
  if (n > kMaxVertices)
    throw Error(ErrorCode::InstanceTooLarge,
                "oracle accepts at most " + std::to_string(kMaxVertices) +
                    " vertices, got " + std::to_string(n));
  const std::vector<EdgeRef> edges = inst.finite_edges();
  const int m = static_cast<int>(edges.size());
  if (m > kMaxEdges)
    throw Error(ErrorCode::InstanceTooLarge,
                "oracle accepts at most " + std::to_string(kMaxEdges) +
                    " finite edges, got " + std::to_string(m));

  const int t = n - 1;
  if (m < t) throw Error(ErrorCode::NoFeasibleTree, "fewer edges than |V|-1");

  std::vector<double> weight(static_cast<std::size_t>(m));
  std::vector<ClusterId> cluster_u(static_cast<std::size_t>(m));
  std::vector<ClusterId> cluster_v(static_cast<std::size_t>(m));
  for (int e = 0; e < m; ++e) {
    weight[static_cast<std::size_t>(e)] = inst.edge_weight(edges[static_cast<std::size_t>(e)].u,
                                                           edges[static_cast<std::size_t>(e)].v);
    cluster_u[static_cast<std::size_t>(e)] = inst.cluster_of(edges[static_cast<std::size_t>(e)].u);
    cluster_v[static_cast<std::size_t>(e)] = inst.cluster_of(edges[static_cast<std::size_t>(e)].v);
  }

  // Feasible spanning tree <=> n-1 acyclic connecting edges AND, per
  // cluster, exactly |V_i|-1 internal edges (an induced forest with that
  // many edges is a spanning tree of the cluster).
  std::vector<int> needed(static_cast<std::size_t>(k));
  for (ClusterId c = 0; c < k; ++c)
    needed[static_cast<std::size_t>(c)] = static_cast<int>(inst.cluster(c).size()) - 1;

  std::vector<int> pick(static_cast<std::size_t>(t));
  for (int i = 0; i < t; ++i) pick[static_cast<std::size_t>(i)] = i;

  double best_cost = kInfiniteWeight;
  std::vector<int> best_pick;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::vector<int> internal(static_cast<std::size_t>(k));
  std::vector<double> dist(static_cast<std::size_t>(n));
  std::vector<Vertex> stack;

  const auto find = [&](int x) {
    while (parent[static_cast<std::size_t>(x)] != x)
      x = parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  };

  bool done = t == 0;
  while (!done) {
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    std::fill(internal.begin(), internal.end(), 0);
    bool feasible = true;
    for (int i = 0; i < t && feasible; ++i) {
      const int e = pick[static_cast<std::size_t>(i)];
      const int a = find(edges[static_cast<std::size_t>(e)].u);
      const int b = find(edges[static_cast<std::size_t>(e)].v);
      if (a == b) {
        feasible = false;  // cycle
      } else {
        parent[static_cast<std::size_t>(a)] = b;
        if (cluster_u[static_cast<std::size_t>(e)] == cluster_v[static_cast<std::size_t>(e)])
          ++internal[static_cast<std::size_t>(cluster_u[static_cast<std::size_t>(e)])];
      }
    }
    if (feasible)
      for (ClusterId c = 0; c < k && feasible; ++c)
        feasible = internal[static_cast<std::size_t>(c)] == needed[static_cast<std::size_t>(c)];

    if (feasible) {
      // n-1 acyclic edges on n vertices already span; accumulate the cost.
      std::vector<std::vector<std::pair<Vertex, double>>> adj(static_cast<std::size_t>(n));
      for (int i = 0; i < t; ++i) {
        const int e = pick[static_cast<std::size_t>(i)];
        adj[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].u)].push_back(
            {edges[static_cast<std::size_t>(e)].v, weight[static_cast<std::size_t>(e)]});
        adj[static_cast<std::size_t>(edges[static_cast<std::size_t>(e)].v)].push_back(
            {edges[static_cast<std::size_t>(e)].u, weight[static_cast<std::size_t>(e)]});
      }
      std::fill(dist.begin(), dist.end(), -1.0);
      dist[static_cast<std::size_t>(inst.source())] = 0.0;
      stack.assign(1, inst.source());
      KahanSum cost;
      while (!stack.empty()) {
        const Vertex u = stack.back();
        stack.pop_back();
        cost.add(dist[static_cast<std::size_t>(u)]);
        for (const auto& [v, w] : adj[static_cast<std::size_t>(u)])
          if (dist[static_cast<std::size_t>(v)] < 0.0) {
            dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + w;
            stack.push_back(v);
          }
      }
      if (cost.value() < best_cost) {
        best_cost = cost.value();
        best_pick = pick;
      }
    }

    // next combination in lexicographic order
    int i = t - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == m - t + i) --i;
    if (i < 0) {
      done = true;
    } else {
      ++pick[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < t; ++j)
        pick[static_cast<std::size_t>(j)] = pick[static_cast<std::size_t>(j - 1)] + 1;
    }
  }

  if (t == 0) {
    best_cost = 0.0;  // single vertex
    best_pick.clear();
  }
  if (!(best_cost < kInfiniteWeight))
    throw Error(ErrorCode::NoFeasibleTree, "no feasible spanning tree exists");

  OracleResult result;
  result.optimum = best_cost;
  result.tree.instance_name = inst.name();
  for (int e : best_pick) result.tree.edges.push_back(edges[static_cast<std::size_t>(e)]);
  std::sort(result.tree.edges.begin(), result.tree.edges.end());

  // Recover local roots and crossing edges from a traversal out of the source.
  std::vector<Vertex> tree_parent(static_cast<std::size_t>(n), kNoVertex);
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  std::vector<std::vector<Vertex>> adj(static_cast<std::size_t>(n));
  for (const EdgeRef& e : result.tree.edges) {
    adj[static_cast<std::size_t>(e.u)].push_back(e.v);
    adj[static_cast<std::size_t>(e.v)].push_back(e.u);
  }
  stack.assign(1, inst.source());
  seen[static_cast<std::size_t>(inst.source())] = 1;
  result.tree.local_roots.assign(static_cast<std::size_t>(k), kNoVertex);
  result.tree.local_roots[static_cast<std::size_t>(inst.cluster_of(inst.source()))] =
      inst.source();
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (Vertex v : adj[static_cast<std::size_t>(u)]) {
      if (seen[static_cast<std::size_t>(v)]) continue;
      seen[static_cast<std::size_t>(v)] = 1;
      tree_parent[static_cast<std::size_t>(v)] = u;
      if (inst.cluster_of(u) != inst.cluster_of(v)) {
        result.tree.local_roots[static_cast<std::size_t>(inst.cluster_of(v))] = v;
        result.tree.inter_cluster_edges.push_back(EdgeRef{u, v}.normalized());
      }
      stack.push_back(v);
    }
  }
  std::sort(result.tree.inter_cluster_edges.begin(), result.tree.inter_cluster_edges.end());
  result.tree.cost_cache = best_cost;
  return result;
}

}  // namespace clustp
