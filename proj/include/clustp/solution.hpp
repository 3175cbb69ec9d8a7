#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "clustp/error.hpp"
#include "clustp/instance.hpp"

namespace clustp {

// Compensated summation. Costs are printed rounded, so the accumulated
// value itself must not depend on how the addends happen to be grouped.
struct KahanSum {
  double sum = 0.0;
  double carry = 0.0;

  void add(double x) {
    const double y = x - carry;
    const double t = sum + y;
    carry = (t - sum) - y;
    sum = t;
  }

  double value() const { return sum; }
};

// Candidate spanning tree: |V|-1 edges, with each cluster's induced edge
// set spanning that cluster. `edges` and `inter_cluster_edges` are kept
// normalized (u < v) and sorted so equal solutions serialize identically.
struct SolutionTree {
  std::string instance_name;
  std::vector<EdgeRef> edges;
  std::vector<Vertex> local_roots;           // per cluster; source at the root cluster
  std::vector<EdgeRef> inter_cluster_edges;  // exactly k-1 in a feasible tree
  std::optional<double> cost_cache;
};

enum class ViolationKind { NotSpanning, HasCycle, ClusterDisconnected, EdgeNotInGraph };

struct Violation {
  ViolationKind kind;
  ClusterId cluster = -1;  // set for ClusterDisconnected
  std::string detail;
};

inline const char* to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::NotSpanning: return "NotSpanning";
    case ViolationKind::HasCycle: return "HasCycle";
    case ViolationKind::ClusterDisconnected: return "ClusterDisconnected";
    case ViolationKind::EdgeNotInGraph: return "EdgeNotInGraph";
  }
  return "Unknown";
}

namespace detail {

struct UnionFind {
  std::vector<int> parent;

  explicit UnionFind(std::size_t n) : parent(n) {
    for (std::size_t i = 0; i < n; ++i) parent[i] = static_cast<int>(i);
  }

  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) {
      parent[static_cast<std::size_t>(x)] =
          parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
      x = parent[static_cast<std::size_t>(x)];
    }
    return x;
  }

  // false if already joined
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[static_cast<std::size_t>(a)] = b;
    return true;
  }
};

}  // namespace detail

// Reports every constraint the tree breaks; an empty list means feasible.
inline std::vector<Violation> check_feasible(const SolutionTree& tree,
                                             const ClusteredInstance& inst) {
  std::vector<Violation> out;
  const int n = inst.num_vertices();

  std::vector<EdgeRef> edges;
  edges.reserve(tree.edges.size());
  for (const EdgeRef& e : tree.edges) {
    if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n || e.u == e.v ||
        !inst.has_finite_edge(e.u, e.v)) {
      out.push_back({ViolationKind::EdgeNotInGraph, -1,
                     "(" + std::to_string(e.u) + "," + std::to_string(e.v) + ")"});
      continue;
    }
    edges.push_back(e.normalized());
  }

  detail::UnionFind uf(static_cast<std::size_t>(n));
  bool cycle = false;
  int components = n;
  for (const EdgeRef& e : edges) {
    if (uf.unite(e.u, e.v))
      --components;
    else
      cycle = true;
  }
  if (static_cast<int>(tree.edges.size()) > n - 1) cycle = true;
  if (cycle) out.push_back({ViolationKind::HasCycle, -1, ""});
  if (components > 1 || static_cast<int>(tree.edges.size()) < n - 1)
    out.push_back({ViolationKind::NotSpanning, -1,
                   std::to_string(components) + " components"});

  for (ClusterId c = 0; c < inst.num_clusters(); ++c) {
    const auto& members = inst.cluster(c);
    detail::UnionFind cuf(members.size());
    const auto local = [&](Vertex v) {
      return static_cast<int>(std::lower_bound(members.begin(), members.end(), v) -
                              members.begin());
    };
    int parts = static_cast<int>(members.size());
    for (const EdgeRef& e : edges)
      if (inst.cluster_of(e.u) == c && inst.cluster_of(e.v) == c)
        if (cuf.unite(local(e.u), local(e.v))) --parts;
    if (parts > 1)
      out.push_back({ViolationKind::ClusterDisconnected, c,
                     "cluster " + std::to_string(c) + " splits into " +
                         std::to_string(parts) + " parts"});
  }
  return out;
}

// Objective value: sum over all vertices of the tree-path distance from the
// source. Single traversal from s, compensated summation.
inline double total_cost(const SolutionTree& tree, const ClusteredInstance& inst) {
  if (!check_feasible(tree, inst).empty())
    throw Error(ErrorCode::InfeasibleTree, "tree violates feasibility constraints");

  const std::size_t n = static_cast<std::size_t>(inst.num_vertices());
  std::vector<std::vector<std::pair<Vertex, double>>> adj(n);
  for (const EdgeRef& e : tree.edges) {
    const double w = inst.edge_weight(e.u, e.v);
    adj[static_cast<std::size_t>(e.u)].push_back({e.v, w});
    adj[static_cast<std::size_t>(e.v)].push_back({e.u, w});
  }

  std::vector<double> dist(n, -1.0);
  std::vector<Vertex> stack{inst.source()};
  dist[static_cast<std::size_t>(inst.source())] = 0.0;
  while (!stack.empty()) {
    const Vertex u = stack.back();
    stack.pop_back();
    for (const auto& [v, w] : adj[static_cast<std::size_t>(u)])
      if (dist[static_cast<std::size_t>(v)] < 0.0) {
        dist[static_cast<std::size_t>(v)] = dist[static_cast<std::size_t>(u)] + w;
        stack.push_back(v);
      }
  }

  KahanSum total;
  for (double d : dist) total.add(d);
  return total.value();
}

}  // namespace clustp
