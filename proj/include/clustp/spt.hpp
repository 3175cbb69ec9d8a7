#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <queue>
#include <span>
#include <unordered_map>
#include <utility>
#include <vector>

#include "clustp/error.hpp"
#include "clustp/instance.hpp"

namespace clustp {

// Shortest-path tree over one cluster's induced subgraph. Arrays are
// parallel to `members`, which is kept sorted ascending.
struct ShortestPathTree {
  Vertex root = kNoVertex;
  std::vector<Vertex> members;
  std::vector<Vertex> parent;  // kNoVertex at the root
  std::vector<double> dist;    // exact shortest-path distance from root

  std::size_t index_of(Vertex v) const {
    const auto it = std::lower_bound(members.begin(), members.end(), v);
    if (it == members.end() || *it != v)
      throw Error(ErrorCode::OutOfRange, "vertex " + std::to_string(v) + " not in tree");
    return static_cast<std::size_t>(it - members.begin());
  }

  double dist_of(Vertex v) const { return dist[index_of(v)]; }
  Vertex parent_of(Vertex v) const { return parent[index_of(v)]; }

  double total_dist() const {
    double s = 0.0;
    for (double d : dist) s += d;
    return s;
  }

  // Tree edges (parent,v), normalized.
  std::vector<EdgeRef> edges() const {
    std::vector<EdgeRef> out;
    out.reserve(members.size() > 0 ? members.size() - 1 : 0);
    for (std::size_t i = 0; i < members.size(); ++i)
      if (parent[i] != kNoVertex) out.push_back(EdgeRef{parent[i], members[i]}.normalized());
    std::sort(out.begin(), out.end());
    return out;
  }
};

// Dijkstra restricted to G[members]. Binary heap with lazy deletion; equal
// keys pop in vertex-id order and relaxations improve only on strict `<`,
// so the parent map is fully deterministic.
inline ShortestPathTree dijkstra_spt(const ClusteredInstance& inst,
                                     std::span<const Vertex> members, Vertex root) {
  ShortestPathTree spt;
  spt.root = root;
  spt.members.assign(members.begin(), members.end());
  std::sort(spt.members.begin(), spt.members.end());

  const std::size_t m = spt.members.size();
  spt.parent.assign(m, kNoVertex);
  spt.dist.assign(m, kInfiniteWeight);

  const auto local = [&](Vertex v) -> std::size_t {
    const auto it = std::lower_bound(spt.members.begin(), spt.members.end(), v);
    if (it == spt.members.end() || *it != v)
      throw Error(ErrorCode::RootNotMember, "vertex " + std::to_string(v) + " not a member");
    return static_cast<std::size_t>(it - spt.members.begin());
  };

  const std::size_t root_idx = local(root);
  spt.dist[root_idx] = 0.0;

  using Entry = std::pair<double, Vertex>;  // (dist, vertex), min-first
  std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
  heap.push({0.0, root});

  while (!heap.empty()) {
    const auto [d, u] = heap.top();
    heap.pop();
    const std::size_t ui = local(u);
    if (d > spt.dist[ui]) continue;  // stale entry
    for (std::size_t vi = 0; vi < m; ++vi) {
      const Vertex v = spt.members[vi];
      if (v == u) continue;
      const double w = inst.edge_weight(u, v);
      if (!std::isfinite(w)) continue;
      const double nd = d + w;
      if (nd < spt.dist[vi]) {
        spt.dist[vi] = nd;
        spt.parent[vi] = u;
        heap.push({nd, v});
      }
    }
  }

  for (std::size_t i = 0; i < m; ++i)
    if (!std::isfinite(spt.dist[i]))
      throw Error(ErrorCode::DisconnectedInducedSubgraph,
                  "vertex " + std::to_string(spt.members[i]) +
                      " unreachable from " + std::to_string(root) +
                      " within its cluster");
  return spt;
}

// costSPT(v): total shortest-path cost from v to every other member of the
// cluster, within the induced subgraph.
inline double cost_spt(const ClusteredInstance& inst, std::span<const Vertex> members,
                       Vertex v) {
  return dijkstra_spt(inst, members, v).total_dist();
}

// costSPT for every (cluster, candidate root) pair. Precomputed up front
// while sum(|V_i|^2) stays within the threshold; above it, values are
// memoized on demand (single-threaded use only in that mode — give each
// trial its own table).
class ClusterCostTable {
public:
  static constexpr std::uint64_t kPrecomputeThreshold = 10'000'000;

  explicit ClusterCostTable(const ClusteredInstance& inst)
      : ClusterCostTable(inst, work_estimate(inst) <= kPrecomputeThreshold) {}

  ClusterCostTable(const ClusteredInstance& inst, bool precompute) : inst_(&inst) {
    if (!precompute) return;
    table_.resize(inst.clusters().size());
    for (std::size_t c = 0; c < inst.clusters().size(); ++c) {
      const auto& members = inst.clusters()[c];
      table_[c].reserve(members.size());
      for (Vertex v : members) table_[c].push_back(cost_spt(inst, members, v));
    }
  }

  bool precomputed() const { return !table_.empty(); }

  double cost(ClusterId c, Vertex v) const {
    const auto& members = inst_->cluster(c);
    const auto it = std::lower_bound(members.begin(), members.end(), v);
    if (it == members.end() || *it != v)
      throw Error(ErrorCode::OutOfRange, "vertex not in cluster");
    const std::size_t idx = static_cast<std::size_t>(it - members.begin());
    if (precomputed()) return table_[static_cast<std::size_t>(c)][idx];

    const std::uint64_t key =
        (static_cast<std::uint64_t>(static_cast<std::uint32_t>(c)) << 32) |
        static_cast<std::uint32_t>(v);
    const auto hit = memo_.find(key);
    if (hit != memo_.end()) return hit->second;
    const double value = cost_spt(*inst_, members, v);
    memo_.emplace(key, value);
    return value;
  }

private:
  static std::uint64_t work_estimate(const ClusteredInstance& inst) {
    std::uint64_t total = 0;
    for (const auto& members : inst.clusters()) {
      const std::uint64_t m = members.size();
      total += m * m;
    }
    return total;
  }

  const ClusteredInstance* inst_;
  std::vector<std::vector<double>> table_;
  mutable std::unordered_map<std::uint64_t, double> memo_;
};

}  // namespace clustp
