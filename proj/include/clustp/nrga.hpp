#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <vector>

#include "clustp/error.hpp"
#include "clustp/instance.hpp"
#include "clustp/rng.hpp"
#include "clustp/solution.hpp"
#include "clustp/spt.hpp"

namespace clustp {

struct NrgaParams {
  double gamma = 50.0;     // greediness; 0 = uniform choice, large = near-argmin
  std::uint64_t seed = 0;  // trial RNG seed
};

// One scored inter-cluster edge: u on the already-attached side, v in the
// cluster being scored. `prob` is filled by select_edge; over one candidate
// set the probabilities sum to 1.
struct EdgeCandidate {
  EdgeRef edge;
  double reward = 0.0;
  double prob = 0.0;
};

// Reward of attaching the target cluster through (u,v):
//   h * (distance from the current cluster's local root to u  +  w(u,v))
//   + total shortest-path cost within the target cluster rooted at v.
// Lower is better.
inline double reward(std::uint64_t h, double dist_root_to_u, double weight_uv,
                     double cost_spt_v) {
  return static_cast<double>(h) * (dist_root_to_u + weight_uv) + cost_spt_v;
}

// Convenience form that evaluates costSPT(v) over v's cluster directly.
inline double reward(const ClusteredInstance& inst, const ShortestPathTree& spt_cur,
                     std::uint64_t h, Vertex u, Vertex v) {
  const double w = inst.edge_weight(u, v);
  if (!std::isfinite(w))
    throw Error(ErrorCode::InfiniteWeight, "no finite edge (" + std::to_string(u) +
                                               "," + std::to_string(v) + ")");
  const auto& target = inst.cluster(inst.cluster_of(v));
  return reward(h, spt_cur.dist_of(u), w, cost_spt(inst, target, v));
}

// Integer uniform on [cluster_size, total_remaining], inclusive.
// total_remaining counts the vertices of every unattached cluster, the
// scored one included, so the range is never empty.
inline std::uint64_t draw_h(SplitMix64& rng, std::uint64_t cluster_size,
                            std::uint64_t total_remaining) {
  if (cluster_size == 0 || cluster_size > total_remaining)
    throw Error(ErrorCode::InvalidParams, "h range empty");
  return cluster_size + rng.next_below(total_remaining - cluster_size + 1);
}

// Samples one candidate with probability proportional to reward^(-gamma),
// writing the normalized probabilities back into the candidates. Larger
// gamma concentrates mass on the smallest reward; exact ties at the
// minimum keep equal shares at any gamma. Weights are formed in log space
// relative to the minimum so extreme gammas neither overflow nor underflow.
//
// Consumes exactly one uniform variate when given two or more candidates
// and none for a singleton; callers that need to replay the RNG stream
// can rely on that.
inline EdgeRef select_edge(std::span<EdgeCandidate> candidates, double gamma,
                           SplitMix64& rng) {
  if (candidates.empty())
    throw Error(ErrorCode::EmptyCandidateSet, "no candidate edges to select from");

  double min_reward = kInfiniteWeight;
  for (const EdgeCandidate& c : candidates) {
    if (!(c.reward > 0.0))
      throw Error(ErrorCode::NonpositiveReward,
                  "reward " + std::to_string(c.reward) + " must be positive");
    min_reward = std::min(min_reward, c.reward);
  }

  if (candidates.size() == 1) {
    candidates[0].prob = 1.0;
    return candidates[0].edge;
  }

  const double log_min = std::log(min_reward);
  double total = 0.0;
  for (EdgeCandidate& c : candidates) {
    c.prob = std::exp(-gamma * (std::log(c.reward) - log_min));
    total += c.prob;
  }
  for (EdgeCandidate& c : candidates) c.prob /= total;

  const double r = rng.next_double();
  double acc = 0.0;
  for (const EdgeCandidate& c : candidates) {
    acc += c.prob;
    if (r < acc) return c.edge;
  }
  return candidates.back().edge;  // r landed in the rounding gap below 1
}

// One cluster attachment, in order. The root cluster opens the list with
// no via_edge; every later event records the inter-cluster edge used and
// dis = tree distance from the source to the cluster's local root.
struct AttachEvent {
  ClusterId cluster = -1;
  Vertex local_root = kNoVertex;
  std::optional<EdgeRef> via_edge;
  double dis = 0.0;
};

struct NrgaOptions {
  // Shared read-only costSPT table; built per run when absent.
  const ClusterCostTable* cost_table = nullptr;
  // Score candidates from every attached cluster each round instead of the
  // current cluster only. Experimental; off by default.
  bool rescan_all = false;
  // Attachment log, filled when non-null.
  std::vector<AttachEvent>* trace = nullptr;
  // Test seam: replaces the randomized selection. Receives the cluster
  // being scored and its candidate set; whatever RNG use the replacement
  // makes is up to it.
  std::function<EdgeRef(ClusterId, std::span<EdgeCandidate>, SplitMix64&)> select_override;
};

// Randomized-greedy construction of a clustered shortest-path tree.
//
// The root cluster gets a shortest-path tree from the source. While
// unattached clusters remain, each one is scored: h is drawn, every finite
// edge between the current cluster and the scored cluster is rewarded, one
// is sampled, and it replaces the cluster's pending attachment edge if it
// shortens dis. The cluster with minimum dis (smallest id on ties) is then
// attached via its pending edge and spanned by a shortest-path tree rooted
// where that edge enters it.
inline SolutionTree nrga_run(const ClusteredInstance& inst, const NrgaParams& params,
                             const NrgaOptions& options = {}) {
  if (!(params.gamma >= 0.0) || !std::isfinite(params.gamma))
    throw Error(ErrorCode::InvalidParams, "gamma must be finite and >= 0");

  const int k = inst.num_clusters();
  const ClusterId root_cluster = inst.cluster_of(inst.source());

  std::optional<ClusterCostTable> own_table;
  const ClusterCostTable* costs = options.cost_table;
  if (costs == nullptr) {
    own_table.emplace(inst);
    costs = &*own_table;
  }

  SplitMix64 rng(params.seed);

  std::vector<ShortestPathTree> spts(static_cast<std::size_t>(k));
  std::vector<double> dis(static_cast<std::size_t>(k), kInfiniteWeight);
  std::vector<Vertex> local_root(static_cast<std::size_t>(k), kNoVertex);
  std::vector<EdgeRef> pending(static_cast<std::size_t>(k));
  std::vector<char> attached(static_cast<std::size_t>(k), 0);

  spts[static_cast<std::size_t>(root_cluster)] =
      dijkstra_spt(inst, inst.cluster(root_cluster), inst.source());
  dis[static_cast<std::size_t>(root_cluster)] = 0.0;
  local_root[static_cast<std::size_t>(root_cluster)] = inst.source();
  attached[static_cast<std::size_t>(root_cluster)] = 1;
  if (options.trace)
    options.trace->push_back({root_cluster, inst.source(), std::nullopt, 0.0});

  std::uint64_t remaining_vertices = 0;
  int remaining_clusters = 0;
  for (ClusterId c = 0; c < k; ++c)
    if (!attached[static_cast<std::size_t>(c)]) {
      remaining_vertices += inst.cluster(c).size();
      ++remaining_clusters;
    }

  ClusterId cur = root_cluster;
  std::vector<EdgeCandidate> candidates;

  while (remaining_clusters > 0) {
    for (ClusterId i = 0; i < k; ++i) {
      if (attached[static_cast<std::size_t>(i)]) continue;
      const auto& target = inst.cluster(i);
      const std::uint64_t h = draw_h(rng, target.size(), remaining_vertices);

      candidates.clear();
      const auto scan_from = [&](ClusterId j) {
        const auto& source_members = inst.cluster(j);
        const auto& source_spt = spts[static_cast<std::size_t>(j)];
        for (std::size_t ui = 0; ui < source_members.size(); ++ui) {
          const Vertex u = source_members[ui];
          const double du = source_spt.dist[ui];
          for (Vertex v : target) {
            const double w = inst.edge_weight(u, v);
            if (!std::isfinite(w)) continue;
            double f = reward(h, du, w, costs->cost(i, v));
            if (!(f > 0.0)) f = 1e-12;  // zero-weight edge into a singleton
            candidates.push_back({EdgeRef{u, v}, f, 0.0});
          }
        }
      };
      if (options.rescan_all) {
        for (ClusterId j = 0; j < k; ++j)
          if (attached[static_cast<std::size_t>(j)]) scan_from(j);
      } else {
        scan_from(cur);
      }
      if (candidates.empty()) continue;

      const EdgeRef picked =
          options.select_override
              ? options.select_override(i, std::span<EdgeCandidate>(candidates), rng)
              : select_edge(std::span<EdgeCandidate>(candidates), params.gamma, rng);

      const ClusterId from = inst.cluster_of(picked.u);
      const double through = dis[static_cast<std::size_t>(from)] +
                             spts[static_cast<std::size_t>(from)].dist_of(picked.u) +
                             inst.edge_weight(picked.u, picked.v);
      if (through < dis[static_cast<std::size_t>(i)]) {
        dis[static_cast<std::size_t>(i)] = through;
        local_root[static_cast<std::size_t>(i)] = picked.v;
        pending[static_cast<std::size_t>(i)] = picked;
      }
    }

    ClusterId next = -1;
    for (ClusterId i = 0; i < k; ++i)
      if (!attached[static_cast<std::size_t>(i)] &&
          (next == -1 ||
           dis[static_cast<std::size_t>(i)] < dis[static_cast<std::size_t>(next)]))
        next = i;
    if (!(dis[static_cast<std::size_t>(next)] < kInfiniteWeight))
      throw Error(ErrorCode::DisconnectedClusters,
                  "no finite edge reaches cluster " + std::to_string(next));

    spts[static_cast<std::size_t>(next)] =
        dijkstra_spt(inst, inst.cluster(next), local_root[static_cast<std::size_t>(next)]);
    attached[static_cast<std::size_t>(next)] = 1;
    remaining_vertices -= inst.cluster(next).size();
    --remaining_clusters;
    cur = next;
    if (options.trace)
      options.trace->push_back({next, local_root[static_cast<std::size_t>(next)],
                                pending[static_cast<std::size_t>(next)],
                                dis[static_cast<std::size_t>(next)]});
  }

  SolutionTree tree;
  tree.instance_name = inst.name();
  tree.local_roots = local_root;
  KahanSum cost;
  for (ClusterId c = 0; c < k; ++c) {
    const auto& spt = spts[static_cast<std::size_t>(c)];
    for (const EdgeRef& e : spt.edges()) tree.edges.push_back(e);
    for (double d : spt.dist) cost.add(dis[static_cast<std::size_t>(c)] + d);
    if (c != root_cluster) {
      tree.inter_cluster_edges.push_back(pending[static_cast<std::size_t>(c)].normalized());
      tree.edges.push_back(pending[static_cast<std::size_t>(c)].normalized());
    }
  }
  std::sort(tree.edges.begin(), tree.edges.end());
  std::sort(tree.inter_cluster_edges.begin(), tree.inter_cluster_edges.end());
  tree.cost_cache = cost.value();
  return tree;
}

}  // namespace clustp
