#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "clustp/error.hpp"

namespace clustp {

using Vertex = std::int32_t;
using ClusterId = std::int32_t;

inline constexpr Vertex kNoVertex = -1;
inline constexpr double kInfiniteWeight = std::numeric_limits<double>::infinity();

// Unordered vertex pair. Weight lookup treats (u,v) and (v,u) alike;
// normalized() puts the smaller id first for canonical edge lists.
struct EdgeRef {
  Vertex u = kNoVertex;
  Vertex v = kNoVertex;

  EdgeRef normalized() const { return u <= v ? EdgeRef{u, v} : EdgeRef{v, u}; }

  friend bool operator==(const EdgeRef& a, const EdgeRef& b) {
    return a.u == b.u && a.v == b.v;
  }
  friend bool operator<(const EdgeRef& a, const EdgeRef& b) {
    return a.u != b.u ? a.u < b.u : a.v < b.v;
  }
};

enum class WeightKind { Euclidean2D, Explicit };

struct Point2 {
  double x = 0.0;
  double y = 0.0;
};

// A weighted undirected graph whose vertices 0..n-1 are partitioned into
// k disjoint nonempty clusters, plus a designated source vertex.
//
// Euclidean2D instances are complete: every pair of distinct vertices is
// an edge, with exact double-precision distance (no integer rounding).
// Explicit instances carry a symmetric matrix where +infinity marks a
// missing edge.
//
// Instances are immutable after construction and safe to share across
// threads. Construct through build_instance(), which validates.
class ClusteredInstance {
public:
  const std::string& name() const { return name_; }
  int num_vertices() const { return n_; }
  int num_clusters() const { return static_cast<int>(clusters_.size()); }
  Vertex source() const { return source_; }
  WeightKind weight_kind() const { return kind_; }

  const std::vector<Point2>& coords() const { return coords_; }
  const std::vector<std::vector<double>>& weights() const { return weights_; }
  const std::vector<std::vector<Vertex>>& clusters() const { return clusters_; }

  // Members of one cluster, sorted ascending.
  const std::vector<Vertex>& cluster(ClusterId c) const {
    if (c < 0 || c >= num_clusters())
      throw Error(ErrorCode::OutOfRange, "cluster id out of range");
    return clusters_[static_cast<std::size_t>(c)];
  }

  // O(1) via the membership index cached at construction.
  ClusterId cluster_of(Vertex v) const {
    check_vertex(v);
    return membership_[static_cast<std::size_t>(v)];
  }

  // w(u,v). Returns +infinity for an absent edge of an Explicit instance.
  double edge_weight(Vertex u, Vertex v) const {
    if (u == v) throw Error(ErrorCode::SameVertex, "edge endpoints coincide");
    check_vertex(u);
    check_vertex(v);
    if (kind_ == WeightKind::Euclidean2D) {
      const double dx = coords_[static_cast<std::size_t>(u)].x -
                        coords_[static_cast<std::size_t>(v)].x;
      const double dy = coords_[static_cast<std::size_t>(u)].y -
                        coords_[static_cast<std::size_t>(v)].y;
      return std::sqrt(dx * dx + dy * dy);
    }
    return weights_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)];
  }

  bool has_finite_edge(Vertex u, Vertex v) const {
    return std::isfinite(edge_weight(u, v));
  }

  // Finite edges as normalized pairs (u < v), lexicographically sorted.
  std::vector<EdgeRef> finite_edges() const {
    std::vector<EdgeRef> out;
    for (Vertex u = 0; u < n_; ++u)
      for (Vertex v = u + 1; v < n_; ++v)
        if (has_finite_edge(u, v)) out.push_back({u, v});
    return out;
  }

private:
  friend ClusteredInstance build_instance(std::string, std::vector<Point2>,
                                          std::vector<std::vector<Vertex>>, Vertex);
  friend ClusteredInstance build_instance(std::string,
                                          std::vector<std::vector<double>>,
                                          std::vector<std::vector<Vertex>>, Vertex);

  ClusteredInstance() = default;

  void check_vertex(Vertex v) const {
    if (v < 0 || v >= n_) throw Error(ErrorCode::OutOfRange, "vertex id out of range");
  }

  void validate_and_index() {
    if (n_ <= 0) throw Error(ErrorCode::OutOfRange, "instance has no vertices");
    if (clusters_.empty()) throw Error(ErrorCode::EmptyCluster, "no clusters given");
    if (source_ < 0 || source_ >= n_)
      throw Error(ErrorCode::SourceOutOfRange, "source vertex " +
                                                   std::to_string(source_) +
                                                   " not in [0," + std::to_string(n_) + ")");

    membership_.assign(static_cast<std::size_t>(n_), -1);
    for (std::size_t c = 0; c < clusters_.size(); ++c) {
      auto& members = clusters_[c];
      if (members.empty())
        throw Error(ErrorCode::EmptyCluster, "cluster " + std::to_string(c) + " is empty");
      std::sort(members.begin(), members.end());
      for (Vertex v : members) {
        if (v < 0 || v >= n_)
          throw Error(ErrorCode::OutOfRange,
                      "cluster member " + std::to_string(v) + " out of range");
        if (membership_[static_cast<std::size_t>(v)] != -1)
          throw Error(ErrorCode::OverlappingClusters,
                      "vertex " + std::to_string(v) + " appears in more than one cluster");
        membership_[static_cast<std::size_t>(v)] = static_cast<ClusterId>(c);
      }
    }
    for (Vertex v = 0; v < n_; ++v)
      if (membership_[static_cast<std::size_t>(v)] == -1)
        throw Error(ErrorCode::UncoveredVertex,
                    "vertex " + std::to_string(v) + " belongs to no cluster");

    if (kind_ == WeightKind::Explicit) {
      if (static_cast<int>(weights_.size()) != n_)
        throw Error(ErrorCode::OutOfRange, "weight matrix dimension mismatch");
      for (int i = 0; i < n_; ++i) {
        const auto& row = weights_[static_cast<std::size_t>(i)];
        if (static_cast<int>(row.size()) != n_)
          throw Error(ErrorCode::OutOfRange, "weight matrix row " + std::to_string(i) +
                                                 " has wrong length");
        if (row[static_cast<std::size_t>(i)] != 0.0)
          throw Error(ErrorCode::InvalidDiagonal,
                      "nonzero diagonal at " + std::to_string(i));
        for (int j = 0; j < n_; ++j) {
          const double w = row[static_cast<std::size_t>(j)];
          if (w < 0.0 || std::isnan(w))
            throw Error(ErrorCode::NegativeWeight,
                        "negative weight at (" + std::to_string(i) + "," +
                            std::to_string(j) + ")");
          const double wt = weights_[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)];
          if (w != wt)
            throw Error(ErrorCode::AsymmetricMatrix,
                        "w(" + std::to_string(i) + "," + std::to_string(j) +
                            ") != w(" + std::to_string(j) + "," + std::to_string(i) + ")");
        }
      }
    }
  }

  std::string name_;
  int n_ = 0;
  std::vector<Point2> coords_;
  std::vector<std::vector<double>> weights_;
  std::vector<std::vector<Vertex>> clusters_;  // each sorted ascending
  Vertex source_ = kNoVertex;
  WeightKind kind_ = WeightKind::Euclidean2D;
  std::vector<ClusterId> membership_;  // vertex -> cluster id
};

// Euclidean instance from planar coordinates.
inline ClusteredInstance build_instance(std::string name, std::vector<Point2> coords,
                                        std::vector<std::vector<Vertex>> clusters,
                                        Vertex source) {
  ClusteredInstance inst;
  inst.name_ = std::move(name);
  inst.n_ = static_cast<int>(coords.size());
  inst.coords_ = std::move(coords);
  inst.clusters_ = std::move(clusters);
  inst.source_ = source;
  inst.kind_ = WeightKind::Euclidean2D;
  inst.validate_and_index();
  return inst;
}

// Explicit-matrix instance; +infinity entries mark missing edges.
inline ClusteredInstance build_instance(std::string name,
                                        std::vector<std::vector<double>> weights,
                                        std::vector<std::vector<Vertex>> clusters,
                                        Vertex source) {
  ClusteredInstance inst;
  inst.name_ = std::move(name);
  inst.n_ = static_cast<int>(weights.size());
  inst.weights_ = std::move(weights);
  inst.clusters_ = std::move(clusters);
  inst.source_ = source;
  inst.kind_ = WeightKind::Explicit;
  inst.validate_and_index();
  return inst;
}

}  // namespace clustp
