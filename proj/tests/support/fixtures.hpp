#pragma once

// Shared instance builders for tests.

#include <vector>

#include "clustp/gen.hpp"
#include "clustp/instance.hpp"
#include "clustp/rng.hpp"

namespace testsupport {

// The 15-vertex, 4-cluster worked example, identical to the shipped
// data/worked15.clustp (which is 1-based on disk: vertex v here is v+1
// there). Sparse explicit weights; the only inter-cluster edges are
// (0,9)=5, (3,10)=9, (2,4)=3, (5,12)=5, (12,14)=4.
inline clustp::ClusteredInstance worked15_instance() {
  const int n = 15;
  std::vector<std::vector<double>> w(
      static_cast<std::size_t>(n),
      std::vector<double>(static_cast<std::size_t>(n), clustp::kInfiniteWeight));
  const auto set = [&](int a, int b, double value) {
    w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = value;
    w[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = value;
  };
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0.0;
  // cluster 1 = {0,1,2,3}
  set(0, 1, 3);
  set(1, 2, 5);
  set(0, 3, 2);
  // cluster 2 = {9,10,11,12,13}
  set(9, 10, 2);
  set(10, 12, 4);
  set(10, 11, 1);
  set(12, 13, 2);
  // cluster 3 = {4,5,6,7,8}
  set(4, 5, 2);
  set(4, 6, 3);
  set(6, 7, 1);
  set(7, 8, 2);
  // inter-cluster
  set(0, 9, 5);
  set(3, 10, 9);
  set(2, 4, 3);
  set(5, 12, 5);
  set(12, 14, 4);
  return clustp::build_instance(
      "worked15", std::move(w), {{0, 1, 2, 3}, {9, 10, 11, 12, 13}, {4, 5, 6, 7, 8}, {14}}, 0);
}

// Small random explicit instance for oracle-sized tests: balanced clusters,
// complete inside each cluster, inter-cluster edges kept to a chain over
// the clusters plus random extras, within the given finite-edge budget.
inline clustp::ClusteredInstance make_small_explicit(int n, int k, std::uint64_t seed,
                                                     int max_edges = 24) {
  clustp::SplitMix64 rng(seed);
  std::vector<clustp::Point2> pts(static_cast<std::size_t>(n));
  for (auto& p : pts) {
    p.x = rng.next_double() * 100.0;
    p.y = rng.next_double() * 100.0;
  }
  std::vector<std::vector<clustp::Vertex>> clusters(static_cast<std::size_t>(k));
  for (int v = 0; v < n; ++v) clusters[static_cast<std::size_t>(v % k)].push_back(v);

  std::vector<std::vector<double>> w(
      static_cast<std::size_t>(n),
      std::vector<double>(static_cast<std::size_t>(n), clustp::kInfiniteWeight));
  for (int i = 0; i < n; ++i) w[static_cast<std::size_t>(i)][static_cast<std::size_t>(i)] = 0.0;
  const auto dist = [&](int a, int b) {
    const double dx = pts[static_cast<std::size_t>(a)].x - pts[static_cast<std::size_t>(b)].x;
    const double dy = pts[static_cast<std::size_t>(a)].y - pts[static_cast<std::size_t>(b)].y;
    return std::sqrt(dx * dx + dy * dy);
  };
  int edges = 0;
  const auto connect = [&](int a, int b) {
    if (std::isfinite(w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)])) return;
    w[static_cast<std::size_t>(a)][static_cast<std::size_t>(b)] = dist(a, b);
    w[static_cast<std::size_t>(b)][static_cast<std::size_t>(a)] = dist(a, b);
    ++edges;
  };

  for (const auto& members : clusters)
    for (std::size_t i = 0; i < members.size(); ++i)
      for (std::size_t j = i + 1; j < members.size(); ++j)
        connect(members[i], members[j]);

  // chain over clusters keeps every cluster reachable
  for (int c = 1; c < k; ++c) {
    const auto& a = clusters[static_cast<std::size_t>(c - 1)];
    const auto& b = clusters[static_cast<std::size_t>(c)];
    connect(a[rng.next_below(a.size())], b[rng.next_below(b.size())]);
  }
  for (int tries = 0; tries < 4 * n && edges < max_edges; ++tries) {
    const int a = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    const int b = static_cast<int>(rng.next_below(static_cast<std::uint64_t>(n)));
    if (a != b) connect(a, b);
  }

  const auto source = static_cast<clustp::Vertex>(rng.next_below(static_cast<std::uint64_t>(n)));
  return clustp::build_instance("explicit" + std::to_string(n) + "-" + std::to_string(k),
                                std::move(w), std::move(clusters), source);
}

}  // namespace testsupport
