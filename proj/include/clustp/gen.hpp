#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "clustp/error.hpp"
#include "clustp/instance.hpp"
#include "clustp/rng.hpp"

namespace clustp {

// Synthetic Euclidean benchmark families. Both are pure functions of their
// seed: the same arguments always produce the byte-identical instance.

// n uniform points in [0,extent]^2, clustered by the rows x cols grid cell
// each point lands in. Throws of the points that leave a cell empty are
// rejected and redrawn, up to 100 attempts. Named "<k>rand<n>-<rows>x<cols>".
inline ClusteredInstance generate_grid(int n, int rows, int cols, double extent,
                                       std::uint64_t seed) {
  if (rows < 1 || cols < 1 || n < rows * cols || !(extent > 0.0))
    throw Error(ErrorCode::InvalidParams, "need rows*cols >= 1 and n >= rows*cols");
  const int k = rows * cols;
  SplitMix64 rng(seed);

  std::vector<Point2> coords(static_cast<std::size_t>(n));
  std::vector<std::vector<Vertex>> clusters;
  for (int attempt = 0; attempt < 100; ++attempt) {
    clusters.assign(static_cast<std::size_t>(k), {});
    for (int v = 0; v < n; ++v) {
      const double x = rng.next_double() * extent;
      const double y = rng.next_double() * extent;
      coords[static_cast<std::size_t>(v)] = {x, y};
      const int col = std::min(cols - 1, static_cast<int>(x / extent * cols));
      const int row = std::min(rows - 1, static_cast<int>(y / extent * rows));
      clusters[static_cast<std::size_t>(row * cols + col)].push_back(v);
    }
    bool all_populated = true;
    for (const auto& members : clusters)
      if (members.empty()) all_populated = false;
    if (all_populated) {
      const Vertex source = static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(n)));
      const std::string name = std::to_string(k) + "rand" + std::to_string(n) + "-" +
                               std::to_string(rows) + "x" + std::to_string(cols);
      return build_instance(name, std::move(coords), std::move(clusters), source);
    }
  }
  throw Error(ErrorCode::UnableToPopulateCells,
              "could not fill every grid cell in 100 attempts");
}

// k uniform cluster centers; point i scatters around center i mod k with an
// isotropic Gaussian of the given spread. Named "<k>rand<n>".
inline ClusteredInstance generate_clustered(int n, int k, double spread, double extent,
                                            std::uint64_t seed) {
  if (k < 1 || n < k || !(extent > 0.0) || spread < 0.0)
    throw Error(ErrorCode::InvalidParams, "need k >= 1, n >= k");
  SplitMix64 rng(seed);

  std::vector<Point2> centers(static_cast<std::size_t>(k));
  for (auto& c : centers) {
    c.x = rng.next_double() * extent;
    c.y = rng.next_double() * extent;
  }

  std::vector<Point2> coords(static_cast<std::size_t>(n));
  std::vector<std::vector<Vertex>> clusters(static_cast<std::size_t>(k));
  for (int v = 0; v < n; ++v) {
    const int c = v % k;
    coords[static_cast<std::size_t>(v)] = {
        centers[static_cast<std::size_t>(c)].x + rng.next_gaussian() * spread,
        centers[static_cast<std::size_t>(c)].y + rng.next_gaussian() * spread};
    clusters[static_cast<std::size_t>(c)].push_back(v);
  }
  const Vertex source = static_cast<Vertex>(rng.next_below(static_cast<std::uint64_t>(n)));
  return build_instance(std::to_string(k) + "rand" + std::to_string(n), std::move(coords),
                        std::move(clusters), source);
}

}  // namespace clustp
