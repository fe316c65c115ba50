#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "mtree/tree.hpp"

namespace mtree {

/// Seeded generator with distribution code that does not depend on the
/// standard library's (implementation-defined) distributions, so a seed
/// reproduces the same stream everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * unit(); }
  /// Uniform in [0, n); n must be positive.
  std::size_t index(std::size_t n) {
    return static_cast<std::size_t>(unit() * static_cast<double>(n));
  }
  bool chance(double p) { return unit() < p; }

 private:
  std::mt19937_64 engine_;
};

/// Every node plus `per_edge` evenly spaced interior points on every edge.
std::vector<TreePoint> dense_samples(const MetricTree& tree,
                                     std::size_t per_edge);

/// `count` >= 2 evenly spaced points of [a,b], endpoints included.
std::vector<TreePoint> segment_samples(const MetricTree& tree,
                                       const TreePoint& a, const TreePoint& b,
                                       std::size_t count);

/// A node with probability `node_probability`, otherwise a uniformly placed
/// point on a uniformly chosen edge.
TreePoint random_point(const MetricTree& tree, Rng& rng,
                       double node_probability = 0.25);

}  // namespace mtree
