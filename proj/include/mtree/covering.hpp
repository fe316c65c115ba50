#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mtree/tree.hpp"

namespace mtree {

/// A finite list of points of one tree. Duplicates are allowed; covering
/// works on the distinct points (coinciding within tolerance) and maps
/// results back to every original index.
class PointSet {
 public:
  /// Throws kForeignPoint if any point belongs to another tree.
  PointSet(MetricTree tree, std::vector<TreePoint> points);

  const MetricTree& tree() const { return tree_; }
  std::span<const TreePoint> points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  bool empty() const { return points_.empty(); }
  const TreePoint& operator[](std::size_t i) const { return points_[i]; }

  /// Index of the first occurrence of each distinct point.
  const std::vector<std::size_t>& distinct() const { return distinct_; }
  /// For each original index, its slot in distinct().
  const std::vector<std::size_t>& slot() const { return slot_; }

 private:
  MetricTree tree_;
  std::vector<TreePoint> points_;
  std::vector<std::size_t> distinct_;
  std::vector<std::size_t> slot_;
};

struct Diameter {
  double value = 0.0;
  std::size_t first = 0;
  std::size_t second = 0;
};

struct Circumcenter {
  TreePoint center;
  double radius = 0.0;
};

/// Closed balls of a common radius covering a point set.
struct BallCover {
  std::vector<TreePoint> centers;
  double radius = 0.0;
  /// Original point index -> index into `centers`.
  std::vector<std::size_t> assignment;
};

struct DiameterPartition {
  /// Blocks of original point indices.
  std::vector<std::vector<std::size_t>> blocks;
  double diameter_bound = 0.0;
};

/// Closed balls whose diameters, measured in the ambient tree, are bounded.
struct DiameterBallCover {
  std::vector<TreePoint> centers;
  std::vector<double> radii;
  std::vector<double> ball_diameters;
  std::vector<std::size_t> assignment;
  double diameter_bound = 0.0;
};

/// Optimal value for each n = 1..n_max.
struct CoverProfile {
  std::vector<double> values;

  std::size_t n_max() const { return values.size(); }
  double at(std::size_t n) const { return values.at(n - 1); }
};

/// Two-sweep farthest pair. Throws kEmptySet.
Diameter diameter(const PointSet& set);
/// Midpoint of a farthest pair; radius = diameter / 2. Throws kEmptySet.
Circumcenter circumcenter(const PointSet& set);
Circumcenter circumcenter(const MetricTree& tree,
                          std::span<const TreePoint> points);

/// Diameter of the closed ball B_c(center; radius) as a subset of the tree.
/// At most 2 * radius, smaller when the ball runs into leaves.
double ball_diameter(const MetricTree& tree, const TreePoint& center,
                     double radius);

/// Fewest closed balls of the given radius covering the set (greedy from
/// the deepest uncovered point). Each ball is re-centred on the circumcenter
/// of the points assigned to it. Throws kNegativeRadius.
BallCover min_ball_cover(const PointSet& set, double radius);

/// Fewest blocks of diameter <= bound; the blocks of min_ball_cover at
/// radius bound / 2. Throws kNegativeDiameter.
DiameterPartition min_diameter_partition(const PointSet& set, double bound);

/// beta_n: least radius for which n closed balls cover the set.
CoverProfile beta_profile(const PointSet& set, std::size_t n_max);
/// alpha_n: least bound for which the set splits into n blocks of
/// diameter <= bound.
CoverProfile alpha_profile(const PointSet& set, std::size_t n_max);
/// beta*_n: least bound for which n closed balls of tree diameter <= bound
/// cover the set.
CoverProfile beta_star_profile(const PointSet& set, std::size_t n_max);

/// Optimal witnesses at a given n.
BallCover optimal_ball_cover(const PointSet& set, std::size_t n);
DiameterPartition optimal_partition(const PointSet& set, std::size_t n);
DiameterBallCover optimal_diameter_ball_cover(const PointSet& set,
                                              std::size_t n);

}  // namespace mtree
