#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "mtree/covering.hpp"

namespace mtree::oracle {

/// Exhaustive covering oracles, kept independent of the greedy covering
/// code: they enumerate every set partition (as a subset DP) and judge each
/// block directly.
///
/// - ball mode: a block fits one ball of radius r iff some candidate center
///   (every node, set point, or midpoint of two set points) is within r of
///   all of it.
/// - diameter mode: a block fits iff its largest pairwise distance is <= d.
/// - ball-diameter mode: a block's cost is the least tree diameter of a
///   closed ball around a candidate center that contains it.
enum class CoverMode { kBall, kDiameter, kBallDiameter };

inline constexpr std::size_t kMaxPoints = 10;

/// Every node, every set point, and the midpoint of every pair of set points.
std::vector<TreePoint> candidate_centers(const PointSet& set);

/// Least max-distance from any candidate center to all of `points`.
double brute_circumradius(const MetricTree& tree,
                          std::span<const TreePoint> points,
                          std::span<const TreePoint> candidates);

/// Fewest blocks whose per-mode cost is <= value. Throws kTooLargeForOracle
/// above kMaxPoints distinct points.
std::size_t min_cover(const PointSet& set, double value, CoverMode mode);

/// n -> least possible max block cost over partitions into <= n blocks.
CoverProfile profile(const PointSet& set, std::size_t n_max, CoverMode mode);

}  // namespace mtree::oracle
