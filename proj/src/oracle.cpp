#include "mtree/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <limits>
#include <string>

namespace mtree::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::vector<TreePoint> distinct_points(const PointSet& set) {
  std::vector<TreePoint> out;
  for (std::size_t i : set.distinct()) out.push_back(set[i]);
  return out;
}

// cost[mask] for every nonempty subset of the distinct points.
std::vector<double> block_costs(const PointSet& set, CoverMode mode) {
  const MetricTree& tree = set.tree();
  const std::vector<TreePoint> points = distinct_points(set);
  const std::size_t k = points.size();
  if (k > kMaxPoints) {
    throw Error(ErrorCode::kTooLargeForOracle,
                std::to_string(k) + " distinct points exceeds the oracle limit");
  }
  const std::size_t full = std::size_t{1} << k;
  std::vector<double> cost(full, 0.0);

  if (mode == CoverMode::kDiameter) {
    for (std::size_t mask = 1; mask < full; ++mask) {
      double worst = 0.0;
      for (std::size_t i = 0; i < k; ++i) {
        if (!(mask >> i & 1u)) continue;
        for (std::size_t j = i + 1; j < k; ++j) {
          if (mask >> j & 1u) {
            worst = std::max(worst, tree.distance(points[i], points[j]));
          }
        }
      }
      cost[mask] = worst;
    }
    return cost;
  }

  const std::vector<TreePoint> centers = candidate_centers(set);
  std::fill(cost.begin() + 1, cost.end(), kInf);
  std::vector<double> dist(k);
  std::vector<double> ball(k);
  std::vector<std::size_t> far(full);
  for (const TreePoint& c : centers) {
    for (std::size_t i = 0; i < k; ++i) dist[i] = tree.distance(c, points[i]);
    if (mode == CoverMode::kBallDiameter) {
      for (std::size_t i = 0; i < k; ++i) ball[i] = ball_diameter(tree, c, dist[i]);
    }
    for (std::size_t mask = 1; mask < full; ++mask) {
      const auto low = static_cast<std::size_t>(std::countr_zero(mask));
      const std::size_t rest = mask & (mask - 1);
      far[mask] = (rest == 0 || dist[low] >= dist[far[rest]]) ? low : far[rest];
      const double value =
          mode == CoverMode::kBall ? dist[far[mask]] : ball[far[mask]];
      cost[mask] = std::min(cost[mask], value);
    }
  }
  return cost;
}

}  // namespace

std::vector<TreePoint> candidate_centers(const PointSet& set) {
  const MetricTree& tree = set.tree();
  std::vector<TreePoint> out;
  for (NodeId n = 0; n < tree.node_count(); ++n) out.push_back(tree.node(n));
  const std::vector<TreePoint> points = distinct_points(set);
  // j == i contributes the point itself.
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i; j < points.size(); ++j) {
      out.push_back(tree.midpoint(points[i], points[j]));
    }
  }
  return out;
}

double brute_circumradius(const MetricTree& tree,
                          std::span<const TreePoint> points,
                          std::span<const TreePoint> candidates) {
  if (points.empty()) throw Error(ErrorCode::kEmptySet, "no points");
  double best = kInf;
  for (const TreePoint& c : candidates) {
    double worst = 0.0;
    for (const TreePoint& p : points) worst = std::max(worst, tree.distance(c, p));
    best = std::min(best, worst);
  }
  return best;
}

std::size_t min_cover(const PointSet& set, double value, CoverMode mode) {
  if (!(value >= 0.0)) {
    throw Error(mode == CoverMode::kBall ? ErrorCode::kNegativeRadius
                                         : ErrorCode::kNegativeDiameter,
                "value must be >= 0");
  }
  if (set.empty()) return 0;
  const std::vector<double> cost = block_costs(set, mode);
  const double limit = value + set.tree().tolerance().bound(value);
  const std::size_t full = cost.size();
  std::vector<std::size_t> best(full, std::numeric_limits<std::size_t>::max());
  best[0] = 0;
  for (std::size_t mask = 1; mask < full; ++mask) {
    const std::size_t low = mask & (~mask + 1);
    const std::size_t others = mask ^ low;
    // Every block containing the lowest member: low | (submask of others).
    for (std::size_t sub = others;; sub = (sub - 1) & others) {
      const std::size_t block = sub | low;
      if (cost[block] <= limit && best[mask ^ block] != std::numeric_limits<std::size_t>::max()) {
        best[mask] = std::min(best[mask], best[mask ^ block] + 1);
      }
      if (sub == 0) break;
    }
  }
  return best[full - 1];
}

CoverProfile profile(const PointSet& set, std::size_t n_max, CoverMode mode) {
  if (set.empty()) throw Error(ErrorCode::kEmptySet, "point set is empty");
  if (n_max == 0) throw Error(ErrorCode::kBadParams, "n_max must be >= 1");
  const std::vector<double> cost = block_costs(set, mode);
  const std::size_t full = cost.size();
  std::vector<double> prev(full, kInf);
  prev[0] = 0.0;
  CoverProfile out;
  for (std::size_t n = 1; n <= n_max; ++n) {
    std::vector<double> next(full, kInf);
    next[0] = 0.0;
    for (std::size_t mask = 1; mask < full; ++mask) {
      const std::size_t low = mask & (~mask + 1);
      const std::size_t others = mask ^ low;
      double best = kInf;
      for (std::size_t sub = others;; sub = (sub - 1) & others) {
        const std::size_t block = sub | low;
        best = std::min(best, std::max(cost[block], prev[mask ^ block]));
        if (sub == 0) break;
      }
      next[mask] = best;
    }
    out.values.push_back(next[full - 1]);
    prev = std::move(next);
  }
  return out;
}

}  // namespace mtree::oracle
