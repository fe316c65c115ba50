#include "mtree/covering.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>

namespace mtree {

namespace {

// Farthest of `candidates` from `from`; ties go to the earliest.
std::size_t farthest(const MetricTree& tree, const TreePoint& from,
                     std::span<const TreePoint> candidates) {
  std::size_t best = 0;
  double best_d = -1.0;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double d = tree.distance(from, candidates[i]);
    if (d > best_d) {
      best_d = d;
      best = i;
    }
  }
  return best;
}

std::pair<std::size_t, std::size_t> farthest_pair(
    const MetricTree& tree, std::span<const TreePoint> points) {
  const std::size_t a = farthest(tree, points.front(), points);
  const std::size_t b = farthest(tree, points[a], points);
  return {a, b};
}

std::vector<TreePoint> distinct_points(const PointSet& set) {
  std::vector<TreePoint> out;
  out.reserve(set.distinct().size());
  for (std::size_t i : set.distinct()) out.push_back(set[i]);
  return out;
}

// Sorted distinct pairwise distances (including 0) of the distinct points.
std::vector<double> pairwise_candidates(const MetricTree& tree,
                                        std::span<const TreePoint> points) {
  std::vector<double> values{0.0};
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      values.push_back(tree.distance(points[i], points[j]));
    }
  }
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return values;
}

void require_nonempty(const PointSet& set) {
  if (set.empty()) throw Error(ErrorCode::kEmptySet, "point set is empty");
}

void require_n_max(std::size_t n_max) {
  if (n_max == 0) throw Error(ErrorCode::kBadParams, "n_max must be >= 1");
}

// Greedy covering on the distinct points; returns the block of each slot.
struct Blocks {
  std::vector<std::size_t> block_of;
  std::size_t count = 0;
};

Blocks greedy_blocks(const MetricTree& tree, std::span<const TreePoint> points,
                     double radius) {
  const std::size_t k = points.size();
  std::vector<double> depth(k);
  for (std::size_t i = 0; i < k; ++i) depth[i] = tree.depth(points[i]);
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return depth[a] > depth[b]; });

  const double reach = radius + tree.tolerance().bound(radius);
  const TreePoint root = tree.node(tree.root());
  constexpr std::size_t kUnassigned = static_cast<std::size_t>(-1);
  Blocks blocks{std::vector<std::size_t>(k, kUnassigned), 0};
  for (std::size_t deepest : order) {
    if (blocks.block_of[deepest] != kUnassigned) continue;
    const TreePoint center = tree.point_at(
        points[deepest], root, std::min(radius, depth[deepest]));
    for (std::size_t q = 0; q < k; ++q) {
      if (blocks.block_of[q] == kUnassigned &&
          tree.distance(center, points[q]) <= reach) {
        blocks.block_of[q] = blocks.count;
      }
    }
    blocks.block_of[deepest] = blocks.count;
    ++blocks.count;
  }
  return blocks;
}

// Memoized "how many balls of radius r" for one set, used by the profiles.
class CoverCounter {
 public:
  explicit CoverCounter(const PointSet& set)
      : tree_(set.tree()), points_(distinct_points(set)),
        distances_(pairwise_candidates(tree_, points_)) {}

  std::size_t distinct() const { return points_.size(); }

  std::size_t count(double radius) {
    if (auto it = memo_.find(radius); it != memo_.end()) return it->second;
    const std::size_t c = greedy_blocks(tree_, points_, radius).count;
    memo_.emplace(radius, c);
    return c;
  }

  /// Least half-distance candidate covered by n balls.
  double beta(std::size_t n) {
    if (n >= points_.size()) return 0.0;
    std::size_t lo = 0;
    std::size_t hi = distances_.size() - 1;  // diameter/2 always needs 1 ball
    while (lo < hi) {
      const std::size_t mid = lo + (hi - lo) / 2;
      if (count(0.5 * distances_[mid]) <= n) {
        hi = mid;
      } else {
        lo = mid + 1;
      }
    }
    return 0.5 * distances_[lo];
  }

 private:
  MetricTree tree_;
  std::vector<TreePoint> points_;
  std::vector<double> distances_;
  std::map<double, std::size_t> memo_;
};

}  // namespace

PointSet::PointSet(MetricTree tree, std::vector<TreePoint> points)
    : tree_(std::move(tree)), points_(std::move(points)) {
  slot_.reserve(points_.size());
  for (std::size_t i = 0; i < points_.size(); ++i) {
    tree_.check(points_[i]);
    std::size_t s = 0;
    while (s < distinct_.size() && !tree_.coincide(points_[distinct_[s]], points_[i])) {
      ++s;
    }
    if (s == distinct_.size()) distinct_.push_back(i);
    slot_.push_back(s);
  }
}

Diameter diameter(const PointSet& set) {
  require_nonempty(set);
  const std::vector<TreePoint> points = distinct_points(set);
  const auto [a, b] = farthest_pair(set.tree(), points);
  return {set.tree().distance(points[a], points[b]), set.distinct()[a],
          set.distinct()[b]};
}

Circumcenter circumcenter(const MetricTree& tree,
                          std::span<const TreePoint> points) {
  if (points.empty()) throw Error(ErrorCode::kEmptySet, "point set is empty");
  const auto [a, b] = farthest_pair(tree, points);
  return {tree.midpoint(points[a], points[b]),
          0.5 * tree.distance(points[a], points[b])};
}

Circumcenter circumcenter(const PointSet& set) {
  require_nonempty(set);
  return circumcenter(set.tree(), distinct_points(set));
}

double ball_diameter(const MetricTree& tree, const TreePoint& center,
                     double radius) {
  if (!(radius >= 0.0)) {
    throw Error(ErrorCode::kNegativeRadius, "radius must be >= 0");
  }
  tree.check(center);
  const double reach = radius + tree.tolerance().bound(radius);
  // The ball is a subtree; its diameter is attained between extreme points,
  // which are nodes inside it or the points where it cuts an edge.
  std::vector<TreePoint> extremes{center};
  std::vector<double> node_distance(tree.node_count());
  for (NodeId n = 0; n < tree.node_count(); ++n) {
    node_distance[n] = tree.distance(center, tree.node(n));
    if (node_distance[n] <= reach) extremes.push_back(tree.node(n));
  }
  for (EdgeId e = 0; e < tree.edge_count(); ++e) {
    const Edge& ed = tree.edge(e);
    if (!center.is_node() && center.edge() == e) {
      for (NodeId end : {ed.u, ed.v}) {
        if (node_distance[end] > reach) {
          extremes.push_back(tree.point_at(center, tree.node(end), radius));
        }
      }
      continue;
    }
    NodeId near = ed.u;
    NodeId far = ed.v;
    if (node_distance[far] < node_distance[near]) std::swap(near, far);
    if (node_distance[near] <= reach && node_distance[far] > reach) {
      extremes.push_back(tree.point_on(
          near, far, std::max(0.0, radius - node_distance[near])));
    }
  }
  const auto [a, b] = farthest_pair(tree, extremes);
  return tree.distance(extremes[a], extremes[b]);
}

BallCover min_ball_cover(const PointSet& set, double radius) {
  if (!(radius >= 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::kNegativeRadius, "radius must be finite and >= 0");
  }
  const MetricTree& tree = set.tree();
  const std::vector<TreePoint> points = distinct_points(set);
  const Blocks blocks = greedy_blocks(tree, points, radius);

  BallCover cover;
  cover.radius = radius;
  std::vector<std::vector<TreePoint>> members(blocks.count);
  for (std::size_t s = 0; s < points.size(); ++s) {
    members[blocks.block_of[s]].push_back(points[s]);
  }
  for (const auto& block : members) {
    cover.centers.push_back(circumcenter(tree, block).center);
  }
  cover.assignment.reserve(set.size());
  for (std::size_t i = 0; i < set.size(); ++i) {
    cover.assignment.push_back(blocks.block_of[set.slot()[i]]);
  }
  return cover;
}

DiameterPartition min_diameter_partition(const PointSet& set, double bound) {
  if (!(bound >= 0.0) || !std::isfinite(bound)) {
    throw Error(ErrorCode::kNegativeDiameter, "diameter must be finite and >= 0");
  }
  const BallCover cover = min_ball_cover(set, 0.5 * bound);
  DiameterPartition partition;
  partition.diameter_bound = bound;
  partition.blocks.resize(cover.centers.size());
  for (std::size_t i = 0; i < cover.assignment.size(); ++i) {
    partition.blocks[cover.assignment[i]].push_back(i);
  }
  return partition;
}

CoverProfile beta_profile(const PointSet& set, std::size_t n_max) {
  require_nonempty(set);
  require_n_max(n_max);
  CoverCounter counter(set);
  CoverProfile profile;
  for (std::size_t n = 1; n <= n_max; ++n) profile.values.push_back(counter.beta(n));
  return profile;
}

CoverProfile alpha_profile(const PointSet& set, std::size_t n_max) {
  require_nonempty(set);
  require_n_max(n_max);
  // Feasibility of diameter bound d is feasibility of radius d/2, so the
  // candidate bounds are the pairwise distances themselves.
  CoverCounter counter(set);
  CoverProfile profile;
  for (std::size_t n = 1; n <= n_max; ++n) {
    profile.values.push_back(2.0 * counter.beta(n));
  }
  return profile;
}

CoverProfile beta_star_profile(const PointSet& set, std::size_t n_max) {
  require_nonempty(set);
  require_n_max(n_max);
  CoverProfile profile;
  for (std::size_t n = 1; n <= n_max; ++n) {
    profile.values.push_back(optimal_diameter_ball_cover(set, n).diameter_bound);
  }
  return profile;
}

BallCover optimal_ball_cover(const PointSet& set, std::size_t n) {
  require_nonempty(set);
  require_n_max(n);
  CoverCounter counter(set);
  return min_ball_cover(set, counter.beta(n));
}

DiameterPartition optimal_partition(const PointSet& set, std::size_t n) {
  require_nonempty(set);
  require_n_max(n);
  CoverCounter counter(set);
  return min_diameter_partition(set, 2.0 * counter.beta(n));
}

DiameterBallCover optimal_diameter_ball_cover(const PointSet& set,
                                              std::size_t n) {
  const BallCover cover = optimal_ball_cover(set, n);
  const MetricTree& tree = set.tree();
  std::vector<std::vector<TreePoint>> members(cover.centers.size());
  for (std::size_t i = 0; i < cover.assignment.size(); ++i) {
    members[cover.assignment[i]].push_back(set[i]);
  }
  DiameterBallCover out;
  out.assignment = cover.assignment;
  for (const auto& block : members) {
    const Circumcenter c = circumcenter(tree, block);
    const double d = ball_diameter(tree, c.center, c.radius);
    out.centers.push_back(c.center);
    out.radii.push_back(c.radius);
    out.ball_diameters.push_back(d);
    out.diameter_bound = std::max(out.diameter_bound, d);
  }
  return out;
}

}  // namespace mtree
