#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <vector>

#include "mtree/error.hpp"
#include "mtree/tolerance.hpp"

namespace mtree {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
  NodeId u = 0;
  NodeId v = 0;
  double length = 0.0;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Unvalidated node/edge lists, as read from a document or built by hand.
struct RawTree {
  std::size_t node_count = 0;
  std::vector<Edge> edges;
};

struct Incidence {
  NodeId neighbor;
  EdgeId edge;
};

class MetricTree;

/// A location in a MetricTree: either a node, or an interior position on an
/// edge measured from the edge's `u` endpoint. Points are only created by
/// MetricTree, which canonicalizes offsets at 0 or the edge length to nodes,
/// so structural equality is point equality.
class TreePoint {
 public:
  TreePoint() = default;

  bool is_node() const { return kind_ == Kind::kNode; }
  NodeId node() const { return index_; }
  EdgeId edge() const { return index_; }
  double offset() const { return offset_; }
  std::uint64_t tree_id() const { return tree_; }

  friend bool operator==(const TreePoint&, const TreePoint&) = default;

 private:
  friend class MetricTree;
  enum class Kind : std::uint8_t { kNode, kEdge };

  TreePoint(std::uint64_t tree, Kind kind, std::uint32_t index, double offset)
      : tree_(tree), kind_(kind), index_(index), offset_(offset) {}

  std::uint64_t tree_ = 0;
  Kind kind_ = Kind::kNode;
  std::uint32_t index_ = 0;
  double offset_ = 0.0;
};

/// The geodesic from `a` to `b`. `node_chain` lists the nodes strictly inside
/// the segment in traversal order.
struct Segment {
  TreePoint a;
  TreePoint b;
  std::vector<NodeId> node_chain;
  double length = 0.0;
};

/// Immutable finite metric tree. Copies share the same underlying storage and
/// identity, so points created through one copy are valid for every copy.
class MetricTree {
 public:
  /// Validates the raw lists and builds the rooted query structure.
  /// Throws Error with kEmptyTree, kUnknownNode, kNonpositiveEdgeLength,
  /// kDuplicateEdge, kCycleDetected or kDisconnected.
  static MetricTree validate(const RawTree& raw, Tolerance tol = {});

  std::uint64_t id() const;
  const Tolerance& tolerance() const;
  std::size_t node_count() const;
  std::size_t edge_count() const;
  std::span<const Edge> edges() const;
  const Edge& edge(EdgeId e) const;
  std::span<const Incidence> neighbors(NodeId n) const;
  std::size_t degree(NodeId n) const { return neighbors(n).size(); }
  std::optional<EdgeId> find_edge(NodeId u, NodeId v) const;

  /// Root of the internal ancestor structure (always node 0).
  NodeId root() const { return 0; }
  /// Weighted distance from the root.
  double depth(const TreePoint& p) const;

  TreePoint node(NodeId n) const;
  /// Point on edge `e` at `offset` from its u endpoint; offsets within
  /// abs_eps of either end snap to the endpoint node.
  TreePoint edge_point(EdgeId e, double offset) const;
  /// Same as edge_point but addressed by endpoints; offset runs from `from`.
  TreePoint point_on(NodeId from, NodeId to, double offset) const;

  bool owns(const TreePoint& p) const;
  void check(const TreePoint& p) const;

  double distance(const TreePoint& x, const TreePoint& y) const;
  /// True iff d(x,z) = d(x,y) + d(y,z) within tolerance.
  bool is_between(const TreePoint& x, const TreePoint& y,
                  const TreePoint& z) const;
  /// Points whose distance is within tolerance.
  bool coincide(const TreePoint& x, const TreePoint& y) const;

  Segment segment(const TreePoint& x, const TreePoint& y) const;
  bool contains(const Segment& s, const TreePoint& p) const;
  /// The point of [x,y] at distance t from x. Throws kParameterOutOfRange
  /// unless 0 <= t <= d(x,y) (within tolerance).
  TreePoint point_at(const TreePoint& x, const TreePoint& y, double t) const;
  TreePoint midpoint(const TreePoint& x, const TreePoint& y) const;
  /// The branch point w of x, y, z: w lies on [x,y] and
  /// [x,z] ∩ [y,z] = [w,z].
  TreePoint median(const TreePoint& x, const TreePoint& y,
                   const TreePoint& z) const;
  /// Intersection of two segments, oriented along `s1`; empty if disjoint.
  std::optional<Segment> intersection(const Segment& s1,
                                      const Segment& s2) const;
  /// Arc criterion on a finite ordered sample: with a = first and b = last,
  /// every pair (x, y) must satisfy axy or yxb. Throws kTooFewPoints.
  bool is_metric_segment(std::span<const TreePoint> points) const;

 private:
  struct Impl;
  struct Anchored {
    NodeId below;
    double up;
  };

  explicit MetricTree(std::shared_ptr<const Impl> impl);

  Anchored anchor(const TreePoint& p) const;
  TreePoint from_anchor(NodeId below, double up) const;
  double anchored_depth(const Anchored& a) const;
  double top_depth(const Anchored& x, const Anchored& y) const;
  NodeId lca(NodeId a, NodeId b) const;
  TreePoint ascend(const Anchored& from, double target_depth) const;

  std::shared_ptr<const Impl> impl_;
};

}  // namespace mtree
