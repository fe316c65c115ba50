#include "mtree/tree.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <cmath>
#include <numeric>
#include <queue>
#include <set>
#include <string>
#include <utility>

namespace mtree {

namespace {

std::uint64_t next_tree_id() {
  static std::atomic<std::uint64_t> counter{1};
  return counter.fetch_add(1, std::memory_order_relaxed);
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) {
    std::iota(parent_.begin(), parent_.end(), std::size_t{0});
  }

  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }

  bool unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent_[a] = b;
    return true;
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

struct MetricTree::Impl {
  std::uint64_t id = 0;
  Tolerance tol;
  std::size_t n = 0;
  std::vector<Edge> edges;
  std::vector<std::vector<Incidence>> adjacency;
  // Rooted at node 0. The root is its own parent.
  std::vector<NodeId> parent;
  std::vector<EdgeId> parent_edge;
  std::vector<double> depth;
  std::vector<std::uint32_t> level;
  std::vector<std::vector<NodeId>> lift;
  // Endpoint of each edge farther from the root.
  std::vector<NodeId> lower;
};

MetricTree::MetricTree(std::shared_ptr<const Impl> impl)
    : impl_(std::move(impl)) {}

MetricTree MetricTree::validate(const RawTree& raw, Tolerance tol) {
  if (!tol.valid()) {
    throw Error(ErrorCode::kBadParams, "tolerances must be finite and >= 0");
  }
  const std::size_t n = raw.node_count;
  if (n == 0) throw Error(ErrorCode::kEmptyTree, "tree has no nodes");
  if (n > std::size_t{0xffffffffu}) {
    throw Error(ErrorCode::kBadParams, "too many nodes");
  }

  DisjointSets components(n);
  std::set<std::pair<NodeId, NodeId>> seen;
  std::size_t merged = 0;
  for (std::size_t i = 0; i < raw.edges.size(); ++i) {
    const Edge& e = raw.edges[i];
    const std::string where = "edge " + std::to_string(i);
    if (e.u >= n || e.v >= n) {
      throw Error(ErrorCode::kUnknownNode, where + " references a missing node",
                  {i});
    }
    if (!(std::isfinite(e.length) && e.length > 0.0)) {
      throw Error(ErrorCode::kNonpositiveEdgeLength,
                  where + " has length " + std::to_string(e.length), {i});
    }
    if (e.u == e.v) {
      throw Error(ErrorCode::kCycleDetected, where + " is a self-loop", {i});
    }
    if (!seen.emplace(std::minmax(e.u, e.v)).second) {
      throw Error(ErrorCode::kDuplicateEdge, where + " repeats an earlier edge",
                  {i});
    }
    if (!components.unite(e.u, e.v)) {
      throw Error(ErrorCode::kCycleDetected, where + " closes a cycle", {i});
    }
    ++merged;
  }
  if (merged + 1 != n) {
    throw Error(ErrorCode::kDisconnected,
                std::to_string(n - merged) + " components");
  }

  auto impl = std::make_shared<Impl>();
  impl->id = next_tree_id();
  impl->tol = tol;
  impl->n = n;
  impl->edges = raw.edges;
  impl->adjacency.assign(n, {});
  for (EdgeId i = 0; i < impl->edges.size(); ++i) {
    const Edge& e = impl->edges[i];
    impl->adjacency[e.u].push_back({e.v, i});
    impl->adjacency[e.v].push_back({e.u, i});
  }

  impl->parent.assign(n, 0);
  impl->parent_edge.assign(n, 0);
  impl->depth.assign(n, 0.0);
  impl->level.assign(n, 0);
  impl->lower.assign(impl->edges.size(), 0);
  std::vector<bool> visited(n, false);
  std::queue<NodeId> frontier;
  frontier.push(0);
  visited[0] = true;
  while (!frontier.empty()) {
    const NodeId v = frontier.front();
    frontier.pop();
    for (const Incidence& inc : impl->adjacency[v]) {
      if (visited[inc.neighbor]) continue;
      visited[inc.neighbor] = true;
      impl->parent[inc.neighbor] = v;
      impl->parent_edge[inc.neighbor] = inc.edge;
      impl->depth[inc.neighbor] = impl->depth[v] + impl->edges[inc.edge].length;
      impl->level[inc.neighbor] = impl->level[v] + 1;
      impl->lower[inc.edge] = inc.neighbor;
      frontier.push(inc.neighbor);
    }
  }

  const std::size_t levels = std::max<std::size_t>(1, std::bit_width(n));
  impl->lift.assign(levels, impl->parent);
  for (std::size_t k = 1; k < levels; ++k) {
    for (std::size_t v = 0; v < n; ++v) {
      impl->lift[k][v] = impl->lift[k - 1][impl->lift[k - 1][v]];
    }
  }
  return MetricTree(std::move(impl));
}

std::uint64_t MetricTree::id() const { return impl_->id; }
const Tolerance& MetricTree::tolerance() const { return impl_->tol; }
std::size_t MetricTree::node_count() const { return impl_->n; }
std::size_t MetricTree::edge_count() const { return impl_->edges.size(); }
std::span<const Edge> MetricTree::edges() const { return impl_->edges; }

const Edge& MetricTree::edge(EdgeId e) const {
  if (e >= impl_->edges.size()) {
    throw Error(ErrorCode::kUnknownEdge, "edge " + std::to_string(e));
  }
  return impl_->edges[e];
}

std::span<const Incidence> MetricTree::neighbors(NodeId n) const {
  if (n >= impl_->n) {
    throw Error(ErrorCode::kUnknownNode, "node " + std::to_string(n));
  }
  return impl_->adjacency[n];
}

std::optional<EdgeId> MetricTree::find_edge(NodeId u, NodeId v) const {
  for (const Incidence& inc : neighbors(u)) {
    if (inc.neighbor == v) return inc.edge;
  }
  return std::nullopt;
}

TreePoint MetricTree::node(NodeId n) const {
  if (n >= impl_->n) {
    throw Error(ErrorCode::kUnknownNode, "node " + std::to_string(n));
  }
  return TreePoint(impl_->id, TreePoint::Kind::kNode, n, 0.0);
}

TreePoint MetricTree::edge_point(EdgeId e, double offset) const {
  const Edge& ed = edge(e);
  const double eps = impl_->tol.abs_eps;
  if (!std::isfinite(offset) || offset < -eps || offset > ed.length + eps) {
    throw Error(ErrorCode::kParameterOutOfRange,
                "offset " + std::to_string(offset) + " outside [0, " +
                    std::to_string(ed.length) + "]");
  }
  if (offset <= eps) return node(ed.u);
  if (ed.length - offset <= eps) return node(ed.v);
  return TreePoint(impl_->id, TreePoint::Kind::kEdge, e, offset);
}

TreePoint MetricTree::point_on(NodeId from, NodeId to, double offset) const {
  const auto e = find_edge(from, to);
  if (!e) {
    throw Error(ErrorCode::kUnknownEdge, "no edge between nodes " +
                                             std::to_string(from) + " and " +
                                             std::to_string(to));
  }
  const Edge& ed = impl_->edges[*e];
  return edge_point(*e, ed.u == from ? offset : ed.length - offset);
}

bool MetricTree::owns(const TreePoint& p) const {
  if (p.tree_id() != impl_->id) return false;
  if (p.is_node()) return p.node() < impl_->n;
  return p.edge() < impl_->edges.size();
}

void MetricTree::check(const TreePoint& p) const {
  if (!owns(p)) {
    throw Error(ErrorCode::kForeignPoint, "point belongs to another tree");
  }
}

MetricTree::Anchored MetricTree::anchor(const TreePoint& p) const {
  check(p);
  if (p.is_node()) return {p.node(), 0.0};
  const Edge& e = impl_->edges[p.edge()];
  const NodeId below = impl_->lower[p.edge()];
  return {below, e.u == below ? p.offset() : e.length - p.offset()};
}

TreePoint MetricTree::from_anchor(NodeId below, double up) const {
  const double eps = impl_->tol.abs_eps;
  if (below == root() || up <= eps) return node(below);
  const EdgeId e = impl_->parent_edge[below];
  const Edge& ed = impl_->edges[e];
  if (ed.length - up <= eps) return node(impl_->parent[below]);
  return TreePoint(impl_->id, TreePoint::Kind::kEdge, e,
                   ed.u == below ? up : ed.length - up);
}

double MetricTree::anchored_depth(const Anchored& a) const {
  return impl_->depth[a.below] - a.up;
}

double MetricTree::depth(const TreePoint& p) const {
  return anchored_depth(anchor(p));
}

NodeId MetricTree::lca(NodeId a, NodeId b) const {
  const auto& level = impl_->level;
  const auto& lift = impl_->lift;
  if (level[a] < level[b]) std::swap(a, b);
  std::uint32_t gap = level[a] - level[b];
  for (std::size_t k = 0; gap != 0; ++k, gap >>= 1) {
    if (gap & 1u) a = lift[k][a];
  }
  if (a == b) return a;
  for (std::size_t k = lift.size(); k-- > 0;) {
    if (lift[k][a] != lift[k][b]) {
      a = lift[k][a];
      b = lift[k][b];
    }
  }
  return impl_->parent[a];
}

double MetricTree::top_depth(const Anchored& x, const Anchored& y) const {
  if (x.below == y.below) {
    return std::min(anchored_depth(x), anchored_depth(y));
  }
  const NodeId l = lca(x.below, y.below);
  if (l == x.below) return anchored_depth(x);
  if (l == y.below) return anchored_depth(y);
  return impl_->depth[l];
}

TreePoint MetricTree::ascend(const Anchored& from, double target_depth) const {
  const auto& depth = impl_->depth;
  NodeId a = from.below;
  if (target_depth >= depth[a]) return node(a);
  for (std::size_t k = impl_->lift.size(); k-- > 0;) {
    const NodeId p = impl_->lift[k][a];
    if (depth[p] >= target_depth) a = p;
  }
  return from_anchor(a, std::max(0.0, depth[a] - target_depth));
}

double MetricTree::distance(const TreePoint& x, const TreePoint& y) const {
  const Anchored ax = anchor(x);
  const Anchored ay = anchor(y);
  const auto& depth = impl_->depth;
  if (ax.below == ay.below) return std::fabs(ax.up - ay.up);
  const NodeId l = lca(ax.below, ay.below);
  double d;
  if (l == ax.below) {
    d = (depth[ay.below] - depth[l]) - ay.up + ax.up;
  } else if (l == ay.below) {
    d = (depth[ax.below] - depth[l]) - ax.up + ay.up;
  } else {
    d = (depth[ax.below] - depth[l] - ax.up) +
        (depth[ay.below] - depth[l] - ay.up);
  }
  return std::max(0.0, d);
}

bool MetricTree::is_between(const TreePoint& x, const TreePoint& y,
                            const TreePoint& z) const {
  const double xz = distance(x, z);
  const double via = distance(x, y) + distance(y, z);
  return std::fabs(xz - via) <= impl_->tol.bound(std::max(xz, via));
}

bool MetricTree::coincide(const TreePoint& x, const TreePoint& y) const {
  const double scale = std::max(depth(x), depth(y));
  return distance(x, y) <= impl_->tol.bound(scale);
}

Segment MetricTree::segment(const TreePoint& x, const TreePoint& y) const {
  const Anchored ax = anchor(x);
  const Anchored ay = anchor(y);
  Segment s{x, y, {}, distance(x, y)};
  if (ax.below == ay.below) return s;

  const auto& parent = impl_->parent;
  const NodeId l = lca(ax.below, ay.below);
  if (l != ax.below) {
    for (NodeId v = parent[ax.below]; v != l; v = parent[v]) {
      s.node_chain.push_back(v);
    }
  }
  const bool l_is_x_anchor = l == ax.below;
  const bool l_is_y_anchor = l == ay.below;
  if ((!l_is_x_anchor && !l_is_y_anchor) || (l_is_x_anchor && ax.up > 0.0) ||
      (l_is_y_anchor && ay.up > 0.0)) {
    s.node_chain.push_back(l);
  }
  if (l != ay.below) {
    const std::size_t mark = s.node_chain.size();
    for (NodeId v = parent[ay.below]; v != l; v = parent[v]) {
      s.node_chain.push_back(v);
    }
    std::reverse(s.node_chain.begin() + static_cast<std::ptrdiff_t>(mark),
                 s.node_chain.end());
  }
  return s;
}

bool MetricTree::contains(const Segment& s, const TreePoint& p) const {
  return is_between(s.a, p, s.b);
}

TreePoint MetricTree::point_at(const TreePoint& x, const TreePoint& y,
                               double t) const {
  const double d = distance(x, y);
  const double slack = impl_->tol.bound(d);
  if (!std::isfinite(t) || t < -slack || t > d + slack) {
    throw Error(ErrorCode::kParameterOutOfRange,
                "t = " + std::to_string(t) + " outside [0, " +
                    std::to_string(d) + "]");
  }
  if (t <= 0.0) return x;
  if (t >= d) return y;
  const Anchored ax = anchor(x);
  const Anchored ay = anchor(y);
  const double dx = anchored_depth(ax);
  const double rise = dx - top_depth(ax, ay);
  if (t <= rise) return ascend(ax, dx - t);
  return ascend(ay, anchored_depth(ay) - (d - t));
}

TreePoint MetricTree::midpoint(const TreePoint& x, const TreePoint& y) const {
  return point_at(x, y, 0.5 * distance(x, y));
}

TreePoint MetricTree::median(const TreePoint& x, const TreePoint& y,
                             const TreePoint& z) const {
  const double xy = distance(x, y);
  const double xz = distance(x, z);
  const double yz = distance(y, z);
  const double t = std::clamp(0.5 * (xy + xz - yz), 0.0, xy);
  return point_at(x, y, t);
}

std::optional<Segment> MetricTree::intersection(const Segment& s1,
                                                const Segment& s2) const {
  // Projections of s2's ends onto s1. If s2 touches s1 it runs from one
  // projection to the other along s1.
  const TreePoint pc = median(s1.a, s1.b, s2.a);
  const TreePoint pd = median(s1.a, s1.b, s2.b);
  if (coincide(pc, pd)) {
    if (!contains(s2, pc)) return std::nullopt;
    return segment(pc, pc);
  }
  if (distance(s1.a, pc) <= distance(s1.a, pd)) return segment(pc, pd);
  return segment(pd, pc);
}

bool MetricTree::is_metric_segment(std::span<const TreePoint> points) const {
  if (points.size() < 2) {
    throw Error(ErrorCode::kTooFewPoints, "need at least two points");
  }
  for (const TreePoint& p : points) check(p);
  const TreePoint& a = points.front();
  const TreePoint& b = points.back();
  for (const TreePoint& x : points) {
    for (const TreePoint& y : points) {
      if (!is_between(a, x, y) && !is_between(y, x, b)) return false;
    }
  }
  return true;
}

}  // namespace mtree
