#include "mtree/sampling.hpp"

#include <algorithm>

namespace mtree {

std::vector<TreePoint> dense_samples(const MetricTree& tree,
                                     std::size_t per_edge) {
  std::vector<TreePoint> out;
  out.reserve(tree.node_count() + tree.edge_count() * per_edge);
  for (NodeId n = 0; n < tree.node_count(); ++n) out.push_back(tree.node(n));
  for (EdgeId e = 0; e < tree.edge_count(); ++e) {
    const double len = tree.edge(e).length;
    for (std::size_t k = 1; k <= per_edge; ++k) {
      const double t = static_cast<double>(k) / static_cast<double>(per_edge + 1);
      out.push_back(tree.edge_point(e, t * len));
    }
  }
  return out;
}

std::vector<TreePoint> segment_samples(const MetricTree& tree,
                                       const TreePoint& a, const TreePoint& b,
                                       std::size_t count) {
  count = std::max<std::size_t>(count, 2);
  const double d = tree.distance(a, b);
  std::vector<TreePoint> out;
  out.reserve(count);
  for (std::size_t k = 0; k < count; ++k) {
    const double t = static_cast<double>(k) / static_cast<double>(count - 1);
    out.push_back(tree.point_at(a, b, std::min(d, t * d)));
  }
  return out;
}

TreePoint random_point(const MetricTree& tree, Rng& rng,
                       double node_probability) {
  if (tree.edge_count() == 0 || rng.chance(node_probability)) {
    return tree.node(static_cast<NodeId>(rng.index(tree.node_count())));
  }
  const auto e = static_cast<EdgeId>(rng.index(tree.edge_count()));
  return tree.edge_point(e, rng.unit() * tree.edge(e).length);
}

}  // namespace mtree
