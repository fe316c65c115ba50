#include "mtree/gallery.hpp"

#include <cmath>
#include <string>

namespace mtree {

namespace {

TreeDocument simple_tree(Tolerance tol) {
  // A = (-1,0), B = (1,0), C = (1,1), D = (1,-1).
  RawTree raw{4, {{0, 1, 2.0}, {1, 2, 1.0}, {1, 3, 1.0}}};
  MetricTree tree = MetricTree::validate(raw, tol);
  std::vector<NamedPoint> points;
  const char* names[] = {"A", "B", "C", "D"};
  for (NodeId n = 0; n < 4; ++n) points.push_back({names[n], tree.node(n)});
  return make_document(std::move(tree), {"A", "B", "C", "D"}, std::move(points));
}

TreeDocument star_tree(std::size_t spokes, double length, Tolerance tol) {
  RawTree raw{spokes + 1, {}};
  std::vector<std::string> names{"hub"};
  for (std::size_t k = 1; k <= spokes; ++k) {
    raw.edges.push_back({0, static_cast<NodeId>(k), length});
    names.push_back("t" + std::to_string(k));
  }
  MetricTree tree = MetricTree::validate(raw, tol);
  std::vector<NamedPoint> points;
  for (std::size_t k = 1; k <= spokes; ++k) {
    points.push_back({names[k], tree.node(static_cast<NodeId>(k))});
  }
  return make_document(std::move(tree), std::move(names), std::move(points));
}

// Nodes: 0 = origin, 1..n = spine node s_k at x = 1/k, n+1..2n = tooth tip t_k.
TreeDocument comb_tree(std::size_t teeth, bool compact, Tolerance tol) {
  const std::size_t n = teeth;
  RawTree raw{2 * n + 1, {}};
  std::vector<std::string> names{"origin"};
  for (std::size_t k = 1; k <= n; ++k) names.push_back("s" + std::to_string(k));
  for (std::size_t k = 1; k <= n; ++k) names.push_back("t" + std::to_string(k));

  auto spine = [](std::size_t k) { return static_cast<NodeId>(k); };
  auto tip = [n](std::size_t k) { return static_cast<NodeId>(n + k); };
  auto x = [](std::size_t k) { return 1.0 / static_cast<double>(k); };

  raw.edges.push_back({0, spine(n), x(n)});
  for (std::size_t k = n; k > 1; --k) {
    raw.edges.push_back({spine(k), spine(k - 1), x(k - 1) - x(k)});
  }
  for (std::size_t k = 1; k <= n; ++k) {
    raw.edges.push_back({spine(k), tip(k), compact ? x(k) : 1.0});
  }
  MetricTree tree = MetricTree::validate(raw, tol);
  std::vector<NamedPoint> points;
  for (std::size_t k = 1; k <= n; ++k) {
    points.push_back({names[tip(k)], tree.node(tip(k))});
  }
  return make_document(std::move(tree), std::move(names), std::move(points));
}

}  // namespace

std::vector<std::string_view> gallery_names() {
  return {"simple", "star", "comb_compact", "comb_noncompact"};
}

TreeDocument gallery(std::string_view name, const GalleryParams& params,
                     Tolerance tol) {
  if (name == "simple") return simple_tree(tol);
  const bool known =
      name == "star" || name == "comb_compact" || name == "comb_noncompact";
  if (!known) {
    throw Error(ErrorCode::kUnknownGallery,
                "no gallery tree named '" + std::string(name) + "'");
  }
  if (params.size == 0) {
    throw Error(ErrorCode::kBadParams, "size must be at least 1");
  }
  if (name == "star") {
    if (!(std::isfinite(params.length) && params.length > 0.0)) {
      throw Error(ErrorCode::kBadParams, "spoke length must be positive");
    }
    return star_tree(params.size, params.length, tol);
  }
  return comb_tree(params.size, name == "comb_compact", tol);
}

}  // namespace mtree
