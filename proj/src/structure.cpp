#include "mtree/structure.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mtree/sampling.hpp"

namespace mtree {

namespace {

NodeId first_leaf(const MetricTree& tree) {
  for (NodeId n = 0; n < tree.node_count(); ++n) {
    if (tree.degree(n) <= 1) return n;
  }
  return 0;  // unreachable: every finite tree has a leaf
}

bool is_leaf(const MetricTree& tree, const TreePoint& p) {
  return p.is_node() && tree.degree(p.node()) <= 1;
}

}  // namespace

LeafSet leaves(const MetricTree& tree) {
  LeafSet out;
  for (NodeId n = 0; n < tree.node_count(); ++n) {
    if (tree.degree(n) <= 1) out.leaves.push_back(tree.node(n));
  }
  return out;
}

TreePoint leaf_witness(const MetricTree& tree, const TreePoint& base,
                       const TreePoint& m) {
  tree.check(base);
  tree.check(m);
  if (tree.coincide(base, m)) return tree.node(first_leaf(tree));

  NodeId at = 0;
  if (m.is_node()) {
    at = m.node();
  } else {
    // The endpoint beyond m, seen from base, maximizes d(base,e) - d(m,e).
    const Edge& e = tree.edge(m.edge());
    const double gain_u =
        tree.distance(base, tree.node(e.u)) - tree.distance(m, tree.node(e.u));
    const double gain_v =
        tree.distance(base, tree.node(e.v)) - tree.distance(m, tree.node(e.v));
    at = gain_u >= gain_v ? e.u : e.v;
  }
  for (;;) {
    const TreePoint here = tree.node(at);
    std::optional<NodeId> next;
    for (const Incidence& inc : tree.neighbors(at)) {
      if (tree.is_between(base, here, tree.node(inc.neighbor)) &&
          (!next || inc.neighbor < *next)) {
        next = inc.neighbor;
      }
    }
    if (!next) return here;
    at = *next;
  }
}

LeafCoverResult leaf_cover_check(const MetricTree& tree, const TreePoint& base,
                                 std::span<const TreePoint> samples) {
  LeafCoverResult result;
  for (const TreePoint& m : samples) {
    const TreePoint f = leaf_witness(tree, base, m);
    ++result.checked;
    if (!is_leaf(tree, f) || !tree.is_between(base, m, f)) {
      result.covered = false;
      result.counterexample = m;
      break;
    }
  }
  return result;
}

WitnessVerdict lifschitz_witness(const MetricTree& tree, const TreePoint& x,
                                 const TreePoint& y, double radius,
                                 double epsilon,
                                 std::span<const TreePoint> tests) {
  tree.check(x);
  tree.check(y);
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::kPreconditionViolation, "radius must be positive");
  }
  if (!(epsilon > 0.0 && epsilon < 1.0)) {
    throw Error(ErrorCode::kPreconditionViolation,
                "epsilon must lie in (0, 1)");
  }
  const double dxy = tree.distance(x, y);
  if (!(dxy > radius)) {
    throw Error(ErrorCode::kPreconditionViolation,
                "need d(x,y) > r, got d(x,y) = " + std::to_string(dxy));
  }

  WitnessVerdict verdict;
  LifschitzWitness& w = verdict.witness;
  w.x = x;
  w.y = y;
  w.z = tree.point_at(x, y, epsilon * radius);
  w.radius = radius;
  w.epsilon = epsilon;
  w.a = 1.0 + epsilon;
  w.b = 2.0 - 2.0 * epsilon;

  // z may sit up to abs_eps from its exact position after snapping.
  const Tolerance& tol = tree.tolerance();
  const double reach = radius + 2.0 * tol.bound(radius);
  for (std::size_t i = 0; i < tests.size(); ++i) {
    tree.check(tests[i]);
    ++verdict.tested;
    if (tree.distance(tests[i], x) > w.a * radius ||
        tree.distance(tests[i], y) > w.b * radius) {
      continue;
    }
    ++verdict.in_intersection;
    if (tree.distance(tests[i], w.z) > reach) verdict.failures.push_back(i);
  }
  verdict.passed = verdict.failures.empty();
  return verdict;
}

LifschitzCounterexample lifschitz_counterexample(double radius, double a,
                                                 std::size_t samples) {
  if (!(radius > 0.0) || !std::isfinite(radius)) {
    throw Error(ErrorCode::kBadParams, "r must be positive and finite");
  }
  if (!(a > 1.0) || !std::isfinite(a)) {
    throw Error(ErrorCode::kBadParams, "a must be finite and > 1");
  }
  RawTree raw{3, {{0, 1, 2.0 * radius}, {1, 2, 2.0 * radius}}};
  const MetricTree tree = MetricTree::validate(raw);
  return lifschitz_counterexample(tree, tree.node(0), tree.node(2), a, samples);
}

LifschitzCounterexample lifschitz_counterexample(const MetricTree& tree,
                                                 const TreePoint& w,
                                                 const TreePoint& v, double a,
                                                 std::size_t samples) {
  tree.check(w);
  tree.check(v);
  if (!(a > 1.0) || !std::isfinite(a)) {
    throw Error(ErrorCode::kBadParams, "a must be finite and > 1");
  }
  const double length = tree.distance(w, v);
  if (!(length > tree.tolerance().abs_eps)) {
    throw Error(ErrorCode::kBadParams, "w and v must be distinct");
  }
  samples = std::max<std::size_t>(samples, 2);

  const double r = 0.25 * length;
  const TreePoint y = tree.midpoint(w, v);
  const double s = 0.5 * r * (1.0 + std::min(a, 2.0));
  const TreePoint x = tree.point_at(y, v, s);
  const double dwx = tree.distance(w, x);
  const bool clamped = a * r > dwx;
  const TreePoint u = clamped ? w : tree.point_at(x, w, a * r);

  LifschitzCounterexample out{tree, w, v, y, x, u};
  out.radius = r;
  out.a = a;
  out.offset = s;
  out.clamped = clamped;
  out.segment_diameter = tree.distance(u, v);
  out.samples = samples;

  const Tolerance& tol = tree.tolerance();
  const std::vector<TreePoint> seg = segment_samples(tree, u, v, samples);
  out.inside_both_balls = std::all_of(seg.begin(), seg.end(), [&](const TreePoint& p) {
    return tol.less_equal(tree.distance(p, x), a * r) &&
           tol.less_equal(tree.distance(p, y), 2.0 * r);
  });
  out.diameter_exceeds = out.segment_diameter > 2.0 * r + tol.bound(2.0 * r);

  // A ball B_c(z; r) holds [u,v] iff it holds both ends.
  std::vector<TreePoint> centers = dense_samples(tree, 8);
  centers.insert(centers.end(), seg.begin(), seg.end());
  centers.push_back(tree.midpoint(u, v));
  out.centers_tried = centers.size();
  out.no_center_contains =
      std::all_of(centers.begin(), centers.end(), [&](const TreePoint& z) {
        return std::max(tree.distance(z, u), tree.distance(z, v)) >
               r + tol.bound(r);
      });
  out.verified = out.inside_both_balls && out.diameter_exceeds &&
                 out.no_center_contains;
  return out;
}

KappaReport kappa_probe(const MetricTree& tree, std::size_t trials,
                        std::uint64_t seed) {
  if (trials == 0) throw Error(ErrorCode::kBadParams, "trials must be >= 1");
  KappaReport report;
  report.seed = seed;
  report.trials = trials;
  Rng rng(seed);
  const Tolerance& tol = tree.tolerance();
  const std::vector<TreePoint> base = dense_samples(tree, 6);

  // Two random points at positive distance, or nothing after a few tries.
  auto random_pair = [&]() -> std::optional<std::pair<TreePoint, TreePoint>> {
    if (tree.edge_count() == 0) return std::nullopt;
    for (int attempt = 0; attempt < 8; ++attempt) {
      TreePoint p = random_point(tree, rng);
      TreePoint q = random_point(tree, rng);
      if (tree.distance(p, q) > 16.0 * tol.abs_eps) return std::make_pair(p, q);
    }
    return std::nullopt;
  };

  for (std::size_t t = 0; t < trials; ++t) {
    ++report.witness_trials;
    if (auto pair = random_pair()) {
      const auto& [x, y] = *pair;
      const double dxy = tree.distance(x, y);
      const double r = dxy * rng.uniform(0.05, 0.95);
      const double eps = rng.uniform(0.02, 0.98);
      std::vector<TreePoint> tests = base;
      for (int k = 0; k < 16; ++k) tests.push_back(random_point(tree, rng));
      const std::vector<TreePoint> seg = segment_samples(tree, x, y, 9);
      tests.insert(tests.end(), seg.begin(), seg.end());
      const WitnessVerdict verdict = lifschitz_witness(tree, x, y, r, eps, tests);
      report.points_tested += verdict.tested;
      report.points_in_intersection += verdict.in_intersection;
      if (verdict.passed) ++report.witness_passed;
    } else {
      ++report.witness_vacuous;
      ++report.witness_passed;
    }

    ++report.counterexample_trials;
    if (auto pair = random_pair()) {
      const double a = rng.uniform(1.01, 4.0);
      const LifschitzCounterexample ce =
          lifschitz_counterexample(tree, pair->first, pair->second, a, 17);
      if (ce.verified) ++report.counterexample_verified;
      if (ce.clamped) ++report.counterexample_clamped;
    } else {
      ++report.counterexample_vacuous;
      ++report.counterexample_verified;
    }
  }
  report.consistent = report.witness_passed == report.witness_trials &&
                      report.counterexample_verified == report.counterexample_trials;
  return report;
}

}  // namespace mtree
