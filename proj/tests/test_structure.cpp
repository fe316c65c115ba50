#include <gtest/gtest.h>

#include <algorithm>
#include <functional>

#include "mtree/covering.hpp"
#include "mtree/gallery.hpp"
#include "mtree/sampling.hpp"
#include "mtree/structure.hpp"
#include "support/random_tree.hpp"

namespace mtree {
namespace {

constexpr double kEps = 1e-9;

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::kIo;
}

MetricTree path(std::size_t nodes, double length = 1.0) {
  RawTree raw{nodes, {}};
  for (std::size_t i = 1; i < nodes; ++i) {
    raw.edges.push_back({static_cast<NodeId>(i - 1), static_cast<NodeId>(i), length});
  }
  return MetricTree::validate(raw);
}

TEST(Leaves, Examples) {
  const MetricTree p = path(3);
  EXPECT_EQ(leaves(p).leaves, (std::vector<TreePoint>{p.node(0), p.node(2)}));

  const TreeDocument star = gallery("star", {5, 1.0});
  EXPECT_EQ(leaves(star.tree).leaves, star.named_points());

  const TreeDocument simple = gallery("simple");
  EXPECT_EQ(leaves(simple.tree).leaves,
            (std::vector<TreePoint>{simple.require("A"), simple.require("C"),
                                    simple.require("D")}));

  const MetricTree lone = MetricTree::validate({1, {}});
  EXPECT_EQ(leaves(lone).leaves, std::vector<TreePoint>{lone.node(0)});
}

TEST(Leaves, PruningALeafChangesSetPredictably) {
  Rng rng(4);
  for (int round = 0; round < 30; ++round) {
    const MetricTree t = fixtures::random_tree(rng, 3 + rng.index(20));
    // Random trees attach node i to an earlier node, so the last node is a
    // leaf; dropping it removes it and may turn its parent into a leaf.
    const Edge last = t.edges().back();
    RawTree pruned{t.node_count() - 1,
                   std::vector<Edge>(t.edges().begin(), t.edges().end() - 1)};
    const MetricTree smaller = MetricTree::validate(pruned);
    std::vector<NodeId> before, after;
    for (const TreePoint& f : leaves(t).leaves) before.push_back(f.node());
    for (const TreePoint& f : leaves(smaller).leaves) after.push_back(f.node());
    std::vector<NodeId> expected;
    for (NodeId n : before) {
      if (n != last.v) expected.push_back(n);
    }
    if (t.degree(last.u) == 2) {
      expected.push_back(last.u);
      std::sort(expected.begin(), expected.end());
    }
    EXPECT_EQ(after, expected);
  }
}

TEST(LeafWitness, Examples) {
  const MetricTree p = path(3);
  EXPECT_EQ(leaf_witness(p, p.node(1), p.node(1)), p.node(0));
  EXPECT_EQ(leaf_witness(p, p.node(0), p.node(1)), p.node(2));
  EXPECT_EQ(leaf_witness(p, p.node(2), p.edge_point(0, 0.5)), p.node(0));

  const TreeDocument simple = gallery("simple");
  const TreePoint on_bc = simple.tree.point_on(1, 2, 0.4);
  EXPECT_EQ(leaf_witness(simple.tree, simple.require("A"), on_bc),
            simple.require("C"));
}

TEST(LeafWitness, BaseAndPointOnSameEdge) {
  const MetricTree t = MetricTree::validate({2, {{0, 1, 10.0}}});
  const TreePoint base = t.edge_point(0, 2.0);
  EXPECT_EQ(leaf_witness(t, base, t.edge_point(0, 1.0)), t.node(0));
  EXPECT_EQ(leaf_witness(t, base, t.edge_point(0, 3.0)), t.node(1));
}

TEST(LeafWitness, ForeignPoint) {
  const MetricTree a = path(3), b = path(3);
  EXPECT_EQ(code_of([&] { leaf_witness(a, a.node(0), b.node(1)); }),
            ErrorCode::kForeignPoint);
}

TEST(LeafCover, StarSpokesMapToTheirTips) {
  const TreeDocument star = gallery("star", {3, 1.0});
  const MetricTree& t = star.tree;
  const std::vector<TreePoint> samples = dense_samples(t, 7);
  EXPECT_TRUE(leaf_cover_check(t, t.node(0), samples).covered);
  for (const TreePoint& m : samples) {
    if (m == t.node(0)) continue;
    const NodeId tip = m.is_node() ? m.node() : t.edge(m.edge()).v;
    EXPECT_EQ(leaf_witness(t, t.node(0), m), t.node(tip));
  }
}

TEST(LeafCover, NoncompactCombTeeth) {
  const TreeDocument comb = gallery("comb_noncompact", {5, 1.0});
  const MetricTree& t = comb.tree;
  const TreePoint origin = comb.require("origin");
  for (std::size_t k = 1; k <= 5; ++k) {
    const NodeId spine = static_cast<NodeId>(k);
    const NodeId tip = static_cast<NodeId>(5 + k);
    for (double off : {0.1, 0.5, 0.9}) {
      EXPECT_EQ(leaf_witness(t, origin, t.point_on(spine, tip, off)), t.node(tip));
    }
  }
  const LeafCoverResult r = leaf_cover_check(t, origin, dense_samples(t, 5));
  EXPECT_TRUE(r.covered);
  EXPECT_EQ(r.checked, t.node_count() + 5 * t.edge_count());
}

TEST(LeafCover, RandomTrees) {
  Rng rng(77);
  for (int round = 0; round < 40; ++round) {
    const MetricTree t = fixtures::random_tree_upto(rng, 30);
    const TreePoint base = random_point(t, rng);
    const LeafCoverResult r = leaf_cover_check(t, base, dense_samples(t, 4));
    EXPECT_TRUE(r.covered);
    EXPECT_FALSE(r.counterexample);
  }
}

TEST(Witness, PathOfLengthTen) {
  const MetricTree p = MetricTree::validate({2, {{0, 1, 10.0}}});
  const std::vector<TreePoint> w = dense_samples(p, 99);
  const WitnessVerdict v = lifschitz_witness(p, p.node(0), p.node(1), 4.0, 0.25, w);
  EXPECT_TRUE(v.passed);
  EXPECT_NEAR(p.distance(p.node(0), v.witness.z), 1.0, kEps);
  EXPECT_DOUBLE_EQ(v.witness.a, 1.25);
  EXPECT_DOUBLE_EQ(v.witness.b, 1.5);
  // B(x; 5) ∩ B(y; 6) on the path is [4, 5]; samples are every 0.1.
  EXPECT_EQ(v.in_intersection, 11u);
}

TEST(Witness, VacuousAndPreconditions) {
  const MetricTree p = MetricTree::validate({2, {{0, 1, 10.0}}});
  const std::vector<TreePoint> far{p.node(0)};
  const WitnessVerdict v = lifschitz_witness(p, p.node(0), p.node(1), 4.0, 0.5, far);
  EXPECT_TRUE(v.passed);
  EXPECT_EQ(v.in_intersection, 0u);
  EXPECT_EQ(code_of([&] { lifschitz_witness(p, p.node(0), p.node(1), 10.0, 0.5, far); }),
            ErrorCode::kPreconditionViolation);
  EXPECT_EQ(code_of([&] { lifschitz_witness(p, p.node(0), p.node(1), 4.0, 1.0, far); }),
            ErrorCode::kPreconditionViolation);
  EXPECT_EQ(code_of([&] { lifschitz_witness(p, p.node(0), p.node(1), 4.0, 0.0, far); }),
            ErrorCode::kPreconditionViolation);
}

TEST(Witness, RandomConfigurations) {
  Rng rng(123);
  for (int round = 0; round < 60; ++round) {
    const MetricTree t = fixtures::random_tree(rng, 2 + rng.index(29));
    const TreePoint x = random_point(t, rng), y = random_point(t, rng);
    const double d = t.distance(x, y);
    if (d < 1e-6) continue;
    const double r = d * rng.uniform(0.05, 0.95);
    const double eps = rng.uniform(0.01, 0.99);
    const std::vector<TreePoint> w = dense_samples(t, 6);
    EXPECT_TRUE(lifschitz_witness(t, x, y, r, eps, w).passed);
  }
}

TEST(Counterexample, ExplicitCoordinates) {
  const LifschitzCounterexample ce = lifschitz_counterexample(1.0, 1.5);
  EXPECT_TRUE(ce.verified);
  EXPECT_FALSE(ce.clamped);
  const MetricTree& t = ce.tree;
  EXPECT_NEAR(t.distance(ce.w, ce.y), 2.0, kEps);
  EXPECT_NEAR(t.distance(ce.w, ce.x), 3.25, kEps);
  EXPECT_NEAR(t.distance(ce.w, ce.u), 1.75, kEps);
  EXPECT_NEAR(ce.segment_diameter, 2.25, kEps);
  EXPECT_GT(ce.segment_diameter, 2.0);
}

TEST(Counterexample, ClampOnlyWhenPathIsTooShort) {
  // With r < d(y,x) the clamp needs a r > 2r + d(y,x), so a = 3 still fits.
  const LifschitzCounterexample three = lifschitz_counterexample(1.0, 3.0);
  EXPECT_TRUE(three.verified);
  EXPECT_FALSE(three.clamped);
  EXPECT_NEAR(three.tree.distance(three.w, three.u), 0.5, kEps);

  const LifschitzCounterexample five = lifschitz_counterexample(1.0, 5.0);
  EXPECT_TRUE(five.verified);
  EXPECT_TRUE(five.clamped);
  EXPECT_EQ(five.u, five.w);
  EXPECT_NEAR(five.segment_diameter, 4.0, kEps);
}

TEST(Counterexample, BadParams) {
  EXPECT_EQ(code_of([] { lifschitz_counterexample(0.0, 1.5); }), ErrorCode::kBadParams);
  EXPECT_EQ(code_of([] { lifschitz_counterexample(1.0, 1.0); }), ErrorCode::kBadParams);
  const MetricTree p = path(2);
  EXPECT_EQ(code_of([&] { lifschitz_counterexample(p, p.node(0), p.node(0), 2.0); }),
            ErrorCode::kBadParams);
}

TEST(Counterexample, VariedParameters) {
  Rng rng(9);
  for (int round = 0; round < 40; ++round) {
    const double r = rng.uniform(0.01, 50.0);
    const double a = rng.uniform(1.001, 6.0);
    EXPECT_TRUE(lifschitz_counterexample(r, a).verified) << r << " " << a;
  }
}

TEST(Kappa, Probe) {
  const MetricTree lone = MetricTree::validate({1, {}});
  const KappaReport vac = kappa_probe(lone, 5, 1);
  EXPECT_TRUE(vac.consistent);
  EXPECT_EQ(vac.witness_vacuous, 5u);
  EXPECT_EQ(code_of([&] { kappa_probe(lone, 0, 1); }), ErrorCode::kBadParams);

  const KappaReport on_path = kappa_probe(path(6, 0.7), 40, 2);
  EXPECT_TRUE(on_path.consistent);
  EXPECT_EQ(on_path.counterexample_verified, 40u);

  Rng rng(3);
  for (int round = 0; round < 10; ++round) {
    const MetricTree t = fixtures::random_tree_upto(rng, 30);
    EXPECT_TRUE(kappa_probe(t, 10, round).consistent);
  }
}

TEST(Kappa, DeterministicForSeed) {
  const TreeDocument simple = gallery("simple");
  const KappaReport a = kappa_probe(simple.tree, 25, 42);
  const KappaReport b = kappa_probe(simple.tree, 25, 42);
  EXPECT_EQ(a.points_tested, b.points_tested);
  EXPECT_EQ(a.points_in_intersection, b.points_in_intersection);
  EXPECT_EQ(a.counterexample_clamped, b.counterexample_clamped);
}

TEST(Circumcenter, SmallBallForEveryBelowTwo) {
  Rng rng(6);
  for (int round = 0; round < 40; ++round) {
    const MetricTree t = fixtures::random_tree_upto(rng, 30);
    const PointSet s(t, fixtures::random_points(t, rng, 1 + rng.index(8)));
    const Circumcenter c = circumcenter(s);
    const double d = diameter(s).value;
    const double b = rng.uniform(0.01, 1.99);
    for (const TreePoint& p : s.points()) {
      EXPECT_LE(t.distance(c.center, p), d / b + kEps);
    }
  }
}

}  // namespace
}  // namespace mtree
