#include <gtest/gtest.h>

#include <cmath>
#include <functional>

#include "mtree/distance_matrix.hpp"
#include "mtree/document.hpp"
#include "mtree/gallery.hpp"
#include "support/random_tree.hpp"

namespace mtree {
namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::kIo;
}

DistanceMatrix square_matrix(std::vector<std::string> labels,
                             std::vector<double> entries) {
  return DistanceMatrix(std::move(labels), std::move(entries));
}

void expect_remeasures(const DistanceMatrix& m, const TreeDocument& doc,
                       double eps) {
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      const double d = doc.tree.distance(doc.require(m.labels()[i]),
                                         doc.require(m.labels()[j]));
      EXPECT_NEAR(d, m(i, j), eps) << m.labels()[i] << "," << m.labels()[j];
    }
  }
}

TEST(Document, RoundTripSimple) {
  const TreeDocument doc = gallery("simple");
  const std::string text = serialize_tree(doc);
  const TreeDocument back = parse_tree(text);
  EXPECT_TRUE(structurally_equal(doc, back));
  EXPECT_EQ(serialize_tree(back), text);
}

TEST(Document, RoundTripEdgePointsAndComb) {
  const TreeDocument comb = gallery("comb_compact", {4, 1.0});
  const std::vector<NamedPoint> extra{
      {"p", comb.tree.point_on(1, 5, 1.0 / 3.0)}};
  std::vector<NamedPoint> points = comb.points;
  points.insert(points.end(), extra.begin(), extra.end());
  const TreeDocument doc = make_document(comb.tree, comb.node_names, points);
  const TreeDocument back = parse_tree(serialize_tree(doc));
  EXPECT_TRUE(structurally_equal(doc, back));
  EXPECT_NEAR(back.tree.distance(back.require("p"), back.require("t1")),
              2.0 / 3.0, 1e-12);
}

TEST(Document, ParsesCommentsAndNodeNames) {
  const TreeDocument doc = parse_tree(
      "# a path\n"
      "node left\n"
      "edge left mid 1.5   # first edge\n"
      "edge mid right 2\n"
      "point q edge mid right 0.5\n"
      "point L node left\n");
  EXPECT_EQ(doc.tree.node_count(), 3u);
  EXPECT_EQ(doc.node_names, (std::vector<std::string>{"left", "mid", "right"}));
  EXPECT_DOUBLE_EQ(doc.tree.distance(doc.require("q"), doc.require("L")), 2.0);
  EXPECT_EQ(doc.require("right"), doc.tree.node(2));
  EXPECT_EQ(code_of([&] { doc.require("nowhere"); }), ErrorCode::kUnknownPoint);
}

TEST(Document, MalformedEdgeIsSyntaxError) {
  try {
    parse_tree("node a\nedge a b\n");
    FAIL() << "expected SyntaxError";
  } catch (const SyntaxError& e) {
    EXPECT_EQ(e.code(), ErrorCode::kSyntaxError);
    EXPECT_EQ(e.line(), 2u);
  }
  EXPECT_EQ(code_of([] { parse_tree("edge a b one\n"); }), ErrorCode::kSyntaxError);
  EXPECT_EQ(code_of([] { parse_tree("vertex a\n"); }), ErrorCode::kSyntaxError);
}

TEST(Document, OffsetBeyondEdge) {
  EXPECT_EQ(code_of([] { parse_tree("edge a b 1\npoint p edge a b 1.5\n"); }),
            ErrorCode::kParameterOutOfRange);
}

TEST(Document, StructuralErrorsPropagate) {
  EXPECT_EQ(code_of([] { parse_tree("edge a b 1\nedge b c 1\nedge c a 1\n"); }),
            ErrorCode::kCycleDetected);
  EXPECT_EQ(code_of([] { parse_tree("edge a b 0\n"); }),
            ErrorCode::kNonpositiveEdgeLength);
  EXPECT_EQ(code_of([] { parse_tree("# nothing\n"); }), ErrorCode::kEmptyTree);
  EXPECT_EQ(code_of([] { parse_tree("edge a b 1\npoint p node zz\n"); }),
            ErrorCode::kUnknownNode);
  EXPECT_EQ(code_of([] {
              parse_tree("edge a b 1\npoint p node a\npoint p node b\n");
            }),
            ErrorCode::kDuplicateName);
}

TEST(Matrix, ParsesCsvAndLowerTriangle) {
  const DistanceMatrix csv =
      parse_distance_matrix(",A,B,C\nA,0,3,4\nB,3,0,5\nC,4,5,0\n");
  const DistanceMatrix tri = parse_distance_matrix("A\nB 3\nC 4 5 0\n");
  ASSERT_EQ(csv.size(), 3u);
  ASSERT_EQ(tri.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) EXPECT_EQ(csv(i, j), tri(i, j));
  }
  EXPECT_EQ(csv(2, 1), 5.0);
  const DistanceMatrix back = parse_distance_matrix(format_distance_matrix_csv(csv));
  EXPECT_EQ(back.labels(), csv.labels());
  EXPECT_EQ(back(0, 2), 4.0);
}

TEST(Matrix, Rejections) {
  EXPECT_EQ(code_of([] { square_matrix({"a", "b"}, {0, 1, 2, 0}); }),
            ErrorCode::kInvalidMatrix);
  EXPECT_EQ(code_of([] { square_matrix({"a", "b"}, {0, -1, -1, 0}); }),
            ErrorCode::kInvalidMatrix);
  EXPECT_EQ(code_of([] { square_matrix({"a", "b"}, {1, 1, 1, 0}); }),
            ErrorCode::kInvalidMatrix);
  EXPECT_EQ(code_of([] { square_matrix({"a", "a"}, {0, 1, 1, 0}); }),
            ErrorCode::kInvalidMatrix);
  EXPECT_EQ(code_of([] { parse_distance_matrix(",A,B\nA,0,x\nB,1,0\n"); }),
            ErrorCode::kSyntaxError);
  // Symmetric within tolerance is accepted and averaged.
  const DistanceMatrix near = square_matrix({"a", "b"}, {0, 1, 1 + 1e-12, 0});
  EXPECT_EQ(near(0, 1), near(1, 0));
}

TEST(Matrix, TriangleInequality) {
  const DistanceMatrix bad =
      square_matrix({"a", "b", "c"}, {0, 1, 5, 1, 0, 1, 5, 1, 0});
  try {
    check_triangle_inequality(bad);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::kNotAMetric);
    EXPECT_EQ(e.indices(), (std::vector<std::size_t>{0, 1, 2}));
  }
}

TEST(FourPoint, Examples) {
  const DistanceMatrix three =
      square_matrix({"a", "b", "c"}, {0, 3, 4, 3, 0, 5, 4, 5, 0});
  EXPECT_TRUE(check_four_point(three).tree_metric);

  std::vector<double> star(16, 2.0);
  for (int i = 0; i < 4; ++i) star[i * 4 + i] = 0.0;
  EXPECT_TRUE(check_four_point(square_matrix({"a", "b", "c", "d"}, star)).tree_metric);

  // Unit square, corners in cyclic order.
  const double s = std::sqrt(2.0);
  const DistanceMatrix square = square_matrix(
      {"p0", "p1", "p2", "p3"},
      {0, 1, s, 1, 1, 0, 1, s, s, 1, 0, 1, 1, s, 1, 0});
  const FourPointResult r = check_four_point(square);
  EXPECT_FALSE(r.tree_metric);
  ASSERT_TRUE(r.violation);
  const auto& q = *r.violation;
  EXPECT_GT(square(q[0], q[1]) + square(q[2], q[3]),
            std::max(square(q[0], q[2]) + square(q[1], q[3]),
                     square(q[0], q[3]) + square(q[1], q[2])) + 0.5);
}

TEST(Reconstruct, TwoLabels) {
  const DistanceMatrix m = square_matrix({"x", "y"}, {0, 5, 5, 0});
  const TreeDocument doc = tree_from_distances(m);
  EXPECT_EQ(doc.tree.edge_count(), 1u);
  EXPECT_DOUBLE_EQ(doc.tree.edge(0).length, 5.0);
}

TEST(Reconstruct, ThreeLabelsFormStar) {
  const DistanceMatrix m =
      square_matrix({"i", "j", "k"}, {0, 3, 4, 3, 0, 5, 4, 5, 0});
  const TreeDocument doc = tree_from_distances(m);
  EXPECT_EQ(doc.tree.node_count(), 4u);
  const TreePoint hub = doc.tree.median(doc.require("i"), doc.require("j"),
                                        doc.require("k"));
  EXPECT_NEAR(doc.tree.distance(hub, doc.require("i")), 1.0, 1e-12);
  EXPECT_NEAR(doc.tree.distance(hub, doc.require("j")), 2.0, 1e-12);
  EXPECT_NEAR(doc.tree.distance(hub, doc.require("k")), 3.0, 1e-12);
  expect_remeasures(m, doc, 1e-12);
}

TEST(Reconstruct, SimpleTreeLeaves) {
  const TreeDocument simple = gallery("simple");
  const std::vector<NamedPoint> acd{simple.points[0], simple.points[2],
                                    simple.points[3]};
  const DistanceMatrix m = distances_between(simple.tree, acd);
  expect_remeasures(m, tree_from_distances(m), 1e-12);
}

TEST(Reconstruct, CoincidingLabelsAndRejections) {
  const DistanceMatrix dup =
      square_matrix({"a", "b", "c"}, {0, 0, 2, 0, 0, 2, 2, 2, 0});
  const TreeDocument doc = tree_from_distances(dup);
  EXPECT_EQ(doc.require("a"), doc.require("b"));
  expect_remeasures(dup, doc, 1e-12);

  const double s = std::sqrt(2.0);
  const DistanceMatrix square = square_matrix(
      {"p0", "p1", "p2", "p3"},
      {0, 1, s, 1, 1, 0, 1, s, s, 1, 0, 1, 1, s, 1, 0});
  EXPECT_EQ(code_of([&] { tree_from_distances(square); }),
            ErrorCode::kNotTreeMetric);
  const DistanceMatrix bad =
      square_matrix({"a", "b", "c"}, {0, 1, 5, 1, 0, 1, 5, 1, 0});
  EXPECT_EQ(code_of([&] { tree_from_distances(bad); }), ErrorCode::kNotAMetric);
}

TEST(Reconstruct, RandomRoundTrips) {
  Rng rng(99);
  for (int round = 0; round < 60; ++round) {
    const MetricTree t = fixtures::random_tree_upto(rng, 20);
    std::vector<NamedPoint> pts;
    const std::size_t k = 1 + rng.index(8);
    for (std::size_t i = 0; i < k; ++i) {
      pts.push_back({"p" + std::to_string(i), random_point(t, rng)});
    }
    const DistanceMatrix m = distances_between(t, pts);
    EXPECT_TRUE(check_four_point(m).tree_metric);
    expect_remeasures(m, tree_from_distances(m), 1e-6);
  }
}

TEST(Gallery, Fixtures) {
  const TreeDocument simple = gallery("simple");
  EXPECT_EQ(simple.node_names, (std::vector<std::string>{"A", "B", "C", "D"}));
  EXPECT_EQ(simple.tree.edge_count(), 3u);

  const TreeDocument star = gallery("star", {3, 1.0});
  EXPECT_EQ(star.points.size(), 3u);
  EXPECT_EQ(star.tree.degree(0), 3u);

  // Teeth of the noncompact comb: d(t_i, t_j) = 2 + |1/i - 1/j|.
  const TreeDocument comb = gallery("comb_noncompact", {5, 1.0});
  for (int i = 1; i <= 5; ++i) {
    for (int j = i + 1; j <= 5; ++j) {
      EXPECT_NEAR(comb.tree.distance(comb.require("t" + std::to_string(i)),
                                     comb.require("t" + std::to_string(j))),
                  2.0 + std::abs(1.0 / i - 1.0 / j), 1e-12);
    }
  }
  const TreeDocument compact = gallery("comb_compact", {4, 1.0});
  EXPECT_NEAR(compact.tree.distance(compact.require("origin"),
                                    compact.require("t2")),
              1.0, 1e-12);

  EXPECT_EQ(code_of([] { gallery("spiral"); }), ErrorCode::kUnknownGallery);
  EXPECT_EQ(code_of([] { gallery("star", {0, 1.0}); }), ErrorCode::kBadParams);
  EXPECT_EQ(code_of([] { gallery("star", {3, -1.0}); }), ErrorCode::kBadParams);
}

}  // namespace
}  // namespace mtree
