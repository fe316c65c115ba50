#include <gtest/gtest.h>

#include "mtree/gallery.hpp"
#include "mtree/report.hpp"

namespace mtree {
namespace {

TEST(Report, PointEncoding) {
  const TreeDocument doc = gallery("simple");
  EXPECT_EQ(point_json(doc, doc.require("B")), Json({{"node", "B"}}));
  const Json edge = point_json(doc, doc.tree.point_on(0, 1, 0.5));
  EXPECT_EQ(edge["edge"]["u"], "A");
  EXPECT_EQ(edge["edge"]["v"], "B");
  EXPECT_EQ(edge["offset"], 0.5);
  const std::span<const std::string> no_names;
  EXPECT_EQ(point_json(doc.tree, no_names, doc.tree.node(2)), Json({{"node", "2"}}));
}

TEST(Report, ProfileAndEnvelope) {
  const CoverProfile p{{1.0, 0.5}};
  const Json j = profile_json(p);
  ASSERT_EQ(j.size(), 2u);
  EXPECT_EQ(j[1]["n"], 2);
  EXPECT_EQ(j[1]["value"], 0.5);
  const Json e = envelope("measure", Json{{"x", 1}});
  EXPECT_EQ(e.begin().key(), "schema");
  EXPECT_EQ(e["schema"], 1);
  EXPECT_EQ(e["command"], "measure");
  EXPECT_EQ(e["x"], 1);
}

TEST(Report, MeasureRoundTripsThroughText) {
  const TreeDocument star = gallery("star", {4, 1.0});
  const std::vector<std::string> labels{"t1", "t2", "t3", "t4"};
  const MeasureReport r = measure_report(PointSet(star.tree, star.named_points()), 4);
  const Json j = Json::parse(dump_json(measure_json(star, labels, r)));
  EXPECT_TRUE(j["relations_hold"].get<bool>());
  EXPECT_EQ(j["beta"][0]["value"], 1.0);
  EXPECT_TRUE(j["rows"][3]["alpha_over_beta"].is_null());
  EXPECT_EQ(j["witnesses"][0]["ball_cover"]["centers"][0], Json({{"node", "hub"}}));
  EXPECT_EQ(j["witnesses"][3]["partition"]["count"], 4);
}

TEST(Report, CounterexampleCoordinates) {
  const Json j = counterexample_json(lifschitz_counterexample(1.0, 1.5));
  EXPECT_TRUE(j["verified"].get<bool>());
  EXPECT_EQ(j["w"], Json({{"node", "0"}}));
  EXPECT_EQ(j["y"], Json({{"node", "1"}}));
  EXPECT_NEAR(j["x"]["offset"].get<double>(), 1.25, 1e-12);
}

TEST(Report, ErrorEncoding) {
  const Error e(ErrorCode::kNotAMetric, "bad", {0, 1, 2});
  const Json j = error_json(e);
  EXPECT_EQ(j["code"], "NotAMetric");
  EXPECT_EQ(j["indices"], Json({0, 1, 2}));
}

}  // namespace
}  // namespace mtree
