#include "mtree/report.hpp"

namespace mtree {

namespace {

std::string node_label(std::span<const std::string> names, NodeId n) {
  return n < names.size() ? names[n] : std::to_string(n);
}

Json indices_json(std::span<const std::size_t> indices,
                  std::span<const std::string> labels) {
  Json out = Json::array();
  for (std::size_t i : indices) {
    out.push_back(i < labels.size() ? Json(labels[i]) : Json(i));
  }
  return out;
}

}  // namespace

Json point_json(const MetricTree& tree, std::span<const std::string> node_names,
                const TreePoint& p) {
  if (p.is_node()) return Json{{"node", node_label(node_names, p.node())}};
  const Edge& e = tree.edge(p.edge());
  return Json{{"edge",
               {{"u", node_label(node_names, e.u)},
                {"v", node_label(node_names, e.v)}}},
              {"offset", p.offset()}};
}

Json point_json(const TreeDocument& doc, const TreePoint& p) {
  return point_json(doc.tree, doc.node_names, p);
}

Json profile_json(const CoverProfile& profile) {
  Json out = Json::array();
  for (std::size_t n = 1; n <= profile.n_max(); ++n) {
    out.push_back({{"n", n}, {"value", profile.at(n)}});
  }
  return out;
}

Json measure_json(const TreeDocument& doc, std::span<const std::string> labels,
                  const MeasureReport& report) {
  Json rows = Json::array();
  for (const MeasureRow& r : report.rows) {
    rows.push_back({{"n", r.n},
                    {"alpha", r.alpha},
                    {"beta", r.beta},
                    {"beta_star", r.beta_star},
                    {"alpha_over_beta",
                     r.alpha_over_beta ? Json(*r.alpha_over_beta) : Json()},
                    {"alpha_is_twice_beta", r.alpha_is_twice_beta},
                    {"beta_star_is_twice_beta", r.beta_star_is_twice_beta}});
  }
  Json witnesses = Json::array();
  for (std::size_t i = 0; i < report.rows.size(); ++i) {
    const DiameterBallCover& dbc = report.diameter_ball_witnesses[i];
    Json balls = Json::array();
    for (std::size_t b = 0; b < dbc.centers.size(); ++b) {
      balls.push_back({{"center", point_json(doc, dbc.centers[b])},
                       {"radius", dbc.radii[b]},
                       {"ball_diameter", dbc.ball_diameters[b]}});
    }
    witnesses.push_back(
        {{"n", report.rows[i].n},
         {"ball_cover", ball_cover_json(doc, labels, report.ball_witnesses[i])},
         {"partition", partition_json(labels, report.partition_witnesses[i])},
         {"diameter_balls", balls}});
  }
  return {{"points", Json(std::vector<std::string>(labels.begin(), labels.end()))},
          {"alpha", profile_json(report.alpha)},
          {"beta", profile_json(report.beta)},
          {"beta_star", profile_json(report.beta_star)},
          {"rows", rows},
          {"witnesses", witnesses},
          {"relations_hold", report.relations_hold}};
}

Json ball_cover_json(const TreeDocument& doc,
                     std::span<const std::string> labels,
                     const BallCover& cover) {
  Json centers = Json::array();
  for (const TreePoint& c : cover.centers) centers.push_back(point_json(doc, c));
  Json assignment = Json::object();
  for (std::size_t i = 0; i < cover.assignment.size(); ++i) {
    const std::string key = i < labels.size() ? labels[i] : std::to_string(i);
    assignment[key] = cover.assignment[i];
  }
  return {{"radius", cover.radius},
          {"count", cover.centers.size()},
          {"centers", centers},
          {"assignment", assignment}};
}

Json partition_json(std::span<const std::string> labels,
                    const DiameterPartition& partition) {
  Json blocks = Json::array();
  for (const auto& block : partition.blocks) {
    blocks.push_back(indices_json(block, labels));
  }
  return {{"diameter_bound", partition.diameter_bound},
          {"count", partition.blocks.size()},
          {"blocks", blocks}};
}

Json witness_json(const MetricTree& tree,
                  std::span<const std::string> node_names,
                  const WitnessVerdict& verdict) {
  const LifschitzWitness& w = verdict.witness;
  return {{"x", point_json(tree, node_names, w.x)},
          {"y", point_json(tree, node_names, w.y)},
          {"z", point_json(tree, node_names, w.z)},
          {"r", w.radius},
          {"epsilon", w.epsilon},
          {"a", w.a},
          {"b", w.b},
          {"tested", verdict.tested},
          {"in_intersection", verdict.in_intersection},
          {"failures", verdict.failures},
          {"passed", verdict.passed}};
}

Json counterexample_json(const LifschitzCounterexample& ce) {
  const std::span<const std::string> ids;
  return {{"r", ce.radius},
          {"a", ce.a},
          {"w", point_json(ce.tree, ids, ce.w)},
          {"v", point_json(ce.tree, ids, ce.v)},
          {"y", point_json(ce.tree, ids, ce.y)},
          {"x", point_json(ce.tree, ids, ce.x)},
          {"u", point_json(ce.tree, ids, ce.u)},
          {"d_y_x", ce.offset},
          {"clamped", ce.clamped},
          {"segment_diameter", ce.segment_diameter},
          {"samples", ce.samples},
          {"centers_tried", ce.centers_tried},
          {"inside_both_balls", ce.inside_both_balls},
          {"diameter_exceeds", ce.diameter_exceeds},
          {"no_center_contains", ce.no_center_contains},
          {"verified", ce.verified}};
}

Json kappa_json(const KappaReport& r) {
  return {{"seed", r.seed},
          {"trials", r.trials},
          {"witness",
           {{"trials", r.witness_trials},
            {"passed", r.witness_passed},
            {"vacuous", r.witness_vacuous},
            {"points_tested", r.points_tested},
            {"points_in_intersection", r.points_in_intersection}}},
          {"counterexample",
           {{"trials", r.counterexample_trials},
            {"verified", r.counterexample_verified},
            {"clamped", r.counterexample_clamped},
            {"vacuous", r.counterexample_vacuous}}},
          {"consistent", r.consistent}};
}

Json four_point_json(const DistanceMatrix& m, const FourPointResult& result) {
  Json out{{"labels", m.labels()}, {"tree_metric", result.tree_metric}};
  if (result.violation) {
    const auto& q = *result.violation;
    out["violation"] = {
        {"quadruple", indices_json(q, m.labels())},
        {"pair_sums",
         {m(q[0], q[1]) + m(q[2], q[3]), m(q[0], q[2]) + m(q[1], q[3]),
          m(q[0], q[3]) + m(q[1], q[2])}}};
  }
  return out;
}

Json error_json(const Error& error) {
  Json out{{"code", std::string(to_string(error.code()))}, {"message", error.what()}};
  if (!error.indices().empty()) out["indices"] = error.indices();
  return out;
}

Json envelope(const std::string& command, const Json& body) {
  Json out{{"schema", kReportSchema}, {"command", command}};
  for (const auto& [key, value] : body.items()) out[key] = value;
  return out;
}

std::string dump_json(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace mtree
