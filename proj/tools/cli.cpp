#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <sstream>

#include "mtree/covering.hpp"
#include "mtree/distance_matrix.hpp"
#include "mtree/document.hpp"
#include "mtree/gallery.hpp"
#include "mtree/noncompactness.hpp"
#include "mtree/report.hpp"
#include "mtree/structure.hpp"

namespace mtree::cli {

namespace {

struct RunConfig {
  std::string command;
  std::string input;
  std::string out_path;
  std::string format = "json";
  std::optional<double> tol;
  std::size_t n_max = 0;
  std::uint64_t seed = 1;
  std::size_t trials = 200;
  std::vector<std::string> points;
  std::optional<double> radius;
  std::optional<double> diameter;
  std::size_t size = 3;
  double length = 1.0;
};

// A finished command: the text to emit and its exit code.
struct Outcome {
  std::string text;
  int code = kOk;
};

Tolerance tolerance_of(const RunConfig& cfg) {
  Tolerance tol;
  if (cfg.tol) {
    tol.abs_eps = *cfg.tol;
    tol.rel_eps = *cfg.tol;
  }
  if (!tol.valid()) {
    throw Error(ErrorCode::kBadParams, "--tol must be finite and positive");
  }
  return tol;
}

bool json_format(const RunConfig& cfg) { return cfg.format == "json"; }

std::string join(const std::vector<std::string>& items) {
  std::string out;
  for (const std::string& s : items) out += (out.empty() ? "" : ",") + s;
  return out;
}

std::vector<std::string> split_names(const std::vector<std::string>& raw) {
  std::vector<std::string> out;
  for (const std::string& chunk : raw) {
    std::stringstream in(chunk);
    std::string name;
    while (std::getline(in, name, ',')) {
      if (!name.empty()) out.push_back(name);
    }
  }
  return out;
}

// Named points from --points, or every named point of the document.
std::vector<std::string> point_labels(const RunConfig& cfg,
                                      const TreeDocument& doc) {
  std::vector<std::string> labels = split_names(cfg.points);
  if (labels.empty()) {
    for (const NamedPoint& p : doc.points) labels.push_back(p.name);
  }
  if (labels.empty()) throw Error(ErrorCode::kEmptySet, "no points selected");
  return labels;
}

PointSet resolve_points(const TreeDocument& doc,
                        const std::vector<std::string>& labels) {
  std::vector<TreePoint> points;
  for (const std::string& label : labels) points.push_back(doc.require(label));
  return PointSet(doc.tree, std::move(points));
}

TreeDocument load_tree(const RunConfig& cfg) {
  return parse_tree(read_text_file(cfg.input), tolerance_of(cfg));
}

std::string text_point(const TreeDocument& doc, const TreePoint& p) {
  if (p.is_node()) return doc.node_name(p.node());
  const Edge& e = doc.tree.edge(p.edge());
  return doc.node_name(e.u) + "-" + doc.node_name(e.v) + "@" +
         format_number(p.offset());
}

Outcome cmd_check(const RunConfig& cfg) {
  const DistanceMatrix m =
      parse_distance_matrix(read_text_file(cfg.input), tolerance_of(cfg));
  Json body;
  bool tree_metric = false;
  try {
    const FourPointResult r = check_four_point(m);
    tree_metric = r.tree_metric;
    body = four_point_json(m, r);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kNotAMetric) throw;
    body = {{"labels", m.labels()}, {"tree_metric", false}, {"metric", false},
            {"error", error_json(e)}};
  }
  const int code = tree_metric ? kOk : kVerdictNo;
  if (json_format(cfg)) return {dump_json(envelope("check", body)), code};

  std::ostringstream out;
  out << "labels: " << m.size() << "\n";
  out << "tree metric: " << (tree_metric ? "yes" : "no") << "\n";
  if (body.contains("violation")) {
    std::vector<std::string> names;
    for (const auto& n : body["violation"]["quadruple"]) names.push_back(n.get<std::string>());
    out << "violating quadruple: " << join(names) << "\n";
  }
  if (body.contains("error")) {
    out << "triangle inequality fails: " << body["error"]["message"].get<std::string>()
        << "\n";
  }
  return {out.str(), code};
}

Outcome cmd_build(const RunConfig& cfg) {
  const DistanceMatrix m =
      parse_distance_matrix(read_text_file(cfg.input), tolerance_of(cfg));
  const TreeDocument doc = tree_from_distances(m);
  double deviation = 0.0;
  for (std::size_t i = 0; i < m.size(); ++i) {
    for (std::size_t j = 0; j < m.size(); ++j) {
      deviation = std::max(
          deviation, std::abs(doc.tree.distance(doc.require(m.labels()[i]),
                                                doc.require(m.labels()[j])) -
                              m(i, j)));
    }
  }
  const std::string tree_text = serialize_tree(doc);
  if (cfg.out_path.empty()) return {tree_text, kOk};

  write_text_file(cfg.out_path, tree_text);
  const Json body{{"output", cfg.out_path},
                  {"nodes", doc.tree.node_count()},
                  {"edges", doc.tree.edge_count()},
                  {"labels", m.labels()},
                  {"max_deviation", deviation}};
  if (json_format(cfg)) return {dump_json(envelope("build", body)), kOk};
  std::ostringstream out;
  out << "wrote " << cfg.out_path << ": " << doc.tree.node_count() << " nodes, "
      << doc.tree.edge_count() << " edges, max deviation "
      << format_number(deviation) << "\n";
  return {out.str(), kOk};
}

Outcome cmd_measure(const RunConfig& cfg) {
  const TreeDocument doc = load_tree(cfg);
  const std::vector<std::string> labels = point_labels(cfg, doc);
  const PointSet set = resolve_points(doc, labels);
  const std::size_t n_max = cfg.n_max > 0 ? cfg.n_max : set.distinct().size();
  const MeasureReport report = measure_report(set, n_max);
  const int code = report.relations_hold ? kOk : kVerdictNo;
  if (json_format(cfg)) {
    return {dump_json(envelope("measure", measure_json(doc, labels, report))), code};
  }
  std::ostringstream out;
  out << "points: " << join(labels) << "\n";
  out << "n  alpha  beta  beta*  alpha=2beta  beta*=2beta\n";
  for (const MeasureRow& r : report.rows) {
    out << r.n << "  " << format_number(r.alpha) << "  " << format_number(r.beta)
        << "  " << format_number(r.beta_star) << "  "
        << (r.alpha_is_twice_beta ? "yes" : "no") << "  "
        << (r.beta_star_is_twice_beta ? "yes" : "no") << "\n";
  }
  out << "relations hold: " << (report.relations_hold ? "yes" : "no") << "\n";
  return {out.str(), code};
}

Outcome cmd_cover(const RunConfig& cfg) {
  if (cfg.radius.has_value() == cfg.diameter.has_value()) {
    throw Error(ErrorCode::kBadParams, "give exactly one of --radius, --diameter");
  }
  const TreeDocument doc = load_tree(cfg);
  const std::vector<std::string> labels = point_labels(cfg, doc);
  const PointSet set = resolve_points(doc, labels);
  std::ostringstream out;
  if (cfg.radius) {
    const BallCover cover = min_ball_cover(set, *cfg.radius);
    if (json_format(cfg)) {
      Json body{{"points", labels}, {"mode", "radius"}};
      body["cover"] = ball_cover_json(doc, labels, cover);
      return {dump_json(envelope("cover", body)), kOk};
    }
    out << "balls of radius " << format_number(cover.radius) << ": "
        << cover.centers.size() << "\n";
    for (std::size_t b = 0; b < cover.centers.size(); ++b) {
      std::vector<std::string> members;
      for (std::size_t i = 0; i < labels.size(); ++i) {
        if (cover.assignment[i] == b) members.push_back(labels[i]);
      }
      out << "  " << text_point(doc, cover.centers[b]) << ": " << join(members) << "\n";
    }
    return {out.str(), kOk};
  }
  const DiameterPartition partition = min_diameter_partition(set, *cfg.diameter);
  if (json_format(cfg)) {
    Json body{{"points", labels}, {"mode", "diameter"}};
    body["partition"] = partition_json(labels, partition);
    return {dump_json(envelope("cover", body)), kOk};
  }
  out << "blocks of diameter <= " << format_number(partition.diameter_bound) << ": "
      << partition.blocks.size() << "\n";
  for (const auto& block : partition.blocks) {
    std::vector<std::string> members;
    for (std::size_t i : block) members.push_back(labels[i]);
    out << "  " << join(members) << "\n";
  }
  return {out.str(), kOk};
}

Outcome cmd_kappa(const RunConfig& cfg) {
  const TreeDocument doc = load_tree(cfg);
  const KappaReport report = kappa_probe(doc.tree, cfg.trials, cfg.seed);
  const int code = report.consistent ? kOk : kVerdictNo;
  if (json_format(cfg)) return {dump_json(envelope("kappa", kappa_json(report))), code};
  std::ostringstream out;
  out << "seed " << report.seed << ", " << report.trials << " trials\n";
  out << "witness trials passed: " << report.witness_passed << "/"
      << report.witness_trials << " (" << report.witness_vacuous << " vacuous)\n";
  out << "counterexamples verified: " << report.counterexample_verified << "/"
      << report.counterexample_trials << " (" << report.counterexample_clamped
      << " clamped)\n";
  out << "consistent with kappa = 2: " << (report.consistent ? "yes" : "no") << "\n";
  return {out.str(), code};
}

Outcome cmd_gallery(const RunConfig& cfg) {
  const TreeDocument doc =
      gallery(cfg.input, {cfg.size, cfg.length}, tolerance_of(cfg));
  const std::string tree_text = serialize_tree(doc);
  if (cfg.out_path.empty()) return {tree_text, kOk};
  write_text_file(cfg.out_path, tree_text);
  const Json body{{"name", cfg.input},
                  {"output", cfg.out_path},
                  {"nodes", doc.tree.node_count()},
                  {"edges", doc.tree.edge_count()},
                  {"points", doc.points.size()}};
  if (json_format(cfg)) return {dump_json(envelope("gallery", body)), kOk};
  return {"wrote " + cfg.out_path + "\n", kOk};
}

int exit_code_for(ErrorCode code) {
  switch (code) {
    case ErrorCode::kNotTreeMetric:
    case ErrorCode::kNotAMetric:
      return kVerdictNo;
    default:
      return kFailure;
  }
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  RunConfig cfg;
  CLI::App app{"Geometry and covering profiles of finite metric trees", "mtree"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--tol", cfg.tol, "Absolute and relative tolerance (default 1e-9)");
  app.add_option("--format", cfg.format, "Report format")
      ->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", cfg.out_path, "Write the result to this file");

  auto* check = app.add_subcommand("check", "Test a distance matrix for the four-point condition");
  check->add_option("matrix", cfg.input, "Matrix file (CSV or lower triangle)")->required();

  auto* build = app.add_subcommand("build", "Reconstruct a tree from a distance matrix");
  build->add_option("matrix", cfg.input, "Matrix file")->required();

  auto* measure = app.add_subcommand("measure", "Covering profiles of named points");
  measure->add_option("tree", cfg.input, "Tree file")->required();
  measure->add_option("--points", cfg.points, "Point names (comma separated)");
  measure->add_option("--n", cfg.n_max, "Largest n (default: number of distinct points)");

  auto* cover = app.add_subcommand("cover", "Minimum ball cover or diameter partition");
  cover->add_option("tree", cfg.input, "Tree file")->required();
  cover->add_option("--points", cfg.points, "Point names (comma separated)");
  cover->add_option("--radius", cfg.radius, "Ball radius");
  cover->add_option("--diameter", cfg.diameter, "Block diameter bound");

  auto* kappa = app.add_subcommand("kappa", "Randomized Lifschitz characteristic probe");
  kappa->add_option("tree", cfg.input, "Tree file")->required();
  kappa->add_option("--trials", cfg.trials, "Number of trials");
  kappa->add_option("--seed", cfg.seed, "Random seed");

  auto* gal = app.add_subcommand("gallery", "Write a named example tree");
  gal->add_option("name", cfg.input, "simple, star, comb_compact or comb_noncompact")
      ->required();
  gal->add_option("--size", cfg.size, "Spokes or teeth");
  gal->add_option("--length", cfg.length, "Spoke length (star)");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    std::ostringstream help_out, help_err;
    const int code = app.exit(e, help_out, help_err);
    out << help_out.str();
    err << help_err.str();
    return code == 0 ? kOk : kFailure;
  }

  try {
    Outcome outcome;
    if (*check) {
      outcome = cmd_check(cfg);
    } else if (*build) {
      outcome = cmd_build(cfg);
    } else if (*measure) {
      outcome = cmd_measure(cfg);
    } else if (*cover) {
      outcome = cmd_cover(cfg);
    } else if (*kappa) {
      outcome = cmd_kappa(cfg);
    } else {
      outcome = cmd_gallery(cfg);
    }
    const bool writes_artifact = *build || *gal;
    if (!writes_artifact && !cfg.out_path.empty()) {
      write_text_file(cfg.out_path, outcome.text);
    } else {
      out << outcome.text;
    }
    return outcome.code;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code_for(e.code());
  }
}

}  // namespace mtree::cli
