#pragma once

#include <span>
#include <string>

#include <json.hpp>

#include "mtree/covering.hpp"
#include "mtree/distance_matrix.hpp"
#include "mtree/document.hpp"
#include "mtree/noncompactness.hpp"
#include "mtree/structure.hpp"

namespace mtree {

using Json = nlohmann::ordered_json;

inline constexpr int kReportSchema = 1;

/// {"node": name} or {"edge": {"u": name, "v": name}, "offset": t}.
/// Node names default to decimal ids when `node_names` is empty.
Json point_json(const MetricTree& tree, std::span<const std::string> node_names,
                const TreePoint& p);
Json point_json(const TreeDocument& doc, const TreePoint& p);

/// [{"n": 1, "value": v1}, ...]
Json profile_json(const CoverProfile& profile);

Json measure_json(const TreeDocument& doc, std::span<const std::string> labels,
                  const MeasureReport& report);
Json ball_cover_json(const TreeDocument& doc,
                     std::span<const std::string> labels,
                     const BallCover& cover);
Json partition_json(std::span<const std::string> labels,
                    const DiameterPartition& partition);
Json witness_json(const MetricTree& tree,
                  std::span<const std::string> node_names,
                  const WitnessVerdict& verdict);
Json counterexample_json(const LifschitzCounterexample& ce);
Json kappa_json(const KappaReport& report);
Json four_point_json(const DistanceMatrix& m, const FourPointResult& result);
Json error_json(const Error& error);

/// Adds the schema field and the command name in front of `body`.
Json envelope(const std::string& command, const Json& body);

/// Pretty-printed with a trailing newline.
std::string dump_json(const Json& j);

}  // namespace mtree
