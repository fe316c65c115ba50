#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "mtree/covering.hpp"

namespace mtree {

struct MeasureRow {
  std::size_t n = 0;
  double alpha = 0.0;
  double beta = 0.0;
  double beta_star = 0.0;
  /// alpha / beta; absent when beta is 0.
  std::optional<double> alpha_over_beta;
  bool alpha_is_twice_beta = false;
  bool beta_star_is_twice_beta = false;
};

/// All three covering profiles of one set, the relations between them, and
/// an optimal witness for each n.
struct MeasureReport {
  CoverProfile alpha;
  CoverProfile beta;
  CoverProfile beta_star;
  std::vector<MeasureRow> rows;
  std::vector<BallCover> ball_witnesses;
  std::vector<DiameterPartition> partition_witnesses;
  std::vector<DiameterBallCover> diameter_ball_witnesses;
  bool relations_hold = true;
};

/// Throws kEmptySet.
MeasureReport measure_report(const PointSet& set, std::size_t n_max);

struct EmbeddingRow {
  std::size_t n = 0;
  double alpha_source = 0.0;
  double alpha_host = 0.0;
  double beta_source = 0.0;
  double beta_host = 0.0;
  bool alpha_equal = false;
  bool beta_equal = false;
};

struct EmbeddingReport {
  std::vector<EmbeddingRow> rows;
  bool invariant = true;
};

/// Recomputes the profiles of `set` after mapping point i to `images[i]` in
/// `host`. Throws kNotIsometric (with the violating pair) unless the map
/// preserves every pairwise distance.
EmbeddingReport embedding_invariance_check(const PointSet& set,
                                           const MetricTree& host,
                                           std::span<const TreePoint> images,
                                           std::size_t n_max);

/// A map between two trees known only on a finite sample of its domain.
class PointMap {
 public:
  /// Throws kForeignPoint, or kDuplicatePoint if two sources coincide.
  PointMap(MetricTree source, MetricTree target,
           std::vector<std::pair<TreePoint, TreePoint>> pairs);

  const MetricTree& source() const { return source_; }
  const MetricTree& target() const { return target_; }
  std::span<const std::pair<TreePoint, TreePoint>> pairs() const {
    return pairs_;
  }
  std::size_t size() const { return pairs_.size(); }

  /// The sampled points selected by `indices`, and their images.
  PointSet domain(std::span<const std::size_t> indices) const;
  PointSet image(std::span<const std::size_t> indices) const;

 private:
  MetricTree source_;
  MetricTree target_;
  std::vector<std::pair<TreePoint, TreePoint>> pairs_;
};

struct ContractionRow {
  std::size_t n = 0;
  double alpha_domain = 0.0;
  double alpha_image = 0.0;
  double beta_domain = 0.0;
  double beta_image = 0.0;
  /// Absent when alpha_domain is 0 (the row is skipped).
  std::optional<double> set_ratio;
  std::optional<double> ball_ratio;
  bool ratios_equal = false;
};

struct ContractionReport {
  std::vector<ContractionRow> rows;
  /// n values where alpha_n of the domain subset is 0.
  std::vector<std::size_t> skipped;
  bool ratios_agree = true;
};

/// set_ratio_n = alpha_n(T(A)) / alpha_n(A) and ball_ratio_n =
/// beta_n(T(A)) / beta_n(A) for the subset A given by `subset` (indices
/// into the map's samples). Throws kEmptySet or kParameterOutOfRange.
ContractionReport contraction_constants(const PointMap& map,
                                        std::span<const std::size_t> subset,
                                        std::size_t n_max);

struct CrossBoundRow {
  std::size_t sample = 0;
  std::size_t n = 0;
  double set_ratio = 0.0;
  double ball_ratio = 0.0;
  bool ball_within_twice_set = false;
  bool set_within_twice_ball = false;
};

struct CrossBoundReport {
  std::vector<CrossBoundRow> rows;
  bool holds = true;
};

/// Checks ball_ratio <= 2 set_ratio and set_ratio <= 2 ball_ratio on every
/// non-skipped (sample, n). These are the bounds valid in any metric space;
/// on trees they hold with room to spare.
CrossBoundReport cross_measure_bound_check(
    const PointMap& map, std::span<const std::vector<std::size_t>> samples,
    std::size_t n_max);

}  // namespace mtree
