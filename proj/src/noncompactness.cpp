#include "mtree/noncompactness.hpp"

#include <string>

namespace mtree {

MeasureReport measure_report(const PointSet& set, std::size_t n_max) {
  MeasureReport report;
  report.alpha = alpha_profile(set, n_max);
  report.beta = beta_profile(set, n_max);
  const Tolerance& tol = set.tree().tolerance();
  for (std::size_t n = 1; n <= n_max; ++n) {
    report.ball_witnesses.push_back(optimal_ball_cover(set, n));
    report.partition_witnesses.push_back(optimal_partition(set, n));
    report.diameter_ball_witnesses.push_back(optimal_diameter_ball_cover(set, n));
    report.beta_star.values.push_back(
        report.diameter_ball_witnesses.back().diameter_bound);

    MeasureRow row;
    row.n = n;
    row.alpha = report.alpha.at(n);
    row.beta = report.beta.at(n);
    row.beta_star = report.beta_star.at(n);
    if (row.beta > 0.0) row.alpha_over_beta = row.alpha / row.beta;
    row.alpha_is_twice_beta = tol.equal(row.alpha, 2.0 * row.beta);
    row.beta_star_is_twice_beta = tol.equal(row.beta_star, 2.0 * row.beta);
    report.relations_hold = report.relations_hold && row.alpha_is_twice_beta &&
                            row.beta_star_is_twice_beta;
    report.rows.push_back(row);
  }
  return report;
}

EmbeddingReport embedding_invariance_check(const PointSet& set,
                                           const MetricTree& host,
                                           std::span<const TreePoint> images,
                                           std::size_t n_max) {
  if (images.size() != set.size()) {
    throw Error(ErrorCode::kBadParams, "need one image per point");
  }
  const MetricTree& source = set.tree();
  const Tolerance& tol = source.tolerance();
  for (std::size_t i = 0; i < set.size(); ++i) {
    host.check(images[i]);
    for (std::size_t j = i + 1; j < set.size(); ++j) {
      const double before = source.distance(set[i], set[j]);
      const double after = host.distance(images[i], images[j]);
      if (!tol.equal(before, after)) {
        throw Error(ErrorCode::kNotIsometric,
                    "distance between points " + std::to_string(i) + " and " +
                        std::to_string(j) + " changes from " +
                        std::to_string(before) + " to " + std::to_string(after),
                    {i, j});
      }
    }
  }
  const PointSet embedded(host, std::vector<TreePoint>(images.begin(), images.end()));
  const CoverProfile alpha_s = alpha_profile(set, n_max);
  const CoverProfile alpha_h = alpha_profile(embedded, n_max);
  const CoverProfile beta_s = beta_profile(set, n_max);
  const CoverProfile beta_h = beta_profile(embedded, n_max);

  EmbeddingReport report;
  for (std::size_t n = 1; n <= n_max; ++n) {
    EmbeddingRow row;
    row.n = n;
    row.alpha_source = alpha_s.at(n);
    row.alpha_host = alpha_h.at(n);
    row.beta_source = beta_s.at(n);
    row.beta_host = beta_h.at(n);
    row.alpha_equal = tol.equal(row.alpha_source, row.alpha_host);
    row.beta_equal = tol.equal(row.beta_source, row.beta_host);
    report.invariant = report.invariant && row.alpha_equal && row.beta_equal;
    report.rows.push_back(row);
  }
  return report;
}

PointMap::PointMap(MetricTree source, MetricTree target,
                   std::vector<std::pair<TreePoint, TreePoint>> pairs)
    : source_(std::move(source)), target_(std::move(target)),
      pairs_(std::move(pairs)) {
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    source_.check(pairs_[i].first);
    target_.check(pairs_[i].second);
    for (std::size_t j = 0; j < i; ++j) {
      if (source_.coincide(pairs_[i].first, pairs_[j].first)) {
        throw Error(ErrorCode::kDuplicatePoint,
                    "samples " + std::to_string(j) + " and " +
                        std::to_string(i) + " share a source point",
                    {j, i});
      }
    }
  }
}

PointSet PointMap::domain(std::span<const std::size_t> indices) const {
  std::vector<TreePoint> points;
  for (std::size_t i : indices) {
    if (i >= pairs_.size()) {
      throw Error(ErrorCode::kParameterOutOfRange,
                  "sample index " + std::to_string(i));
    }
    points.push_back(pairs_[i].first);
  }
  return PointSet(source_, std::move(points));
}

PointSet PointMap::image(std::span<const std::size_t> indices) const {
  std::vector<TreePoint> points;
  for (std::size_t i : indices) {
    if (i >= pairs_.size()) {
      throw Error(ErrorCode::kParameterOutOfRange,
                  "sample index " + std::to_string(i));
    }
    points.push_back(pairs_[i].second);
  }
  return PointSet(target_, std::move(points));
}

ContractionReport contraction_constants(const PointMap& map,
                                        std::span<const std::size_t> subset,
                                        std::size_t n_max) {
  if (subset.empty()) throw Error(ErrorCode::kEmptySet, "subset is empty");
  const PointSet domain = map.domain(subset);
  const PointSet image = map.image(subset);
  const CoverProfile alpha_d = alpha_profile(domain, n_max);
  const CoverProfile alpha_i = alpha_profile(image, n_max);
  const CoverProfile beta_d = beta_profile(domain, n_max);
  const CoverProfile beta_i = beta_profile(image, n_max);
  const Tolerance& tol = map.source().tolerance();

  ContractionReport report;
  for (std::size_t n = 1; n <= n_max; ++n) {
    ContractionRow row;
    row.n = n;
    row.alpha_domain = alpha_d.at(n);
    row.alpha_image = alpha_i.at(n);
    row.beta_domain = beta_d.at(n);
    row.beta_image = beta_i.at(n);
    if (row.alpha_domain <= tol.abs_eps) {
      report.skipped.push_back(n);
    } else {
      row.set_ratio = row.alpha_image / row.alpha_domain;
      row.ball_ratio = row.beta_image / row.beta_domain;
      row.ratios_equal = tol.equal(*row.set_ratio, *row.ball_ratio);
      report.ratios_agree = report.ratios_agree && row.ratios_equal;
    }
    report.rows.push_back(row);
  }
  return report;
}

CrossBoundReport cross_measure_bound_check(
    const PointMap& map, std::span<const std::vector<std::size_t>> samples,
    std::size_t n_max) {
  const Tolerance& tol = map.source().tolerance();
  CrossBoundReport report;
  for (std::size_t s = 0; s < samples.size(); ++s) {
    const ContractionReport c = contraction_constants(map, samples[s], n_max);
    for (const ContractionRow& r : c.rows) {
      if (!r.set_ratio) continue;
      CrossBoundRow row;
      row.sample = s;
      row.n = r.n;
      row.set_ratio = *r.set_ratio;
      row.ball_ratio = *r.ball_ratio;
      row.ball_within_twice_set = tol.less_equal(row.ball_ratio, 2.0 * row.set_ratio);
      row.set_within_twice_ball = tol.less_equal(row.set_ratio, 2.0 * row.ball_ratio);
      report.holds = report.holds && row.ball_within_twice_set &&
                     row.set_within_twice_ball;
      report.rows.push_back(row);
    }
  }
  return report;
}

}  // namespace mtree
