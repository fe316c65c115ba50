#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mtree/document.hpp"
#include "mtree/tolerance.hpp"

namespace mtree {

/// Labelled symmetric matrix with zero diagonal and nonnegative entries.
/// Entries symmetric within tolerance are stored averaged.
class DistanceMatrix {
 public:
  /// `entries` is row-major size*size. Throws kInvalidMatrix.
  DistanceMatrix(std::vector<std::string> labels, std::vector<double> entries,
                 Tolerance tol = {});

  std::size_t size() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Tolerance& tolerance() const { return tol_; }
  double operator()(std::size_t i, std::size_t j) const {
    return entries_[i * labels_.size() + j];
  }

 private:
  std::vector<std::string> labels_;
  std::vector<double> entries_;
  Tolerance tol_;
};

/// Pairwise distances of `points` measured in `tree`.
DistanceMatrix distances_between(const MetricTree& tree,
                                 std::span<const NamedPoint> points);

/// Reads either CSV (first row and column hold labels) or a whitespace
/// lower triangle where line i is `label d(i,0) ... d(i,i-1)` with an
/// optional trailing zero diagonal. `#` starts a comment in both forms.
DistanceMatrix parse_distance_matrix(std::string_view text, Tolerance tol = {});
std::string format_distance_matrix_csv(const DistanceMatrix& m);

/// Throws kNotAMetric with the violating triple (i, j, k) where
/// d(i,k) > d(i,j) + d(j,k).
void check_triangle_inequality(const DistanceMatrix& m);

struct FourPointResult {
  bool tree_metric = true;
  /// (i, j, k, l) with d(i,j) + d(k,l) > max(d(i,k) + d(j,l), d(i,l) + d(j,k)).
  std::optional<std::array<std::size_t, 4>> violation;
};

/// Checks the triangle inequality first (throwing kNotAMetric), then the
/// four-point condition over every quadruple.
FourPointResult check_four_point(const DistanceMatrix& m);

/// Additive-tree reconstruction by iterative insertion at Gromov-product
/// split points. Every label becomes a named point on a node; labels at
/// distance zero share a node. Throws kNotAMetric / kNotTreeMetric.
TreeDocument tree_from_distances(const DistanceMatrix& m);

}  // namespace mtree
