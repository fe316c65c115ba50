#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "mtree/tree.hpp"

namespace mtree {

/// Final points of a finite tree: its degree-1 nodes (the lone node of a
/// single-node tree).
struct LeafSet {
  std::vector<TreePoint> leaves;
};

LeafSet leaves(const MetricTree& tree);

/// A leaf f with `m` on [base, f]: walk from m directly away from base until
/// a leaf is reached. When m coincides with base the first leaf by index is
/// returned.
TreePoint leaf_witness(const MetricTree& tree, const TreePoint& base,
                       const TreePoint& m);

struct LeafCoverResult {
  bool covered = true;
  std::size_t checked = 0;
  std::optional<TreePoint> counterexample;
};

/// Verifies that every sample lies on [base, f] for the leaf found by
/// leaf_witness.
LeafCoverResult leaf_cover_check(const MetricTree& tree, const TreePoint& base,
                                 std::span<const TreePoint> samples);

/// z is the point of [x,y] at distance epsilon * radius from x; the claim
/// is B_c(x; a r) ∩ B_c(y; b r) ⊆ B_c(z; r) with a = 1 + epsilon and
/// b = 2 - 2 epsilon.
struct LifschitzWitness {
  TreePoint x;
  TreePoint y;
  TreePoint z;
  double radius = 0.0;
  double epsilon = 0.0;
  double a = 0.0;
  double b = 0.0;
};

struct WitnessVerdict {
  LifschitzWitness witness;
  std::size_t tested = 0;
  /// Test points inside both outer balls.
  std::size_t in_intersection = 0;
  /// Indices of test points inside both outer balls but outside B_c(z; r).
  std::vector<std::size_t> failures;
  bool passed = true;
};

/// Throws kPreconditionViolation unless radius > 0, d(x,y) > radius and
/// 0 < epsilon < 1.
WitnessVerdict lifschitz_witness(const MetricTree& tree, const TreePoint& x,
                                 const TreePoint& y, double radius,
                                 double epsilon,
                                 std::span<const TreePoint> tests);

/// The obstruction for b = 2: with d(w,v) = 4r, y the midpoint of [w,v],
/// x on [y,v] with r < d(y,x) < min(a,2) r and u on [w,x] with d(u,x) = a r
/// (or u = w when [w,x] is shorter than a r), the segment [u,v] lies in
/// B_c(x; a r) ∩ B_c(y; 2r) yet has diameter > 2r, so no B_c(z; r) holds it.
struct LifschitzCounterexample {
  MetricTree tree;
  TreePoint w;
  TreePoint v;
  TreePoint y;
  TreePoint x;
  TreePoint u;
  double radius = 0.0;
  double a = 0.0;
  /// d(y, x).
  double offset = 0.0;
  bool clamped = false;
  double segment_diameter = 0.0;
  std::size_t samples = 0;
  std::size_t centers_tried = 0;
  bool inside_both_balls = false;
  bool diameter_exceeds = false;
  bool no_center_contains = false;
  bool verified = false;
};

/// Builds the construction on a path of length 4r. Throws kBadParams unless
/// r > 0 and a > 1.
LifschitzCounterexample lifschitz_counterexample(double radius, double a,
                                                 std::size_t samples = 64);

/// Same construction inside `tree` on the segment [w,v], with r = d(w,v)/4.
LifschitzCounterexample lifschitz_counterexample(const MetricTree& tree,
                                                 const TreePoint& w,
                                                 const TreePoint& v, double a,
                                                 std::size_t samples = 64);

struct KappaReport {
  std::uint64_t seed = 0;
  std::size_t trials = 0;
  std::size_t witness_trials = 0;
  std::size_t witness_passed = 0;
  std::size_t witness_vacuous = 0;
  std::size_t points_tested = 0;
  std::size_t points_in_intersection = 0;
  std::size_t counterexample_trials = 0;
  std::size_t counterexample_verified = 0;
  std::size_t counterexample_clamped = 0;
  std::size_t counterexample_vacuous = 0;
  /// Every witness trial passed and every counterexample verified.
  bool consistent = true;
};

/// Randomized check that every b = 2 - 2 epsilon admits a witness and that
/// the b = 2 construction obstructs, on `trials` random configurations.
/// Throws kBadParams when trials == 0.
KappaReport kappa_probe(const MetricTree& tree, std::size_t trials,
                        std::uint64_t seed);

}  // namespace mtree
