#pragma once

#include <algorithm>
#include <cmath>

namespace mtree {

/// Every real-valued comparison in the library goes through one of these.
/// The effective bound for a quantity of magnitude s is max(abs, rel * s).
struct Tolerance {
  double abs_eps = 1e-9;
  double rel_eps = 1e-9;

  double bound(double scale) const {
    return std::max(abs_eps, rel_eps * std::fabs(scale));
  }

  bool equal(double a, double b) const {
    return std::fabs(a - b) <= bound(std::max(std::fabs(a), std::fabs(b)));
  }

  bool less_equal(double a, double b) const {
    return a <= b + bound(std::max(std::fabs(a), std::fabs(b)));
  }

  bool valid() const {
    return abs_eps >= 0.0 && rel_eps >= 0.0 && std::isfinite(abs_eps) &&
           std::isfinite(rel_eps);
  }
};

}  // namespace mtree
