#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "mtree/document.hpp"

namespace mtree {

struct GalleryParams {
  std::size_t size = 3;
  double length = 1.0;
};

/// Named example trees.
///
/// - `simple`: segment A(-1,0)..B(1,0) with C(1,1) and D(1,-1) hanging off B.
///   Named points A, B, C, D.
/// - `star`: node `hub` with `size` spokes of length `length` ending in
///   t1..tn (finite piece of the radial metric). Named points t1..tn.
/// - `comb_compact`: spine [0,1] from node `origin` through s_k at x = 1/k,
///   with a tooth of length 1/k from s_k to t_k. Named points t1..tn.
/// - `comb_noncompact`: same spine, every tooth of length 1.
///
/// Throws kUnknownGallery or kBadParams.
TreeDocument gallery(std::string_view name, const GalleryParams& params = {},
                     Tolerance tol = {});

std::vector<std::string_view> gallery_names();

}  // namespace mtree
