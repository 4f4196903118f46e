#pragma once

#include <optional>
#include <vector>

#include "nonconvex/combination.hpp"

namespace nonconvex {

// x = sum_i parts[i].barycenter(); parts[i] has one point unless i is in `fractional`.
struct SFDecomposition {
  Point target;
  std::vector<ConvexCombination> parts;
  std::vector<std::size_t> fractional;

  Point reconstruct() const;
  // Exact reconstruction, valid weights, and |I| <= dim.
  bool valid() const;
};

struct SFResult {
  std::optional<SFDecomposition> decomposition;
  // When x lies outside sum conv(A_i): h with <h,x> > sum_i max_{a in A_i} <h,a>.
  std::optional<Point> separator;
  Scalar gap;  // <h,x> - sum of support values, positive on infeasibility
};

SFResult sf_decompose(const std::vector<PointSet>& sets, const Point& x);

}  // namespace nonconvex
