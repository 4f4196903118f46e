#pragma once

#include <optional>
#include <vector>

#include "nonconvex/lp.hpp"

namespace nonconvex {

struct ConvexCombination {
  std::vector<Point> points;
  Vector weights;

  std::size_t size() const { return points.size(); }
  Point barycenter() const;
  // Weights positive and summing to one, exactly; throws otherwise.
  void validate() const;
  Scalar second_moment() const;  // sum w_i |p_i|^2
};

struct HullMembership {
  bool feasible = false;
  std::optional<ConvexCombination> witness;
};

HullMembership in_hull(const Point& x, const std::vector<Point>& pts);
HullMembership in_hull(const Point& x, const PointSet& a);

// Reduces a nonnegative conic combination sum mu_j z_j to linearly independent
// support. Returns the new weights (zeros where dropped). With quadratic q, every
// kernel step keeps sum mu_j q_j from increasing.
Vector cone_reduce(const std::vector<Vector>& z, Vector mu, const Vector* quadratic = nullptr);

ConvexCombination caratheodory_reduce(const ConvexCombination& c);
ConvexCombination caratheodory_reduce_quadratic(const ConvexCombination& c);

}  // namespace nonconvex
