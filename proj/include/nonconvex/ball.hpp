#pragma once

#include <vector>

#include "nonconvex/point.hpp"

namespace nonconvex {

struct Ball {
  std::vector<double> center;
  double radius = 0;
  std::vector<std::size_t> support;
};

// Move-to-front Welzl in floating point.
Ball min_enclosing_ball(const PointSet& a);
Ball min_enclosing_ball(const std::vector<std::vector<double>>& pts);
// Smallest ball with all given points on its boundary and center in their affine hull.
bool circumball(const std::vector<std::vector<double>>& pts, Ball& out);

}  // namespace nonconvex
