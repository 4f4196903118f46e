#pragma once

#include <vector>

#include "nonconvex/gauge.hpp"

namespace nonconvex {

struct BalanceResult {
  std::vector<int> signs;   // entries in {-1, +1}
  Point sum;                // sum of signs[i] * x[i], exact
  double achieved = 0;      // ||sum||_K
  double max_norm = 0;      // max_i ||x_i||_K
  double general_bound = 0;    // n * max_norm
  double euclidean_bound = 0;  // sqrt(n) * max |x_i|, Euclidean gauges only
  bool general_ok = false;
  bool euclidean_ok = true;
  bool greedy = false;         // finishing by local search instead of enumeration
  std::size_t fractional_left = 0;  // coordinates settled by the finishing step
};

// Rounds the fractional solution t = 0 of sum t_i x_i = 0 to signs, then
// enumerates the remaining (at most n) fractional coordinates.
BalanceResult balance_signs(const std::vector<Point>& x, const Gauge& k);

// Exact norm comparisons: squared length for Euclidean gauges, gauge value otherwise.
Scalar gauge_key(const Gauge& k, const Point& x);

}  // namespace nonconvex
