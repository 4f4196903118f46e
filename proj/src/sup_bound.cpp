#include <algorithm>
#include <cmath>
#include <queue>

#include "nonconvex/measures.hpp"

namespace nonconvex {

SupBound lipschitz_sup(const Polytope& hull, const std::function<double(const std::vector<double>&)>& f,
                       double target, double min_cell, std::size_t max_cells, double gap) {
  if (!hull.full_dimensional()) throw GeometryError("lipschitz_sup: hull must be full-dimensional");
  std::size_t n = hull.dim();
  std::vector<std::vector<double>> normals;
  std::vector<double> offsets;
  for (const auto& fc : hull.facets()) {
    normals.push_back(to_doubles(fc.normal));
    offsets.push_back(fc.offset.get_d());
  }
  std::vector<double> lo(n, INFINITY), hi(n, -INFINITY);
  for (const auto& v : hull.vertices())
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = std::min(lo[i], v[i].get_d());
      hi[i] = std::max(hi[i], v[i].get_d());
    }
  struct Cell {
    double bound;
    std::vector<double> lo, hi;
    bool operator<(const Cell& o) const { return bound < o.bound; }
  };
  auto inside = [&](const std::vector<double>& x, double slack) {
    for (std::size_t j = 0; j < normals.size(); ++j) {
      double s = 0, mag = std::fabs(offsets[j]);
      for (std::size_t i = 0; i < n; ++i) {
        s += normals[j][i] * x[i];
        mag += std::fabs(normals[j][i] * x[i]);
      }
      if (s > offsets[j] + slack * (1 + mag)) return false;
    }
    return true;
  };
  auto meets_hull = [&](const std::vector<double>& l, const std::vector<double>& h) {
    for (std::size_t j = 0; j < normals.size(); ++j) {
      double m = 0, mag = std::fabs(offsets[j]);
      for (std::size_t i = 0; i < n; ++i) {
        m += std::min(normals[j][i] * l[i], normals[j][i] * h[i]);
        mag += std::fabs(normals[j][i]) * std::max(std::fabs(l[i]), std::fabs(h[i]));
      }
      if (m > offsets[j] + 1e-12 * (1 + mag)) return false;
    }
    return true;
  };
  SupBound res;
  res.lower = -INFINITY;
  std::priority_queue<Cell> queue;
  auto push = [&](std::vector<double> l, std::vector<double> h) {
    if (!meets_hull(l, h)) return;
    std::vector<double> c(n);
    double diag = 0;
    for (std::size_t i = 0; i < n; ++i) {
      c[i] = (l[i] + h[i]) / 2;
      diag += (h[i] - l[i]) * (h[i] - l[i]);
    }
    double fc = f(c);
    if (inside(c, -1e-12) && fc > res.lower) {
      res.lower = fc;
      res.at = c;
    }
    // Slack covers rounding in f and in the diagonal.
    double bound = fc + std::sqrt(diag) / 2 * (1 + 1e-12) + 1e-9 * (1 + std::fabs(fc));
    queue.push({bound, std::move(l), std::move(h)});
    ++res.cells;
  };
  for (const auto& v : hull.vertices()) {
    auto x = to_doubles(v);
    double fv = f(x);
    if (fv > res.lower) {
      res.lower = fv;
      res.at = x;
    }
  }
  push(lo, hi);
  while (!queue.empty()) {
    const Cell& top = queue.top();
    if (top.bound <= target || top.bound <= res.lower + gap) {
      res.upper = std::max(top.bound, res.lower);
      res.proven = res.upper <= target;
      return res;
    }
    double width = 0;
    std::size_t axis = 0;
    for (std::size_t i = 0; i < n; ++i)
      if (top.hi[i] - top.lo[i] > width) {
        width = top.hi[i] - top.lo[i];
        axis = i;
      }
    if (width < min_cell || res.cells >= max_cells) {
      res.upper = top.bound;
      res.proven = false;
      return res;
    }
    Cell c = top;
    queue.pop();
    double mid = (c.lo[axis] + c.hi[axis]) / 2;
    auto h1 = c.hi;
    h1[axis] = mid;
    auto l2 = c.lo;
    l2[axis] = mid;
    push(c.lo, h1);
    push(l2, c.hi);
  }
  res.upper = std::max(res.lower, 0.0);
  res.proven = res.upper <= target;
  return res;
}

}  // namespace nonconvex
