#pragma once

#include <optional>
#include <vector>

#include "nonconvex/point.hpp"

namespace nonconvex {

// Convex polygon in the plane, vertices counter-clockwise without collinear
// repeats; 1 or 2 vertices for degenerate pieces.
struct Polygon {
  std::vector<Point> v;
  bool full() const { return v.size() >= 3; }
};

Polygon convex_polygon(std::vector<Point> pts);
Polygon minkowski_sum(const Polygon& a, const Polygon& b);
Polygon scaled(const Polygon& p, const Scalar& s);
Polygon translated(const Polygon& p, const Point& t);
Scalar area(const Polygon& p);
bool contains(const Polygon& p, const Point& x);

struct Cover {
  bool covered = false;
  std::optional<Point> witness;  // uncovered point of the target
};

// Is target contained in the union of the pieces? Exact slab decomposition.
Cover covers_exact(const Polygon& target, const std::vector<Polygon>& pieces);
// Floating slab test; a reported witness is re-checked exactly before it is trusted.
Cover covers_float(const Polygon& target, const std::vector<Polygon>& pieces);
bool in_union(const Point& x, const std::vector<Polygon>& pieces);
// Exact area of the union of convex polygons.
Scalar union_area(const std::vector<Polygon>& pieces);

}  // namespace nonconvex
