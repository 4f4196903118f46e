#pragma once

#include <vector>

#include "nonconvex/linalg.hpp"

namespace nonconvex {

// <normal, x> <= offset; normal is a primitive integer vector.
struct Facet {
  Point normal;
  Scalar offset;
  friend bool operator==(const Facet& a, const Facet& b) { return a.normal == b.normal && a.offset == b.offset; }
  friend bool operator<(const Facet& a, const Facet& b) {
    return a.normal < b.normal || (a.normal == b.normal && a.offset < b.offset);
  }
};

// Boundary of the hull of points spanning R^m, as oriented simplices.
struct SimplicialHull {
  std::size_t dim = 0;
  std::vector<std::vector<std::size_t>> simplices;  // m point indices each
  std::vector<Facet> planes;                        // one per simplex
};

// Beneath-beyond in exact arithmetic; pts must affinely span R^m.
SimplicialHull simplicial_hull(const std::vector<Point>& pts);

class Polytope {
 public:
  Polytope() = default;

  std::size_t dim() const { return dim_; }
  std::size_t affine_dim() const { return frame_.dim(); }
  bool full_dimensional() const { return affine_dim() == dim_; }
  bool facets_available() const { return facets_available_; }

  const std::vector<Point>& vertices() const { return vertices_; }
  // Facets in ambient coordinates; empty unless full-dimensional.
  const std::vector<Facet>& facets() const { return facets_; }
  // Facets of the relative hull, in the pivot coordinates of frame().
  const std::vector<Facet>& relative_facets() const { return rel_facets_; }
  // Simplices of affine_dim()+1 vertex indices.
  const std::vector<std::vector<std::size_t>>& triangulation() const { return triangulation_; }
  const AffineFrame& frame() const { return frame_; }

  bool contains(const Point& x) const;
  bool interior_contains(const Point& x) const;  // relative interior
  // Relative facets active at x (x assumed inside).
  std::vector<std::size_t> active_facets(const Point& x) const;

  friend Polytope convex_hull(const std::vector<Point>& pts, std::size_t max_facet_dim);

 private:
  std::size_t dim_ = 0;
  AffineFrame frame_;
  std::vector<Point> vertices_;
  std::vector<Facet> facets_;
  std::vector<Facet> rel_facets_;
  std::vector<std::vector<std::size_t>> triangulation_;
  bool facets_available_ = false;
};

Polytope convex_hull(const std::vector<Point>& pts, std::size_t max_facet_dim = 6);
Polytope convex_hull(const PointSet& a, std::size_t max_facet_dim = 6);
// Vertices by per-point LP membership against the others; any dimension.
std::vector<Point> extreme_points_lp(const std::vector<Point>& pts);

Scalar volume(const Polytope& p);
Polytope minkowski_sum(const Polytope& a, const Polytope& b);
Facet primitive_facet(Vector normal, const Scalar& offset_point_dot);

}  // namespace nonconvex
