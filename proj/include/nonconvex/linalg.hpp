#pragma once

#include <optional>
#include <vector>

#include "nonconvex/point.hpp"

namespace nonconvex {

using Vector = std::vector<Scalar>;
using Matrix = std::vector<Vector>;

struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon row_reduce(Matrix m, std::size_t cols);
std::size_t rank(const Matrix& m, std::size_t cols);
// Basis of {x : m x = 0}, one vector per free column, in column order.
std::vector<Vector> nullspace(const Matrix& m, std::size_t cols);
std::optional<Vector> solve(const Matrix& a, const Vector& b);
Scalar determinant(Matrix m);
Matrix transpose(const Matrix& m, std::size_t cols);
Matrix multiply(const Matrix& a, const Matrix& b);

// Affine hull of a point list.
struct AffineFrame {
  Point origin;
  std::vector<Point> directions;          // independent, spanning aff - origin
  std::vector<std::size_t> pivot_coords;  // coordinates on which projection is injective
  std::vector<std::size_t> spanning;      // indices of affinely independent points, origin first
  std::size_t dim() const { return directions.size(); }
};

AffineFrame affine_frame(const std::vector<Point>& pts);
bool in_affine_hull(const AffineFrame& f, const Point& x);
Point project_coords(const Point& x, const std::vector<std::size_t>& coords);

// Circumcenter of affinely independent points within their affine hull.
struct Circumsphere {
  Point center;
  Scalar radius2;
  Vector barycentric;  // center = sum barycentric[i] * pts[i]
};
std::optional<Circumsphere> circumsphere(const std::vector<Point>& pts);
// Orthogonal projection onto the affine hull of affinely independent points.
struct Projection {
  Point point;
  Vector barycentric;
};
std::optional<Projection> project_affine(const Point& x, const std::vector<Point>& pts);
// Exact squared distance from x to conv(pts), pts affinely independent.
Scalar dist2_to_simplex(const Point& x, const std::vector<Point>& pts, Point* nearest = nullptr);

}  // namespace nonconvex
