#pragma once

#include <vector>

#include "nonconvex/point.hpp"

namespace nonconvex {

struct Box {
  Point lo, hi;

  std::size_t dim() const { return lo.dim(); }
  Scalar volume() const;
  bool degenerate() const;
  bool contains(const Point& p) const;
  bool contains(const Box& b) const;

  friend bool operator==(const Box& a, const Box& b) { return a.lo == b.lo && a.hi == b.hi; }
  friend bool operator<(const Box& a, const Box& b) { return a.lo < b.lo || (a.lo == b.lo && a.hi < b.hi); }
};

class BoxUnion {
 public:
  BoxUnion() = default;
  BoxUnion(std::size_t dim, std::vector<Box> boxes);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return boxes_.size(); }
  const std::vector<Box>& boxes() const { return boxes_; }
  const Box& operator[](std::size_t i) const { return boxes_[i]; }

  bool contains(const Point& p) const;
  BoxUnion scaled(const Scalar& s) const;
  BoxUnion translated(const Point& t) const;
  // Drops boxes contained in another box of the union.
  BoxUnion simplified() const;
  bool convex_box() const;

  friend bool operator==(const BoxUnion& a, const BoxUnion& b) { return a.dim_ == b.dim_ && a.boxes_ == b.boxes_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Box> boxes_;
};

Box make_box(const Point& lo, const Point& hi);
BoxUnion single_box(const Point& lo, const Point& hi);
BoxUnion points_as_boxes(const PointSet& a);

BoxUnion minkowski_sum(const BoxUnion& a, const BoxUnion& b);
BoxUnion average_set(const BoxUnion& a, unsigned k, std::size_t cap = 1000000);
Scalar volume(const BoxUnion& u);
PointSet corner_points(const BoxUnion& u);
// Box union in dimension n-1 obtained by deleting coordinate axis.
BoxUnion drop_axis(const BoxUnion& u, std::size_t axis);

}  // namespace nonconvex
