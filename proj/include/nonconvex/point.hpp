#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

#include "nonconvex/scalar.hpp"

namespace nonconvex {

class Point {
 public:
  Point() = default;
  explicit Point(std::size_t dim) : c_(dim) {}
  Point(std::initializer_list<Scalar> xs) : c_(xs) {}
  explicit Point(std::vector<Scalar> xs) : c_(std::move(xs)) {}

  std::size_t dim() const { return c_.size(); }
  const Scalar& operator[](std::size_t i) const { return c_[i]; }
  Scalar& operator[](std::size_t i) { return c_[i]; }
  const std::vector<Scalar>& coords() const { return c_; }

  Point& operator+=(const Point& o);
  Point& operator-=(const Point& o);
  Point& operator*=(const Scalar& s);
  Point& operator/=(const Scalar& s);

  friend Point operator+(Point a, const Point& b) { return a += b; }
  friend Point operator-(Point a, const Point& b) { return a -= b; }
  friend Point operator-(Point a) { return a *= Scalar(-1); }
  friend Point operator*(Point a, const Scalar& s) { return a *= s; }
  friend Point operator*(const Scalar& s, Point a) { return a *= s; }
  friend Point operator/(Point a, const Scalar& s) { return a /= s; }

  friend bool operator==(const Point& a, const Point& b) { return a.c_ == b.c_; }
  friend bool operator!=(const Point& a, const Point& b) { return !(a == b); }
  friend bool operator<(const Point& a, const Point& b);

 private:
  std::vector<Scalar> c_;
};

Scalar dot(const Point& a, const Point& b);
Scalar norm2(const Point& a);
Scalar dist2(const Point& a, const Point& b);
double norm(const Point& a);
double dist(const Point& a, const Point& b);
std::vector<double> to_doubles(const Point& p);
Point from_doubles(const std::vector<double>& xs);
Point zero_point(std::size_t dim);
Point unit_point(std::size_t dim, std::size_t i);
std::string to_string(const Point& p);

// Sorted, deduplicated, nonempty set of points of a common dimension.
class PointSet {
 public:
  PointSet() = default;
  PointSet(std::size_t dim, std::vector<Point> pts);
  explicit PointSet(std::vector<Point> pts);

  std::size_t dim() const { return dim_; }
  std::size_t size() const { return pts_.size(); }
  bool empty() const { return pts_.empty(); }
  const std::vector<Point>& points() const { return pts_; }
  const Point& operator[](std::size_t i) const { return pts_[i]; }
  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

  bool contains(const Point& p) const;
  PointSet translated(const Point& t) const;
  PointSet scaled(const Scalar& s) const;
  // x -> M x + t, M given row-major.
  PointSet transformed(const std::vector<std::vector<Scalar>>& m, const Point& t) const;
  PointSet united(const PointSet& other) const;

  friend bool operator==(const PointSet& a, const PointSet& b) { return a.dim_ == b.dim_ && a.pts_ == b.pts_; }

 private:
  std::size_t dim_ = 0;
  std::vector<Point> pts_;
};

PointSet minkowski_sum(const PointSet& a, const PointSet& b);
PointSet average_set(const PointSet& a, unsigned k, std::size_t cap = 1000000);
// Number of multisets of size k drawn from m elements, saturating at limit.
double multiset_count(std::size_t m, unsigned k);
Point centroid(const std::vector<Point>& pts);
double diam(const PointSet& a);
Scalar diam2(const PointSet& a);

}  // namespace nonconvex
