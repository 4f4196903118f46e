#pragma once

#include <cstdint>
#include <random>

#include "nonconvex/box_union.hpp"
#include "nonconvex/point.hpp"

namespace nonconvex {

// Seeded generator for reproducible instances; denominators at most max_den.
class Rng {
 public:
  explicit Rng(std::uint64_t seed, long max_den = 64) : eng_(seed), max_den_(max_den) {}

  long integer(long lo, long hi);  // inclusive
  double uniform();                // [0,1)
  Scalar rational(const Scalar& lo, const Scalar& hi);
  Point point(std::size_t dim, const Scalar& lo = 0, const Scalar& hi = 1);
  PointSet point_set(std::size_t dim, std::size_t size, const Scalar& lo = 0, const Scalar& hi = 1);
  // Exact rational point on the unit sphere, by inverse stereographic projection.
  Point unit_vector(std::size_t dim);
  Box box(std::size_t dim, const Scalar& lo = 0, const Scalar& hi = 1);
  BoxUnion box_union(std::size_t dim, std::size_t boxes, const Scalar& lo = 0, const Scalar& hi = 1);
  std::mt19937_64& engine() { return eng_; }

 private:
  std::mt19937_64 eng_;
  long max_den_;
};

}  // namespace nonconvex
