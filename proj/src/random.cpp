#include "nonconvex/random.hpp"

namespace nonconvex {

long Rng::integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng_); }

double Rng::uniform() { return std::uniform_real_distribution<double>(0, 1)(eng_); }

Scalar Rng::rational(const Scalar& lo, const Scalar& hi) {
  long den = integer(1, max_den_);
  long num = integer(0, den);
  return lo + (hi - lo) * frac(num, den);
}

Point Rng::point(std::size_t dim, const Scalar& lo, const Scalar& hi) {
  Point p(dim);
  for (std::size_t i = 0; i < dim; ++i) p[i] = rational(lo, hi);
  return p;
}

PointSet Rng::point_set(std::size_t dim, std::size_t size, const Scalar& lo, const Scalar& hi) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < size; ++i) pts.push_back(point(dim, lo, hi));
  return PointSet(dim, std::move(pts));
}

Point Rng::unit_vector(std::size_t dim) {
  if (dim == 1) return Point{Scalar(integer(0, 1) ? 1 : -1)};
  Point u = point(dim - 1, -2, 2);
  Scalar s = norm2(u);
  Point p(dim);
  for (std::size_t i = 0; i + 1 < dim; ++i) p[i] = 2 * u[i] / (s + 1);
  p[dim - 1] = (s - 1) / (s + 1);
  return p;
}

Box Rng::box(std::size_t dim, const Scalar& lo, const Scalar& hi) {
  Box b{Point(dim), Point(dim)};
  for (std::size_t i = 0; i < dim; ++i) {
    Scalar x = rational(lo, hi), y = rational(lo, hi);
    b.lo[i] = min(x, y);
    b.hi[i] = max(x, y);
  }
  return b;
}

BoxUnion Rng::box_union(std::size_t dim, std::size_t boxes, const Scalar& lo, const Scalar& hi) {
  std::vector<Box> bs;
  for (std::size_t i = 0; i < boxes; ++i) bs.push_back(box(dim, lo, hi));
  return BoxUnion(dim, std::move(bs));
}

}  // namespace nonconvex
