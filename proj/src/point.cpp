#include "nonconvex/point.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

namespace nonconvex {

Point& Point::operator+=(const Point& o) {
  if (o.dim() != dim()) throw DimensionMismatch("point dimensions differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

Point& Point::operator-=(const Point& o) {
  if (o.dim() != dim()) throw DimensionMismatch("point dimensions differ");
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

Point& Point::operator*=(const Scalar& s) {
  for (auto& x : c_) x *= s;
  return *this;
}

Point& Point::operator/=(const Scalar& s) {
  if (sgn(s) == 0) throw GeometryError("division by zero");
  for (auto& x : c_) x /= s;
  return *this;
}

bool operator<(const Point& a, const Point& b) {
  std::size_t n = std::min(a.dim(), b.dim());
  for (std::size_t i = 0; i < n; ++i) {
    int c = cmp(a.c_[i], b.c_[i]);
    if (c) return c < 0;
  }
  return a.dim() < b.dim();
}

Scalar dot(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("point dimensions differ");
  Scalar s = 0;
  for (std::size_t i = 0; i < a.dim(); ++i) s += a[i] * b[i];
  return s;
}

Scalar norm2(const Point& a) { return dot(a, a); }

Scalar dist2(const Point& a, const Point& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("point dimensions differ");
  Scalar s = 0, t;
  for (std::size_t i = 0; i < a.dim(); ++i) {
    t = a[i] - b[i];
    s += t * t;
  }
  return s;
}

double norm(const Point& a) { return std::sqrt(norm2(a).get_d()); }
double dist(const Point& a, const Point& b) { return std::sqrt(dist2(a, b).get_d()); }

std::vector<double> to_doubles(const Point& p) {
  std::vector<double> r(p.dim());
  for (std::size_t i = 0; i < p.dim(); ++i) r[i] = p[i].get_d();
  return r;
}

Point from_doubles(const std::vector<double>& xs) {
  Point p(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) p[i] = from_double_exact(xs[i]);
  return p;
}

Point zero_point(std::size_t dim) { return Point(dim); }

Point unit_point(std::size_t dim, std::size_t i) {
  Point p(dim);
  p[i] = 1;
  return p;
}

std::string to_string(const Point& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? ", " : "") << p[i].get_str();
  os << ')';
  return os.str();
}

PointSet::PointSet(std::size_t dim, std::vector<Point> pts) : dim_(dim), pts_(std::move(pts)) {
  if (dim_ == 0) throw GeometryError("point set dimension must be positive");
  if (pts_.empty()) throw GeometryError("point set must be nonempty");
  for (const auto& p : pts_)
    if (p.dim() != dim_) throw DimensionMismatch("point of dimension " + std::to_string(p.dim()) + " in set of dimension " + std::to_string(dim_));
  std::sort(pts_.begin(), pts_.end());
  pts_.erase(std::unique(pts_.begin(), pts_.end()), pts_.end());
}

namespace {
std::size_t first_dim(const std::vector<Point>& pts) { return pts.empty() ? 0 : pts.front().dim(); }
}  // namespace

PointSet::PointSet(std::vector<Point> pts) : PointSet(first_dim(pts), std::vector<Point>(pts)) {}

bool PointSet::contains(const Point& p) const { return std::binary_search(pts_.begin(), pts_.end(), p); }

PointSet PointSet::translated(const Point& t) const {
  std::vector<Point> r;
  r.reserve(size());
  for (const auto& p : pts_) r.push_back(p + t);
  return PointSet(dim_, std::move(r));
}

PointSet PointSet::scaled(const Scalar& s) const {
  std::vector<Point> r;
  r.reserve(size());
  for (const auto& p : pts_) r.push_back(p * s);
  return PointSet(dim_, std::move(r));
}

PointSet PointSet::transformed(const std::vector<std::vector<Scalar>>& m, const Point& t) const {
  std::size_t out = m.size();
  if (t.dim() != out) throw DimensionMismatch("translation dimension");
  std::vector<Point> r;
  r.reserve(size());
  for (const auto& p : pts_) {
    Point q(out);
    for (std::size_t i = 0; i < out; ++i) {
      if (m[i].size() != dim_) throw DimensionMismatch("matrix width");
      for (std::size_t j = 0; j < dim_; ++j) q[i] += m[i][j] * p[j];
      q[i] += t[i];
    }
    r.push_back(std::move(q));
  }
  return PointSet(out, std::move(r));
}

PointSet PointSet::united(const PointSet& other) const {
  if (other.dim_ != dim_) throw DimensionMismatch("point set dimensions differ");
  std::vector<Point> r = pts_;
  r.insert(r.end(), other.pts_.begin(), other.pts_.end());
  return PointSet(dim_, std::move(r));
}

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("minkowski_sum: dimensions differ");
  std::vector<Point> r;
  r.reserve(a.size() * b.size());
  for (const auto& p : a)
    for (const auto& q : b) r.push_back(p + q);
  return PointSet(a.dim(), std::move(r));
}

double multiset_count(std::size_t m, unsigned k) {
  double c = 1;
  for (unsigned i = 1; i <= k; ++i) c = c * double(m + i - 1) / double(i);
  return c;
}

PointSet average_set(const PointSet& a, unsigned k, std::size_t cap) {
  if (k == 0) throw GeometryError("average_set: k must be positive");
  if (k == 1) return a;
  double estimate = multiset_count(a.size(), k);
  auto fail = [&](std::size_t reached) {
    std::ostringstream os;
    os << "average_set: cardinality cap " << cap << " exceeded at k=" << k << " (reached " << reached
       << ", binomial-growth estimate C(" << a.size() << "+" << k << "-1," << k << ") = " << estimate << ")";
    throw BudgetExceeded(os.str());
  };
  PointSet s = a;
  for (unsigned j = 2; j <= k; ++j) {
    if (double(s.size()) * double(a.size()) > 8.0 * double(cap)) fail(s.size() * a.size());
    s = minkowski_sum(s, a);
    if (s.size() > cap) fail(s.size());
  }
  return s.scaled(frac(1, k));
}

Point centroid(const std::vector<Point>& pts) {
  if (pts.empty()) throw GeometryError("centroid of empty set");
  Point c(pts.front().dim());
  for (const auto& p : pts) c += p;
  return c / Scalar(static_cast<long>(pts.size()));
}

Scalar diam2(const PointSet& a) {
  Scalar best = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      Scalar d = dist2(a[i], a[j]);
      if (d > best) best = d;
    }
  return best;
}

double diam(const PointSet& a) { return std::sqrt(diam2(a).get_d()); }

}  // namespace nonconvex
