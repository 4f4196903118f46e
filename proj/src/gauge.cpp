#include "nonconvex/gauge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <mutex>

#include "nonconvex/lp.hpp"

namespace nonconvex {

Gauge Gauge::euclidean(std::size_t dim, const Scalar& radius) {
  if (sgn(radius) <= 0) throw GeometryError("Euclidean gauge radius must be positive");
  Gauge g;
  g.dim_ = dim;
  g.radius_ = radius;
  g.name_ = "l2";
  return g;
}

Gauge Gauge::polytope(const Polytope& body) {
  if (!body.full_dimensional()) throw GeometryError("gauge body must be full-dimensional");
  for (const auto& f : body.facets())
    if (sgn(f.offset) <= 0) throw GeometryError("gauge body must contain the origin strictly inside");
  Gauge g;
  g.dim_ = body.dim();
  g.body_ = body;
  std::vector<Point> neg;
  for (const auto& v : body.vertices()) neg.push_back(-v);
  Polytope mirrored = convex_hull(neg);
  std::vector<Point> a = body.vertices(), b = mirrored.vertices();
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  g.symmetric_ = a == b;
  g.name_ = "polytope";
  return g;
}

Gauge Gauge::cube(std::size_t dim) {
  std::vector<Point> pts;
  for (std::size_t mask = 0; mask < (std::size_t(1) << dim); ++mask) {
    Point p(dim);
    for (std::size_t i = 0; i < dim; ++i) p[i] = (mask >> i & 1u) ? 1 : -1;
    pts.push_back(p);
  }
  // Built once per dimension; the hull of 2^n corners is the slow part.
  static std::mutex mu;
  static std::map<std::size_t, Gauge> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(dim); it != cache.end()) return it->second;
  Gauge g = polytope(convex_hull(pts));
  g.name_ = "linf";
  g.shape_ = Shape::Cube;
  cache.emplace(dim, g);
  return g;
}

Gauge Gauge::cross_polytope(std::size_t dim) {
  std::vector<Point> pts;
  for (std::size_t i = 0; i < dim; ++i) {
    pts.push_back(unit_point(dim, i));
    pts.push_back(-unit_point(dim, i));
  }
  static std::mutex mu;
  static std::map<std::size_t, Gauge> cache;
  std::lock_guard<std::mutex> lock(mu);
  if (auto it = cache.find(dim); it != cache.end()) return it->second;
  Gauge g = polytope(convex_hull(pts));
  g.name_ = "l1";
  g.shape_ = Shape::Cross;
  cache.emplace(dim, g);
  return g;
}

Gauge Gauge::interval(const Scalar& alpha, const Scalar& beta) {
  if (sgn(alpha) <= 0 || sgn(beta) <= 0) throw GeometryError("interval gauge needs alpha, beta > 0");
  Gauge g = polytope(convex_hull(std::vector<Point>{Point{-alpha}, Point{beta}}));
  g.name_ = "interval";
  return g;
}

Scalar Gauge::norm_exact(const Point& x) const {
  if (!body_) throw GeometryError("norm_exact needs a polytope gauge");
  if (x.dim() != dim_) throw DimensionMismatch("gauge dimension");
  Scalar best = 0;
  if (shape_ == Shape::Cube) {
    for (const auto& c : x.coords()) best = max(best, Scalar(abs(c)));
    return best;
  }
  if (shape_ == Shape::Cross) {
    for (const auto& c : x.coords()) best += abs(c);
    return best;
  }
  for (const auto& f : body_->facets()) {
    Scalar t = dot(f.normal, x) / f.offset;
    if (t > best) best = t;
  }
  return best;
}

double Gauge::norm(const Point& x) const {
  if (!body_) return std::sqrt(norm2(x).get_d()) / radius_.get_d();
  return norm_exact(x).get_d();
}

double Gauge::inner_radius() const {
  if (!body_) return radius_.get_d();
  double r = std::numeric_limits<double>::infinity();
  for (const auto& f : body_->facets()) r = std::min(r, f.offset.get_d() / nonconvex::norm(f.normal));
  return r;
}

double Gauge::outer_radius() const {
  if (!body_) return radius_.get_d();
  double r = 0;
  for (const auto& v : body_->vertices()) r = std::max(r, nonconvex::norm(v));
  return r;
}

double gauge_norm(const Gauge& k, const Point& x) { return k.norm(x); }

double inradius(const Polytope& p) {
  if (!p.full_dimensional()) throw GeometryError("inradius requires a full-dimensional polytope");
  std::size_t n = p.dim();
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.nonnegative = false;
  lp.objective.assign(n + 1, 0);
  lp.objective[n] = 1;
  for (const auto& f : p.facets()) {
    Vector row = f.normal.coords();
    row.push_back(from_double_exact(nonconvex::norm(f.normal)));
    lp.add(std::move(row), Relation::Le, f.offset);
  }
  auto r = solve(lp);
  if (!r.optimal()) throw GeometryError("inradius LP failed");
  return r.value.get_d();
}

}  // namespace nonconvex
