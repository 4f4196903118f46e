#include "nonconvex/combination.hpp"

namespace nonconvex {

Point ConvexCombination::barycenter() const {
  if (points.empty()) throw GeometryError("empty combination");
  Point b(points[0].dim());
  for (std::size_t i = 0; i < points.size(); ++i) b += points[i] * weights[i];
  return b;
}

void ConvexCombination::validate() const {
  if (points.size() != weights.size()) throw GeometryError("combination: points/weights length differ");
  if (points.empty()) throw GeometryError("combination: empty");
  Scalar s = 0;
  for (const auto& w : weights) {
    if (sgn(w) <= 0) throw GeometryError("combination: nonpositive weight");
    s += w;
  }
  if (s != 1) throw GeometryError("combination: weights sum to " + s.get_str());
}

Scalar ConvexCombination::second_moment() const {
  Scalar s = 0;
  for (std::size_t i = 0; i < points.size(); ++i) s += weights[i] * norm2(points[i]);
  return s;
}

HullMembership in_hull(const Point& x, const std::vector<Point>& pts) {
  if (pts.empty()) return {};
  std::size_t n = x.dim(), m = pts.size();
  for (const auto& p : pts)
    if (p.dim() != n) throw DimensionMismatch("in_hull: dimensions differ");
  LinearProgram lp;
  lp.objective.assign(m, 0);
  for (std::size_t r = 0; r < n; ++r) {
    Vector row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = pts[j][r];
    lp.add(std::move(row), Relation::Eq, x[r]);
  }
  lp.add(Vector(m, 1), Relation::Eq, 1);
  auto res = solve(lp);
  HullMembership h;
  if (!res.optimal()) return h;
  h.feasible = true;
  ConvexCombination c;
  for (std::size_t j = 0; j < m; ++j)
    if (sgn(res.x[j]) > 0) {
      c.points.push_back(pts[j]);
      c.weights.push_back(res.x[j]);
    }
  h.witness = std::move(c);
  return h;
}

HullMembership in_hull(const Point& x, const PointSet& a) { return in_hull(x, a.points()); }

Vector cone_reduce(const std::vector<Vector>& z, Vector mu, const Vector* quadratic) {
  if (z.size() != mu.size()) throw GeometryError("cone_reduce: length mismatch");
  if (z.empty()) return mu;
  std::size_t rows = z[0].size();
  for (;;) {
    std::vector<std::size_t> support;
    for (std::size_t j = 0; j < mu.size(); ++j)
      if (sgn(mu[j]) > 0) support.push_back(j);
    if (support.size() <= 1) return mu;
    Matrix m(rows, Vector(support.size()));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < support.size(); ++c) m[r][c] = z[support[c]][r];
    auto kernel = nullspace(m, support.size());
    if (kernel.empty()) return mu;
    Vector nu = kernel[0];
    bool flip = false;
    bool has_pos = false, has_neg = false;
    for (const auto& v : nu) {
      if (sgn(v) > 0) has_pos = true;
      if (sgn(v) < 0) has_neg = true;
    }
    if (quadratic) {
      Scalar s = 0;
      for (std::size_t c = 0; c < support.size(); ++c) s += nu[c] * (*quadratic)[support[c]];
      if (sgn(s) < 0) flip = true;
      else if (sgn(s) == 0 && !has_pos) flip = true;
    } else if (!has_pos) {
      flip = true;
    }
    if (flip) {
      for (auto& v : nu) v = -v;
      std::swap(has_pos, has_neg);
    }
    if (!has_pos) throw GeometryError("cone_reduce: kernel direction without positive entry");
    std::size_t arg = support.size();
    Scalar theta;
    for (std::size_t c = 0; c < support.size(); ++c) {
      if (sgn(nu[c]) <= 0) continue;
      Scalar t = mu[support[c]] / nu[c];
      if (arg == support.size() || t < theta) {
        theta = t;
        arg = c;
      }
    }
    for (std::size_t c = 0; c < support.size(); ++c) mu[support[c]] -= theta * nu[c];
    mu[support[arg]] = 0;
  }
}

namespace {

ConvexCombination reduce(const ConvexCombination& c, bool quadratic) {
  c.validate();
  std::size_t n = c.points[0].dim();
  std::vector<Vector> z;
  Vector q;
  for (const auto& p : c.points) {
    Vector v = p.coords();
    v.push_back(1);
    z.push_back(std::move(v));
    q.push_back(norm2(p));
  }
  (void)n;
  Vector w = cone_reduce(z, c.weights, quadratic ? &q : nullptr);
  ConvexCombination r;
  for (std::size_t j = 0; j < w.size(); ++j)
    if (sgn(w[j]) > 0) {
      r.points.push_back(c.points[j]);
      r.weights.push_back(w[j]);
    }
  return r;
}

}  // namespace

ConvexCombination caratheodory_reduce(const ConvexCombination& c) { return reduce(c, false); }
ConvexCombination caratheodory_reduce_quadratic(const ConvexCombination& c) { return reduce(c, true); }

}  // namespace nonconvex
