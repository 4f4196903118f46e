#include "nonconvex/linalg.hpp"

namespace nonconvex {

Echelon row_reduce(Matrix m, std::size_t cols) {
  Echelon e;
  std::size_t rows = m.size(), r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (sgn(m[i][c]) != 0) {
        piv = i;
        break;
      }
    if (piv == rows) continue;
    std::swap(m[r], m[piv]);
    Scalar inv = 1 / m[r][c];
    for (std::size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m[i][c]) == 0) continue;
      Scalar f = m[i][c];
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m[r][j]) != 0) m[i][j] -= f * m[r][j];
    }
    e.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  e.reduced = std::move(m);
  return e;
}

std::size_t rank(const Matrix& m, std::size_t cols) { return row_reduce(m, cols).pivots.size(); }

std::vector<Vector> nullspace(const Matrix& m, std::size_t cols) {
  Echelon e = row_reduce(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> basis;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector v(cols);
    v[f] = 1;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) v[e.pivots[r]] = -e.reduced[r][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vector> solve(const Matrix& a, const Vector& b) {
  std::size_t rows = a.size();
  if (b.size() != rows) throw DimensionMismatch("solve: rhs length");
  std::size_t cols = rows ? a[0].size() : 0;
  Matrix aug = a;
  for (std::size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  Echelon e = row_reduce(aug, cols + 1);
  if (!e.pivots.empty() && e.pivots.back() == cols) return std::nullopt;
  Vector x(cols);
  for (std::size_t r = 0; r < e.pivots.size(); ++r) x[e.pivots[r]] = e.reduced[r][cols];
  return x;
}

Scalar determinant(Matrix m) {
  std::size_t n = m.size();
  Scalar det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = n;
    for (std::size_t i = c; i < n; ++i)
      if (sgn(m[i][c]) != 0) {
        piv = i;
        break;
      }
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[c], m[piv]);
      det = -det;
    }
    det *= m[c][c];
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m[i][c]) == 0) continue;
      Scalar f = m[i][c] / m[c][c];
      for (std::size_t j = c; j < n; ++j) m[i][j] -= f * m[c][j];
    }
  }
  return det;
}

Matrix transpose(const Matrix& m, std::size_t cols) {
  Matrix t(cols, Vector(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < cols; ++j) t[j][i] = m[i][j];
  return t;
}

Matrix multiply(const Matrix& a, const Matrix& b) {
  std::size_t n = a.size(), k = b.size(), m = k ? b[0].size() : 0;
  Matrix r(n, Vector(m));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t l = 0; l < k; ++l) {
      if (sgn(a[i][l]) == 0) continue;
      for (std::size_t j = 0; j < m; ++j) r[i][j] += a[i][l] * b[l][j];
    }
  return r;
}

AffineFrame affine_frame(const std::vector<Point>& pts) {
  if (pts.empty()) throw GeometryError("affine_frame of empty list");
  AffineFrame f;
  f.origin = pts[0];
  f.spanning.push_back(0);
  std::size_t n = pts[0].dim();
  Matrix rows;
  std::size_t r = 0;
  for (std::size_t i = 1; i < pts.size() && r < n; ++i) {
    Point d = pts[i] - f.origin;
    Matrix trial = rows;
    trial.push_back(d.coords());
    std::size_t rk = rank(trial, n);
    if (rk > r) {
      rows = std::move(trial);
      r = rk;
      f.directions.push_back(d);
      f.spanning.push_back(i);
    }
  }
  if (!rows.empty()) f.pivot_coords = row_reduce(rows, n).pivots;
  return f;
}

bool in_affine_hull(const AffineFrame& f, const Point& x) {
  Point d = x - f.origin;
  std::size_t n = d.dim();
  if (f.directions.size() == n) return true;
  Matrix rows;
  for (const auto& v : f.directions) rows.push_back(v.coords());
  rows.push_back(d.coords());
  return rank(rows, n) == f.directions.size();
}

Point project_coords(const Point& x, const std::vector<std::size_t>& coords) {
  Point p(coords.size());
  for (std::size_t i = 0; i < coords.size(); ++i) p[i] = x[coords[i]];
  return p;
}

namespace {

Matrix gram(const std::vector<Point>& d) {
  std::size_t m = d.size();
  Matrix g(m, Vector(m));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i; j < m; ++j) g[i][j] = g[j][i] = dot(d[i], d[j]);
  return g;
}

std::optional<Vector> solve_square(const Matrix& g, const Vector& b) {
  std::size_t m = g.size();
  if (m == 0) return Vector{};
  if (rank(g, m) < m) return std::nullopt;
  return solve(g, b);
}

}  // namespace

std::optional<Circumsphere> circumsphere(const std::vector<Point>& pts) {
  if (pts.empty()) return std::nullopt;
  const Point& p0 = pts[0];
  std::vector<Point> d;
  for (std::size_t i = 1; i < pts.size(); ++i) d.push_back(pts[i] - p0);
  Matrix g = gram(d);
  Vector b(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) b[i] = g[i][i] / 2;
  auto lam = solve_square(g, b);
  if (!lam) return std::nullopt;
  Circumsphere s;
  s.center = p0;
  Scalar rest = 1;
  s.barycentric.assign(pts.size(), 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    s.center += d[i] * (*lam)[i];
    s.barycentric[i + 1] = (*lam)[i];
    rest -= (*lam)[i];
  }
  s.barycentric[0] = rest;
  s.radius2 = dist2(s.center, p0);
  return s;
}

std::optional<Projection> project_affine(const Point& x, const std::vector<Point>& pts) {
  if (pts.empty()) return std::nullopt;
  const Point& p0 = pts[0];
  std::vector<Point> d;
  for (std::size_t i = 1; i < pts.size(); ++i) d.push_back(pts[i] - p0);
  Matrix g = gram(d);
  Point xr = x - p0;
  Vector b(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) b[i] = dot(xr, d[i]);
  auto lam = solve_square(g, b);
  if (!lam) return std::nullopt;
  Projection pr;
  pr.point = p0;
  pr.barycentric.assign(pts.size(), 0);
  Scalar rest = 1;
  for (std::size_t i = 0; i < d.size(); ++i) {
    pr.point += d[i] * (*lam)[i];
    pr.barycentric[i + 1] = (*lam)[i];
    rest -= (*lam)[i];
  }
  pr.barycentric[0] = rest;
  return pr;
}

Scalar dist2_to_simplex(const Point& x, const std::vector<Point>& pts, Point* nearest) {
  std::size_t m = pts.size();
  if (m == 0 || m > 20) throw GeometryError("dist2_to_simplex: bad simplex size");
  auto full = project_affine(x, pts);
  if (full) {
    bool inside = true;
    for (const auto& l : full->barycentric)
      if (sgn(l) < 0) inside = false;
    if (inside) {
      if (nearest) *nearest = full->point;
      return dist2(x, full->point);
    }
  }
  bool have = false;
  Scalar best;
  Point best_pt;
  std::size_t all = (std::size_t(1) << m) - 1;
  for (std::size_t mask = 1; mask < all; ++mask) {
    std::vector<Point> face;
    for (std::size_t i = 0; i < m; ++i)
      if (mask >> i & 1u) face.push_back(pts[i]);
    auto pr = project_affine(x, face);
    if (!pr) continue;
    bool ok = true;
    for (const auto& l : pr->barycentric)
      if (sgn(l) < 0) ok = false;
    if (!ok) continue;
    Scalar d = dist2(x, pr->point);
    if (!have || d < best) {
      have = true;
      best = d;
      best_pt = pr->point;
    }
  }
  if (!have) throw GeometryError("dist2_to_simplex: no feasible face");
  if (nearest) *nearest = best_pt;
  return best;
}

}  // namespace nonconvex
