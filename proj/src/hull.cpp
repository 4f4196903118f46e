#include <algorithm>
#include <cmath>
#include <map>

#include "nonconvex/combination.hpp"
#include "nonconvex/polytope.hpp"

namespace nonconvex {

Facet primitive_facet(Vector normal, const Scalar& offset) {
  mpz_class l = 1, g = 0;
  for (const auto& c : normal) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  Scalar off = offset * l;
  for (auto& c : normal) {
    c *= l;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_num_mpz_t());
  }
  if (g == 0) throw GeometryError("primitive_facet: zero normal");
  Scalar gq{g};
  for (auto& c : normal) c /= gq;
  off /= gq;
  return Facet{Point(std::move(normal)), off};
}

namespace {

struct Face {
  std::vector<std::size_t> v;
  Facet f;
  std::vector<double> nd;
  double od = 0;
  bool alive = true;
};

int side(const Face& face, const Point& p, const std::vector<double>& pd) {
  double s = -face.od, mag = std::fabs(face.od);
  for (std::size_t i = 0; i < pd.size(); ++i) {
    double t = face.nd[i] * pd[i];
    s += t;
    mag += std::fabs(t);
  }
  if (s > mag * 1e-11) return 1;
  if (s < -mag * 1e-11) return -1;
  return sgn(dot(face.f.normal, p) - face.f.offset);
}

Face make_face(std::vector<std::size_t> verts, const std::vector<Point>& pts, const Point& inside) {
  std::sort(verts.begin(), verts.end());
  std::size_t m = pts[0].dim();
  Matrix rows;
  for (std::size_t j = 1; j < verts.size(); ++j) rows.push_back((pts[verts[j]] - pts[verts[0]]).coords());
  auto ker = nullspace(rows, m);
  if (ker.size() != 1) throw GeometryError("simplicial_hull: degenerate facet");
  Vector n = ker[0];
  Scalar off = 0;
  for (std::size_t i = 0; i < m; ++i) off += n[i] * pts[verts[0]][i];
  Scalar io = 0;
  for (std::size_t i = 0; i < m; ++i) io += n[i] * inside[i];
  if (io > off) {
    for (auto& c : n) c = -c;
    off = -off;
  }
  Face f;
  f.v = std::move(verts);
  f.f = primitive_facet(std::move(n), off);
  f.nd = to_doubles(f.f.normal);
  f.od = f.f.offset.get_d();
  return f;
}

}  // namespace

SimplicialHull simplicial_hull(const std::vector<Point>& pts) {
  if (pts.empty()) throw GeometryError("simplicial_hull: no points");
  std::size_t m = pts[0].dim();
  AffineFrame frame = affine_frame(pts);
  if (frame.dim() != m) throw GeometryError("simplicial_hull: points do not span the space");
  SimplicialHull out;
  out.dim = m;
  std::vector<Point> init;
  for (auto i : frame.spanning) init.push_back(pts[i]);
  Point inside = centroid(init);
  std::vector<Face> faces;
  for (std::size_t skip = 0; skip < frame.spanning.size(); ++skip) {
    std::vector<std::size_t> v;
    for (std::size_t j = 0; j < frame.spanning.size(); ++j)
      if (j != skip) v.push_back(frame.spanning[j]);
    faces.push_back(make_face(std::move(v), pts, inside));
  }
  std::vector<bool> used(pts.size(), false);
  for (auto i : frame.spanning) used[i] = true;
  std::size_t dead = 0;
  for (std::size_t p = 0; p < pts.size(); ++p) {
    if (used[p]) continue;
    auto pd = to_doubles(pts[p]);
    std::map<std::vector<std::size_t>, int> ridges;
    bool any = false;
    for (auto& f : faces) {
      if (!f.alive || side(f, pts[p], pd) <= 0) continue;
      any = true;
      f.alive = false;
      ++dead;
      for (std::size_t j = 0; j < f.v.size(); ++j) {
        std::vector<std::size_t> r;
        for (std::size_t l = 0; l < f.v.size(); ++l)
          if (l != j) r.push_back(f.v[l]);
        ++ridges[r];
      }
    }
    if (!any) continue;
    for (auto& [r, cnt] : ridges) {
      if (cnt != 1) continue;
      std::vector<std::size_t> v = r;
      v.push_back(p);
      faces.push_back(make_face(std::move(v), pts, inside));
    }
    if (dead > faces.size() / 2) {
      faces.erase(std::remove_if(faces.begin(), faces.end(), [](const Face& f) { return !f.alive; }), faces.end());
      dead = 0;
    }
  }
  for (auto& f : faces)
    if (f.alive) {
      out.simplices.push_back(f.v);
      out.planes.push_back(f.f);
    }
  return out;
}

std::vector<Point> extreme_points_lp(const std::vector<Point>& in) {
  std::vector<Point> pts = in;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  std::vector<Point> out;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::vector<Point> others;
    for (std::size_t j = 0; j < pts.size(); ++j)
      if (j != i) others.push_back(pts[j]);
    if (others.empty() || !in_hull(pts[i], others).feasible) out.push_back(pts[i]);
  }
  return out;
}

Polytope convex_hull(const std::vector<Point>& in, std::size_t max_facet_dim) {
  if (in.empty()) throw GeometryError("convex_hull of empty set");
  std::vector<Point> pts = in;
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  Polytope P;
  P.dim_ = pts[0].dim();
  P.frame_ = affine_frame(pts);
  std::size_t m = P.frame_.dim();
  if (m == 0) {
    P.vertices_ = {pts[0]};
    P.triangulation_ = {{0}};
    P.facets_available_ = true;
    return P;
  }
  if (m > max_facet_dim) {
    P.vertices_ = extreme_points_lp(pts);
    return P;
  }
  const auto& pc = P.frame_.pivot_coords;
  std::vector<Point> proj;
  for (const auto& p : pts) proj.push_back(project_coords(p, pc));
  SimplicialHull h1 = simplicial_hull(proj);
  std::vector<Facet> planes = h1.planes;
  std::sort(planes.begin(), planes.end());
  planes.erase(std::unique(planes.begin(), planes.end()), planes.end());
  std::vector<bool> cand(pts.size(), false);
  for (const auto& s : h1.simplices)
    for (auto i : s) cand[i] = true;
  std::vector<Point> verts, vproj;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    if (!cand[i]) continue;
    Matrix normals;
    for (const auto& f : planes)
      if (dot(f.normal, proj[i]) == f.offset) normals.push_back(f.normal.coords());
    if (rank(normals, m) == m) {
      verts.push_back(pts[i]);
      vproj.push_back(proj[i]);
    }
  }
  SimplicialHull h2 = simplicial_hull(vproj);
  P.vertices_ = verts;
  P.rel_facets_ = h2.planes;
  std::sort(P.rel_facets_.begin(), P.rel_facets_.end());
  P.rel_facets_.erase(std::unique(P.rel_facets_.begin(), P.rel_facets_.end()), P.rel_facets_.end());
  for (std::size_t s = 0; s < h2.simplices.size(); ++s) {
    const auto& sv = h2.simplices[s];
    if (std::find(sv.begin(), sv.end(), 0) != sv.end()) continue;
    if (dot(h2.planes[s].normal, vproj[0]) == h2.planes[s].offset) continue;
    std::vector<std::size_t> simplex{0};
    simplex.insert(simplex.end(), sv.begin(), sv.end());
    P.triangulation_.push_back(std::move(simplex));
  }
  if (m == P.dim_) P.facets_ = P.rel_facets_;
  P.facets_available_ = true;
  return P;
}

Polytope convex_hull(const PointSet& a, std::size_t max_facet_dim) { return convex_hull(a.points(), max_facet_dim); }

bool Polytope::contains(const Point& x) const {
  if (x.dim() != dim_) throw DimensionMismatch("Polytope::contains: dimension");
  if (!in_affine_hull(frame_, x)) return false;
  if (affine_dim() == 0) return x == vertices_[0];
  if (!facets_available_) return in_hull(x, vertices_).feasible;
  Point q = project_coords(x, frame_.pivot_coords);
  for (const auto& f : rel_facets_)
    if (dot(f.normal, q) > f.offset) return false;
  return true;
}

bool Polytope::interior_contains(const Point& x) const {
  if (!in_affine_hull(frame_, x)) return false;
  if (affine_dim() == 0) return x == vertices_[0];
  if (!facets_available_) throw GeometryError("interior_contains: facets unavailable");
  Point q = project_coords(x, frame_.pivot_coords);
  for (const auto& f : rel_facets_)
    if (dot(f.normal, q) >= f.offset) return false;
  return true;
}

std::vector<std::size_t> Polytope::active_facets(const Point& x) const {
  std::vector<std::size_t> r;
  if (affine_dim() == 0) return r;
  Point q = project_coords(x, frame_.pivot_coords);
  for (std::size_t i = 0; i < rel_facets_.size(); ++i)
    if (dot(rel_facets_[i].normal, q) == rel_facets_[i].offset) r.push_back(i);
  return r;
}

Scalar volume(const Polytope& p) {
  if (!p.full_dimensional()) return 0;
  std::size_t n = p.dim();
  Scalar total = 0;
  const auto& v = p.vertices();
  for (const auto& s : p.triangulation()) {
    Matrix m;
    for (std::size_t j = 1; j < s.size(); ++j) m.push_back((v[s[j]] - v[s[0]]).coords());
    Scalar d = determinant(m);
    total += sgn(d) < 0 ? Scalar(-d) : d;
  }
  Scalar fact = 1;
  for (std::size_t i = 2; i <= n; ++i) fact *= static_cast<long>(i);
  return total / fact;
}

Polytope minkowski_sum(const Polytope& a, const Polytope& b) {
  if (a.dim() != b.dim()) throw DimensionMismatch("minkowski_sum: dimensions differ");
  std::vector<Point> pts;
  for (const auto& p : a.vertices())
    for (const auto& q : b.vertices()) pts.push_back(p + q);
  return convex_hull(pts);
}

}  // namespace nonconvex
