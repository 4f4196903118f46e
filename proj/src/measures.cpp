#include "nonconvex/measures.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "nonconvex/ball.hpp"
#include "nonconvex/combination.hpp"
#include "nonconvex/lp.hpp"

namespace nonconvex {

MeasureResult MeasureResult::from_exact(std::string name, const Scalar& v) {
  MeasureResult r;
  r.measure = std::move(name);
  r.exact = v;
  r.exact_square = v * v;
  r.value = r.lower = r.upper = v.get_d();
  return r;
}

MeasureResult MeasureResult::from_square(std::string name, const Scalar& sq) {
  if (auto root = exact_sqrt(sq)) {
    MeasureResult r = from_exact(std::move(name), *root);
    return r;
  }
  MeasureResult r;
  r.measure = std::move(name);
  r.exact_square = sq;
  r.value = r.lower = r.upper = std::sqrt(sq.get_d());
  return r;
}

MeasureResult MeasureResult::bounds(std::string name, double lo, double hi) {
  MeasureResult r;
  r.measure = std::move(name);
  r.lower = lo;
  r.upper = std::max(lo, hi);
  r.value = (r.lower + r.upper) / 2;
  return r;
}

const MeasureResult* MeasureRow::find(const std::string& name) const {
  for (const auto& m : measures)
    if (m.measure == name) return &m;
  return nullptr;
}

namespace {

// Lexicographic k-subsets of [n].
bool next_combination(std::vector<std::size_t>& c, std::size_t n) {
  std::size_t k = c.size();
  for (std::size_t i = k; i-- > 0;) {
    if (c[i] < n - k + i) {
      ++c[i];
      for (std::size_t j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

double binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

double d2f(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

std::vector<std::vector<double>> doubles_of(const PointSet& a) {
  std::vector<std::vector<double>> r;
  for (const auto& p : a) r.push_back(to_doubles(p));
  return r;
}

std::vector<Point> subset(const PointSet& a, const std::vector<std::size_t>& idx) {
  std::vector<Point> r;
  for (auto i : idx) r.push_back(a[i]);
  return r;
}

// Floating membership in conv(A) with slack; exact checks follow.
struct FloatHull {
  std::vector<std::vector<double>> normals;
  std::vector<double> offsets;
  std::vector<std::size_t> coords;
  double slack = 1e-9;

  explicit FloatHull(const Polytope& p) {
    coords = p.frame().pivot_coords;
    for (const auto& f : p.relative_facets()) {
      normals.push_back(to_doubles(f.normal));
      offsets.push_back(f.offset.get_d());
    }
  }
  bool inside(const std::vector<double>& x) const {
    for (std::size_t i = 0; i < normals.size(); ++i) {
      double s = 0, mag = std::fabs(offsets[i]);
      for (std::size_t j = 0; j < coords.size(); ++j) {
        s += normals[i][j] * x[coords[j]];
        mag += std::fabs(normals[i][j] * x[coords[j]]);
      }
      if (s > offsets[i] + slack * (1 + mag)) return false;
    }
    return true;
  }
};

double min_d2f(const std::vector<std::vector<double>>& pts, const std::vector<double>& x) {
  double best = INFINITY;
  for (const auto& p : pts) best = std::min(best, d2f(p, x));
  return best;
}

}  // namespace

Scalar d_pointwise2(const PointSet& a, const Point& x) {
  Scalar best = dist2(a[0], x);
  for (std::size_t i = 1; i < a.size(); ++i) {
    Scalar d = dist2(a[i], x);
    if (d < best) best = d;
  }
  return best;
}

Scalar d_pointwise_gauge(const PointSet& a, const Gauge& k, const Point& x) {
  Scalar best = k.norm_exact(x - a[0]);
  for (std::size_t i = 1; i < a.size(); ++i) {
    Scalar d = k.norm_exact(x - a[i]);
    if (d < best) best = d;
  }
  return best;
}

std::optional<Scalar> v_pointwise2(const PointSet& a, const Point& x) {
  std::size_t n = a.dim(), m = a.size();
  LinearProgram lp;
  lp.objective.resize(m);
  for (std::size_t j = 0; j < m; ++j) lp.objective[j] = norm2(a[j]);
  for (std::size_t r = 0; r < n; ++r) {
    Vector row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = a[j][r];
    lp.add(std::move(row), Relation::Eq, x[r]);
  }
  lp.add(Vector(m, 1), Relation::Eq, 1);
  auto res = solve(lp);
  if (!res.optimal()) return std::nullopt;
  return res.value - norm2(x);
}

std::optional<double> w_pointwise(const PointSet& a, const Point& x) {
  std::size_t n = a.dim(), m = a.size();
  LinearProgram lp;
  lp.objective.resize(m);
  for (std::size_t j = 0; j < m; ++j) lp.objective[j] = from_double_exact(dist(a[j], x));
  for (std::size_t r = 0; r < n; ++r) {
    Vector row(m);
    for (std::size_t j = 0; j < m; ++j) row[j] = a[j][r];
    lp.add(std::move(row), Relation::Eq, x[r]);
  }
  lp.add(Vector(m, 1), Relation::Eq, 1);
  auto res = solve(lp);
  if (!res.optimal()) return std::nullopt;
  return res.value.get_d();
}

PointSet face_points(const PointSet& a, const Polytope& hull, const Point& x) {
  if (hull.affine_dim() == 0 || hull.interior_contains(x)) return a;
  auto active = hull.active_facets(x);
  const auto& pc = hull.frame().pivot_coords;
  std::vector<Point> pts;
  for (const auto& p : a) {
    Point q = project_coords(p, pc);
    bool tight = true;
    for (auto f : active)
      if (dot(hull.relative_facets()[f].normal, q) != hull.relative_facets()[f].offset) tight = false;
    if (tight) pts.push_back(p);
  }
  if (pts.empty()) throw GeometryError("face_points: point outside the hull");
  return PointSet(a.dim(), std::move(pts));
}

double rho_pointwise(const PointSet& a, const Polytope& hull, const Point& x) {
  if (!hull.contains(x)) throw GeometryError("rho_pointwise: point outside the hull");
  PointSet f = face_points(a, hull, x);
  return std::sqrt(d_pointwise2(f, x).get_d());
}

double rho_pointwise(const PointSet& a, const Point& x) { return rho_pointwise(a, convex_hull(a), x); }

std::vector<EmptySphereSimplex> empty_sphere_simplices(const PointSet& a, const Config& cfg) {
  AffineFrame frame = affine_frame(a.points());
  std::size_t m = frame.dim(), n = a.size();
  std::vector<EmptySphereSimplex> out;
  if (m == 0) {
    out.push_back({{0}, a[0], 0});
    return out;
  }
  if (binom(n, m + 1) > double(cfg.simplex_budget)) {
    std::ostringstream os;
    os << "empty-sphere enumeration budget " << cfg.simplex_budget << " exceeded: C(" << n << "," << m + 1
       << ") subsets";
    throw BudgetExceeded(os.str());
  }
  auto pd = doubles_of(a);
  std::vector<std::size_t> idx(m + 1);
  for (std::size_t i = 0; i <= m; ++i) idx[i] = i;
  do {
    std::vector<std::vector<double>> s;
    for (auto i : idx) s.push_back(pd[i]);
    Ball b;
    if (circumball(s, b)) {
      double r2 = b.radius * b.radius;
      double tol = 1e-9 * (1 + r2 + d2f(b.center, std::vector<double>(b.center.size(), 0)));
      bool reject = false;
      for (std::size_t j = 0; j < n && !reject; ++j)
        if (d2f(pd[j], b.center) < r2 - tol) reject = true;
      if (reject) continue;
    }
    auto cs = circumsphere(subset(a, idx));
    if (!cs) continue;
    bool empty = true;
    for (std::size_t j = 0; j < n && empty; ++j)
      if (dist2(a[j], cs->center) < cs->radius2) empty = false;
    if (empty) out.push_back({idx, cs->center, cs->radius2});
  } while (next_combination(idx, n));
  return out;
}

std::vector<EmptySphereSimplex> lifted_delaunay_simplices(const PointSet& a) {
  AffineFrame frame = affine_frame(a.points());
  std::size_t m = frame.dim();
  std::vector<EmptySphereSimplex> out;
  if (m == 0) {
    out.push_back({{0}, a[0], 0});
    return out;
  }
  std::vector<Point> lifted;
  for (const auto& p : a) {
    Point q = project_coords(p, frame.pivot_coords);
    Vector c = q.coords();
    c.push_back(norm2(p));
    lifted.emplace_back(std::move(c));
  }
  std::vector<std::vector<std::size_t>> simplices;
  if (affine_frame(lifted).dim() == m) {
    Polytope hull = convex_hull(a);
    for (const auto& s : hull.triangulation()) {
      std::vector<std::size_t> idx;
      for (auto v : s) {
        auto it = std::lower_bound(a.begin(), a.end(), hull.vertices()[v]);
        idx.push_back(static_cast<std::size_t>(it - a.begin()));
      }
      simplices.push_back(std::move(idx));
    }
  } else {
    SimplicialHull h = simplicial_hull(lifted);
    for (std::size_t i = 0; i < h.simplices.size(); ++i)
      if (sign(h.planes[i].normal[m]) < 0) simplices.push_back(h.simplices[i]);
  }
  for (auto& s : simplices) {
    std::sort(s.begin(), s.end());
    auto cs = circumsphere(subset(a, s));
    if (!cs) throw GeometryError("lifted_delaunay_simplices: degenerate simplex");
    out.push_back({s, cs->center, cs->radius2});
  }
  return out;
}

VResult effective_stddev_v(const PointSet& a, const Config& cfg, VRoute route) {
  AffineFrame frame = affine_frame(a.points());
  std::size_t m = frame.dim();
  bool enumerate = route == VRoute::Enumerate ||
                   (route == VRoute::Auto && binom(a.size(), m + 1) <= double(cfg.simplex_budget));
  std::vector<EmptySphereSimplex> simplices = enumerate ? empty_sphere_simplices(a, cfg) : lifted_delaunay_simplices(a);
  VResult res;
  Scalar best = -1;
  for (const auto& s : simplices) {
    Point near;
    Scalar d = dist2_to_simplex(s.center, subset(a, s.indices), &near);
    Scalar val = s.radius2 - d;
    if (val > best) {
      best = val;
      res.simplex = s;
      res.maximizer = near;
    }
  }
  if (sign(best) < 0) throw GeometryError("effective_stddev_v: no simplex found");
  res.result = MeasureResult::from_square("v", best);
  std::ostringstream os;
  os << "v^2 = R_c^2 - |x*-c|^2 = " << best.get_str() << "; x* = " << to_string(*res.maximizer)
     << "; c = " << to_string(res.simplex->center) << "; simplex {";
  for (std::size_t i = 0; i < res.simplex->indices.size(); ++i)
    os << (i ? "," : "") << res.simplex->indices[i];
  os << "}; route " << (enumerate ? "enumeration" : "lifted");
  res.result.certificate = os.str();
  if (!enumerate && route == VRoute::Auto) res.result.flags.push_back("enumeration budget exceeded; lifted Delaunay route");
  return res;
}

MeasureResult inner_radius_r(const PointSet& a, const Config& cfg) {
  MeasureResult r = effective_stddev_v(a, cfg).result;
  r.measure = "r";
  r.flags.push_back("reported equal to v");
  return r;
}

MeasureResult volume_deficit(const PointSet& a) {
  std::size_t n = a.dim();
  AffineFrame f = affine_frame(a.points());
  if (f.dim() < n) {
    MeasureResult r = MeasureResult::from_exact("delta", 0);
    r.flags.push_back("degenerate: affine dimension " + std::to_string(f.dim()));
    return r;
  }
  if (n > 6) {
    Scalar box = 1;
    for (std::size_t i = 0; i < n; ++i) {
      Scalar lo = a[0][i], hi = a[0][i];
      for (const auto& p : a) {
        lo = min(lo, p[i]);
        hi = max(hi, p[i]);
      }
      box *= hi - lo;
    }
    MeasureResult r = MeasureResult::bounds("delta", 0, box.get_d());
    r.flags.push_back("hull volume unavailable above dimension 6; bounding-box upper bound");
    return r;
  }
  MeasureResult r = MeasureResult::from_exact("delta", volume(convex_hull(a)));
  r.certificate = "finite set: delta = Vol(conv A)";
  return r;
}

MeasureResult volume_deficit(const BoxUnion& u) {
  std::size_t n = u.dim();
  Scalar vu = volume(u);
  if (n == 1) {
    Scalar lo = u[0].lo[0], hi = u[0].hi[0];
    for (const auto& b : u.boxes()) {
      lo = min(lo, b.lo[0]);
      hi = max(hi, b.hi[0]);
    }
    return MeasureResult::from_exact("delta", hi - lo - vu);
  }
  PointSet corners = corner_points(u);
  AffineFrame f = affine_frame(corners.points());
  if (f.dim() < n) {
    MeasureResult r = MeasureResult::from_exact("delta", 0);
    r.flags.push_back("degenerate: affine dimension " + std::to_string(f.dim()));
    return r;
  }
  if (n > 6) {
    if (u.convex_box()) return MeasureResult::from_exact("delta", 0);
    Scalar box = 1;
    for (std::size_t i = 0; i < n; ++i) {
      Scalar lo = u[0].lo[i], hi = u[0].hi[i];
      for (const auto& b : u.boxes()) {
        lo = min(lo, b.lo[i]);
        hi = max(hi, b.hi[i]);
      }
      box *= hi - lo;
    }
    MeasureResult r = MeasureResult::bounds("delta", 0, Scalar(box - vu).get_d());
    r.flags.push_back("hull volume unavailable above dimension 6; bounding-box upper bound");
    return r;
  }
  MeasureResult r = MeasureResult::from_exact("delta", volume(convex_hull(corners)) - vu);
  r.certificate = "Vol(conv corners) - Vol(union)";
  return r;
}

std::optional<MeasureResult> hausdorff_exact_low_dim(const PointSet& a, const Config& cfg) {
  AffineFrame frame = affine_frame(a.points());
  std::size_t m = frame.dim();
  if (m == 0) return MeasureResult::from_exact("d", 0);
  if (m == 1) {
    const Point& u = frame.directions[0];
    Scalar uu = norm2(u);
    std::vector<Scalar> t;
    for (const auto& p : a) t.push_back(dot(p - frame.origin, u) / uu);
    std::sort(t.begin(), t.end());
    Scalar gap = 0, at = t[0];
    for (std::size_t i = 1; i < t.size(); ++i)
      if (t[i] - t[i - 1] > gap) {
        gap = t[i] - t[i - 1];
        at = t[i - 1];
      }
    Scalar half = gap / 2;
    MeasureResult r = MeasureResult::from_square("d", half * half * uu);
    r.certificate = "half of the largest gap; x* = " + to_string(frame.origin + u * (at + half));
    return r;
  }
  if (m != 2) return std::nullopt;
  std::size_t n = a.size();
  Polytope hull = convex_hull(a);
  std::vector<std::pair<Point, Point>> edges;
  const auto& pc = hull.frame().pivot_coords;
  for (const auto& f : hull.relative_facets()) {
    std::vector<Point> on;
    for (const auto& v : hull.vertices())
      if (dot(f.normal, project_coords(v, pc)) == f.offset) on.push_back(v);
    if (on.size() == 2) edges.emplace_back(on[0], on[1]);
  }
  double count = binom(n, 3) + double(edges.size()) * binom(n, 2);
  if (count > double(cfg.candidate_budget)) return std::nullopt;
  auto pd = doubles_of(a);
  FloatHull fh(hull);
  struct Cand {
    double val;
    int kind;  // 0 triple, 1 edge
    std::size_t i, j, k;
  };
  std::vector<Cand> cands;
  std::vector<std::size_t> idx{0, 1, 2};
  if (n >= 3) do {
      Ball b;
      std::vector<std::vector<double>> s{pd[idx[0]], pd[idx[1]], pd[idx[2]]};
      if (!circumball(s, b)) continue;
      if (!fh.inside(b.center)) continue;
      cands.push_back({min_d2f(pd, b.center), 0, idx[0], idx[1], idx[2]});
    } while (next_combination(idx, n));
  for (std::size_t e = 0; e < edges.size(); ++e) {
    auto u = to_doubles(edges[e].first), w = to_doubles(edges[e].second);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) {
        double den = 0, num = 0;
        for (std::size_t c = 0; c < u.size(); ++c) {
          double ba = pd[j][c] - pd[i][c];
          den += 2 * (w[c] - u[c]) * ba;
          num += pd[j][c] * pd[j][c] - pd[i][c] * pd[i][c] - 2 * u[c] * ba;
        }
        if (den == 0) continue;
        double tau = num / den;
        if (tau < -1e-9 || tau > 1 + 1e-9) continue;
        std::vector<double> p(u.size());
        for (std::size_t c = 0; c < u.size(); ++c) p[c] = u[c] + tau * (w[c] - u[c]);
        cands.push_back({min_d2f(pd, p), 1, e, i, j});
      }
  }
  std::sort(cands.begin(), cands.end(), [](const Cand& x, const Cand& y) { return x.val > y.val; });
  Scalar best = 0;
  Point best_pt = hull.vertices()[0];
  double best_f = 0;
  for (const auto& c : cands) {
    if (c.val < best_f * (1 - 1e-8) - 1e-14) break;
    Point x;
    if (c.kind == 0) {
      auto cs = circumsphere({a[c.i], a[c.j], a[c.k]});
      if (!cs || !hull.contains(cs->center)) continue;
      x = cs->center;
    } else {
      const Point& u = edges[c.i].first;
      const Point& w = edges[c.i].second;
      Point ba = a[c.k] - a[c.j];
      Scalar den = 2 * dot(w - u, ba);
      if (sign(den) == 0) continue;
      Scalar tau = (norm2(a[c.k]) - norm2(a[c.j]) - 2 * dot(u, ba)) / den;
      if (sign(tau) < 0 || tau > 1) continue;
      x = u + (w - u) * tau;
    }
    Scalar v = d_pointwise2(a, x);
    if (v > best) {
      best = v;
      best_pt = x;
      best_f = v.get_d();
    }
  }
  MeasureResult r = MeasureResult::from_square("d", best);
  r.certificate = "largest empty circle centred in the hull at x* = " + to_string(best_pt);
  return r;
}

namespace {

struct Candidate {
  double val;
  std::vector<std::size_t> idx;
};

// Circumcenters of subsets of sizes 2..m+1 lying in the hull, best first.
std::vector<Candidate> circumcenter_candidates(const PointSet& a, const Polytope& hull, const Config& cfg,
                                               const std::vector<std::vector<double>>& pd) {
  std::size_t m = hull.affine_dim(), n = a.size();
  FloatHull fh(hull);
  std::vector<Candidate> cands;
  double used = 0;
  for (std::size_t size = std::min(m + 1, n); size >= 2; --size) {
    used += binom(n, size);
    if (used > double(cfg.candidate_budget)) break;
    std::vector<std::size_t> idx(size);
    for (std::size_t i = 0; i < size; ++i) idx[i] = i;
    do {
      std::vector<std::vector<double>> s;
      for (auto i : idx) s.push_back(pd[i]);
      Ball b;
      if (!circumball(s, b) || !fh.inside(b.center)) continue;
      cands.push_back({min_d2f(pd, b.center), idx});
    } while (next_combination(idx, n));
  }
  std::sort(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) { return x.val > y.val; });
  return cands;
}

struct LowerBound {
  Scalar value2 = 0;
  Point at;
};

LowerBound d_lower_bound(const PointSet& a, const Polytope& hull, const Config& cfg) {
  auto pd = doubles_of(a);
  auto cands = circumcenter_candidates(a, hull, cfg, pd);
  LowerBound lb;
  lb.at = a[0];
  double best_f = 0;
  std::size_t exact_checks = 0;
  for (const auto& c : cands) {
    if (c.val < best_f * (1 - 1e-8) - 1e-14 || exact_checks > 64) break;
    auto cs = circumsphere(subset(a, c.idx));
    if (!cs || !hull.contains(cs->center)) continue;
    ++exact_checks;
    Scalar v = d_pointwise2(a, cs->center);
    if (v > lb.value2) {
      lb.value2 = v;
      lb.at = cs->center;
      best_f = v.get_d();
    }
  }
  return lb;
}

}  // namespace

MeasureResult hausdorff_bounds(const PointSet& a, const Config& cfg) {
  Polytope hull = convex_hull(a);
  VResult v = effective_stddev_v(a, cfg);
  if (hull.affine_dim() == 0) return MeasureResult::from_exact("d", 0);
  LowerBound lb = d_lower_bound(a, hull, cfg);
  Scalar up2 = *v.result.exact_square;
  MeasureResult r;
  if (lb.value2 == up2) {
    r = MeasureResult::from_square("d", up2);
  } else {
    // The upper bound is v itself, taken as computed so that d_upper == v holds bit for bit.
    r = MeasureResult::bounds("d", std::min(std::sqrt(lb.value2.get_d()), v.result.upper), v.result.upper);
    r.flags.push_back("two-sided bounds");
  }
  r.certificate = "lower at x = " + to_string(lb.at) + " (d^2 = " + lb.value2.get_str() + "); upper = v (v^2 = " +
                  up2.get_str() + ")";
  return r;
}

MeasureResult hausdorff_from_hull(const PointSet& a, const Gauge& k, const Config& cfg) {
  if (k.dim() != a.dim()) throw DimensionMismatch("gauge dimension differs from set dimension");
  AffineFrame frame = affine_frame(a.points());
  std::size_t m = frame.dim();
  if (k.is_euclidean()) {
    MeasureResult r;
    if (auto ex = hausdorff_exact_low_dim(a, cfg))
      r = *ex;
    else
      r = hausdorff_bounds(a, cfg);
    if (k.radius() != 1) {
      Scalar s = 1 / k.radius();
      if (r.exact) r = MeasureResult::from_exact("d", *r.exact * s);
      else if (r.exact_square) r = MeasureResult::from_square("d", *r.exact_square * s * s);
      else r = MeasureResult::bounds("d", r.lower * s.get_d(), r.upper * s.get_d());
    }
    return r;
  }
  if (m == 0) return MeasureResult::from_exact("dK", 0);
  if (m == 1) {
    const Point& u = frame.directions[0];
    Scalar uu = norm2(u);
    std::vector<Scalar> t;
    for (const auto& p : a) t.push_back(dot(p - frame.origin, u) / uu);
    std::sort(t.begin(), t.end());
    Scalar P = k.norm_exact(u), N = k.norm_exact(-u), best = 0;
    for (std::size_t i = 1; i < t.size(); ++i) best = max(best, (t[i] - t[i - 1]) * P * N / (P + N));
    MeasureResult r = MeasureResult::from_exact("dK", best);
    r.certificate = "gap equalisation along the affine line";
    return r;
  }
  if (m == 2 && a.dim() == 2) return gauge_distance_planar(a, k, cfg);
  Polytope hull = convex_hull(a);
  LowerBound lb = d_lower_bound(a, hull, cfg);
  Scalar lower = d_pointwise_gauge(a, k, lb.at);
  MeasureResult eu = hausdorff_bounds(a, cfg);
  MeasureResult r = MeasureResult::bounds("dK", lower.get_d(), eu.upper / k.inner_radius());
  r.flags.push_back("two-sided bounds via Euclidean envelope");
  return r;
}

std::optional<Scalar> c_pointwise(const PointSet& a, const Point& x) {
  std::size_t n = a.dim(), m = a.size();
  std::optional<Scalar> best;
  for (const auto& b : a) {
    if (b == x) return Scalar(0);
    LinearProgram lp;
    lp.objective.assign(m, 1);
    for (std::size_t r = 0; r < n; ++r) {
      Vector row(m);
      for (std::size_t j = 0; j < m; ++j) row[j] = a[j][r] - x[r];
      lp.add(std::move(row), Relation::Eq, x[r] - b[r]);
    }
    auto res = solve(lp);
    if (!res.optimal()) continue;
    if (!best || res.value < *best) best = res.value;
  }
  return best;
}

double circumradius_R(const PointSet& a) { return min_enclosing_ball(a).radius; }

MeasureRow measure_suite(const PointSet& a, const Gauge& k, const Config& cfg, const std::vector<std::string>& which) {
  auto want = [&](const std::string& s) { return which.empty() || std::find(which.begin(), which.end(), s) != which.end(); };
  MeasureRow row;
  auto guarded = [&](const std::string& name, auto&& fn) {
    if (!want(name)) return;
    try {
      row.measures.push_back(fn());
    } catch (const std::exception& e) {
      MeasureResult r;
      r.measure = name;
      r.lower = 0;
      r.upper = INFINITY;
      r.value = NAN;
      r.flags.push_back(std::string("error: ") + e.what());
      row.measures.push_back(r);
    }
  };
  guarded("delta", [&] { return volume_deficit(a); });
  guarded("d", [&] { return hausdorff_from_hull(a, k, cfg); });
  guarded("c", [&] { return schneider_c(a, cfg); });
  guarded("v", [&] { return effective_stddev_v(a, cfg).result; });
  guarded("r", [&] { return inner_radius_r(a, cfg); });
  guarded("R", [&] {
    MeasureResult r = MeasureResult::bounds("R", 0, 0);
    r.value = r.lower = r.upper = circumradius_R(a);
    return r;
  });
  guarded("diam", [&] { return MeasureResult::from_square("diam", diam2(a)); });
  guarded("inr", [&] {
    Polytope h = convex_hull(a);
    MeasureResult r = MeasureResult::bounds("inr", 0, 0);
    r.value = r.lower = r.upper = h.full_dimensional() ? inradius(h) : 0.0;
    if (!h.full_dimensional()) r.flags.push_back("degenerate hull");
    return r;
  });
  return row;
}

MeasureRow measure_suite(const BoxUnion& u, const Config& cfg, const std::vector<std::string>& which) {
  auto want = [&](const std::string& s) { return which.empty() || std::find(which.begin(), which.end(), s) != which.end(); };
  MeasureRow row;
  if (want("delta")) row.measures.push_back(volume_deficit(u));
  if (u.dim() == 1) {
    std::vector<std::pair<Scalar, Scalar>> iv;
    for (const auto& b : u.boxes()) iv.emplace_back(b.lo[0], b.hi[0]);
    std::sort(iv.begin(), iv.end());
    Scalar reach = iv[0].second, gap = 0, lo = iv[0].first;
    for (const auto& [l, h] : iv) {
      if (l > reach) gap = max(gap, l - reach);
      reach = max(reach, h);
    }
    Scalar width = reach - lo;
    if (want("d")) row.measures.push_back(MeasureResult::from_exact("d", gap / 2));
    if (want("v")) row.measures.push_back(MeasureResult::from_exact("v", gap / 2));
    if (want("c")) row.measures.push_back(MeasureResult::from_exact("c", sign(width) == 0 ? Scalar(0) : Scalar(gap / width)));
    return row;
  }
  auto guarded = [&](const std::string& name, auto fn) {
    if (!want(name)) return;
    try {
      row.measures.push_back(fn());
    } catch (const std::exception& e) {
      MeasureResult r = MeasureResult::bounds(name, 0, 0);
      r.flags.push_back(std::string("error: ") + e.what());
      row.measures.push_back(r);
    }
  };
  guarded("d", [&] {
    if (u.dim() > 3) throw GeometryError("d of box unions is bounded only in dimensions 1 to 3");
    Polytope hull = convex_hull(corner_points(u));
    if (!hull.full_dimensional()) throw GeometryError("d of box unions needs a full-dimensional hull");
    // A closed union filling its full-dimensional hull is convex.
    if (volume(u) == volume(hull)) {
      MeasureResult r = MeasureResult::from_exact("d", 0);
      r.certificate = "union volume equals hull volume";
      return r;
    }
    std::vector<std::vector<double>> lo, hi;
    for (const auto& b : u.boxes()) {
      lo.push_back(to_doubles(b.lo));
      hi.push_back(to_doubles(b.hi));
    }
    auto dist = [&](const std::vector<double>& x) {
      double best = INFINITY;
      for (std::size_t b = 0; b < lo.size(); ++b) {
        double s = 0;
        for (std::size_t i = 0; i < x.size(); ++i) {
          double e = x[i] < lo[b][i] ? lo[b][i] - x[i] : x[i] > hi[b][i] ? x[i] - hi[b][i] : 0;
          s += e * e;
        }
        best = std::min(best, s);
      }
      return std::sqrt(best);
    };
    SupBound sb = lipschitz_sup(hull, dist, -INFINITY, cfg.bisection_tol / 4, 400000, cfg.bisection_tol);
    MeasureResult r = MeasureResult::bounds("d", std::max(0.0, sb.lower), std::max(0.0, sb.upper));
    r.certificate = "branch and bound over the hull, " + std::to_string(sb.cells) + " cells";
    if (sb.upper - sb.lower > cfg.bisection_tol) r.flags.push_back("bracket wider than tolerance");
    return r;
  });
  guarded("c", [&] {
    if (u.dim() != 2) throw GeometryError("c of box unions is computed only in dimensions 1 and 2");
    std::vector<Polygon> pieces;
    for (const auto& b : u.boxes())
      pieces.push_back(convex_polygon({b.lo, Point{b.hi[0], b.lo[1]}, b.hi, Point{b.lo[0], b.hi[1]}}));
    return schneider_c(pieces, cfg);
  });
  return row;
}

}  // namespace nonconvex
