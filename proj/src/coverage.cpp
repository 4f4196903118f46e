#include "nonconvex/coverage.hpp"

#include <algorithm>
#include <cmath>

namespace nonconvex {

namespace {

Scalar cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

}  // namespace

Polygon convex_polygon(std::vector<Point> pts) {
  for (const auto& p : pts)
    if (p.dim() != 2) throw DimensionMismatch("convex_polygon: points must be planar");
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() <= 2) return Polygon{pts};
  std::vector<Point> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && sign(cross(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && sign(cross(h[k - 2], h[k - 1], pts[i])) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) return Polygon{{pts.front(), pts.back()}};
  return Polygon{h};
}

Polygon minkowski_sum(const Polygon& a, const Polygon& b) {
  std::vector<Point> s;
  for (const auto& p : a.v)
    for (const auto& q : b.v) s.push_back(p + q);
  return convex_polygon(std::move(s));
}

Polygon scaled(const Polygon& p, const Scalar& s) {
  if (sign(s) == 0) return Polygon{{Point{0, 0}}};
  Polygon r = p;
  for (auto& v : r.v) v *= s;
  if (sign(s) < 0) std::reverse(r.v.begin(), r.v.end());
  return r;
}

Polygon translated(const Polygon& p, const Point& t) {
  Polygon r = p;
  for (auto& v : r.v) v += t;
  return r;
}

Scalar area(const Polygon& p) {
  if (!p.full()) return 0;
  Scalar a = 0;
  for (std::size_t i = 0; i < p.v.size(); ++i) {
    const Point& u = p.v[i];
    const Point& w = p.v[(i + 1) % p.v.size()];
    a += u[0] * w[1] - u[1] * w[0];
  }
  return a / 2;
}

bool contains(const Polygon& p, const Point& x) {
  if (p.v.size() == 1) return p.v[0] == x;
  if (p.v.size() == 2) {
    if (sign(cross(p.v[0], p.v[1], x)) != 0) return false;
    return sign(dot(x - p.v[0], p.v[1] - p.v[0])) >= 0 && sign(dot(x - p.v[1], p.v[0] - p.v[1])) >= 0;
  }
  for (std::size_t i = 0; i < p.v.size(); ++i)
    if (sign(cross(p.v[i], p.v[(i + 1) % p.v.size()], x)) < 0) return false;
  return true;
}

bool in_union(const Point& x, const std::vector<Polygon>& pieces) {
  for (const auto& p : pieces)
    if (contains(p, x)) return true;
  return false;
}

namespace {

template <class T>
T conv(const Scalar& s);
template <>
Scalar conv<Scalar>(const Scalar& s) {
  return s;
}
template <>
double conv<double>(const Scalar& s) {
  return s.get_d();
}

int sign_of(const Scalar& s) { return sign(s); }
int sign_of(double s) { return (s > 0) - (s < 0); }

template <class T>
struct Seg {
  T x0, y0, x1, y1;  // x0 < x1
  T at(const T& x) const { return y0 + (y1 - y0) * (x - x0) / (x1 - x0); }
};

template <class T>
struct Poly {
  std::vector<Seg<T>> edges;
  T xmin, xmax;
};

template <class T>
Poly<T> make_poly(const Polygon& p) {
  Poly<T> r;
  r.xmin = conv<T>(p.v[0][0]);
  r.xmax = r.xmin;
  for (std::size_t i = 0; i < p.v.size(); ++i) {
    const Point& a = p.v[i];
    const Point& b = p.v[(i + 1) % p.v.size()];
    T ax = conv<T>(a[0]), bx = conv<T>(b[0]);
    if (ax < r.xmin) r.xmin = ax;
    if (ax > r.xmax) r.xmax = ax;
    if (ax == bx) continue;
    if (ax < bx)
      r.edges.push_back({ax, conv<T>(a[1]), bx, conv<T>(b[1])});
    else
      r.edges.push_back({bx, conv<T>(b[1]), ax, conv<T>(a[1])});
  }
  return r;
}

template <class T>
bool section(const Poly<T>& p, const T& x, T& lo, T& hi) {
  if (!(p.xmin < x && x < p.xmax)) return false;
  bool have = false;
  for (const auto& e : p.edges) {
    if (!(e.x0 < x && x < e.x1)) continue;
    T y = e.at(x);
    if (!have) {
      lo = hi = y;
      have = true;
    } else {
      if (y < lo) lo = y;
      if (y > hi) hi = y;
    }
  }
  return have;
}

template <class T>
std::vector<T> events(const std::vector<Poly<T>>& polys) {
  std::vector<T> xs;
  std::vector<const Seg<T>*> segs;
  std::vector<std::size_t> owner;
  for (std::size_t k = 0; k < polys.size(); ++k)
    for (const auto& e : polys[k].edges) {
      xs.push_back(e.x0);
      xs.push_back(e.x1);
      segs.push_back(&e);
      owner.push_back(k);
    }
  for (std::size_t i = 0; i < segs.size(); ++i)
    for (std::size_t j = i + 1; j < segs.size(); ++j) {
      if (owner[i] == owner[j]) continue;
      const auto& a = *segs[i];
      const auto& b = *segs[j];
      T l = a.x0 < b.x0 ? b.x0 : a.x0;
      T r = a.x1 < b.x1 ? a.x1 : b.x1;
      if (!(l < r)) continue;
      T fl = a.at(l) - b.at(l), fr = a.at(r) - b.at(r);
      int sl = sign_of(fl), sr = sign_of(fr);
      if (sl == 0 || sr == 0 || sl == sr) continue;
      xs.push_back(l + (r - l) * fl / (fl - fr));
    }
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

template <class T>
void slab_intervals(const std::vector<Poly<T>>& pieces, const T& xm, std::vector<std::pair<T, T>>& iv) {
  iv.clear();
  T lo, hi;
  for (const auto& p : pieces)
    if (section(p, xm, lo, hi)) iv.emplace_back(lo, hi);
  std::sort(iv.begin(), iv.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
}

template <class T>
Cover run_cover(const Polygon& target, const std::vector<Polygon>& pieces, const T& eps) {
  Cover res;
  if (!target.full()) throw GeometryError("coverage target must be a full polygon");
  std::vector<Poly<T>> all;
  all.push_back(make_poly<T>(target));
  for (const auto& p : pieces)
    if (p.full()) all.push_back(make_poly<T>(p));
  std::vector<Poly<T>> ps(all.begin() + 1, all.end());
  auto xs = events(all);
  std::vector<std::pair<T, T>> iv;
  T scale = all[0].xmax - all[0].xmin;
  for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
    T xm = (xs[s] + xs[s + 1]) / 2;
    T tl{}, th{};
    if (!section(all[0], xm, tl, th)) continue;
    slab_intervals(ps, xm, iv);
    T reach = tl;
    bool gap = false;
    T gy;
    for (const auto& [lo, hi] : iv) {
      if (lo - reach > eps * scale && reach < th) {
        gap = true;
        gy = (reach + (lo < th ? lo : th)) / 2;
        break;
      }
      if (hi > reach) reach = hi;
      if (!(reach < th)) break;
    }
    if (!gap && th - reach > eps * scale) {
      gap = true;
      gy = (reach + th) / 2;
    }
    if (gap) {
      res.covered = false;
      if constexpr (std::is_same_v<T, double>)
        res.witness = Point{from_double_exact(xm), from_double_exact(gy)};
      else
        res.witness = Point{xm, gy};
      return res;
    }
  }
  res.covered = true;
  return res;
}

}  // namespace

Cover covers_exact(const Polygon& target, const std::vector<Polygon>& pieces) {
  return run_cover<Scalar>(target, pieces, Scalar(0));
}

Cover covers_float(const Polygon& target, const std::vector<Polygon>& pieces) {
  Cover c = run_cover<double>(target, pieces, 1e-12);
  if (!c.covered && c.witness) {
    if (!contains(target, *c.witness) || in_union(*c.witness, pieces)) c.witness.reset();
  }
  return c;
}

Scalar union_area(const std::vector<Polygon>& pieces) {
  std::vector<Poly<Scalar>> ps;
  for (const auto& p : pieces)
    if (p.full()) ps.push_back(make_poly<Scalar>(p));
  if (ps.empty()) return 0;
  auto xs = events(ps);
  std::vector<std::pair<Scalar, Scalar>> iv;
  Scalar total = 0;
  for (std::size_t s = 0; s + 1 < xs.size(); ++s) {
    Scalar xm = (xs[s] + xs[s + 1]) / 2;
    slab_intervals(ps, xm, iv);
    Scalar len = 0, cur_lo, cur_hi;
    bool open = false;
    for (const auto& [lo, hi] : iv) {
      if (!open) {
        cur_lo = lo;
        cur_hi = hi;
        open = true;
      } else if (lo > cur_hi) {
        len += cur_hi - cur_lo;
        cur_lo = lo;
        cur_hi = hi;
      } else if (hi > cur_hi) {
        cur_hi = hi;
      }
    }
    if (open) len += cur_hi - cur_lo;
    total += len * (xs[s + 1] - xs[s]);
  }
  return total;
}

}  // namespace nonconvex
