#include <algorithm>
#include <cmath>
#include <functional>
#include <sstream>

#include "nonconvex/ball.hpp"
#include "nonconvex/measures.hpp"

namespace nonconvex {

namespace {

enum class Probe { Covered, Uncovered, Unknown };

struct Bracket {
  Scalar lo, hi;
  std::optional<Point> witness;  // uncovered point at lo
  std::size_t exact_checks = 0;
};

// Shrinks [lo, hi] around the threshold of a monotone coverage predicate.
// Invariant: lo is certified uncovered (or is the left end), hi is certified covered.
// Float probes steer; only exact checks move hi, only exact-verified witnesses move lo.
Bracket certified_bisection(Scalar lo, Scalar hi, double tol,
                            const std::function<Probe(const Scalar&, std::optional<Point>&)>& fast,
                            const std::function<bool(const Scalar&, std::optional<Point>&)>& exact) {
  Bracket b{lo, hi, std::nullopt, 0};
  std::vector<Scalar> pending;  // float-covered mids, decreasing
  Scalar top = hi;
  while (Scalar(top - b.lo).get_d() > tol) {
    Scalar mid = (b.lo + top) / 2;
    std::optional<Point> w;
    Probe p = fast(mid, w);
    if (p == Probe::Uncovered) {
      b.lo = mid;
      b.witness = w;
    } else if (p == Probe::Covered) {
      pending.push_back(mid);
      top = mid;
    } else {
      ++b.exact_checks;
      if (exact(mid, w)) {
        b.hi = top = mid;
        pending.clear();
      } else {
        b.lo = mid;
        b.witness = w;
      }
    }
  }
  // Certify the smallest float-covered mid that survives an exact check.
  for (auto it = pending.rbegin(); it != pending.rend(); ++it) {
    ++b.exact_checks;
    std::optional<Point> w;
    if (exact(*it, w)) {
      b.hi = *it;
      break;
    }
    b.lo = *it;
    b.witness = w;
  }
  while (Scalar(b.hi - b.lo).get_d() > tol) {
    Scalar mid = (b.lo + b.hi) / 2;
    std::optional<Point> w;
    ++b.exact_checks;
    if (exact(mid, w)) {
      b.hi = mid;
    } else {
      b.lo = mid;
      b.witness = w;
    }
  }
  return b;
}

Probe from_cover(const Cover& c, std::optional<Point>& w) {
  if (c.covered) return Probe::Covered;
  if (c.witness) {
    w = c.witness;
    return Probe::Uncovered;
  }
  return Probe::Unknown;
}

std::vector<Point> pivot_points(const PointSet& a, const AffineFrame& f) {
  std::vector<Point> r;
  for (const auto& p : a) r.push_back(project_coords(p, f.pivot_coords));
  return r;
}

double binom(std::size_t n, std::size_t k) {
  if (k > n) return 0;
  double r = 1;
  for (std::size_t i = 1; i <= k; ++i) r = r * double(n - k + i) / double(i);
  return r;
}

// Planar c for a union of convex pieces with hull q.
MeasureResult planar_c(const std::vector<Polygon>& pieces, const Polygon& q, const Config& cfg) {
  if (covers_exact(q, pieces).covered) {
    MeasureResult r = MeasureResult::from_exact("c", 0);
    r.certificate = "union is convex";
    return r;
  }
  auto build = [&](const Scalar& lam, Polygon& target, std::vector<Polygon>& ps) {
    target = scaled(q, 1 + lam);
    Polygon lq = scaled(q, lam);
    ps.clear();
    for (const auto& p : pieces) ps.push_back(minkowski_sum(p, lq));
  };
  auto fast = [&](const Scalar& lam, std::optional<Point>& w) {
    Polygon t;
    std::vector<Polygon> ps;
    build(lam, t, ps);
    return from_cover(covers_float(t, ps), w);
  };
  auto exact = [&](const Scalar& lam, std::optional<Point>& w) {
    Polygon t;
    std::vector<Polygon> ps;
    build(lam, t, ps);
    Cover c = covers_exact(t, ps);
    w = c.witness;
    return c.covered;
  };
  Scalar hi = 2;
  std::optional<Point> w;
  if (!exact(hi, w)) throw GeometryError("schneider_c: coverage at lambda = 2 failed");
  Bracket b = certified_bisection(0, hi, cfg.bisection_tol, fast, exact);
  MeasureResult r = MeasureResult::bounds("c", b.lo.get_d(), b.hi.get_d());
  std::ostringstream os;
  os << "A + " << b.hi.get_str() << " conv A is convex (exact coverage)";
  if (b.witness) os << "; at lambda = " << b.lo.get_str() << " the point " << to_string(*b.witness) << " is uncovered";
  r.certificate = os.str();
  r.flags.push_back("certified bracket");
  return r;
}

}  // namespace

MeasureResult schneider_c(const std::vector<Polygon>& pieces, const Config& cfg) {
  if (pieces.empty()) throw GeometryError("schneider_c: no pieces");
  std::vector<Point> all;
  for (const auto& p : pieces) all.insert(all.end(), p.v.begin(), p.v.end());
  Polygon q = convex_polygon(all);
  if (!q.full()) throw GeometryError("schneider_c: union of pieces is not full-dimensional");
  return planar_c(pieces, q, cfg);
}

MeasureResult schneider_c(const PointSet& a, const Config& cfg) {
  AffineFrame frame = affine_frame(a.points());
  std::size_t m = frame.dim();
  if (m == 0) return MeasureResult::from_exact("c", 0);
  if (m == 1) {
    const Point& u = frame.directions[0];
    std::vector<Scalar> t;
    for (const auto& p : a) t.push_back(dot(p - frame.origin, u));
    std::sort(t.begin(), t.end());
    Scalar gap = 0;
    for (std::size_t i = 1; i < t.size(); ++i) gap = max(gap, t[i] - t[i - 1]);
    MeasureResult r = MeasureResult::from_exact("c", gap / (t.back() - t.front()));
    r.certificate = "largest gap over width";
    return r;
  }
  if (a.size() == m + 1) {
    MeasureResult r = MeasureResult::from_exact("c", Scalar(static_cast<long>(m)));
    r.certificate = "vertex set of a simplex";
    return r;
  }
  if (m == 2) {
    std::vector<Point> pts = pivot_points(a, frame);
    std::vector<Polygon> pieces;
    for (const auto& p : pts) pieces.push_back(Polygon{{p}});
    MeasureResult r = planar_c(pieces, convex_polygon(pts), cfg);
    return r;
  }
  // Higher dimension: pointwise lower bound at candidate points, upper bound m.
  Polytope hull = convex_hull(a);
  std::vector<Point> cands;
  cands.push_back(centroid(a.points()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size() && binom(a.size(), 2) <= double(cfg.candidate_budget); ++j)
      cands.push_back((a[i] + a[j]) / 2);
  Scalar best = 0;
  Point at = cands[0];
  for (const auto& x : cands) {
    if (!hull.interior_contains(x)) continue;
    if (auto v = c_pointwise(a, x); v && *v > best) {
      best = *v;
      at = x;
    }
  }
  MeasureResult r = MeasureResult::bounds("c", best.get_d(), double(m));
  r.certificate = "lower bound at x = " + to_string(at) + "; upper bound from dimension";
  r.flags.push_back("two-sided bounds");
  return r;
}

MeasureResult gauge_distance_planar(const PointSet& a, const Gauge& k, const Config& cfg) {
  if (a.dim() != 2 || k.dim() != 2) throw DimensionMismatch("gauge_distance_planar: planar input required");
  if (k.is_euclidean()) throw GeometryError("gauge_distance_planar: polygonal gauge required");
  Polygon q = convex_polygon(a.points());
  if (!q.full()) throw GeometryError("gauge_distance_planar: set is not full-dimensional");
  Polygon kp = convex_polygon(k.body().vertices());
  auto pieces = [&](const Scalar& t) {
    Polygon tk = scaled(kp, t);
    std::vector<Polygon> ps;
    for (const auto& p : a) ps.push_back(translated(tk, p));
    return ps;
  };
  auto fast = [&](const Scalar& t, std::optional<Point>& w) { return from_cover(covers_float(q, pieces(t)), w); };
  auto exact = [&](const Scalar& t, std::optional<Point>& w) {
    Cover c = covers_exact(q, pieces(t));
    w = c.witness;
    return c.covered;
  };
  Scalar hi = 0;
  for (const auto& v : q.v) hi = max(hi, k.norm_exact(v - a[0]));
  Bracket b = certified_bisection(0, hi, cfg.bisection_tol * std::max(1.0, hi.get_d()), fast, exact);
  MeasureResult r = MeasureResult::bounds("dK", b.lo.get_d(), b.hi.get_d());
  std::ostringstream os;
  os << "conv A covered by A + " << b.hi.get_str() << " K (exact)";
  if (b.witness) os << "; at t = " << b.lo.get_str() << " the point " << to_string(*b.witness) << " is uncovered";
  r.certificate = os.str();
  r.flags.push_back("certified bracket");
  return r;
}

}  // namespace nonconvex
