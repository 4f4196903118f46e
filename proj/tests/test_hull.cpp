#include <gtest/gtest.h>

#include <algorithm>

#include "nonconvex/combination.hpp"
#include "nonconvex/polytope.hpp"
#include "nonconvex/random.hpp"

using namespace nonconvex;

namespace {

Scalar cross(const Point& o, const Point& a, const Point& b) {
  return (a[0] - o[0]) * (b[1] - o[1]) - (a[1] - o[1]) * (b[0] - o[0]);
}

// Andrew's monotone chain, strict turns only.
std::vector<Point> monotone_chain(std::vector<Point> p) {
  std::sort(p.begin(), p.end());
  p.erase(std::unique(p.begin(), p.end()), p.end());
  if (p.size() < 3) return p;
  std::vector<Point> h(2 * p.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < p.size(); ++i) {
    while (k >= 2 && sgn(cross(h[k - 2], h[k - 1], p[i])) <= 0) --k;
    h[k++] = p[i];
  }
  for (std::size_t i = p.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && sgn(cross(h[k - 2], h[k - 1], p[i])) <= 0) --k;
    h[k++] = p[i];
  }
  h.resize(k - 1);
  return h;
}

Scalar shoelace(const std::vector<Point>& h) {
  Scalar a = 0;
  for (std::size_t i = 0; i < h.size(); ++i) {
    const Point& p = h[i];
    const Point& q = h[(i + 1) % h.size()];
    a += p[0] * q[1] - p[1] * q[0];
  }
  return abs(a) / 2;
}

std::vector<Point> sorted(std::vector<Point> v) {
  std::sort(v.begin(), v.end());
  return v;
}

// p is a vertex iff it is not in the hull of the others.
std::vector<Point> lp_vertices(const PointSet& a) {
  std::vector<Point> out;
  for (std::size_t i = 0; i < a.size(); ++i) {
    std::vector<Point> others;
    for (std::size_t j = 0; j < a.size(); ++j)
      if (j != i) others.push_back(a[j]);
    if (!in_hull(a[i], others).feasible) out.push_back(a[i]);
  }
  return out;
}

}  // namespace

TEST(Hull, SquareWithCenter) {
  PointSet a(2, {Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}, Point{frac(1, 2), frac(1, 2)}});
  Polytope p = convex_hull(a);
  EXPECT_EQ(p.vertices().size(), 4u);
  EXPECT_EQ(p.facets().size(), 4u);
  EXPECT_TRUE(p.full_dimensional());
  EXPECT_EQ(volume(p), Scalar(1));
  EXPECT_TRUE(p.interior_contains(Point{frac(1, 2), frac(1, 2)}));
  EXPECT_FALSE(p.interior_contains(Point{0, frac(1, 2)}));
  EXPECT_TRUE(p.contains(Point{0, frac(1, 2)}));
  EXPECT_FALSE(p.contains(Point{frac(-1, 100), frac(1, 2)}));
}

TEST(Hull, SimplexVolumes) {
  EXPECT_EQ(volume(convex_hull(PointSet(2, {Point{0, 0}, Point{1, 0}, Point{0, 1}}))), frac(1, 2));
  for (std::size_t n = 1; n <= 5; ++n) {
    std::vector<Point> v{zero_point(n)};
    for (std::size_t i = 0; i < n; ++i) v.push_back(unit_point(n, i));
    Scalar fact = 1;
    for (std::size_t i = 2; i <= n; ++i) fact *= Scalar(long(i));
    EXPECT_EQ(volume(convex_hull(v)), 1 / fact) << n;
  }
}

TEST(Hull, MatchesMonotoneChain) {
  Rng rng(101);
  for (int t = 0; t < 100; ++t) {
    PointSet a = rng.point_set(2, 3 + t % 15);
    std::vector<Point> h = monotone_chain(a.points());
    Polytope p = convex_hull(a);
    EXPECT_EQ(sorted(p.vertices()), sorted(h)) << t;
    if (h.size() >= 3) {
      EXPECT_EQ(volume(p), shoelace(h)) << t;
      EXPECT_EQ(p.facets().size(), h.size());
    }
  }
}

TEST(Hull, MatchesLpVertexFilterInR3) {
  Rng rng(7);
  for (int t = 0; t < 4; ++t) {
    PointSet a = rng.point_set(3, 50);
    Polytope p = convex_hull(a);
    EXPECT_EQ(sorted(p.vertices()), sorted(lp_vertices(a)));
    EXPECT_EQ(sorted(extreme_points_lp(a.points())), sorted(p.vertices()));
  }
}

TEST(Hull, FacetsAndTriangulationAreConsistent) {
  Rng rng(13);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 2 + t % 3;
    PointSet a = rng.point_set(n, n + 3 + t % 6);
    Polytope p = convex_hull(a);
    if (!p.full_dimensional()) continue;
    for (const auto& v : p.vertices()) {
      std::size_t tight = 0;
      for (const auto& f : p.facets()) {
        Scalar lhs = dot(f.normal, v);
        EXPECT_LE(lhs, f.offset);
        tight += lhs == f.offset;
      }
      EXPECT_GE(tight, n);
    }
    for (const auto& x : a) EXPECT_TRUE(p.contains(x));
    // Simplex volumes recomputed one by one must add up to the hull volume.
    Scalar tri = 0;
    for (const auto& s : p.triangulation()) {
      std::vector<Point> v;
      for (auto i : s) v.push_back(p.vertices()[i]);
      tri += volume(convex_hull(v));
    }
    EXPECT_EQ(tri, volume(p));
  }
}

TEST(Hull, HullOfSumIsSumOfHulls) {
  Rng rng(21);
  for (int t = 0; t < 30; ++t) {
    std::size_t n = 2 + t % 2;
    PointSet a = rng.point_set(n, 5), b = rng.point_set(n, 4);
    Polytope lhs = convex_hull(minkowski_sum(a, b));
    Polytope rhs = minkowski_sum(convex_hull(a), convex_hull(b));
    EXPECT_EQ(sorted(lhs.vertices()), sorted(rhs.vertices())) << t;
  }
}

TEST(Hull, AverageSetKeepsVertices) {
  Rng rng(3);
  for (int t = 0; t < 10; ++t) {
    PointSet a = rng.point_set(2, 6);
    EXPECT_EQ(sorted(convex_hull(average_set(a, 3)).vertices()), sorted(convex_hull(a).vertices()));
  }
}

TEST(Hull, ScalingMultipliesVolume) {
  Rng rng(9);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 2 + t % 3;
    PointSet a = rng.point_set(n, n + 4);
    Polytope p = convex_hull(a);
    Scalar lambda = rng.rational(frac(1, 4), 3);
    EXPECT_EQ(volume(convex_hull(a.scaled(lambda))), pow(lambda, unsigned(n)) * volume(p));
    EXPECT_EQ(volume(convex_hull(a.translated(rng.point(n)))), volume(p));
  }
}

TEST(Hull, DegenerateInputs) {
  PointSet seg(3, {Point{0, 0, 0}, Point{1, 1, 1}, Point{frac(1, 2), frac(1, 2), frac(1, 2)}});
  Polytope p = convex_hull(seg);
  EXPECT_EQ(p.affine_dim(), 1u);
  EXPECT_EQ(p.vertices().size(), 2u);
  EXPECT_EQ(volume(p), Scalar(0));
  EXPECT_TRUE(p.contains(Point{frac(1, 4), frac(1, 4), frac(1, 4)}));
  EXPECT_FALSE(p.contains(Point{frac(1, 4), frac(1, 4), 0}));
  PointSet single(2, {Point{1, 2}});
  EXPECT_EQ(convex_hull(single).affine_dim(), 0u);
  // A planar square sitting in R^3.
  PointSet sq(3, {Point{0, 0, 1}, Point{1, 0, 1}, Point{0, 1, 1}, Point{1, 1, 1}, Point{frac(1, 3), frac(1, 3), 1}});
  Polytope q = convex_hull(sq);
  EXPECT_EQ(q.affine_dim(), 2u);
  EXPECT_EQ(q.vertices().size(), 4u);
  EXPECT_EQ(q.relative_facets().size(), 4u);
}
