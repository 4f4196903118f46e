#include <gtest/gtest.h>

#include <cmath>

#include "nonconvex/coverage.hpp"
#include "nonconvex/measures.hpp"
#include "nonconvex/random.hpp"

using namespace nonconvex;

namespace {

Polygon square(const Scalar& x0, const Scalar& y0, const Scalar& s) {
  return convex_polygon({Point{x0, y0}, Point{x0 + s, y0}, Point{x0, y0 + s}, Point{x0 + s, y0 + s}});
}

}  // namespace

TEST(Polygon, HullAndArea) {
  Polygon p = convex_polygon({Point{0, 0}, Point{2, 0}, Point{1, 0}, Point{0, 2}, Point{frac(1, 2), frac(1, 2)}});
  EXPECT_EQ(p.v.size(), 3u);
  EXPECT_EQ(area(p), 2);
  EXPECT_TRUE(contains(p, Point{1, 0}));
  EXPECT_FALSE(contains(p, Point{2, 1}));
  Polygon seg = convex_polygon({Point{0, 0}, Point{1, 1}, Point{frac(1, 2), frac(1, 2)}});
  EXPECT_EQ(seg.v.size(), 2u);
  EXPECT_FALSE(seg.full());
  EXPECT_EQ(area(minkowski_sum(square(0, 0, 1), square(0, 0, 2))), 9);
  EXPECT_EQ(area(scaled(p, 3)), 18);
}

TEST(Coverage, UnionArea) {
  EXPECT_EQ(union_area({square(0, 0, 1), square(frac(1, 2), frac(1, 2), 1)}), frac(7, 4));
  EXPECT_EQ(union_area({square(0, 0, 2), square(frac(1, 2), frac(1, 2), 1)}), 4);
  Polygon t1 = convex_polygon({Point{0, 0}, Point{2, 0}, Point{0, 2}}), t2 = convex_polygon({Point{2, 2}, Point{2, 0}, Point{0, 2}});
  EXPECT_EQ(union_area({t1, t2}), 4);
}

TEST(Coverage, ExactAndFloatAgree) {
  Polygon target = square(0, 0, 2);
  std::vector<Polygon> four{square(0, 0, 1), square(1, 0, 1), square(0, 1, 1), square(1, 1, 1)};
  EXPECT_TRUE(covers_exact(target, four).covered);
  EXPECT_TRUE(covers_float(target, four).covered);
  four.pop_back();
  Cover c = covers_exact(target, four);
  ASSERT_FALSE(c.covered);
  ASSERT_TRUE(c.witness);
  EXPECT_TRUE(contains(target, *c.witness));
  EXPECT_FALSE(in_union(*c.witness, four));
  Cover f = covers_float(target, four);
  EXPECT_FALSE(f.covered);
  // A hairline crack between two pieces is still a hole.
  std::vector<Polygon> cracked{convex_polygon({Point{0, 0}, Point{1, 0}, Point{1, 2}, Point{0, 2}}),
                               convex_polygon({Point{1 + frac(1, 1000000), 0}, Point{2, 0}, Point{2, 2}, Point{1 + frac(1, 1000000), 2}})};
  EXPECT_FALSE(covers_exact(target, cracked).covered);
}

TEST(Coverage, RandomAgainstSampling) {
  Rng rng(19);
  for (int t = 0; t < 30; ++t) {
    Polygon target = convex_polygon(rng.point_set(2, 5).points());
    if (!target.full()) continue;
    std::vector<Polygon> pieces;
    for (int i = 0; i < 4; ++i) pieces.push_back(convex_polygon(rng.point_set(2, 4, -frac(1, 4), frac(5, 4)).points()));
    Cover c = covers_exact(target, pieces);
    if (!c.covered) {
      EXPECT_TRUE(contains(target, *c.witness));
      EXPECT_FALSE(in_union(*c.witness, pieces));
    } else {
      for (int s = 0; s < 200; ++s) {
        Point x = rng.point(2);
        if (contains(target, x)) EXPECT_TRUE(in_union(x, pieces));
      }
    }
  }
}

TEST(SchneiderC, AffinelyIndependentPointsGiveDimension) {
  Rng rng(5);
  for (int t = 0; t < 5; ++t) {
    PointSet a = rng.point_set(2, 3);
    if (!convex_hull(a).full_dimensional()) continue;
    std::vector<Polygon> pieces;
    for (const auto& p : a) pieces.push_back(Polygon{{p}});
    MeasureResult c = schneider_c(pieces);
    EXPECT_GE(c.lower, 2 - 1e-6);
    EXPECT_LE(c.upper, 2.0);
  }
  PointSet tet(3, {Point{0, 0, 0}, Point{1, 0, 0}, Point{0, 1, 0}, Point{0, 0, 1}});
  EXPECT_EQ(*schneider_c(tet).exact, 3);
}

TEST(SchneiderC, AffineInvariant) {
  Rng rng(33);
  for (int t = 0; t < 6; ++t) {
    PointSet a = rng.point_set(2, 5);
    if (!convex_hull(a).full_dimensional()) continue;
    std::vector<std::vector<Scalar>> m{{rng.rational(-2, 2), rng.rational(-2, 2)}, {rng.rational(-2, 2), rng.rational(-2, 2)}};
    if (m[0][0] * m[1][1] - m[0][1] * m[1][0] == 0) continue;
    PointSet b = a.transformed(m, rng.point(2, -5, 5));
    MeasureResult ca = schneider_c(a), cb = schneider_c(b);
    EXPECT_NEAR(ca.value, cb.value, 2e-6) << t;
    EXPECT_LE(ca.upper, 2 + 1e-6);
  }
}

TEST(SchneiderC, PointwiseGaugeFormIsALowerBound) {
  Rng rng(41);
  for (int t = 0; t < 6; ++t) {
    PointSet a = rng.point_set(2, 5);
    Polytope hull = convex_hull(a);
    if (!hull.full_dimensional()) continue;
    MeasureResult c = schneider_c(a);
    Point x = centroid(a.points());
    if (!hull.interior_contains(x)) continue;
    auto cx = c_pointwise(a, x);
    ASSERT_TRUE(cx);
    EXPECT_LE(cx->get_d(), c.upper + 1e-9);
  }
}

TEST(SchneiderC, HigherDimensionBounds) {
  Rng rng(3);
  PointSet a = rng.point_set(3, 6);
  MeasureResult c = schneider_c(a);
  EXPECT_LE(c.lower, c.upper);
  EXPECT_LE(c.upper, 3.0);
  EXPECT_GE(c.lower, 0.0);
}
