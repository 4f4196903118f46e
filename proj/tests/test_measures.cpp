#include <gtest/gtest.h>

#include <cmath>

#include "nonconvex/measures.hpp"
#include "nonconvex/random.hpp"

using namespace nonconvex;

namespace {

PointSet line(std::initializer_list<Scalar> xs) {
  std::vector<Point> v;
  for (const auto& x : xs) v.push_back(Point{x});
  return PointSet(1, v);
}

// Plain-double d_A(x) = min_a |x - a|.
double dist_to_set(const PointSet& a, double x, double y) {
  double best = INFINITY;
  for (const auto& p : a) best = std::min(best, std::hypot(to_double(p[0]) - x, to_double(p[1]) - y));
  return best;
}

bool in_triangle_hull(const Polytope& hull, double x, double y) {
  for (const auto& f : hull.facets())
    if (to_double(f.normal[0]) * x + to_double(f.normal[1]) * y > to_double(f.offset) + 1e-15) return false;
  return true;
}

// Max of a function over a square grid clipped to the hull; spacing returned through h.
template <class F>
double grid_max(const PointSet& a, const Polytope& hull, int g, F f, double* h) {
  double lo[2] = {INFINITY, INFINITY}, hi[2] = {-INFINITY, -INFINITY};
  for (const auto& p : a)
    for (int i = 0; i < 2; ++i) {
      lo[i] = std::min(lo[i], to_double(p[i]));
      hi[i] = std::max(hi[i], to_double(p[i]));
    }
  *h = std::max(hi[0] - lo[0], hi[1] - lo[1]) / g;
  double best = 0;
  for (int i = 0; i <= g; ++i)
    for (int j = 0; j <= g; ++j) {
      double x = lo[0] + (hi[0] - lo[0]) * i / g, y = lo[1] + (hi[1] - lo[1]) * j / g;
      if (in_triangle_hull(hull, x, y)) best = std::max(best, f(x, y));
    }
  return best;
}

// Circumcenters of all subsets of size 1..3 of a planar set, exact.
std::vector<Point> planar_circumcenters(const PointSet& a) {
  std::vector<Point> out(a.begin(), a.end());
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = i + 1; j < a.size(); ++j) {
      out.push_back((a[i] + a[j]) / 2);
      for (std::size_t k = j + 1; k < a.size(); ++k) {
        Point b = a[j] - a[i], c = a[k] - a[i];
        Scalar d = 2 * (b[0] * c[1] - b[1] * c[0]);
        if (d == 0) continue;
        Scalar bb = norm2(b), cc = norm2(c);
        out.push_back(a[i] + Point{(c[1] * bb - b[1] * cc) / d, (b[0] * cc - c[0] * bb) / d});
      }
    }
  return out;
}

}  // namespace

TEST(VolumeDeficit, Examples) {
  EXPECT_EQ(*volume_deficit(line({0, 1})).exact, Scalar(1));
  EXPECT_EQ(*volume_deficit(single_box(Point{Scalar(0)}, Point{Scalar(1)})).exact, Scalar(0));
  BoxUnion gap(1, {make_box(Point{Scalar(0)}, Point{Scalar(1)}), make_box(Point{Scalar(2)}, Point{Scalar(3)})});
  EXPECT_EQ(*volume_deficit(gap).exact, Scalar(1));
  PointSet tri(2, {Point{0, 0}, Point{2, 0}, Point{0, 2}});
  EXPECT_EQ(*volume_deficit(tri).exact, Scalar(2));
  // L-shape: hull is the square with one corner cut, area 3 + 1/2.
  BoxUnion l(2, {make_box(Point{0, 0}, Point{2, 1}), make_box(Point{0, 0}, Point{1, 2})});
  EXPECT_EQ(*volume_deficit(l).exact, frac(1, 2));
}

TEST(VolumeDeficit, ScalesByPowerOfDimension) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    BoxUnion u = rng.box_union(2, 3);
    auto a = volume_deficit(u), b = volume_deficit(u.scaled(frac(3, 2)).translated(Point{1, -2}));
    ASSERT_TRUE(a.exact && b.exact);
    EXPECT_EQ(*b.exact, frac(9, 4) * *a.exact);
  }
}

TEST(Hausdorff, OneDimensional) {
  EXPECT_EQ(*hausdorff_from_hull(line({0, 1}), Gauge::euclidean(1)).exact, frac(1, 2));
  EXPECT_EQ(*hausdorff_from_hull(line({0, frac(1, 4), frac(1, 2), frac(3, 4), 1}), Gauge::euclidean(1)).exact, frac(1, 8));
  // d^K for K = [-1, 2]: a gap g is closed from both sides with weights 1 and 2.
  MeasureResult dk = hausdorff_from_hull(line({0, 3}), Gauge::interval(1, 2));
  EXPECT_EQ(*dk.exact, Scalar(1));
}

TEST(Hausdorff, NearEquilateralTriangleIsCircumradius) {
  Scalar h = from_double_exact(std::sqrt(3.0) / 2);
  PointSet tri(2, {Point{0, 0}, Point{1, 0}, Point{frac(1, 2), h}});
  MeasureResult d = hausdorff_from_hull(tri, Gauge::euclidean(2));
  ASSERT_TRUE(d.is_exact());
  EXPECT_NEAR(d.value, 1 / std::sqrt(3.0), 1e-9);
  double step;
  double g = grid_max(tri, convex_hull(tri), 400, [&](double x, double y) { return dist_to_set(tri, x, y); }, &step);
  EXPECT_LE(g, d.value + 1e-12);
  EXPECT_GE(g, d.value - step);
}

TEST(Hausdorff, PlanarMatchesGridOracle) {
  Rng rng(29);
  for (int t = 0; t < 20; ++t) {
    PointSet a = rng.point_set(2, 4 + t % 5);
    Polytope hull = convex_hull(a);
    if (!hull.full_dimensional()) continue;
    MeasureResult d = hausdorff_from_hull(a, Gauge::euclidean(2));
    ASSERT_TRUE(d.is_exact()) << t;
    double step;
    double g = grid_max(a, hull, 200, [&](double x, double y) { return dist_to_set(a, x, y); }, &step);
    EXPECT_LE(g, d.value + 1e-9) << t;
    EXPECT_GE(g, d.value - step) << t;
  }
}

TEST(Hausdorff, InclusionMonotone) {
  PointSet sq(2, {Point{0, 0}, Point{2, 0}, Point{0, 2}, Point{2, 2}});
  PointSet dense = sq.united(PointSet(2, {Point{1, 0}, Point{0, 1}, Point{2, 1}, Point{1, 2}, Point{1, 1}}));
  double a = hausdorff_from_hull(sq, Gauge::euclidean(2)).value, b = hausdorff_from_hull(dense, Gauge::euclidean(2)).value;
  EXPECT_NEAR(a, std::sqrt(2.0), 1e-12);
  EXPECT_LT(b, a);
}

TEST(Hausdorff, ThreeDimensionalBounds) {
  Rng rng(8);
  for (int t = 0; t < 5; ++t) {
    PointSet a = rng.point_set(3, 6);
    MeasureResult d = hausdorff_from_hull(a, Gauge::euclidean(3));
    MeasureResult v = effective_stddev_v(a).result;
    EXPECT_LE(d.lower, d.upper + 1e-12);
    EXPECT_NEAR(d.upper, v.value, 1e-12);
  }
}

TEST(Hausdorff, CubeGaugePlanarMatchesGrid) {
  Rng rng(61);
  Gauge cube = Gauge::cube(2);
  for (int t = 0; t < 6; ++t) {
    PointSet a = rng.point_set(2, 5);
    Polytope hull = convex_hull(a);
    if (!hull.full_dimensional()) continue;
    MeasureResult d = hausdorff_from_hull(a, cube);
    double step;
    auto linf = [&](double x, double y) {
      double best = INFINITY;
      for (const auto& p : a) best = std::min(best, std::max(std::fabs(to_double(p[0]) - x), std::fabs(to_double(p[1]) - y)));
      return best;
    };
    double g = grid_max(a, hull, 200, linf, &step);
    EXPECT_LE(g, d.upper + 1e-9) << t;
    EXPECT_GE(g, d.lower - step) << t;
    EXPECT_LE(d.upper - d.lower, 1e-5) << t;
  }
}

TEST(EffectiveStddev, OneDimensional) {
  VResult v = effective_stddev_v(line({0, 1}));
  EXPECT_EQ(*v.result.exact_square, frac(1, 4));
  ASSERT_TRUE(v.maximizer);
  EXPECT_EQ(*v.maximizer, Point{frac(1, 2)});
  EXPECT_EQ(*v_pointwise2(line({0, 1}), Point{frac(1, 2)}), frac(1, 4));
}

TEST(EffectiveStddev, MatchesCircumcenterOracle) {
  // The maximizer of v_A is the circumcenter of some face of an empty-sphere simplex,
  // so the best pointwise LP value over all circumcenters is v^2 exactly.
  Rng rng(71);
  for (int t = 0; t < 15; ++t) {
    PointSet a = rng.point_set(2, 4 + t % 4);
    Polytope hull = convex_hull(a);
    Scalar best = 0;
    for (const auto& c : planar_circumcenters(a)) {
      if (!hull.contains(c)) continue;
      if (auto v = v_pointwise2(a, c)) best = max(best, *v);
    }
    VResult v = effective_stddev_v(a);
    ASSERT_TRUE(v.result.exact_square);
    EXPECT_EQ(*v.result.exact_square, best) << t;
    EXPECT_EQ(*v.result.exact_square, *effective_stddev_v(a, default_config(), VRoute::Lifted).result.exact_square);
  }
}

TEST(EffectiveStddev, RandomSevenPointsAgainstGrid) {
  Rng rng(7);
  PointSet a = rng.point_set(2, 7);
  Polytope hull = convex_hull(a);
  Scalar v2 = *effective_stddev_v(a).result.exact_square;
  double best = 0, step = 0;
  for (int i = 0; i <= 40; ++i)
    for (int j = 0; j <= 40; ++j) {
      Point x{frac(i, 40), frac(j, 40)};
      if (!hull.contains(x)) continue;
      Scalar w = *v_pointwise2(a, x);
      EXPECT_LE(w, v2);
      best = std::max(best, w.get_d());
    }
  step = 1.0 / 40;
  // v_A^2 = R^2 - |x - c|^2 near the top, so the grid misses by at most the squared half-diagonal.
  EXPECT_GE(best, v2.get_d() - step * step);
}

TEST(EffectiveStddev, TangentSegmentOfDiskWithTwoPoints) {
  // A_k = disk plus (1+1/k, +-1/k). The midpoint of the tangent segment from (1+1/k, 1/k)
  // has v^2 = (k+1)/(2k^2), which is r(A_k)^2. Tangent points are rational when 2(k+1) is a square.
  for (long k : {1L, 7L, 17L}) {
    Point p{1 + frac(1, k), frac(1, k)};
    Scalar s = *exact_sqrt(norm2(p) - 1), n2 = norm2(p);
    Point q{(p[0] - s * p[1]) / n2, (p[1] + s * p[0]) / n2};
    ASSERT_EQ(norm2(q), 1);
    std::vector<Point> pts{p, Point{p[0], -p[1]}, q, Point{q[0], -q[1]}};
    for (long j = -30; j <= 30; ++j) {
      Scalar t = frac(j, 30), den = 1 + t * t;
      pts.push_back(Point{(1 - t * t) / den, 2 * t / den});
    }
    PointSet a(2, pts);
    EXPECT_EQ(*v_pointwise2(a, (p + q) / 2), Scalar(k + 1) / (2 * k * k)) << k;
  }
}

TEST(EffectiveStddev, EnumerationBudgetFlag) {
  Config cfg;
  cfg.simplex_budget = 5;
  Rng rng(2);
  PointSet a = rng.point_set(2, 12);
  EXPECT_THROW(effective_stddev_v(a, cfg, VRoute::Enumerate), BudgetExceeded);
  MeasureResult v = effective_stddev_v(a, cfg).result;
  ASSERT_EQ(v.flags.size(), 1u);
  EXPECT_EQ(*v.exact_square, *effective_stddev_v(a, default_config(), VRoute::Enumerate).result.exact_square);
}

TEST(Schneider, OneDimensional) {
  EXPECT_EQ(*schneider_c(line({0, frac(1, 2), 1})).exact, frac(1, 2));
  EXPECT_EQ(*schneider_c(line({0, 1})).exact, Scalar(1));
  EXPECT_EQ(*schneider_c(line({0, 1, 3})).exact, frac(2, 3));
  for (int k = 1; k <= 16; ++k) EXPECT_EQ(*schneider_c(average_set(line({0, 1}), k)).exact, frac(1, k));
}

TEST(Schneider, ThreePointsViaBisection) {
  std::vector<Polygon> pieces{Polygon{{Point{0, 0}}}, Polygon{{Point{3, 1}}}, Polygon{{Point{1, 2}}}};
  MeasureResult c = schneider_c(pieces);
  EXPECT_GE(c.lower, 2 - 1e-6);
  EXPECT_LE(c.upper, 2.0);
  EXPECT_LE(c.upper - c.lower, 1e-6);
}

TEST(Schneider, ShavedTriangle) {
  for (long k : {3L, 5L, 10L}) {
    Point ak{frac(1, 2) - frac(1, k), frac(1, 2) - frac(1, k)};
    std::vector<Polygon> pieces{convex_polygon({Point{0, 0}, Point{1, 0}, ak}), convex_polygon({Point{0, 0}, Point{0, 1}, ak})};
    MeasureResult c = schneider_c(pieces);
    EXPECT_NEAR(c.lower, 1, 1e-6) << k;
    EXPECT_NEAR(c.upper, 1, 1e-6) << k;
  }
}

TEST(Schneider, ConvexSetGivesZero) {
  std::vector<Polygon> pieces{convex_polygon({Point{0, 0}, Point{2, 0}, Point{0, 2}})};
  EXPECT_LE(schneider_c(pieces).upper, 1e-6);
  PointSet single(2, {Point{1, 1}});
  EXPECT_EQ(*schneider_c(single).exact, 0);
}

TEST(MeasureSuite, TwoPointRow) {
  MeasureRow row = measure_suite(line({0, 1}), Gauge::euclidean(1));
  EXPECT_EQ(*row.find("delta")->exact, 1);
  EXPECT_EQ(*row.find("d")->exact, frac(1, 2));
  EXPECT_EQ(*row.find("c")->exact, 1);
  EXPECT_EQ(*row.find("v")->exact, frac(1, 2));
  EXPECT_NEAR(row.find("R")->value, 0.5, 1e-12);
  for (const auto& m : row.measures) {
    EXPECT_LE(m.lower, m.value);
    EXPECT_LE(m.value, m.upper);
  }
}

TEST(MeasureSuite, SelectedMeasuresOnly) {
  MeasureRow row = measure_suite(line({0, 1, 3}), Gauge::euclidean(1), default_config(), {"c"});
  ASSERT_EQ(row.measures.size(), 1u);
  EXPECT_EQ(row.measures[0].measure, "c");
}

TEST(MeasureSuite, BoxUnionRow) {
  BoxUnion u(1, {make_box(Point{Scalar(0)}, Point{Scalar(1)}), make_box(Point{Scalar(2)}, Point{Scalar(3)})});
  MeasureRow row = measure_suite(u);
  EXPECT_EQ(*row.find("delta")->exact, 1);
  EXPECT_EQ(*row.find("d")->exact, frac(1, 2));
  EXPECT_EQ(*row.find("c")->exact, frac(1, 3));
}
