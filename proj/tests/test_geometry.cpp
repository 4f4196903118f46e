#include <gtest/gtest.h>

#include <bit>
#include <cmath>
#include <functional>
#include <numeric>
#include <random>

#include "nonconvex/ball.hpp"
#include "nonconvex/box_union.hpp"
#include "nonconvex/combination.hpp"
#include "nonconvex/gauge.hpp"
#include "nonconvex/random.hpp"

using namespace nonconvex;

namespace {

PointSet line(std::initializer_list<long> xs) {
  std::vector<Point> v;
  for (long x : xs) v.push_back(Point{Scalar(x)});
  return PointSet(1, v);
}

PointSet triangle() { return PointSet(2, {Point{0, 0}, Point{1, 0}, Point{0, 1}}); }

// Inclusion-exclusion over all subsets of boxes; intersections of boxes are boxes.
Scalar inclusion_exclusion(const BoxUnion& u) {
  std::size_t m = u.size(), n = u.dim();
  Scalar total = 0;
  for (unsigned mask = 1; mask < (1u << m); ++mask) {
    Point lo(n), hi(n);
    bool first = true, empty = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (!(mask >> i & 1u)) continue;
      for (std::size_t j = 0; j < n; ++j) {
        if (first) {
          lo[j] = u[i].lo[j];
          hi[j] = u[i].hi[j];
        } else {
          lo[j] = max(lo[j], u[i].lo[j]);
          hi[j] = min(hi[j], u[i].hi[j]);
        }
      }
      first = false;
    }
    Scalar v = 1;
    for (std::size_t j = 0; j < n; ++j) {
      if (hi[j] <= lo[j]) empty = true;
      else v *= hi[j] - lo[j];
    }
    if (empty) continue;
    total += (std::popcount(mask) % 2 ? 1 : -1) * v;
  }
  return total;
}

// Circumcenter of a subset in its affine hull, plain doubles.
bool circumcenter(const std::vector<std::vector<double>>& s, std::vector<double>& c) {
  std::size_t m = s.size() - 1, n = s[0].size();
  std::vector<std::vector<double>> g(m, std::vector<double>(m + 1, 0));
  std::vector<std::vector<double>> d(m, std::vector<double>(n));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) d[i][j] = s[i + 1][j] - s[0][j];
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) g[i][k] = std::inner_product(d[i].begin(), d[i].end(), d[k].begin(), 0.0);
    g[i][m] = g[i][i] / 2;
  }
  for (std::size_t col = 0; col < m; ++col) {
    std::size_t p = col;
    for (std::size_t r = col + 1; r < m; ++r)
      if (std::fabs(g[r][col]) > std::fabs(g[p][col])) p = r;
    if (std::fabs(g[p][col]) < 1e-12) return false;
    std::swap(g[p], g[col]);
    for (std::size_t r = 0; r < m; ++r) {
      if (r == col) continue;
      double f = g[r][col] / g[col][col];
      for (std::size_t k = col; k <= m; ++k) g[r][k] -= f * g[col][k];
    }
  }
  c = s[0];
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) c[j] += g[i][m] / g[i][i] * d[i][j];
  return true;
}

// Smallest circumball over all subsets of size <= n+1 that encloses everything.
double brute_force_radius(const std::vector<std::vector<double>>& pts) {
  std::size_t n = pts[0].size(), m = pts.size();
  double best = INFINITY;
  std::vector<std::size_t> idx;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (!idx.empty()) {
      std::vector<std::vector<double>> s;
      for (auto i : idx) s.push_back(pts[i]);
      std::vector<double> c;
      if (s.size() == 1 ? (c = s[0], true) : circumcenter(s, c)) {
        double r = 0;
        for (const auto& p : s) r = std::max(r, std::sqrt(std::inner_product(p.begin(), p.end(), c.begin(), 0.0, std::plus<>(), [](double a, double b) { return (a - b) * (a - b); })));
        bool ok = true;
        for (const auto& p : pts) {
          double dd = 0;
          for (std::size_t j = 0; j < n; ++j) dd += (p[j] - c[j]) * (p[j] - c[j]);
          if (std::sqrt(dd) > r + 1e-9) ok = false;
        }
        if (ok) best = std::min(best, r);
      }
    }
    if (idx.size() == n + 1) return;
    for (std::size_t i = start; i < m; ++i) {
      idx.push_back(i);
      rec(i + 1);
      idx.pop_back();
    }
  };
  rec(0);
  return best;
}

Scalar leibniz(const Matrix& m) {
  std::size_t n = m.size();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Scalar total = 0;
  do {
    int inv = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inv += perm[i] > perm[j];
    Scalar t = inv % 2 ? -1 : 1;
    for (std::size_t i = 0; i < n; ++i) t *= m[i][perm[i]];
    total += t;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

}  // namespace

TEST(PointSet, DeduplicatesAndSorts) {
  PointSet a(1, {Point{Scalar(2)}, Point{Scalar(0)}, Point{Scalar(2)}});
  EXPECT_EQ(a.size(), 2u);
  EXPECT_EQ(a[0], Point{Scalar(0)});
  EXPECT_THROW(PointSet(2, {Point{Scalar(1)}}), DimensionMismatch);
  EXPECT_THROW(PointSet(1, {}), GeometryError);
}

TEST(MinkowskiSum, SmallExamples) {
  EXPECT_EQ(minkowski_sum(line({0, 1}), line({0, 1})), line({0, 1, 2}));
  PointSet a(2, {Point{0, 0}, Point{1, 0}}), b(2, {Point{0, 0}, Point{0, 1}});
  EXPECT_EQ(minkowski_sum(a, b), PointSet(2, {Point{0, 0}, Point{1, 0}, Point{0, 1}, Point{1, 1}}));
  PointSet t = triangle();
  PointSet shifted = minkowski_sum(t, PointSet(2, {Point{frac(1, 3), 5}}));
  EXPECT_EQ(shifted.size(), t.size());
  EXPECT_EQ(shifted, t.translated(Point{frac(1, 3), 5}));
  EXPECT_THROW(minkowski_sum(a, line({0})), DimensionMismatch);
}

TEST(AverageSet, Examples) {
  PointSet q(1, {Point{Scalar(0)}, Point{frac(1, 4)}, Point{frac(1, 2)}, Point{frac(3, 4)}, Point{Scalar(1)}});
  EXPECT_EQ(average_set(line({0, 1}), 4), q);
  PointSet single(2, {Point{frac(2, 7), 3}});
  for (unsigned k : {1u, 2u, 5u}) EXPECT_EQ(average_set(single, k), single);
  PointSet t2 = average_set(triangle(), 2);
  EXPECT_EQ(t2.size(), 6u);
  EXPECT_TRUE(t2.contains(Point{frac(1, 2), frac(1, 2)}));
  EXPECT_EQ(average_set(triangle(), 1), triangle());
  EXPECT_THROW(average_set(line({0, 1}), 0), GeometryError);
  EXPECT_THROW(average_set(Rng(3).point_set(3, 8, 0, 1), 12, 1000), BudgetExceeded);
}

TEST(AverageSet, SandwichedBetweenSetAndHull) {
  Rng rng(11);
  for (int t = 0; t < 10; ++t) {
    PointSet a = rng.point_set(2, 5);
    for (unsigned k : {2u, 3u}) {
      PointSet ak = average_set(a, k);
      for (const auto& p : a) EXPECT_TRUE(ak.contains(p));
      for (const auto& p : ak) EXPECT_TRUE(in_hull(p, a).feasible);
    }
  }
}

TEST(AverageSet, PowersOfTwoNest) {
  Rng rng(5);
  for (int t = 0; t < 10; ++t) {
    PointSet a = rng.point_set(2, 4);
    PointSet a2 = average_set(a, 2), a4 = average_set(a, 4);
    for (const auto& p : a2) EXPECT_TRUE(a4.contains(p));
  }
}

TEST(MultisetCount, Binomials) {
  EXPECT_DOUBLE_EQ(multiset_count(2, 4), 5);
  EXPECT_DOUBLE_EQ(multiset_count(3, 2), 6);
  EXPECT_DOUBLE_EQ(multiset_count(10, 3), 220);
}

TEST(BoxUnion, VolumeExamples) {
  BoxUnion u(2, {make_box(Point{0, 0}, Point{1, 1}), make_box(Point{frac(1, 2), frac(1, 2)}, Point{frac(3, 2), frac(3, 2)})});
  EXPECT_EQ(volume(u), frac(7, 4));
  Point lo(12), a(12), b(12);
  for (int i = 0; i < 12; ++i) {
    a[i] = i < 6 ? frac(2, 3) : frac(1, 3);
    b[i] = i < 6 ? frac(1, 3) : frac(2, 3);
  }
  BoxUnion w(12, {make_box(lo, a), make_box(lo, b)});
  EXPECT_EQ(volume(w), frac(127, 531441));
  EXPECT_EQ(volume(w), 2 * pow(frac(2, 3), 6) * pow(frac(1, 3), 6) - pow(frac(1, 3), 12));
  EXPECT_EQ(volume(single_box(Point{0, 0}, Point{1, 0})), Scalar(0));
}

TEST(BoxUnion, VolumeMatchesInclusionExclusion) {
  Rng rng(17);
  for (int t = 0; t < 60; ++t) {
    std::size_t dim = 1 + t % 3, m = 1 + t % 4;
    BoxUnion u = rng.box_union(dim, m);
    EXPECT_EQ(volume(u), inclusion_exclusion(u)) << t;
  }
}

TEST(BoxUnion, VolumeMatchesMonteCarlo) {
  Rng rng(23);
  std::mt19937_64 eng(99);
  std::uniform_real_distribution<double> unif(0, 1);
  for (int t = 0; t < 10; ++t) {
    BoxUnion u = rng.box_union(3, 6);
    const int samples = 20000;
    int hits = 0;
    for (int s = 0; s < samples; ++s) {
      Point p{from_double_exact(unif(eng)), from_double_exact(unif(eng)), from_double_exact(unif(eng))};
      hits += u.contains(p);
    }
    double est = double(hits) / samples, v = to_double(volume(u));
    double sigma = std::sqrt(std::max(v * (1 - v), 1e-6) / samples);
    EXPECT_LE(std::fabs(est - v), 4 * sigma) << t;
  }
}

TEST(BoxUnion, SumAndScaling) {
  BoxUnion a(1, {make_box(Point{Scalar(0)}, Point{Scalar(0)}), make_box(Point{Scalar(1)}, Point{Scalar(2)})});
  BoxUnion s = minkowski_sum(a, a);
  // {0} u [1,2] u [2,4]
  EXPECT_EQ(volume(s), Scalar(3));
  EXPECT_EQ(volume(a.scaled(3)), Scalar(3));
  EXPECT_EQ(volume(average_set(a, 2)), frac(3, 2));
  Rng rng(2);
  for (int t = 0; t < 10; ++t) {
    BoxUnion u = rng.box_union(2, 3);
    EXPECT_EQ(volume(u.scaled(frac(5, 2))), pow(frac(5, 2), 2) * volume(u));
    EXPECT_EQ(volume(u.translated(Point{7, frac(-1, 3)})), volume(u));
  }
}

TEST(MinEnclosingBall, Examples) {
  Ball b = min_enclosing_ball(line({0, 1}));
  EXPECT_NEAR(b.center[0], 0.5, 1e-12);
  EXPECT_NEAR(b.radius, 0.5, 1e-12);
  // Right triangle with hypotenuse 2 has circumradius 1; (3/5, 4/5) style points on the unit circle.
  PointSet t(2, {Point{1, 0}, Point{frac(-3, 5), frac(4, 5)}, Point{frac(-3, 5), frac(-4, 5)}});
  EXPECT_NEAR(min_enclosing_ball(t).radius, 1, 1e-9);
}

TEST(MinEnclosingBall, MatchesBruteForceAndJung) {
  Rng rng(31);
  for (int t = 0; t < 8; ++t) {
    std::size_t n = 2 + t % 3;
    PointSet a = rng.point_set(n, 14);
    std::vector<std::vector<double>> pts;
    for (const auto& p : a) pts.push_back(to_doubles(p));
    Ball b = min_enclosing_ball(a);
    EXPECT_NEAR(b.radius, brute_force_radius(pts), 1e-9);
    for (const auto& p : pts) {
      double dd = 0;
      for (std::size_t j = 0; j < n; ++j) dd += (p[j] - b.center[j]) * (p[j] - b.center[j]);
      EXPECT_LE(std::sqrt(dd), b.radius + 1e-12);
    }
    EXPECT_LE(b.radius, diam(a) * std::sqrt(double(n) / (2.0 * (n + 1))) + 1e-9);
  }
}

TEST(MinEnclosingBall, HundredPointsInR4) {
  Rng rng(41);
  PointSet a = rng.point_set(4, 100);
  Ball b = min_enclosing_ball(a);
  std::vector<std::vector<double>> pts;
  for (const auto& p : a) pts.push_back(to_doubles(p));
  // Optimality certificate: the center is the circumcenter of the support and lies in its hull.
  std::vector<std::vector<double>> sup;
  for (auto i : b.support) sup.push_back(pts[i]);
  ASSERT_FALSE(sup.empty());
  std::vector<double> c;
  ASSERT_TRUE(sup.size() == 1 || circumcenter(sup, c));
  for (std::size_t j = 0; j < 4; ++j) EXPECT_NEAR(c[j], b.center[j], 1e-9);
  std::vector<Point> sp;
  for (auto i : b.support) sp.push_back(a[i]);
  Point center = from_doubles(b.center);
  // Membership with slack: the nearest point of conv(support) is within 1e-9 of the center.
  if (sp.size() >= 2) {
    auto frame = affine_frame(sp);
    if (frame.dim() + 1 == sp.size()) EXPECT_LE(std::sqrt(to_double(dist2_to_simplex(center, sp))), 1e-9);
  }
  for (const auto& p : pts) {
    double dd = 0;
    for (std::size_t j = 0; j < 4; ++j) dd += (p[j] - b.center[j]) * (p[j] - b.center[j]);
    EXPECT_LE(std::sqrt(dd), b.radius + 1e-12);
  }
}

TEST(Linalg, DeterminantMatchesLeibniz) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    std::size_t n = 1 + t % 5;
    Matrix m(n, Vector(n));
    for (auto& r : m)
      for (auto& x : r) x = rng.rational(-3, 3);
    EXPECT_EQ(determinant(m), leibniz(m));
  }
}

TEST(Linalg, NullspaceAndSolve) {
  Rng rng(8);
  for (int t = 0; t < 20; ++t) {
    std::size_t rows = 1 + t % 3, cols = 2 + t % 4;
    Matrix m(rows, Vector(cols));
    for (auto& r : m)
      for (auto& x : r) x = rng.integer(-2, 2);
    auto ns = nullspace(m, cols);
    EXPECT_EQ(ns.size() + rank(m, cols), cols);
    for (const auto& v : ns)
      for (const auto& r : m) {
        Scalar s = 0;
        for (std::size_t j = 0; j < cols; ++j) s += r[j] * v[j];
        EXPECT_EQ(s, 0);
      }
  }
  Matrix a{{2, 1}, {1, 3}};
  auto x = solve(a, Vector{3, 5});
  ASSERT_TRUE(x);
  EXPECT_EQ((*x)[0], frac(4, 5));
  EXPECT_EQ((*x)[1], frac(7, 5));
  EXPECT_FALSE(solve(Matrix{{1, 1}, {2, 2}}, Vector{1, 3}));
}

TEST(Gauge, Norms) {
  EXPECT_DOUBLE_EQ(gauge_norm(Gauge::cube(2), Point{2, 1}), 2);
  EXPECT_EQ(Gauge::cube(2).norm_exact(Point{-3, 1}), Scalar(3));
  EXPECT_EQ(Gauge::cross_polytope(3).norm_exact(Point{1, -2, frac(1, 2)}), frac(7, 2));
  EXPECT_NEAR(gauge_norm(Gauge::euclidean(2), Point{3, 4}), 5, 1e-12);
  EXPECT_NEAR(gauge_norm(Gauge::euclidean(2, 2), Point{3, 4}), 2.5, 1e-12);
  EXPECT_EQ(Gauge::cube(3).norm_exact(zero_point(3)), Scalar(0));
  // Built from vertices, the same body gives the same values as the closed forms.
  Gauge sq = Gauge::polytope(convex_hull(PointSet(2, {Point{1, 1}, Point{1, -1}, Point{-1, 1}, Point{-1, -1}})));
  Rng rng(4);
  for (int t = 0; t < 50; ++t) {
    Point x = rng.point(2, -3, 3);
    EXPECT_EQ(sq.norm_exact(x), Gauge::cube(2).norm_exact(x));
  }
  Gauge iv = Gauge::interval(1, 2);
  EXPECT_EQ(iv.norm_exact(Point{Scalar(-3)}), Scalar(3));
  EXPECT_EQ(iv.norm_exact(Point{Scalar(3)}), frac(3, 2));
  EXPECT_FALSE(iv.symmetric());
}

TEST(Gauge, Inradius) {
  Polytope t = convex_hull(triangle());
  EXPECT_NEAR(inradius(t), 1 / (2 + std::sqrt(2.0)), 1e-12);
  Polytope sq = convex_hull(PointSet(2, {Point{0, 0}, Point{2, 0}, Point{0, 2}, Point{2, 2}}));
  EXPECT_NEAR(inradius(sq), 1, 1e-12);
}

TEST(Diam, Scales) {
  Rng rng(6);
  for (int t = 0; t < 20; ++t) {
    PointSet a = rng.point_set(3, 6);
    EXPECT_EQ(diam2(a.scaled(3)), 9 * diam2(a));
    EXPECT_NEAR(diam(a.scaled(frac(1, 2))), diam(a) / 2, 1e-12);
  }
}
