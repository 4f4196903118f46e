#include <gtest/gtest.h>

#include <cmath>

#include "nonconvex/combination.hpp"
#include "nonconvex/lp.hpp"
#include "nonconvex/random.hpp"

using namespace nonconvex;

namespace {

// Best vertex of {x in R^2 : A x <= b} by enumerating constraint pairs.
std::optional<Scalar> vertex_enumeration(const std::vector<Constraint>& cs, const Vector& c) {
  std::optional<Scalar> best;
  for (std::size_t i = 0; i < cs.size(); ++i)
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const Vector &a = cs[i].coeffs, &b = cs[j].coeffs;
      Scalar det = a[0] * b[1] - a[1] * b[0];
      if (det == 0) continue;
      Point x{(cs[i].rhs * b[1] - cs[j].rhs * a[1]) / det, (a[0] * cs[j].rhs - b[0] * cs[i].rhs) / det};
      bool ok = true;
      for (const auto& k : cs) ok = ok && k.coeffs[0] * x[0] + k.coeffs[1] * x[1] <= k.rhs;
      if (!ok) continue;
      Scalar v = c[0] * x[0] + c[1] * x[1];
      if (!best || v > *best) best = v;
    }
  return best;
}

Point combine(const std::vector<Point>& pts, const Vector& w) {
  Point x = zero_point(pts[0].dim());
  for (std::size_t i = 0; i < pts.size(); ++i) x += w[i] * pts[i];
  return x;
}

}  // namespace

TEST(Lp, TrivialExamples) {
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.objective = {1};
  lp.add({1}, Relation::Le, 3);
  auto r = solve(lp);
  ASSERT_EQ(r.status, LpStatus::Optimal);
  EXPECT_EQ(r.value, 3);
  EXPECT_EQ(r.x[0], 3);

  LinearProgram inf;
  inf.objective = {0};
  inf.add({1}, Relation::Ge, 1);
  inf.add({1}, Relation::Le, 0);
  EXPECT_EQ(solve(inf).status, LpStatus::Infeasible);

  LinearProgram unb;
  unb.sense = Sense::Maximize;
  unb.objective = {1, 1};
  unb.add({1, -1}, Relation::Le, 1);
  EXPECT_EQ(solve(unb).status, LpStatus::Unbounded);
}

TEST(Lp, BoundsAndFreeVariables) {
  LinearProgram lp;
  lp.nonnegative = false;
  lp.objective = {1, -1};
  lp.lower = {Scalar(-2), std::nullopt};
  lp.upper = {std::nullopt, frac(5, 2)};
  auto r = solve(lp);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.value, frac(-9, 2));
  lp.lower.pop_back();
  EXPECT_THROW(lp.validate(), DimensionMismatch);
}

TEST(Lp, BealeCyclingExampleTerminates) {
  LinearProgram lp;
  lp.objective = {frac(-3, 4), 20, frac(-1, 2), 6};
  lp.add({frac(1, 4), -8, -1, 9}, Relation::Le, 0);
  lp.add({frac(1, 2), -12, frac(-1, 2), 3}, Relation::Le, 0);
  lp.add({0, 0, 1, 0}, Relation::Le, 1);
  auto r = solve(lp);
  ASSERT_TRUE(r.optimal());
  EXPECT_EQ(r.value, frac(-5, 4));
}

TEST(Lp, MatchesVertexEnumerationIn2D) {
  Rng rng(12);
  for (int t = 0; t < 100; ++t) {
    LinearProgram lp;
    lp.sense = Sense::Maximize;
    lp.nonnegative = false;
    lp.objective = {rng.rational(-2, 2), rng.rational(-2, 2)};
    for (int i = 0; i < 2; ++i) {
      Vector e{0, 0};
      e[i] = 1;
      lp.add(e, Relation::Le, 4);
      e[i] = -1;
      lp.add(e, Relation::Le, 4);
    }
    for (int i = 0; i < 4; ++i) lp.add({rng.rational(-2, 2), rng.rational(-2, 2)}, Relation::Le, rng.rational(-1, 2));
    auto oracle = vertex_enumeration(lp.constraints, lp.objective);
    auto r = solve(lp);
    if (!oracle) {
      EXPECT_EQ(r.status, LpStatus::Infeasible) << t;
      continue;
    }
    ASSERT_TRUE(r.optimal()) << t;
    EXPECT_EQ(r.value, *oracle) << t;
    for (const auto& c : lp.constraints) EXPECT_LE(c.coeffs[0] * r.x[0] + c.coeffs[1] * r.x[1], c.rhs);
  }
}

TEST(Lp, StrongDuality) {
  Rng rng(19);
  for (int t = 0; t < 50; ++t) {
    std::size_t m = 2 + t % 4, n = 2 + t % 3;
    Matrix a(m, Vector(n));
    Vector b(m), c(n);
    for (auto& r : a)
      for (auto& x : r) x = rng.rational(frac(1, 8), 3);
    for (auto& x : b) x = rng.rational(1, 5);
    for (auto& x : c) x = rng.rational(-1, 3);
    LinearProgram primal;
    primal.sense = Sense::Maximize;
    primal.objective = c;
    for (std::size_t i = 0; i < m; ++i) primal.add(a[i], Relation::Le, b[i]);
    LinearProgram dual;
    dual.objective = b;
    for (std::size_t j = 0; j < n; ++j) {
      Vector col(m);
      for (std::size_t i = 0; i < m; ++i) col[i] = a[i][j];
      dual.add(col, Relation::Ge, c[j]);
    }
    auto p = solve(primal), d = solve(dual);
    ASSERT_TRUE(p.optimal());
    ASSERT_TRUE(d.optimal());
    EXPECT_EQ(p.value, d.value) << t;
  }
}

TEST(Lp, DeterministicAndDumpable) {
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.objective = {1, 1};
  lp.add({1, 2}, Relation::Le, 4);
  lp.add({3, 1}, Relation::Le, 6);
  auto a = solve(lp), b = solve(lp);
  EXPECT_EQ(a.x, b.x);
  EXPECT_EQ(a.value, frac(14, 5));
  EXPECT_NE(dump(lp).find("max"), std::string::npos);
}

TEST(InHull, Examples) {
  PointSet tri(2, {Point{0, 0}, Point{3, 0}, Point{0, 3}});
  auto c = in_hull(Point{1, 1}, tri);
  ASSERT_TRUE(c.feasible);
  for (const auto& w : c.witness->weights) EXPECT_EQ(w, frac(1, 3));
  auto v = in_hull(Point{3, 0}, tri);
  ASSERT_TRUE(v.feasible);
  ASSERT_EQ(v.witness->size(), 1u);
  EXPECT_EQ(v.witness->weights[0], 1);
  EXPECT_FALSE(in_hull(Point{4, 0}, tri).feasible);
  EXPECT_FALSE(in_hull(Point{2, frac(11, 10)}, tri).feasible);
}

TEST(InHull, AgreesWithFloatSignTests) {
  Rng rng(77);
  std::size_t compared = 0;
  for (int t = 0; t < 1000; ++t) {
    PointSet tri = rng.point_set(2, 3, -1, 1);
    if (tri.size() < 3) continue;
    Point x = rng.point(2, -1, 1);
    double s[3];
    bool near = false;
    for (int i = 0; i < 3; ++i) {
      auto p = to_doubles(tri[i]), q = to_doubles(tri[(i + 1) % 3]), y = to_doubles(x);
      s[i] = (q[0] - p[0]) * (y[1] - p[1]) - (q[1] - p[1]) * (y[0] - p[0]);
      near = near || std::fabs(s[i]) < 1e-9;
    }
    if (near) continue;
    bool inside = (s[0] > 0 && s[1] > 0 && s[2] > 0) || (s[0] < 0 && s[1] < 0 && s[2] < 0);
    auto r = in_hull(x, tri);
    EXPECT_EQ(r.feasible, inside) << t;
    if (r.feasible) {
      r.witness->validate();
      EXPECT_EQ(r.witness->barycenter(), x);
    }
    ++compared;
  }
  EXPECT_GT(compared, 900u);
}

TEST(Caratheodory, Examples) {
  ConvexCombination seg;
  for (int i = 0; i < 5; ++i) seg.points.push_back(Point{Scalar(i)});
  seg.weights.assign(5, frac(1, 5));
  auto r = caratheodory_reduce(seg);
  EXPECT_LE(r.size(), 2u);
  EXPECT_EQ(r.barycenter(), Point{Scalar(2)});
  r.validate();

  ConvexCombination simplex{{Point{0, 0}, Point{1, 0}, Point{0, 1}}, {frac(1, 2), frac(1, 3), frac(1, 6)}};
  auto s = caratheodory_reduce(simplex);
  EXPECT_EQ(s.points, simplex.points);
  EXPECT_EQ(s.weights, simplex.weights);

  ConvexCombination bad{{Point{0, 0}, Point{1, 0}}, {frac(1, 2), frac(1, 3)}};
  EXPECT_THROW(bad.validate(), GeometryError);
}

TEST(Caratheodory, RandomCombinationsInR3) {
  Rng rng(5);
  for (int t = 0; t < 30; ++t) {
    ConvexCombination c;
    Scalar total = 0;
    for (int i = 0; i < 20; ++i) {
      c.points.push_back(rng.point(3, -2, 2));
      c.weights.push_back(rng.rational(frac(1, 10), 1));
      total += c.weights.back();
    }
    for (auto& w : c.weights) w /= total;
    Point x = combine(c.points, c.weights);
    auto r = caratheodory_reduce(c);
    r.validate();
    EXPECT_LE(r.size(), 4u);
    EXPECT_EQ(combine(r.points, r.weights), x);
    auto q = caratheodory_reduce_quadratic(c);
    q.validate();
    EXPECT_LE(q.size(), 4u);
    EXPECT_EQ(combine(q.points, q.weights), x);
    EXPECT_LE(q.second_moment(), c.second_moment());
  }
}

TEST(ConeReduce, KeepsTheConicSum) {
  Rng rng(44);
  for (int t = 0; t < 20; ++t) {
    std::vector<Vector> z;
    Vector mu;
    for (int j = 0; j < 8; ++j) {
      z.push_back({rng.rational(-1, 1), rng.rational(-1, 1), rng.rational(-1, 1)});
      mu.push_back(rng.rational(frac(1, 4), 2));
    }
    Vector w = cone_reduce(z, mu);
    std::size_t support = 0;
    for (std::size_t i = 0; i < 3; ++i) {
      Scalar a = 0, b = 0;
      for (std::size_t j = 0; j < z.size(); ++j) {
        a += mu[j] * z[j][i];
        b += w[j] * z[j][i];
      }
      EXPECT_EQ(a, b);
    }
    for (const auto& x : w) {
      EXPECT_GE(x, 0);
      support += sgn(x) > 0;
    }
    EXPECT_LE(support, 3u);
  }
}
