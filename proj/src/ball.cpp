#include "nonconvex/ball.hpp"

#include <cmath>
#include <list>

namespace nonconvex {

namespace {

double sq(double x) { return x * x; }

double d2(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += sq(a[i] - b[i]);
  return s;
}

// Gaussian elimination with partial pivoting; false when singular.
bool solve_dense(std::vector<std::vector<double>> a, std::vector<double> b, std::vector<double>& x) {
  std::size_t n = b.size();
  double scale = 0;
  for (const auto& r : a)
    for (double v : r) scale = std::max(scale, std::fabs(v));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    for (std::size_t i = c + 1; i < n; ++i)
      if (std::fabs(a[i][c]) > std::fabs(a[p][c])) p = i;
    if (std::fabs(a[p][c]) <= 1e-14 * std::max(scale, 1e-300)) return false;
    std::swap(a[p], a[c]);
    std::swap(b[p], b[c]);
    for (std::size_t i = c + 1; i < n; ++i) {
      double f = a[i][c] / a[c][c];
      for (std::size_t j = c; j < n; ++j) a[i][j] -= f * a[c][j];
      b[i] -= f * b[c];
    }
  }
  x.assign(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    double s = b[i];
    for (std::size_t j = i + 1; j < n; ++j) s -= a[i][j] * x[j];
    x[i] = s / a[i][i];
  }
  return true;
}

struct Welzl {
  const std::vector<std::vector<double>>& pts;
  std::size_t dim;
  std::list<std::size_t> order;
  std::vector<std::size_t> support;
  Ball ball;

  void ball_of_support() {
    std::vector<std::vector<double>> s;
    for (auto i : support) s.push_back(pts[i]);
    if (s.empty()) {
      ball.center.assign(dim, 0);
      ball.radius = -1;
      return;
    }
    Ball b;
    if (circumball(s, b)) {
      ball.center = b.center;
      ball.radius = b.radius;
    }
  }

  void run(std::list<std::size_t>::iterator end) {
    ball_of_support();
    ball.support = support;
    if (support.size() == dim + 1) return;
    for (auto it = order.begin(); it != end;) {
      auto next = std::next(it);
      double r = ball.radius;
      if (r < 0 || std::sqrt(d2(pts[*it], ball.center)) > r * (1 + 1e-13) + 1e-15) {
        support.push_back(*it);
        run(it);
        support.pop_back();
        if (next != it) order.splice(order.begin(), order, it);
      }
      it = next;
    }
  }
};

}  // namespace

bool circumball(const std::vector<std::vector<double>>& s, Ball& out) {
  std::size_t m = s.size();
  out.center = s[0];
  out.radius = 0;
  if (m == 1) return true;
  std::vector<std::vector<double>> d(m - 1);
  for (std::size_t i = 1; i < m; ++i) {
    d[i - 1].resize(s[0].size());
    for (std::size_t j = 0; j < s[0].size(); ++j) d[i - 1][j] = s[i][j] - s[0][j];
  }
  std::vector<std::vector<double>> g(m - 1, std::vector<double>(m - 1));
  std::vector<double> b(m - 1);
  for (std::size_t i = 0; i < m - 1; ++i) {
    for (std::size_t j = 0; j < m - 1; ++j) {
      double t = 0;
      for (std::size_t l = 0; l < s[0].size(); ++l) t += d[i][l] * d[j][l];
      g[i][j] = t;
    }
    b[i] = g[i][i] / 2;
  }
  std::vector<double> lam;
  if (!solve_dense(g, b, lam)) return false;
  for (std::size_t i = 0; i < m - 1; ++i)
    for (std::size_t l = 0; l < s[0].size(); ++l) out.center[l] += lam[i] * d[i][l];
  double r = 0;
  for (const auto& p : s) r = std::max(r, d2(p, out.center));
  out.radius = std::sqrt(r);
  return true;
}

Ball min_enclosing_ball(const std::vector<std::vector<double>>& pts) {
  if (pts.empty()) throw GeometryError("min_enclosing_ball of empty set");
  Welzl w{pts, pts[0].size(), {}, {}, {}};
  for (std::size_t i = 0; i < pts.size(); ++i) w.order.push_back(i);
  w.run(w.order.end());
  Ball b = w.ball;
  double r = 0;
  for (const auto& p : pts) r = std::max(r, d2(p, b.center));
  b.radius = std::max(b.radius, std::sqrt(r));
  return b;
}

Ball min_enclosing_ball(const PointSet& a) {
  std::vector<std::vector<double>> pts;
  for (const auto& p : a) pts.push_back(to_doubles(p));
  return min_enclosing_ball(pts);
}

}  // namespace nonconvex
