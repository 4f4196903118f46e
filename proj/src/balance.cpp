#include "nonconvex/balance.hpp"

#include <cmath>

namespace nonconvex {

Scalar gauge_key(const Gauge& k, const Point& x) {
  if (k.is_euclidean()) return norm2(x);
  return k.norm_exact(x);
}

namespace {

constexpr std::size_t kMaxEnumerate = 20;

// Largest step along dir keeping t in [-1,1].
Scalar max_step(const Vector& t, const Vector& dir) {
  std::optional<Scalar> best;
  for (std::size_t i = 0; i < t.size(); ++i) {
    int s = sign(dir[i]);
    if (s == 0) continue;
    Scalar a = s > 0 ? Scalar((1 - t[i]) / dir[i]) : Scalar((-1 - t[i]) / dir[i]);
    if (!best || a < *best) best = a;
  }
  return *best;
}

}  // namespace

BalanceResult balance_signs(const std::vector<Point>& x, const Gauge& k) {
  if (x.empty()) throw GeometryError("balance_signs: no vectors");
  std::size_t n = x[0].dim(), cnt = x.size();
  for (const auto& v : x)
    if (v.dim() != n || k.dim() != n) throw DimensionMismatch("balance_signs: dimension mismatch");

  Vector t(cnt, 0);
  auto fractional = [&] {
    std::vector<std::size_t> f;
    for (std::size_t i = 0; i < cnt; ++i)
      if (abs(t[i]) < 1) f.push_back(i);
    return f;
  };
  for (auto f = fractional(); f.size() > n; f = fractional()) {
    Matrix m(n, Vector(n + 1));
    for (std::size_t r = 0; r < n; ++r)
      for (std::size_t c = 0; c <= n; ++c) m[r][c] = x[f[c]][r];
    auto ker = nullspace(m, n + 1);
    Vector dir(cnt, 0);
    for (std::size_t c = 0; c <= n; ++c) dir[f[c]] = ker.front()[c];
    Vector neg(cnt);
    for (std::size_t i = 0; i < cnt; ++i) neg[i] = -dir[i];
    Scalar up = max_step(t, dir), down = max_step(t, neg);
    const Vector& d = down < up ? neg : dir;
    Scalar step = down < up ? down : up;
    for (std::size_t i = 0; i < cnt; ++i) t[i] += step * d[i];
  }

  auto f = fractional();
  BalanceResult res;
  res.signs.assign(cnt, 0);
  Point fixed(n);
  for (std::size_t i = 0; i < cnt; ++i)
    if (abs(t[i]) == 1) {
      res.signs[i] = sign(t[i]);
      fixed += x[i] * t[i];
    }
  res.fractional_left = f.size();
  if (f.size() <= kMaxEnumerate) {
    // Lexicographic order with -1 before +1; the first minimum wins.
    std::optional<Scalar> best;
    std::size_t best_mask = 0, total = std::size_t(1) << f.size();
    for (std::size_t mask = 0; mask < total; ++mask) {
      Point s = fixed;
      for (std::size_t j = 0; j < f.size(); ++j) {
        bool plus = (mask >> (f.size() - 1 - j)) & 1;
        if (plus) s += x[f[j]];
        else s -= x[f[j]];
      }
      Scalar key = gauge_key(k, s);
      if (!best || key < *best) {
        best = key;
        best_mask = mask;
      }
    }
    for (std::size_t j = 0; j < f.size(); ++j) res.signs[f[j]] = ((best_mask >> (f.size() - 1 - j)) & 1) ? 1 : -1;
  } else {
    res.greedy = true;
    for (auto i : f) res.signs[i] = sign(t[i]) >= 0 ? 1 : -1;
    Point s(n);
    for (std::size_t i = 0; i < cnt; ++i) s += x[i] * Scalar(res.signs[i]);
    Scalar cur = gauge_key(k, s);
    for (bool improved = true; improved;) {
      improved = false;
      for (auto i : f) {
        Point trial = s - x[i] * Scalar(2 * res.signs[i]);
        Scalar key = gauge_key(k, trial);
        if (key < cur) {
          cur = key;
          s = trial;
          res.signs[i] = -res.signs[i];
          improved = true;
        }
      }
    }
  }

  res.sum = Point(n);
  for (std::size_t i = 0; i < cnt; ++i) res.sum += x[i] * Scalar(res.signs[i]);
  res.achieved = gauge_norm(k, res.sum);
  double max_euclid = 0;
  for (const auto& v : x) {
    res.max_norm = std::max(res.max_norm, gauge_norm(k, v));
    max_euclid = std::max(max_euclid, norm(v));
  }
  res.general_bound = double(n) * res.max_norm;
  res.general_ok = res.achieved <= res.general_bound + 1e-9;
  if (k.is_euclidean()) {
    res.euclidean_bound = std::sqrt(double(n)) * max_euclid / k.radius().get_d();
    res.euclidean_ok = res.achieved <= res.euclidean_bound + 1e-9;
  }
  return res;
}

}  // namespace nonconvex
