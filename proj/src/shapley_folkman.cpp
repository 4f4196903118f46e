#include "nonconvex/shapley_folkman.hpp"

namespace nonconvex {

Point SFDecomposition::reconstruct() const {
  Point s(target.dim());
  for (const auto& p : parts) s += p.barycenter();
  return s;
}

bool SFDecomposition::valid() const {
  for (const auto& p : parts) {
    try {
      p.validate();
    } catch (const GeometryError&) {
      return false;
    }
  }
  std::size_t frac_count = 0;
  for (const auto& p : parts)
    if (p.size() > 1) ++frac_count;
  return frac_count == fractional.size() && fractional.size() <= target.dim() && reconstruct() == target;
}

namespace {

SFResult separate(const std::vector<PointSet>& sets, const Point& x) {
  std::size_t n = x.dim(), k = sets.size();
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  lp.nonnegative = false;
  lp.objective.assign(n + k, 0);
  lp.lower.assign(n + k, std::nullopt);
  lp.upper.assign(n + k, std::nullopt);
  for (std::size_t r = 0; r < n; ++r) {
    lp.objective[r] = x[r];
    lp.lower[r] = Scalar(-1);
    lp.upper[r] = Scalar(1);
  }
  for (std::size_t i = 0; i < k; ++i) {
    lp.objective[n + i] = -1;
    for (const auto& a : sets[i]) {
      Vector row(n + k);
      for (std::size_t r = 0; r < n; ++r) row[r] = a[r];
      row[n + i] = -1;
      lp.add(std::move(row), Relation::Le, 0);
    }
  }
  LpResult res = solve(lp);
  SFResult out;
  if (!res.optimal() || sign(res.value) <= 0) throw GeometryError("sf_decompose: membership and separation disagree");
  Point h(n);
  for (std::size_t r = 0; r < n; ++r) h[r] = res.x[r];
  out.separator = h;
  out.gap = res.value;
  return out;
}

}  // namespace

SFResult sf_decompose(const std::vector<PointSet>& sets, const Point& x) {
  if (sets.empty()) throw GeometryError("sf_decompose: no sets");
  std::size_t n = x.dim(), k = sets.size();
  for (const auto& s : sets)
    if (s.dim() != n) throw DimensionMismatch("sf_decompose: set dimension differs from target");
  // Variables lambda_ij; rows: sum_ij lambda_ij a_ij = x, sum_j lambda_ij = 1.
  std::vector<std::pair<std::size_t, std::size_t>> var;
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < sets[i].size(); ++j) var.emplace_back(i, j);
  std::size_t m = var.size();
  LinearProgram lp;
  lp.objective.assign(m, 0);
  for (std::size_t r = 0; r < n; ++r) {
    Vector row(m);
    for (std::size_t v = 0; v < m; ++v) row[v] = sets[var[v].first][var[v].second][r];
    lp.add(std::move(row), Relation::Eq, x[r]);
  }
  for (std::size_t i = 0; i < k; ++i) {
    Vector row(m);
    for (std::size_t v = 0; v < m; ++v)
      if (var[v].first == i) row[v] = 1;
    lp.add(std::move(row), Relation::Eq, 1);
  }
  LpResult res = solve(lp);
  if (!res.optimal()) return separate(sets, x);

  // Caratheodory in the cone over the lifted points z = (a, e_i).
  std::vector<Vector> z;
  Vector mu;
  std::vector<std::size_t> idx;
  for (std::size_t v = 0; v < m; ++v) {
    if (sign(res.x[v]) == 0) continue;
    Vector lifted(n + k);
    const Point& a = sets[var[v].first][var[v].second];
    for (std::size_t r = 0; r < n; ++r) lifted[r] = a[r];
    lifted[n + var[v].first] = 1;
    z.push_back(std::move(lifted));
    mu.push_back(res.x[v]);
    idx.push_back(v);
  }
  mu = cone_reduce(z, mu);

  SFDecomposition d;
  d.target = x;
  d.parts.resize(k);
  for (std::size_t t = 0; t < idx.size(); ++t) {
    if (sign(mu[t]) == 0) continue;
    auto [i, j] = var[idx[t]];
    d.parts[i].points.push_back(sets[i][j]);
    d.parts[i].weights.push_back(mu[t]);
  }
  for (std::size_t i = 0; i < k; ++i)
    if (d.parts[i].size() > 1) d.fractional.push_back(i);
  if (!d.valid()) throw GeometryError("sf_decompose: reconstruction failed");
  SFResult out;
  out.decomposition = std::move(d);
  return out;
}

}  // namespace nonconvex
