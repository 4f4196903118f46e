#include "nonconvex/lp.hpp"

#include <sstream>

namespace nonconvex {

void LinearProgram::validate() const {
  std::size_t n = num_vars();
  for (const auto& c : constraints)
    if (c.coeffs.size() != n) throw DimensionMismatch("LP constraint width " + std::to_string(c.coeffs.size()) + " != " + std::to_string(n));
  if (!lower.empty() && lower.size() != n) throw DimensionMismatch("LP lower-bound length");
  if (!upper.empty() && upper.size() != n) throw DimensionMismatch("LP upper-bound length");
}

const char* to_string(LpStatus s) {
  switch (s) {
    case LpStatus::Optimal: return "optimal";
    case LpStatus::Infeasible: return "infeasible";
    case LpStatus::Unbounded: return "unbounded";
  }
  return "?";
}

namespace {

struct Term {
  std::size_t col;
  int coef;
};

struct VarMap {
  Scalar constant;
  std::vector<Term> terms;
};

class Tableau {
 public:
  Matrix t;                    // rows x (cols + 1), last column is rhs
  Vector d;                    // reduced costs, d[cols] = -objective value
  std::vector<std::size_t> basis;
  std::vector<bool> blocked;
  std::size_t cols = 0;
  std::size_t pivots = 0;

  void price(const Vector& cost) {
    d.assign(cols + 1, 0);
    for (std::size_t j = 0; j < cols; ++j) d[j] = cost[j];
    for (std::size_t i = 0; i < t.size(); ++i) {
      const Scalar& cb = cost[basis[i]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j <= cols; ++j)
        if (sgn(t[i][j]) != 0) d[j] -= cb * t[i][j];
    }
  }

  void pivot(std::size_t r, std::size_t c) {
    ++pivots;
    Scalar inv = 1 / t[r][c];
    for (auto& v : t[r])
      if (sgn(v) != 0) v *= inv;
    Scalar tmp;
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i == r || sgn(t[i][c]) == 0) continue;
      Scalar f = t[i][c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (sgn(t[r][j]) != 0) {
          tmp = f * t[r][j];
          t[i][j] -= tmp;
        }
    }
    if (sgn(d[c]) != 0) {
      Scalar f = d[c];
      for (std::size_t j = 0; j <= cols; ++j)
        if (sgn(t[r][j]) != 0) {
          tmp = f * t[r][j];
          d[j] -= tmp;
        }
    }
    basis[r] = c;
  }

  // Bland's rule; returns false when unbounded.
  bool optimize() {
    for (;;) {
      std::size_t enter = cols;
      for (std::size_t j = 0; j < cols; ++j)
        if (!blocked[j] && sgn(d[j]) < 0) {
          enter = j;
          break;
        }
      if (enter == cols) return true;
      std::size_t leave = t.size();
      Scalar best;
      for (std::size_t i = 0; i < t.size(); ++i) {
        if (sgn(t[i][enter]) <= 0) continue;
        Scalar ratio = t[i][cols] / t[i][enter];
        if (leave == t.size() || ratio < best || (ratio == best && basis[i] < basis[leave])) {
          leave = i;
          best = ratio;
        }
      }
      if (leave == t.size()) return false;
      pivot(leave, enter);
    }
  }
};

}  // namespace

LpResult solve(const LinearProgram& lp) {
  lp.validate();
  std::size_t n = lp.num_vars();
  std::vector<VarMap> vars(n);
  std::size_t cols = 0;
  std::vector<std::pair<std::size_t, Scalar>> upper_rows;  // column, bound on it
  for (std::size_t j = 0; j < n; ++j) {
    std::optional<Scalar> lo, hi;
    if (!lp.lower.empty() && lp.lower[j]) lo = *lp.lower[j];
    else if (lp.nonnegative) lo = Scalar(0);
    if (!lp.upper.empty() && lp.upper[j]) hi = *lp.upper[j];
    if (lo && hi && *hi < *lo) {
      LpResult r;
      r.status = LpStatus::Infeasible;
      return r;
    }
    if (lo) {
      vars[j].constant = *lo;
      vars[j].terms.push_back({cols, 1});
      if (hi) upper_rows.push_back({cols, *hi - *lo});
      ++cols;
    } else if (hi) {
      vars[j].constant = *hi;
      vars[j].terms.push_back({cols++, -1});
    } else {
      vars[j].constant = 0;
      vars[j].terms.push_back({cols++, 1});
      vars[j].terms.push_back({cols++, -1});
    }
  }
  std::size_t structural = cols;

  struct Row {
    Vector a;
    Relation rel;
    Scalar b;
  };
  std::vector<Row> rows;
  for (const auto& c : lp.constraints) {
    Row r{Vector(structural), c.rel, c.rhs};
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(c.coeffs[j]) == 0) continue;
      r.b -= c.coeffs[j] * vars[j].constant;
      for (const auto& t : vars[j].terms) r.a[t.col] += c.coeffs[j] * t.coef;
    }
    rows.push_back(std::move(r));
  }
  for (const auto& [col, bound] : upper_rows) {
    Row r{Vector(structural), Relation::Le, bound};
    r.a[col] = 1;
    rows.push_back(std::move(r));
  }

  std::size_t m = rows.size();
  std::size_t slacks = 0;
  for (const auto& r : rows)
    if (r.rel != Relation::Eq) ++slacks;
  Tableau tab;
  std::size_t slack_col = structural;
  std::vector<std::size_t> row_slack(m, SIZE_MAX);
  std::vector<int> slack_sign(m, 0);
  for (std::size_t i = 0; i < m; ++i)
    if (rows[i].rel != Relation::Eq) {
      row_slack[i] = slack_col++;
      slack_sign[i] = rows[i].rel == Relation::Le ? 1 : -1;
    }
  std::size_t art_start = slack_col;
  // Decide artificials after rhs normalisation.
  std::vector<bool> negate(m, false);
  std::vector<bool> needs_art(m, true);
  std::size_t arts = 0;
  for (std::size_t i = 0; i < m; ++i) {
    negate[i] = sgn(rows[i].b) < 0;
    int s = slack_sign[i] * (negate[i] ? -1 : 1);
    if (row_slack[i] != SIZE_MAX && s == 1) needs_art[i] = false;
    if (needs_art[i]) ++arts;
  }
  cols = art_start + arts;
  tab.cols = cols;
  tab.t.assign(m, Vector(cols + 1));
  tab.basis.assign(m, 0);
  tab.blocked.assign(cols, false);
  std::size_t art = art_start;
  for (std::size_t i = 0; i < m; ++i) {
    Vector& row = tab.t[i];
    for (std::size_t j = 0; j < structural; ++j) row[j] = negate[i] ? Scalar(-rows[i].a[j]) : rows[i].a[j];
    row[cols] = negate[i] ? Scalar(-rows[i].b) : rows[i].b;
    if (row_slack[i] != SIZE_MAX) row[row_slack[i]] = slack_sign[i] * (negate[i] ? -1 : 1);
    if (needs_art[i]) {
      row[art] = 1;
      tab.basis[i] = art++;
    } else {
      tab.basis[i] = row_slack[i];
    }
  }

  LpResult result;
  if (arts > 0) {
    Vector cost(cols, 0);
    for (std::size_t j = art_start; j < cols; ++j) cost[j] = 1;
    tab.price(cost);
    tab.optimize();
    if (sgn(tab.d[cols]) != 0) {
      result.status = LpStatus::Infeasible;
      result.pivots = tab.pivots;
      return result;
    }
    for (std::size_t j = art_start; j < cols; ++j) tab.blocked[j] = true;
    for (std::size_t i = 0; i < tab.t.size();) {
      if (tab.basis[i] < art_start) {
        ++i;
        continue;
      }
      std::size_t c = art_start;
      for (std::size_t j = 0; j < art_start; ++j)
        if (sgn(tab.t[i][j]) != 0) {
          c = j;
          break;
        }
      if (c < art_start) {
        tab.pivot(i, c);
        ++i;
      } else {
        tab.t.erase(tab.t.begin() + static_cast<long>(i));
        tab.basis.erase(tab.basis.begin() + static_cast<long>(i));
      }
    }
  }
  Vector cost(cols, 0);
  bool maximize = lp.sense == Sense::Maximize;
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(lp.objective[j]) == 0) continue;
    for (const auto& t : vars[j].terms) {
      Scalar c = lp.objective[j] * t.coef;
      cost[t.col] += maximize ? Scalar(-c) : c;
    }
  }
  tab.price(cost);
  bool bounded = tab.optimize();
  result.pivots = tab.pivots;
  if (!bounded) {
    result.status = LpStatus::Unbounded;
    return result;
  }
  Vector y(cols, 0);
  for (std::size_t i = 0; i < tab.t.size(); ++i) y[tab.basis[i]] = tab.t[i][cols];
  result.x.assign(n, 0);
  result.value = 0;
  for (std::size_t j = 0; j < n; ++j) {
    result.x[j] = vars[j].constant;
    for (const auto& t : vars[j].terms) result.x[j] += y[t.col] * t.coef;
    result.value += lp.objective[j] * result.x[j];
  }
  result.status = LpStatus::Optimal;
  return result;
}

std::string dump(const LinearProgram& lp) {
  std::ostringstream os;
  os << (lp.sense == Sense::Minimize ? "min" : "max");
  for (std::size_t j = 0; j < lp.num_vars(); ++j) os << ' ' << lp.objective[j].get_str() << "*x" << j;
  os << '\n';
  for (const auto& c : lp.constraints) {
    for (std::size_t j = 0; j < c.coeffs.size(); ++j)
      if (sgn(c.coeffs[j]) != 0) os << ' ' << c.coeffs[j].get_str() << "*x" << j;
    os << (c.rel == Relation::Le ? " <= " : c.rel == Relation::Eq ? " = " : " >= ") << c.rhs.get_str() << '\n';
  }
  for (std::size_t j = 0; j < lp.num_vars(); ++j) {
    bool lo = !lp.lower.empty() && lp.lower[j], hi = !lp.upper.empty() && lp.upper[j];
    if (lo || hi)
      os << "x" << j << " in [" << (lo ? lp.lower[j]->get_str() : "-inf") << ", " << (hi ? lp.upper[j]->get_str() : "inf") << "]\n";
  }
  if (lp.nonnegative) os << "default x >= 0\n";
  return os.str();
}

}  // namespace nonconvex
