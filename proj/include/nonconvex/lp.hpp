#pragma once

#include <optional>
#include <string>
#include <vector>

#include "nonconvex/linalg.hpp"

namespace nonconvex {

enum class Relation { Le, Eq, Ge };
enum class Sense { Minimize, Maximize };
enum class LpStatus { Optimal, Infeasible, Unbounded };

struct Constraint {
  Vector coeffs;
  Relation rel = Relation::Le;
  Scalar rhs;
};

struct LinearProgram {
  Sense sense = Sense::Minimize;
  Vector objective;
  std::vector<Constraint> constraints;
  // Per-variable bounds; an unset lower bound means 0 when nonnegative, else free.
  std::vector<std::optional<Scalar>> lower, upper;
  bool nonnegative = true;

  std::size_t num_vars() const { return objective.size(); }
  void add(Vector coeffs, Relation rel, Scalar rhs) { constraints.push_back({std::move(coeffs), rel, std::move(rhs)}); }
  void validate() const;
};

struct LpResult {
  LpStatus status = LpStatus::Infeasible;
  Vector x;
  Scalar value;
  std::size_t pivots = 0;
  bool optimal() const { return status == LpStatus::Optimal; }
};

LpResult solve(const LinearProgram& lp);
std::string dump(const LinearProgram& lp);
const char* to_string(LpStatus s);

}  // namespace nonconvex
