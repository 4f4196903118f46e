#include "nonconvex/config.hpp"

#include <stdexcept>

namespace nonconvex {

void Config::validate() const {
  if (!(bisection_tol > 0 && bisection_tol < 1)) throw std::invalid_argument("bisection_tol must lie in (0,1)");
  if (!(float_tol > 0 && float_tol < 1e-3)) throw std::invalid_argument("float_tol must lie in (0,1e-3)");
  if (cardinality_cap == 0) throw std::invalid_argument("cardinality_cap must be positive");
  if (simplex_budget == 0 || candidate_budget == 0) throw std::invalid_argument("budgets must be positive");
  if (grid == 0) throw std::invalid_argument("grid must be positive");
}

const Config& default_config() {
  static const Config cfg;
  return cfg;
}

}  // namespace nonconvex
