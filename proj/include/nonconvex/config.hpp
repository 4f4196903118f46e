#pragma once

#include <cstdint>
#include <string>

namespace nonconvex {

struct Config {
  double bisection_tol = 1e-6;
  double float_tol = 1e-9;
  std::size_t cardinality_cap = 1000000;
  std::size_t simplex_budget = 2000000;  // subsets examined by empty-sphere enumeration
  std::size_t candidate_budget = 400000;  // circumcenter candidates for d bounds
  std::size_t grid = 16;                  // per-axis grid for sampled candidates
  std::uint64_t seed = 1;
  std::string output_dir = ".";
  bool plot = false;
  bool timings = false;

  void validate() const;
};

const Config& default_config();

}  // namespace nonconvex
