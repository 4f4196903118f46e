#pragma once

#include <string>
#include <vector>

#include "nonconvex/box_union.hpp"
#include "nonconvex/config.hpp"
#include "nonconvex/gauge.hpp"

namespace nonconvex {

// Malformed input, with line or field context in the message.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class SetKind { Points, Boxes, Polytope };
const char* to_string(SetKind k);

// A set read from disk. Points and Polytope use `points` (Polytope: the vertex list
// of a convex body); Boxes uses `boxes`.
struct SetInput {
  SetKind kind = SetKind::Points;
  std::size_t dim = 0;
  PointSet points;
  BoxUnion boxes;
  friend bool operator==(const SetInput& a, const SetInput& b) {
    return a.kind == b.kind && a.dim == b.dim && a.points == b.points && a.boxes == b.boxes;
  }
};

SetInput points_input(const PointSet& a);
SetInput boxes_input(const BoxUnion& u);

// JSON: {"dim": n, "kind": "points"|"boxes"|"polytope", "data": [...]}.
// Coordinates are "p/q" strings, integers or decimals (decimals taken exactly as written).
SetInput parse_set_json(const std::string& text);
std::string serialize_set_json(const SetInput& s);
// CSV: one point per line; '#' comments and a non-numeric header line are skipped.
SetInput parse_points_csv(const std::string& text);
// Dispatches on extension (.csv, otherwise JSON).
SetInput read_set_file(const std::string& path);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& text);

// "l2", "l1", "linf", or a path to a JSON polytope containing 0 in its interior.
Gauge gauge_by_name(const std::string& name, std::size_t dim);

// Keys as in Config (bisection_tol, float_tol, cardinality_cap, simplex_budget,
// candidate_budget, grid, seed, output_dir, plot, timings); unknown keys rejected.
Config parse_config_json(const std::string& text, Config base = default_config());

}  // namespace nonconvex
