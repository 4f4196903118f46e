#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "nonconvex/box_union.hpp"
#include "nonconvex/config.hpp"
#include "nonconvex/coverage.hpp"
#include "nonconvex/gauge.hpp"

namespace nonconvex {

struct MeasureResult {
  std::string measure;
  double value = 0, lower = 0, upper = 0;
  std::optional<Scalar> exact;         // the value, when rational
  std::optional<Scalar> exact_square;  // value squared, when rational
  std::string certificate;
  std::vector<std::string> flags;

  bool is_exact() const { return exact.has_value() || exact_square.has_value(); }
  static MeasureResult from_exact(std::string name, const Scalar& v);
  static MeasureResult from_square(std::string name, const Scalar& sq);
  static MeasureResult bounds(std::string name, double lo, double hi);
};

struct EmptySphereSimplex {
  std::vector<std::size_t> indices;
  Point center;
  Scalar radius2;
};

// Delaunay-type simplices of A in its affine hull.
std::vector<EmptySphereSimplex> empty_sphere_simplices(const PointSet& a, const Config& cfg = default_config());
std::vector<EmptySphereSimplex> lifted_delaunay_simplices(const PointSet& a);

struct VResult {
  MeasureResult result;
  std::optional<EmptySphereSimplex> simplex;
  std::optional<Point> maximizer;
};

enum class VRoute { Auto, Enumerate, Lifted };
VResult effective_stddev_v(const PointSet& a, const Config& cfg = default_config(), VRoute route = VRoute::Auto);
MeasureResult inner_radius_r(const PointSet& a, const Config& cfg = default_config());

// Pointwise measures; x must lie in conv(A).
std::optional<Scalar> v_pointwise2(const PointSet& a, const Point& x);
std::optional<double> w_pointwise(const PointSet& a, const Point& x);
double rho_pointwise(const PointSet& a, const Point& x);
Scalar d_pointwise2(const PointSet& a, const Point& x);
Scalar d_pointwise_gauge(const PointSet& a, const Gauge& k, const Point& x);
// Points of A on the smallest face of conv(A) containing x.
PointSet face_points(const PointSet& a, const Polytope& hull, const Point& x);

MeasureResult volume_deficit(const PointSet& a);
MeasureResult volume_deficit(const BoxUnion& u);

MeasureResult hausdorff_from_hull(const PointSet& a, const Gauge& k, const Config& cfg = default_config());
// Two-sided bounds: candidate lower bound and the v envelope.
MeasureResult hausdorff_bounds(const PointSet& a, const Config& cfg = default_config());
// Exact d in affine dimension <= 2 (Euclidean).
std::optional<MeasureResult> hausdorff_exact_low_dim(const PointSet& a, const Config& cfg = default_config());

MeasureResult schneider_c(const PointSet& a, const Config& cfg = default_config());
// Union of convex planar pieces.
MeasureResult schneider_c(const std::vector<Polygon>& pieces, const Config& cfg = default_config());
// d^(K) for a full-dimensional planar set and polygonal K, by certified bisection.
MeasureResult gauge_distance_planar(const PointSet& a, const Gauge& k, const Config& cfg = default_config());
double rho_pointwise(const PointSet& a, const Polytope& hull, const Point& x);

// Gauge form of c at one point: min_a ||x - a||_{conv(A) - x}; x interior.
std::optional<Scalar> c_pointwise(const PointSet& a, const Point& x);

struct MeasureRow {
  std::vector<MeasureResult> measures;
  const MeasureResult* find(const std::string& name) const;
};

MeasureRow measure_suite(const PointSet& a, const Gauge& k, const Config& cfg = default_config(),
                         const std::vector<std::string>& which = {});
MeasureRow measure_suite(const BoxUnion& u, const Config& cfg = default_config(),
                         const std::vector<std::string>& which = {});

double circumradius_R(const PointSet& a);

// Certified float branch and bound for sup of a 1-Lipschitz f over a full-dimensional hull.
// Stops once the upper bound is at most target, or within gap of the best value found.
struct SupBound {
  double lower = 0, upper = 0;
  std::vector<double> at;
  bool proven = false;  // upper <= target established
  std::size_t cells = 0;
};
SupBound lipschitz_sup(const Polytope& hull, const std::function<double(const std::vector<double>&)>& f,
                       double target, double min_cell, std::size_t max_cells = 2000000, double gap = 0);


}  // namespace nonconvex
