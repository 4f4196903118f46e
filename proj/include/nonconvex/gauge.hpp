#pragma once

#include <optional>
#include <string>

#include "nonconvex/polytope.hpp"

namespace nonconvex {

class Gauge {
 public:
  static Gauge euclidean(std::size_t dim, const Scalar& radius = 1);
  // body must contain the origin strictly inside.
  static Gauge polytope(const Polytope& body);
  static Gauge cube(std::size_t dim);          // unit ball of l_inf
  static Gauge cross_polytope(std::size_t dim);  // unit ball of l_1
  static Gauge interval(const Scalar& alpha, const Scalar& beta);  // [-alpha, beta]

  std::size_t dim() const { return dim_; }
  bool is_euclidean() const { return !body_; }
  const Polytope& body() const { return *body_; }
  const Scalar& radius() const { return radius_; }
  bool symmetric() const { return symmetric_; }
  const std::string& name() const { return name_; }
  void set_name(std::string n) { name_ = std::move(n); }

  // Exact norm for polytope gauges.
  Scalar norm_exact(const Point& x) const;
  double norm(const Point& x) const;
  // Largest r with r B_2 inside K, and smallest R with K inside R B_2.
  double inner_radius() const;
  double outer_radius() const;

 private:
  std::size_t dim_ = 0;
  Scalar radius_ = 1;
  std::optional<Polytope> body_;
  bool symmetric_ = true;
  enum class Shape { General, Cube, Cross } shape_ = Shape::General;  // closed-form norms
  std::string name_;
};

double gauge_norm(const Gauge& k, const Point& x);
// Chebyshev-center inradius of a full-dimensional polytope.
double inradius(const Polytope& p);

}  // namespace nonconvex
