#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace nonconvex {

using Scalar = mpq_class;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

class BudgetExceeded : public GeometryError {
 public:
  using GeometryError::GeometryError;
};

// Canonical p/q.
Scalar frac(long p, long q);

// Accepts "p/q", integers, decimals and scientific notation; all exact.
Scalar parse_scalar(std::string_view text);
std::string to_string(const Scalar& s);

double to_double(const Scalar& s);
Scalar from_double_exact(double x);
// Exact value of the shortest decimal that round-trips to x.
Scalar from_double_decimal(double x);

int sign(const Scalar& s);
Scalar pow(const Scalar& base, unsigned e);
Scalar min(const Scalar& a, const Scalar& b);
Scalar max(const Scalar& a, const Scalar& b);

double sqrt_of(const Scalar& s);
std::optional<Scalar> exact_sqrt(const Scalar& s);

// Rational r with r >= x (resp. <= x), denominator 2^bits.
Scalar round_up(double x, int bits = 40);
Scalar round_down(double x, int bits = 40);

}  // namespace nonconvex
