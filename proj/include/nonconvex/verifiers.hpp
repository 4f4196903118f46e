#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "nonconvex/box_union.hpp"
#include "nonconvex/config.hpp"
#include "nonconvex/gauge.hpp"
#include "nonconvex/linalg.hpp"
#include "nonconvex/measures.hpp"

namespace nonconvex {

enum class Verdict { Holds, Violated, Inconclusive };
const char* to_string(Verdict v);

enum class Rel { Le, Ge };

struct VerifierReport {
  std::string name;
  std::string instance;
  Rel relation = Rel::Le;  // claimed: lhs <= rhs or lhs >= rhs
  std::optional<Scalar> lhs_exact, rhs_exact;
  double lhs_lower = 0, lhs_upper = 0, rhs_lower = 0, rhs_upper = 0;
  Verdict verdict = Verdict::Inconclusive;
  std::vector<std::pair<std::string, std::string>> values;  // named extras, rationals as p/q
  std::string detail;
  std::uint64_t seed = 0;
  std::size_t trials = 1, failures = 0, inconclusive = 0;
  double runtime_ms = 0;

  bool holds() const { return verdict == Verdict::Holds; }
  void add(std::string key, std::string value) { values.emplace_back(std::move(key), std::move(value)); }
  const std::string* value(const std::string& key) const;
};

// Exact comparison; the only source of Violated verdicts.
VerifierReport compare_exact(std::string name, std::string instance, const Scalar& lhs, Rel rel, const Scalar& rhs);
// Interval comparison; Holds when the intervals separate within tol, else Inconclusive.
VerifierReport compare_bounds(std::string name, std::string instance, double lhs_lo, double lhs_hi, Rel rel,
                              double rhs_lo, double rhs_hi, double tol);
// Batch summary: Violated if any, Holds if all hold, else Inconclusive.
VerifierReport aggregate(std::string name, const std::vector<VerifierReport>& parts);

// Fractional partition of [k]: every i is covered with total weight 1.
struct FractionalPartition {
  std::size_t k = 0;
  std::vector<std::pair<std::vector<std::size_t>, Scalar>> parts;
  void validate() const;
};
FractionalPartition trivial_partition(std::size_t k);
FractionalPartition leave_out_partition(std::size_t k, std::size_t m);  // all m-subsets, weight 1/C(k-1,m-1)

// Volume laws.
VerifierReport verify_1d_superadditivity(const std::vector<BoxUnion>& sets);
VerifierReport verify_refined_superadditivity(const std::vector<BoxUnion>& sets);
VerifierReport verify_average_corollary(const BoxUnion& a, unsigned k);
VerifierReport verify_supermodularity_convex(const Box& b1, const Box& b2, const Box& b3);
VerifierReport verify_supermodularity_convex(const Polytope& b1, const Polytope& b2, const Polytope& b3);
VerifierReport verify_supermodularity_counterexample();
VerifierReport verify_1d_supermod_with_hull(const BoxUnion& a, const BoxUnion& b, const BoxUnion& c);
VerifierReport verify_det_supermodularity(const Matrix& k1, const Matrix& k2, const Matrix& k3);
VerifierReport verify_fractional_superadditivity(const std::vector<Box>& boxes, const FractionalPartition& fp);
VerifierReport verify_projection_monotone(const BoxUnion& a, unsigned kmax);
VerifierReport verify_delta_powers_of_two(const BoxUnion& a, unsigned jmax);

// Smallest multiple of k above log k / (log(1+1/k) - log(2)/k).
std::size_t nonmonotone_threshold(std::size_t k);
VerifierReport counterexample_thm_nonmonotone(std::size_t k, std::size_t d);

// Measure laws.
VerifierReport verify_c_three_set(const PointSet& a, const PointSet& b, const PointSet& c, const Config& cfg);
VerifierReport verify_c_rate(const PointSet& a, unsigned k, const Config& cfg);
VerifierReport verify_v_subadditivity(const PointSet& a, const PointSet& b, const Config& cfg);
VerifierReport verify_v_strong(const std::vector<PointSet>& sets, const Config& cfg);
VerifierReport verify_v_cassels(const std::vector<PointSet>& sets, const Config& cfg);
VerifierReport verify_v_rate(const PointSet& a, unsigned k, const Config& cfg);
VerifierReport verify_d_subadditivity(const PointSet& a, const PointSet& b, const Gauge& k, const Config& cfg);
VerifierReport verify_d_three_set(const PointSet& a, const PointSet& b, const PointSet& c, const Gauge& k,
                                  const Config& cfg);
VerifierReport verify_d_rate(const PointSet& a, unsigned k, const Gauge& g, const Config& cfg);
VerifierReport verify_d_partial_monotone(const PointSet& a, unsigned k, const Gauge& g, const Config& cfg);
VerifierReport verify_d_gauge_comparison(const PointSet& a, const Gauge& g, const Config& cfg);
VerifierReport verify_wegmann(const PointSet& a, const Config& cfg);
VerifierReport verify_measure_relations(const PointSet& a, const Config& cfg);  // c <= n, d <= Rc, r <= 2c/(1+c) R
VerifierReport verify_delta_controls_d(const BoxUnion& a, const Config& cfg);
VerifierReport grinberg_bound_check(const std::vector<PointSet>& sets, const Config& cfg);

VerifierReport counterexample_dyn_farkhi(const Scalar& f, const Config& cfg);
VerifierReport simplex_halfsum_ratio(std::size_t n, const Config& cfg);
VerifierReport verify_containment_rate(const PointSet& a, unsigned kmax, const Config& cfg);

// Named verifiers for the command line.
struct VerifierSpec {
  std::string name;
  std::string summary;
  // (seed, trials, params) -> report
  std::function<VerifierReport(std::uint64_t, std::size_t, const std::vector<std::pair<std::string, std::string>>&,
                               const Config&)>
      run;
};
const std::vector<VerifierSpec>& verifier_registry();
const VerifierSpec* find_verifier(const std::string& name);
// Runs trials concurrently; per-trial reports merged in seed order.
VerifierReport run_trials(const std::string& name, std::uint64_t seed, std::size_t trials,
                          const std::function<VerifierReport(std::uint64_t)>& trial);

}  // namespace nonconvex
