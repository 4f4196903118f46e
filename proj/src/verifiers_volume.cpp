#include <sstream>

#include "nonconvex/measures.hpp"
#include "nonconvex/verifiers.hpp"

namespace nonconvex {

namespace {

std::string describe(const BoxUnion& u) {
  std::ostringstream os;
  os << "{";
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i) os << " U ";
    os << "[" << to_string(u[i].lo) << "," << to_string(u[i].hi) << "]";
  }
  os << "}";
  return os.str();
}

std::string describe(const std::vector<BoxUnion>& sets) {
  std::string s;
  for (std::size_t i = 0; i < sets.size(); ++i) s += (i ? ", " : "") + describe(sets[i]);
  return s;
}

BoxUnion sum_all(const std::vector<BoxUnion>& sets, std::size_t skip = std::size_t(-1)) {
  std::optional<BoxUnion> s;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    if (i == skip) continue;
    s = s ? minkowski_sum(*s, sets[i]) : sets[i];
  }
  return *s;
}

Box box_sum(const Box& a, const Box& b) { return {a.lo + b.lo, a.hi + b.hi}; }

VerifierReport superadditivity(std::string name, const std::vector<BoxUnion>& sets) {
  std::size_t k = sets.size();
  if (k < 2) throw GeometryError(name + ": need at least two sets");
  for (const auto& s : sets)
    if (s.dim() != sets[0].dim()) throw DimensionMismatch(name + ": dimension mismatch");
  Scalar lhs = volume(sum_all(sets));
  Scalar rhs = 0;
  for (std::size_t i = 0; i < k; ++i) rhs += volume(sum_all(sets, i));
  rhs /= Scalar(long(k - 1));
  return compare_exact(std::move(name), describe(sets), lhs, Rel::Ge, rhs);
}

Scalar hull_length_1d(const BoxUnion& u) {
  Scalar lo = u[0].lo[0], hi = u[0].hi[0];
  for (const auto& b : u.boxes()) {
    lo = min(lo, b.lo[0]);
    hi = max(hi, b.hi[0]);
  }
  return hi - lo;
}

// Volume of the projection of conv(U) along the dropped axis.
Scalar projected_hull_volume(const BoxUnion& u, std::size_t axis) {
  PointSet corners = corner_points(drop_axis(u, axis));
  if (corners.dim() == 1) {
    Scalar lo = corners[0][0], hi = corners[corners.size() - 1][0];
    return hi - lo;
  }
  Polytope h = convex_hull(corners);
  return h.full_dimensional() ? volume(h) : Scalar(0);
}

}  // namespace

VerifierReport verify_1d_superadditivity(const std::vector<BoxUnion>& sets) {
  for (const auto& s : sets)
    if (s.dim() != 1) throw DimensionMismatch("superadditivity-1d: sets must be one-dimensional");
  return superadditivity("superadditivity-1d", sets);
}

VerifierReport verify_refined_superadditivity(const std::vector<BoxUnion>& sets) {
  return superadditivity("superadditivity", sets);
}

VerifierReport verify_average_corollary(const BoxUnion& a, unsigned k) {
  if (k < 2) throw GeometryError("average-corollary: k must be at least 2");
  std::size_t n = a.dim();
  Scalar vk = volume(average_set(a, k)), vk1 = volume(average_set(a, k - 1));
  Scalar factor = pow(Scalar(frac(long(k - 1), long(k))), unsigned(n - 1));
  VerifierReport r = compare_exact("average-corollary", describe(a) + ", k = " + std::to_string(k), vk, Rel::Ge,
                                   factor * vk1);
  r.add("vol_A_k", vk.get_str());
  r.add("vol_A_k_minus_1", vk1.get_str());
  return r;
}

VerifierReport verify_supermodularity_convex(const Box& b1, const Box& b2, const Box& b3) {
  Scalar lhs = box_sum(box_sum(b1, b2), b3).volume() + b1.volume();
  Scalar rhs = box_sum(b1, b2).volume() + box_sum(b1, b3).volume();
  std::ostringstream os;
  os << "B1 = [" << to_string(b1.lo) << "," << to_string(b1.hi) << "], B2 = [" << to_string(b2.lo) << ","
     << to_string(b2.hi) << "], B3 = [" << to_string(b3.lo) << "," << to_string(b3.hi) << "]";
  return compare_exact("supermodularity", os.str(), lhs, Rel::Ge, rhs);
}

VerifierReport verify_supermodularity_convex(const Polytope& b1, const Polytope& b2, const Polytope& b3) {
  auto vol = [](const Polytope& p) { return p.full_dimensional() ? volume(p) : Scalar(0); };
  Polytope s12 = minkowski_sum(b1, b2);
  Scalar lhs = vol(minkowski_sum(s12, b3)) + vol(b1);
  Scalar rhs = vol(s12) + vol(minkowski_sum(b1, b3));
  return compare_exact("supermodularity", "three polytopes", lhs, Rel::Ge, rhs);
}

VerifierReport verify_supermodularity_counterexample() {
  BoxUnion a(1, {make_box(Point{0}, Point{0}), make_box(Point{1}, Point{1})});
  BoxUnion b = single_box(Point{0}, Point{1});
  Scalar lhs = volume(minkowski_sum(minkowski_sum(a, b), b)) + volume(a);
  Scalar rhs = volume(minkowski_sum(a, b)) * 2;
  VerifierReport r = compare_exact("supermodularity-counterexample", "A = {0,1}, B = C = [0,1]", lhs, Rel::Ge, rhs);
  r.detail = "Vol(A+B+C) + Vol(A) = " + lhs.get_str() + ", Vol(A+B) + Vol(A+C) = " + rhs.get_str();
  return r;
}

VerifierReport verify_1d_supermod_with_hull(const BoxUnion& a, const BoxUnion& b, const BoxUnion& c) {
  if (a.dim() != 1 || b.dim() != 1 || c.dim() != 1) throw DimensionMismatch("supermodularity-1d-hull: dimension 1");
  Scalar lhs = volume(minkowski_sum(minkowski_sum(a, b), c)) + hull_length_1d(a);
  Scalar rhs = volume(minkowski_sum(a, b)) + volume(minkowski_sum(a, c));
  return compare_exact("supermodularity-1d-hull", describe(std::vector<BoxUnion>{a, b, c}), lhs, Rel::Ge, rhs);
}

VerifierReport verify_det_supermodularity(const Matrix& k1, const Matrix& k2, const Matrix& k3) {
  auto add = [](const Matrix& x, const Matrix& y) {
    Matrix s = x;
    for (std::size_t i = 0; i < s.size(); ++i)
      for (std::size_t j = 0; j < s[i].size(); ++j) s[i][j] += y[i][j];
    return s;
  };
  Matrix k12 = add(k1, k2);
  Scalar lhs = determinant(add(k12, k3)) + determinant(k1);
  Scalar rhs = determinant(k12) + determinant(add(k1, k3));
  return compare_exact("det-supermodularity", std::to_string(k1.size()) + "x" + std::to_string(k1.size()) +
                                                  " positive semidefinite triple",
                       lhs, Rel::Ge, rhs);
}

VerifierReport verify_fractional_superadditivity(const std::vector<Box>& boxes, const FractionalPartition& fp) {
  fp.validate();
  if (fp.k != boxes.size()) throw GeometryError("fractional-superadditivity: partition size differs from box count");
  auto sum_of = [&](const std::vector<std::size_t>& idx) {
    Box s{Point(boxes[0].dim()), Point(boxes[0].dim())};
    for (auto i : idx) s = box_sum(s, boxes[i]);
    return s.volume();
  };
  std::vector<std::size_t> all(boxes.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  Scalar lhs = sum_of(all), rhs = 0;
  for (const auto& [s, beta] : fp.parts) rhs += beta * sum_of(s);
  return compare_exact("fractional-superadditivity",
                       std::to_string(boxes.size()) + " boxes, " + std::to_string(fp.parts.size()) + " weighted subsets",
                       lhs, Rel::Ge, rhs);
}

VerifierReport verify_projection_monotone(const BoxUnion& a, unsigned kmax) {
  std::size_t n = a.dim();
  if (n < 2) throw DimensionMismatch("projection: dimension at least 2 required");
  std::optional<std::size_t> axis;
  for (std::size_t j = 0; j < n && !axis; ++j)
    if (volume(drop_axis(a, j)) == projected_hull_volume(a, j)) axis = j;
  if (!axis) {
    VerifierReport r;
    r.name = "projection";
    r.instance = describe(a);
    r.verdict = Verdict::Inconclusive;
    r.inconclusive = 1;
    r.detail = "hypothesis unmet, skipped (no coordinate hyperplane preserves the projected volume)";
    return r;
  }
  std::vector<VerifierReport> parts;
  Scalar prev = volume(a);
  for (unsigned k = 2; k <= kmax; ++k) {
    Scalar cur = volume(average_set(a, k));
    parts.push_back(compare_exact("projection", describe(a) + ", k = " + std::to_string(k), cur, Rel::Ge,
                                  Scalar(frac(long(k - 1), long(k))) * prev));
    prev = cur;
  }
  VerifierReport r = aggregate("projection", parts);
  r.instance = describe(a) + ", k = 2.." + std::to_string(kmax);
  r.add("axis", std::to_string(*axis));
  return r;
}

VerifierReport verify_delta_powers_of_two(const BoxUnion& a, unsigned jmax) {
  std::vector<VerifierReport> parts;
  auto delta = [](const BoxUnion& u) {
    MeasureResult m = volume_deficit(u);
    if (!m.exact) throw GeometryError("delta-powers: exact deficit unavailable");
    return *m.exact;
  };
  Scalar prev = delta(a);
  for (unsigned j = 1; j <= jmax; ++j) {
    Scalar cur = delta(average_set(a, 1u << j));
    parts.push_back(compare_exact("delta-powers", describe(a) + ", k = " + std::to_string(1u << j), cur, Rel::Le, prev));
    prev = cur;
  }
  VerifierReport r = aggregate("delta-powers", parts);
  r.instance = describe(a);
  return r;
}

}  // namespace nonconvex
