#include "nonconvex/verifiers.hpp"

#include <algorithm>
#include <cmath>

namespace nonconvex {

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Holds: return "holds";
    case Verdict::Violated: return "violated";
    case Verdict::Inconclusive: return "inconclusive";
  }
  return "?";
}

const std::string* VerifierReport::value(const std::string& key) const {
  for (const auto& [k, v] : values)
    if (k == key) return &v;
  return nullptr;
}

VerifierReport compare_exact(std::string name, std::string instance, const Scalar& lhs, Rel rel, const Scalar& rhs) {
  VerifierReport r;
  r.name = std::move(name);
  r.instance = std::move(instance);
  r.relation = rel;
  r.lhs_exact = lhs;
  r.rhs_exact = rhs;
  r.lhs_lower = r.lhs_upper = lhs.get_d();
  r.rhs_lower = r.rhs_upper = rhs.get_d();
  bool ok = rel == Rel::Le ? lhs <= rhs : lhs >= rhs;
  r.verdict = ok ? Verdict::Holds : Verdict::Violated;
  r.failures = ok ? 0 : 1;
  return r;
}

VerifierReport compare_bounds(std::string name, std::string instance, double lhs_lo, double lhs_hi, Rel rel,
                              double rhs_lo, double rhs_hi, double tol) {
  VerifierReport r;
  r.name = std::move(name);
  r.instance = std::move(instance);
  r.relation = rel;
  r.lhs_lower = lhs_lo;
  r.lhs_upper = lhs_hi;
  r.rhs_lower = rhs_lo;
  r.rhs_upper = rhs_hi;
  bool ok = rel == Rel::Le ? lhs_hi <= rhs_lo + tol : lhs_lo + tol >= rhs_hi;
  r.verdict = ok ? Verdict::Holds : Verdict::Inconclusive;
  r.inconclusive = ok ? 0 : 1;
  return r;
}

VerifierReport aggregate(std::string name, const std::vector<VerifierReport>& parts) {
  VerifierReport r;
  r.name = std::move(name);
  r.trials = parts.size();
  r.failures = r.inconclusive = 0;
  bool all = true;
  const VerifierReport* first_bad = nullptr;
  for (const auto& p : parts) {
    if (p.verdict == Verdict::Violated) {
      ++r.failures;
      if (!first_bad || first_bad->verdict != Verdict::Violated) first_bad = &p;
    } else if (p.verdict == Verdict::Inconclusive) {
      ++r.inconclusive;
      if (!first_bad) first_bad = &p;
    }
    all = all && p.holds();
    r.runtime_ms += p.runtime_ms;
  }
  r.verdict = r.failures ? Verdict::Violated : all ? Verdict::Holds : Verdict::Inconclusive;
  if (parts.size() == 1) {
    VerifierReport one = parts[0];
    one.name = r.name;
    return one;
  }
  r.instance = std::to_string(parts.size()) + " instances";
  if (first_bad) {
    r.detail = "first " + std::string(to_string(first_bad->verdict)) + ": " + first_bad->instance;
    r.lhs_exact = first_bad->lhs_exact;
    r.rhs_exact = first_bad->rhs_exact;
    r.lhs_lower = first_bad->lhs_lower;
    r.lhs_upper = first_bad->lhs_upper;
    r.rhs_lower = first_bad->rhs_lower;
    r.rhs_upper = first_bad->rhs_upper;
  }
  return r;
}

void FractionalPartition::validate() const {
  std::vector<Scalar> cover(k, 0);
  for (const auto& [s, beta] : parts) {
    if (sign(beta) <= 0) throw GeometryError("fractional partition: weights must be positive");
    for (auto i : s) {
      if (i >= k) throw GeometryError("fractional partition: index out of range");
      cover[i] += beta;
    }
  }
  for (std::size_t i = 0; i < k; ++i)
    if (cover[i] != 1) throw GeometryError("fractional partition: element " + std::to_string(i) + " has weight " +
                                           cover[i].get_str());
}

FractionalPartition trivial_partition(std::size_t k) {
  FractionalPartition fp{k, {}};
  std::vector<std::size_t> all(k);
  for (std::size_t i = 0; i < k; ++i) all[i] = i;
  fp.parts.emplace_back(all, Scalar(1));
  return fp;
}

FractionalPartition leave_out_partition(std::size_t k, std::size_t m) {
  if (m == 0 || m > k) throw GeometryError("leave_out_partition: need 1 <= m <= k");
  // C(k-1, m-1)
  Scalar c = 1;
  for (std::size_t i = 1; i < m; ++i) c = c * Scalar(long(k - m + i)) / Scalar(long(i));
  FractionalPartition fp{k, {}};
  std::vector<std::size_t> idx(m);
  for (std::size_t i = 0; i < m; ++i) idx[i] = i;
  while (true) {
    fp.parts.emplace_back(idx, Scalar(1 / c));
    std::size_t i = m;
    while (i-- > 0 && idx[i] == k - m + i) {
    }
    if (i == std::size_t(-1)) break;
    ++idx[i];
    for (std::size_t j = i + 1; j < m; ++j) idx[j] = idx[j - 1] + 1;
  }
  return fp;
}

std::size_t nonmonotone_threshold(std::size_t k) {
  if (k < 2) throw GeometryError("nonmonotone_threshold: k must be at least 2");
  double kk = double(k);
  double bound = std::log(kk) / (std::log1p(1 / kk) - std::log(2.0) / kk);
  std::size_t n = k;
  while (double(n) <= bound) n += k;
  return n;
}

VerifierReport counterexample_thm_nonmonotone(std::size_t k, std::size_t d) {
  if (k < 2 || d < 1) throw GeometryError("counterexample: need k >= 2 and d >= 1");
  std::size_t n = k * d;
  std::vector<Box> cubes;
  for (std::size_t i = 0; i < k; ++i) {
    Point lo(n), hi(n);
    for (std::size_t j = 0; j < d; ++j) hi[i * d + j] = 1;
    cubes.push_back({lo, hi});
  }
  BoxUnion a(n, cubes);
  Scalar vk = volume(average_set(a, unsigned(k)));
  Scalar vk1 = volume(average_set(a, unsigned(k + 1)));
  std::size_t nk = nonmonotone_threshold(k);
  std::string inst = "A = union of " + std::to_string(k) + " unit cubes in orthogonal " + std::to_string(d) +
                     "-dimensional blocks of R^" + std::to_string(n);
  // Monotonicity claim under test: Vol(A(k+1)) >= Vol(A(k)).
  VerifierReport r = compare_exact("thm-nonmonotone", inst, vk1, Rel::Ge, vk);
  r.add("k", std::to_string(k));
  r.add("d", std::to_string(d));
  r.add("n", std::to_string(n));
  r.add("n_k", std::to_string(nk));
  r.add("vol_A_k", vk.get_str());
  r.add("vol_A_k_plus_1", vk1.get_str());
  if (r.verdict == Verdict::Violated)
    r.detail = "Vol(A(" + std::to_string(k + 1) + ")) = " + vk1.get_str() + " < " + vk.get_str() + " = Vol(A(" +
               std::to_string(k) + ")): monotonicity fails";
  else
    r.detail = "Vol(A(" + std::to_string(k + 1) + ")) >= Vol(A(" + std::to_string(k) + ")) on this instance" +
               (n < nk ? std::string(" (n below n_k, no falsification expected)") : std::string());
  return r;
}

}  // namespace nonconvex
