#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <thread>

#include "nonconvex/balance.hpp"
#include "nonconvex/io.hpp"
#include "nonconvex/lp.hpp"
#include "nonconvex/random.hpp"
#include "nonconvex/shapley_folkman.hpp"
#include "nonconvex/verifiers.hpp"

namespace nonconvex {

using Params = std::vector<std::pair<std::string, std::string>>;

namespace {

std::string param(const Params& p, const std::string& key, const std::string& dflt) {
  for (const auto& [k, v] : p)
    if (k == key) return v;
  return dflt;
}

long param_int(const Params& p, const std::string& key, long dflt) {
  std::string s = param(p, key, "");
  if (s.empty()) return dflt;
  std::size_t pos = 0;
  long v = std::stol(s, &pos);
  if (pos != s.size()) throw std::invalid_argument("parameter " + key + " must be an integer: " + s);
  return v;
}

BoxUnion random_union(Rng& rng, std::size_t dim, std::size_t max_boxes, long range = 4) {
  std::size_t b = std::size_t(rng.integer(1, long(max_boxes)));
  return rng.box_union(dim, b, 0, Scalar(range));
}

PointSet random_set(Rng& rng, std::size_t dim, long lo_size, long hi_size) {
  for (;;) {
    PointSet a = rng.point_set(dim, std::size_t(rng.integer(lo_size, hi_size)), 0, 4);
    if (affine_frame(a.points()).dim() == dim) return a;
  }
}

Matrix random_psd(Rng& rng, std::size_t n) {
  Matrix m(n, Vector(n));
  for (auto& row : m)
    for (auto& x : row) x = rng.rational(-2, 2);
  return multiply(transpose(m, n), m);
}

FractionalPartition random_partition(Rng& rng, std::size_t k) {
  long kind = rng.integer(0, 2);
  if (kind == 0) return trivial_partition(k);
  if (kind == 1) return leave_out_partition(k, std::size_t(rng.integer(1, long(k))));
  // Random family plus singletons; an LP vertex gives the weights.
  std::vector<std::vector<std::size_t>> fam;
  for (std::size_t i = 0; i < k; ++i) fam.push_back({i});
  for (int t = 0; t < 6; ++t) {
    std::vector<std::size_t> s;
    for (std::size_t i = 0; i < k; ++i)
      if (rng.integer(0, 1)) s.push_back(i);
    if (s.size() >= 2) fam.push_back(s);
  }
  LinearProgram lp;
  lp.sense = Sense::Maximize;
  for (std::size_t j = 0; j < fam.size(); ++j) lp.objective.push_back(Scalar(rng.integer(0, 5)) * Scalar(long(fam[j].size())));
  for (std::size_t i = 0; i < k; ++i) {
    Vector row(fam.size());
    for (std::size_t j = 0; j < fam.size(); ++j)
      if (std::find(fam[j].begin(), fam[j].end(), i) != fam[j].end()) row[j] = 1;
    lp.add(std::move(row), Relation::Eq, 1);
  }
  LpResult res = solve(lp);
  FractionalPartition fp{k, {}};
  for (std::size_t j = 0; j < fam.size(); ++j)
    if (sign(res.x[j]) > 0) fp.parts.emplace_back(fam[j], res.x[j]);
  return fp;
}

VerifierReport balance_trial(Rng& rng, std::size_t k, std::size_t n) {
  std::vector<Point> xs;
  for (std::size_t i = 0; i < k; ++i) xs.push_back(rng.unit_vector(n));
  VerifierReport r;
  r.name = "balance";
  r.instance = std::to_string(k) + " random unit vectors in R^" + std::to_string(n);
  std::vector<std::string> bad;
  double sn = std::sqrt(double(n));
  struct G {
    Gauge g;
    double p_bound;
  };
  std::vector<G> gauges{{gauge_by_name("l2", n), sn}, {gauge_by_name("l1", n), double(n)}, {gauge_by_name("linf", n), double(n)}};
  for (const auto& [g, pb] : gauges) {
    BalanceResult b = balance_signs(xs, g);
    r.add("achieved_" + g.name(), std::to_string(b.achieved));
    if (!b.general_ok) bad.push_back(g.name() + ": above n max|x|_K");
    if (!b.euclidean_ok) bad.push_back(g.name() + ": above sqrt(n) max|x|");
    if (b.achieved > pb * b.max_norm + 1e-9) bad.push_back(g.name() + ": above the l_p interpolation bound");
  }
  r.verdict = bad.empty() ? Verdict::Holds : Verdict::Inconclusive;
  r.inconclusive = bad.empty() ? 0 : 1;
  for (const auto& s : bad) r.detail += (r.detail.empty() ? "" : "; ") + s;
  return r;
}

VerifierReport sf_trial(Rng& rng, std::size_t k, std::size_t n) {
  std::vector<PointSet> sets;
  Point x(n);
  for (std::size_t i = 0; i < k; ++i) {
    sets.push_back(rng.point_set(n, 4, -2, 2));
    // Random convex combination of the set's points.
    Vector w;
    Scalar total = 0;
    for (std::size_t j = 0; j < sets.back().size(); ++j) {
      w.push_back(Scalar(rng.integer(0, 8)));
      total += w.back();
    }
    if (sign(total) == 0) {
      w[0] = 1;
      total = 1;
    }
    for (std::size_t j = 0; j < w.size(); ++j) x += sets.back()[j] * Scalar(w[j] / total);
  }
  SFResult res = sf_decompose(sets, x);
  VerifierReport r;
  r.name = "shapley-folkman";
  r.instance = std::to_string(k) + " random 4-point sets in R^" + std::to_string(n) + ", x = " + to_string(x);
  bool ok = res.decomposition && res.decomposition->valid();
  std::size_t frac_count = res.decomposition ? res.decomposition->fractional.size() : 0;
  r.lhs_exact = Scalar(long(frac_count));
  r.rhs_exact = Scalar(long(n));
  r.lhs_lower = r.lhs_upper = double(frac_count);
  r.rhs_lower = r.rhs_upper = double(n);
  r.add("fractional", std::to_string(frac_count));
  r.verdict = ok ? Verdict::Holds : Verdict::Violated;
  r.failures = ok ? 0 : 1;
  return r;
}

std::vector<VerifierSpec> build_registry() {
  std::vector<VerifierSpec> reg;
  auto add = [&](std::string name, std::string summary, std::function<VerifierReport(Rng&, const Params&, const Config&)> one) {
    std::string nm = name;
    reg.push_back({name, summary, [nm, one](std::uint64_t seed, std::size_t trials, const Params& p, const Config& cfg) {
                     return run_trials(nm, seed, trials, [&](std::uint64_t s) {
                       Rng rng(s);
                       return one(rng, p, cfg);
                     });
                   }});
  };
  auto fixed = [&](std::string name, std::string summary, std::function<VerifierReport(const Params&, const Config&)> one) {
    reg.push_back({name, summary, [one](std::uint64_t seed, std::size_t, const Params& p, const Config& cfg) {
                     auto t0 = std::chrono::steady_clock::now();
                     VerifierReport r = one(p, cfg);
                     r.seed = seed;
                     r.runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
                     return r;
                   }});
  };

  add("superadditivity-1d", "Vol(sum A_i) >= 1/(k-1) sum Vol(sum_{j!=i} A_j) in dimension one",
      [](Rng& rng, const Params& p, const Config&) {
        std::vector<BoxUnion> s;
        for (long i = 0; i < param_int(p, "k", 3); ++i) s.push_back(random_union(rng, 1, 3));
        return verify_1d_superadditivity(s);
      });
  add("superadditivity", "refined superadditivity of volume for box unions",
      [](Rng& rng, const Params& p, const Config&) {
        std::vector<BoxUnion> s;
        std::size_t dim = std::size_t(param_int(p, "dim", 2));
        for (long i = 0; i < param_int(p, "k", 3); ++i) s.push_back(random_union(rng, dim, 2));
        return verify_refined_superadditivity(s);
      });
  add("average-corollary", "Vol(A(k)) >= ((k-1)/k)^(n-1) Vol(A(k-1))", [](Rng& rng, const Params& p, const Config&) {
    return verify_average_corollary(random_union(rng, std::size_t(param_int(p, "dim", 2)), 3),
                                    unsigned(param_int(p, "k", 3)));
  });
  add("supermodularity", "volume supermodularity for boxes", [](Rng& rng, const Params& p, const Config&) {
    std::size_t dim = std::size_t(param_int(p, "dim", 2));
    return verify_supermodularity_convex(rng.box(dim, 0, 4), rng.box(dim, 0, 4), rng.box(dim, 0, 4));
  });
  fixed("supermodularity-counterexample", "A = {0,1}, B = C = [0,1]: 3 < 4",
        [](const Params&, const Config&) { return verify_supermodularity_counterexample(); });
  add("supermodularity-1d-hull", "Vol(A+B+C) + Vol(conv A) >= Vol(A+B) + Vol(A+C) in dimension one",
      [](Rng& rng, const Params&, const Config&) {
        return verify_1d_supermod_with_hull(random_union(rng, 1, 3), random_union(rng, 1, 3), random_union(rng, 1, 3));
      });
  add("det-supermodularity", "det(K1+K2+K3) + det(K1) >= det(K1+K2) + det(K1+K3)",
      [](Rng& rng, const Params& p, const Config&) {
        std::size_t n = std::size_t(param_int(p, "n", 2));
        return verify_det_supermodularity(random_psd(rng, n), random_psd(rng, n), random_psd(rng, n));
      });
  add("fractional-superadditivity", "volume of box sums against fractional partitions",
      [](Rng& rng, const Params& p, const Config&) {
        std::size_t k = std::size_t(param_int(p, "k", 4)), dim = std::size_t(param_int(p, "dim", 2));
        std::vector<Box> boxes;
        for (std::size_t i = 0; i < k; ++i) boxes.push_back(rng.box(dim, 0, 4));
        return verify_fractional_superadditivity(boxes, random_partition(rng, k));
      });
  add("projection", "projection hypothesis gives Vol(A(k)) >= (k-1)/k Vol(A(k-1))",
      [](Rng& rng, const Params& p, const Config&) {
        // Staircase over a full bottom edge.
        std::size_t steps = std::size_t(rng.integer(2, 3));
        std::vector<Box> boxes;
        Scalar x = 0;
        for (std::size_t i = 0; i < steps; ++i) {
          Scalar w = rng.rational(frac(1, 2), 2), h = rng.rational(frac(1, 2), 3);
          boxes.push_back(make_box(Point{x, Scalar(0)}, Point{x + w, h}));
          x += w;
        }
        return verify_projection_monotone(BoxUnion(2, boxes), unsigned(param_int(p, "kmax", 4)));
      });
  add("delta-powers", "Delta(A(2^(j+1))) <= Delta(A(2^j)) for box unions", [](Rng& rng, const Params& p, const Config&) {
    return verify_delta_powers_of_two(random_union(rng, 2, 2), unsigned(param_int(p, "jmax", 2)));
  });
  fixed("thm-nonmonotone", "union of cubes in orthogonal blocks: Vol(A(k+1)) < Vol(A(k))",
        [](const Params& p, const Config&) {
          return counterexample_thm_nonmonotone(std::size_t(param_int(p, "k", 2)), std::size_t(param_int(p, "d", 6)));
        });
  add("c-three-set", "c(A+B+C) <= max(c(A+B), c(B+C))", [](Rng& rng, const Params& p, const Config& cfg) {
    std::size_t dim = std::size_t(param_int(p, "dim", 1));
    return verify_c_three_set(random_set(rng, dim, 2, 3), random_set(rng, dim, 2, 3), random_set(rng, dim, 2, 3), cfg);
  });
  add("c-rate", "c(A(k)) <= c(A)/k and c(A(k)) <= (k-1)/k c(A(k-1))", [](Rng& rng, const Params& p, const Config& cfg) {
    std::size_t dim = std::size_t(param_int(p, "dim", 1));
    return verify_c_rate(random_set(rng, dim, 2, 4), unsigned(param_int(p, "k", 2)), cfg);
  });
  add("v-subadditivity", "v^2(A+B) <= v^2(A) + v^2(B)", [](Rng& rng, const Params& p, const Config& cfg) {
    std::size_t dim = std::size_t(param_int(p, "dim", 2));
    return verify_v_subadditivity(random_set(rng, dim, 3, 5), random_set(rng, dim, 3, 5), cfg);
  });
  add("v-strong", "v(sum A_i) <= max_{|I|<=n} min_{i not in I} v(sum_{j!=i} A_j)",
      [](Rng& rng, const Params& p, const Config& cfg) {
        std::size_t dim = std::size_t(param_int(p, "dim", 2));
        std::vector<PointSet> s;
        for (long i = 0; i < param_int(p, "k", long(dim) + 1); ++i) s.push_back(random_set(rng, dim, 2, 3));
        return verify_v_strong(s, cfg);
      });
  add("v-cassels", "v(sum A_i) <= sqrt(min(k,n)) max v(A_i)", [](Rng& rng, const Params& p, const Config& cfg) {
    std::size_t dim = std::size_t(param_int(p, "dim", 2));
    std::vector<PointSet> s;
    for (long i = 0; i < param_int(p, "k", 3); ++i) s.push_back(random_set(rng, dim, 2, 3));
    return verify_v_cassels(s, cfg);
  });
  add("v-rate", "v(A(k)) <= min(1/sqrt(k), sqrt(n)/k) v(A)", [](Rng& rng, const Params& p, const Config& cfg) {
    std::size_t dim = std::size_t(param_int(p, "dim", 2));
    return verify_v_rate(random_set(rng, dim, 3, 4), unsigned(param_int(p, "k", 2)), cfg);
  });
  add("d-subadditivity", "d^K(A+B) <= d^K(A) + d^K(B)", [](Rng& rng, const Params& p, const Config& cfg) {
    std::size_t dim = std::size_t(param_int(p, "dim", 2));
    Gauge g = gauge_by_name(param(p, "gauge", "l2"), dim);
    return verify_d_subadditivity(random_set(rng, dim, 3, 4), random_set(rng, dim, 3, 4), g, cfg);
  });
  add("d-three-set", "d^K(A+B+C) <= d^K(A+B) + d^K(B+C)", [](Rng& rng, const Params& p, const Config& cfg) {
    std::size_t dim = std::size_t(param_int(p, "dim", 2));
    Gauge g = gauge_by_name(param(p, "gauge", "l2"), dim);
    return verify_d_three_set(random_set(rng, dim, 3, 3), random_set(rng, dim, 3, 3), random_set(rng, dim, 3, 3), g, cfg);
  });
  add("d-rate", "d^K(A(k)) <= min(1, ceil(c(A))/k) d^K(A)", [](Rng& rng, const Params& p, const Config& cfg) {
    std::size_t dim = std::size_t(param_int(p, "dim", 2));
    Gauge g = gauge_by_name(param(p, "gauge", "l2"), dim);
    return verify_d_rate(random_set(rng, dim, 3, 4), unsigned(param_int(p, "k", 3)), g, cfg);
  });
  add("d-partial-monotone", "d^K(A(k)) <= 2 (k-1)/k d^K(A(k-1))", [](Rng& rng, const Params& p, const Config& cfg) {
    std::size_t dim = std::size_t(param_int(p, "dim", 2));
    Gauge g = gauge_by_name(param(p, "gauge", "l2"), dim);
    return verify_d_partial_monotone(random_set(rng, dim, 3, 4), unsigned(param_int(p, "k", 2)), g, cfg);
  });
  add("d-gauge-comparison", "r d^K(A) <= d(A) <= R d^K(A)", [](Rng& rng, const Params& p, const Config& cfg) {
    std::size_t dim = std::size_t(param_int(p, "dim", 2));
    return verify_d_gauge_comparison(random_set(rng, dim, 3, 5), gauge_by_name(param(p, "gauge", "linf"), dim), cfg);
  });
  add("wegmann", "d <= rho = w = v = r", [](Rng& rng, const Params& p, const Config& cfg) {
    std::size_t dim = std::size_t(param_int(p, "dim", 2));
    return verify_wegmann(random_set(rng, dim, 3, param_int(p, "max-size", 8)), cfg);
  });
  add("measure-relations", "c <= n, d <= R c, r <= 2c/(1+c) R", [](Rng& rng, const Params& p, const Config& cfg) {
    std::size_t dim = std::size_t(param_int(p, "dim", 2));
    return verify_measure_relations(random_set(rng, dim, 3, 6), cfg);
  });
  add("delta-controls-d", "d bounded through Delta, R and the inradius of the hull",
      [](Rng& rng, const Params&, const Config& cfg) {
        for (;;) {
          BoxUnion u = random_union(rng, 2, 3);
          bool fat = true;
          for (const auto& b : u.boxes()) fat = fat && !b.degenerate();
          if (fat) return verify_delta_controls_d(u, cfg);
        }
      });
  add("grinberg", "d(sum A_i) <= (D/2) sqrt(n)", [](Rng& rng, const Params& p, const Config& cfg) {
    std::size_t dim = std::size_t(param_int(p, "dim", 2));
    std::vector<PointSet> s;
    for (long i = 0; i < param_int(p, "k", 5); ++i) {
      Point x = rng.point(dim, -2, 2);
      s.push_back(PointSet(dim, {x, -x}));
    }
    return grinberg_bound_check(s, cfg);
  });
  fixed("dyn-farkhi", "d^2(A+B) <= d^2(A) + d^2(B) fails for two pairs of segments in R^3",
        [](const Params& p, const Config& cfg) { return counterexample_dyn_farkhi(parse_scalar(param(p, "f", "10")), cfg); });
  fixed("simplex-ratio", "d((A+A)/2)/d(A) = sqrt((n-1)/(2n)) for simplex vertices", [](const Params& p, const Config& cfg) {
    return simplex_halfsum_ratio(std::size_t(param_int(p, "n", 2)), cfg);
  });
  add("containment", "conv(A) inside A(k) + (n diam(A)/k) B", [](Rng& rng, const Params& p, const Config& cfg) {
    return verify_containment_rate(random_set(rng, 2, 3, param_int(p, "max-size", 4)), unsigned(param_int(p, "kmax", 20)),
                                   cfg);
  });
  add("balance", "sign balancing within n max|x|_K, sqrt(n) max|x| and the l_p bounds",
      [](Rng& rng, const Params& p, const Config&) {
        return balance_trial(rng, std::size_t(param_int(p, "k", 50)), std::size_t(param_int(p, "n", 6)));
      });
  add("shapley-folkman", "constructive decomposition with at most n fractional summands",
      [](Rng& rng, const Params& p, const Config&) {
        return sf_trial(rng, std::size_t(param_int(p, "k", 10)), std::size_t(param_int(p, "n", 3)));
      });
  return reg;
}

}  // namespace

VerifierReport run_trials(const std::string& name, std::uint64_t seed, std::size_t trials,
                          const std::function<VerifierReport(std::uint64_t)>& trial) {
  if (trials == 0) throw std::invalid_argument("trials must be positive");
  std::vector<VerifierReport> out(trials);
  std::vector<std::string> errors(trials);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t t; (t = next++) < trials;) {
      auto t0 = std::chrono::steady_clock::now();
      try {
        out[t] = trial(seed + t);
      } catch (const std::exception& e) {
        errors[t] = e.what();
      }
      out[t].seed = seed + t;
      out[t].runtime_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
    }
  };
  std::size_t nthreads = std::min<std::size_t>(trials, std::max(1u, std::thread::hardware_concurrency()));
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < nthreads; ++i) pool.emplace_back(worker);
  for (auto& th : pool) th.join();
  for (std::size_t t = 0; t < trials; ++t)
    if (!errors[t].empty()) throw GeometryError(name + " (seed " + std::to_string(seed + t) + "): " + errors[t]);
  VerifierReport r = aggregate(name, out);
  r.seed = seed;
  return r;
}

const std::vector<VerifierSpec>& verifier_registry() {
  static const std::vector<VerifierSpec> reg = build_registry();
  return reg;
}

const VerifierSpec* find_verifier(const std::string& name) {
  for (const auto& v : verifier_registry())
    if (v.name == name) return &v;
  return nullptr;
}

}  // namespace nonconvex
