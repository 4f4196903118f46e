// Command-line front end. Exit codes: 0 success or holds, 2 violated, 1 error.
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "nonconvex/balance.hpp"
#include "nonconvex/io.hpp"
#include "nonconvex/random.hpp"
#include "nonconvex/report.hpp"
#include "nonconvex/shapley_folkman.hpp"

using namespace nonconvex;

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

struct Output {
  std::string out, format = "json";
  void emit(const std::string& text) const {
    if (out.empty()) std::cout << text;
    else write_file(out, text);
  }
  void emit(const Report& r, bool timings) const {
    emit(format == "csv" ? report_to_csv(r) : report_to_json(r, timings));
  }
};

int verdict_exit(const std::vector<VerifierReport>& rs) {
  for (const auto& r : rs)
    if (r.verdict == Verdict::Violated) return 2;
  return 0;
}

std::vector<std::string> echo(int argc, char** argv) {
  std::vector<std::string> c;
  for (int i = 1; i < argc; ++i) c.emplace_back(argv[i]);
  return c;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Measures of non-convexity and Minkowski averages"};
  app.require_subcommand(1);
  app.fallthrough();  // global options may follow the subcommand
  std::string config_path;
  bool timings = false;
  std::optional<std::uint64_t> seed_opt;
  std::optional<std::string> output_dir;
  app.add_option("--config", config_path, "JSON config file (default: $NONCONVEX_CONFIG)");
  app.add_flag("--timings", timings, "include timings in reports");
  app.add_option("--seed", seed_opt, "RNG seed");
  app.add_option("--output-dir", output_dir, "directory for plots");

  Output out;
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("--out", out.out, "write to file instead of stdout");
    sub->add_option("--format", out.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  };

  std::vector<std::string> inputs;
  std::string gauge = "l2", measures_arg;

  auto* measure = app.add_subcommand("measure", "non-convexity measures of one set");
  measure->add_option("--in", inputs, "set file (JSON or CSV)")->required()->expected(1);
  measure->add_option("--gauge", gauge, "l2, l1, linf or a polytope JSON file");
  measure->add_option("--measures", measures_arg, "comma list from delta,d,c,v,r,R,diam,inr");
  add_output(measure);

  unsigned average_k = 0;
  auto* sum = app.add_subcommand("sum", "Minkowski sum of sets, or the average A(k) of one set");
  sum->add_option("--in", inputs, "set files")->required();
  sum->add_option("--average", average_k, "output A(k) of the single input");
  sum->add_option("--out", out.out, "write to file instead of stdout");

  unsigned kmax = 8;
  bool plot = false;
  auto* sequence = app.add_subcommand("sequence", "measures of A(k) for k = 1..kmax");
  sequence->add_option("--in", inputs, "set file")->required()->expected(1);
  sequence->add_option("--kmax", kmax, "largest k")->check(CLI::Range(1u, 4096u));
  sequence->add_option("--measures", measures_arg, "comma list")->default_val("c,d,delta");
  sequence->add_option("--gauge", gauge, "l2, l1, linf or a polytope JSON file");
  sequence->add_flag("--plot", plot, "write sequence.svg into the output directory");
  sequence->add_option("--json", out.out, "also write the JSON report here");

  std::string verifier;
  std::size_t trials = 100;
  std::vector<std::string> params;
  auto* verify = app.add_subcommand("verify", "run a named verifier on seeded random instances");
  verify->add_option("name", verifier, "verifier name, 'all' or 'list'")->required();
  verify->add_option("--trials", trials, "instances per verifier")->check(CLI::PositiveNumber);
  verify->add_option("--param", params, "key=value, repeatable");
  verify->add_option("--seed", seed_opt, "RNG seed");
  add_output(verify);

  auto* balance = app.add_subcommand("balance", "signs eps_i minimizing |sum eps_i x_i|_K");
  balance->add_option("--in", inputs, "points file")->required()->expected(1);
  balance->add_option("--gauge", gauge, "l2, l1, linf or a polytope JSON file");
  add_output(balance);

  std::string x_arg;
  auto* decompose = app.add_subcommand("decompose", "Shapley-Folkman decomposition of x in sum conv(A_i)");
  decompose->add_option("--in", inputs, "set files")->required();
  decompose->add_option("--x", x_arg, "comma-separated coordinates")->required();
  add_output(decompose);

  std::string ce_name;
  std::string k_arg = "2", d_arg = "6", f_arg = "10", n_arg = "2";
  auto* counterexample = app.add_subcommand("counterexample", "exact counterexample constructions");
  counterexample->add_option("name", ce_name, "thm-nonmonotone, dyn-farkhi, simplex-ratio, supermodularity")
      ->required()
      ->check(CLI::IsMember({"thm-nonmonotone", "dyn-farkhi", "simplex-ratio", "supermodularity"}));
  counterexample->add_option("--k", k_arg, "k for thm-nonmonotone");
  counterexample->add_option("--d", d_arg, "block dimension for thm-nonmonotone");
  counterexample->add_option("--f", f_arg, "parameter f for dyn-farkhi");
  counterexample->add_option("--n", n_arg, "dimension for simplex-ratio");
  add_output(counterexample);

  std::string kind = "points";
  std::size_t dim = 2, size = 5;
  std::string lo_arg = "0", hi_arg = "1";
  auto* gen = app.add_subcommand("gen", "random rational set");
  gen->add_option("--kind", kind, "points or boxes")->check(CLI::IsMember({"points", "boxes"}));
  gen->add_option("--dim", dim)->check(CLI::Range(std::size_t(1), std::size_t(32)));
  gen->add_option("--size", size)->check(CLI::Range(std::size_t(1), std::size_t(100000)));
  gen->add_option("--lo", lo_arg);
  gen->add_option("--hi", hi_arg);
  gen->add_option("--seed", seed_opt, "RNG seed");
  gen->add_option("--out", out.out, "write to file instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    Config cfg = default_config();
    if (config_path.empty())
      if (const char* env = std::getenv("NONCONVEX_CONFIG")) config_path = env;
    if (!config_path.empty()) cfg = parse_config_json(read_file(config_path));
    if (seed_opt) cfg.seed = *seed_opt;
    if (output_dir) cfg.output_dir = *output_dir;
    timings = timings || cfg.timings;
    Report rep;
    rep.command = echo(argc, argv);

    if (*measure) {
      SetInput s = read_set_file(inputs[0]);
      Report r = measure_report(s, gauge_by_name(gauge, s.dim), cfg, split(measures_arg, ','));
      r.command = rep.command;
      out.emit(r, timings);
      return 0;
    }
    if (*sum) {
      std::vector<SetInput> sets;
      for (const auto& p : inputs) sets.push_back(read_set_file(p));
      if (average_k) {
        if (sets.size() != 1) throw InputError("sum --average takes exactly one input");
        const SetInput& s = sets[0];
        out.emit(serialize_set_json(s.kind == SetKind::Boxes ? boxes_input(average_set(s.boxes, average_k, cfg.cardinality_cap))
                                                             : points_input(average_set(s.points, average_k, cfg.cardinality_cap))));
        return 0;
      }
      SetInput acc = sets[0];
      for (std::size_t i = 1; i < sets.size(); ++i) {
        const SetInput& b = sets[i];
        if (b.dim != acc.dim) throw InputError(inputs[i] + ": dimension differs from " + inputs[0]);
        if (acc.kind == SetKind::Boxes || b.kind == SetKind::Boxes) {
          BoxUnion x = acc.kind == SetKind::Boxes ? acc.boxes : points_as_boxes(acc.points);
          BoxUnion y = b.kind == SetKind::Boxes ? b.boxes : points_as_boxes(b.points);
          acc = boxes_input(minkowski_sum(x, y));
        } else {
          acc = points_input(minkowski_sum(acc.points, b.points));
        }
      }
      out.emit(serialize_set_json(acc));
      return 0;
    }
    if (*sequence) {
      SetInput s = read_set_file(inputs[0]);
      Report r = sequence_report(s, kmax, split(measures_arg, ','), gauge_by_name(gauge, s.dim), cfg);
      r.command = rep.command;
      std::cout << report_to_csv(r);
      for (const auto& [k, v] : r.notes) std::cerr << k << ": " << v << "\n";
      if (!out.out.empty()) write_file(out.out, report_to_json(r, timings));
      if (plot || cfg.plot) {
        std::vector<std::string> warnings;
        std::string svg = emit_plot(r, &warnings, {"size"});
        for (const auto& w : warnings) std::cerr << "warning: " << w << "\n";
        std::filesystem::create_directories(cfg.output_dir);
        std::string path = (std::filesystem::path(cfg.output_dir) / "sequence.svg").string();
        write_file(path, svg);
        std::cerr << "plot: " << path << "\n";
      }
      return 0;
    }
    if (*verify) {
      if (verifier == "list") {
        for (const auto& v : verifier_registry()) std::cout << v.name << "  " << v.summary << "\n";
        return 0;
      }
      std::vector<std::pair<std::string, std::string>> kv;
      for (const auto& p : params) {
        auto eq = p.find('=');
        if (eq == std::string::npos || eq == 0) throw InputError("--param expects key=value, got " + p);
        kv.emplace_back(p.substr(0, eq), p.substr(eq + 1));
      }
      std::vector<const VerifierSpec*> run;
      if (verifier == "all") {
        for (const auto& v : verifier_registry()) run.push_back(&v);
      } else if (const VerifierSpec* v = find_verifier(verifier)) {
        run.push_back(v);
      } else {
        throw InputError("unknown verifier " + verifier + " (try 'verify list')");
      }
      for (const auto* v : run) rep.results.push_back(v->run(cfg.seed, trials, kv, cfg));
      out.emit(rep, timings);
      std::cerr << summary_table(rep.results);
      return verdict_exit(rep.results);
    }
    if (*balance) {
      SetInput s = read_set_file(inputs[0]);
      if (s.kind == SetKind::Boxes) throw InputError(inputs[0] + ": balance needs points");
      BalanceResult b = balance_signs(s.points.points(), gauge_by_name(gauge, s.dim));
      rep.columns = {"index", "point", "sign"};
      for (std::size_t i = 0; i < b.signs.size(); ++i)
        rep.rows.push_back({{std::to_string(i), double(i)}, {to_string(s.points[i]), NAN},
                            {std::to_string(b.signs[i]), double(b.signs[i])}});
      rep.notes = {{"sum", to_string(b.sum)},
                   {"achieved", std::to_string(b.achieved)},
                   {"max_norm", std::to_string(b.max_norm)},
                   {"general_bound", std::to_string(b.general_bound)},
                   {"general_ok", b.general_ok ? "true" : "false"},
                   {"euclidean_bound", std::to_string(b.euclidean_bound)},
                   {"euclidean_ok", b.euclidean_ok ? "true" : "false"},
                   {"finish", b.greedy ? "greedy" : "exhaustive"}};
      out.emit(rep, timings);
      // A failed guarantee is a counterexample to the bound.
      return b.general_ok && b.euclidean_ok ? 0 : 2;
    }
    if (*decompose) {
      std::vector<PointSet> sets;
      for (const auto& p : inputs) {
        SetInput s = read_set_file(p);
        if (s.kind == SetKind::Boxes) throw InputError(p + ": decompose needs point sets");
        sets.push_back(s.points);
      }
      std::vector<Scalar> xs;
      for (const auto& t : split(x_arg, ',')) xs.push_back(parse_scalar(t));
      SFResult res = sf_decompose(sets, Point(xs));
      if (res.decomposition) {
        const auto& dec = *res.decomposition;
        rep.columns = {"set", "point", "weight"};
        for (std::size_t i = 0; i < dec.parts.size(); ++i)
          for (std::size_t j = 0; j < dec.parts[i].size(); ++j)
            rep.rows.push_back({{std::to_string(i), double(i)}, {to_string(dec.parts[i].points[j]), NAN},
                                {to_string(dec.parts[i].weights[j]), dec.parts[i].weights[j].get_d()}});
        std::string fr;
        for (auto i : dec.fractional) fr += (fr.empty() ? "" : ",") + std::to_string(i);
        rep.notes = {{"status", "decomposed"}, {"fractional", fr}, {"valid", dec.valid() ? "true" : "false"}};
      } else {
        rep.notes = {{"status", "outside"}, {"separator", to_string(*res.separator)}, {"gap", to_string(res.gap)}};
      }
      out.emit(rep, timings);
      return 0;
    }
    if (*counterexample) {
      VerifierReport r;
      auto to_size = [](const std::string& s, const char* what) {
        std::size_t pos = 0;
        long v = std::stol(s, &pos);
        if (pos != s.size() || v < 0) throw InputError(std::string("--") + what + " expects a nonnegative integer");
        return std::size_t(v);
      };
      if (ce_name == "thm-nonmonotone") r = counterexample_thm_nonmonotone(to_size(k_arg, "k"), to_size(d_arg, "d"));
      else if (ce_name == "dyn-farkhi") r = counterexample_dyn_farkhi(parse_scalar(f_arg), cfg);
      else if (ce_name == "simplex-ratio") r = simplex_halfsum_ratio(to_size(n_arg, "n"), cfg);
      else r = verify_supermodularity_counterexample();
      r.seed = cfg.seed;
      rep.results.push_back(r);
      out.emit(rep, timings);
      std::cerr << summary_table(rep.results);
      return verdict_exit(rep.results);
    }
    if (*gen) {
      Rng rng(cfg.seed);
      Scalar lo = parse_scalar(lo_arg), hi = parse_scalar(hi_arg);
      if (!(lo < hi)) throw InputError("--lo must be below --hi");
      out.emit(serialize_set_json(kind == "boxes" ? boxes_input(rng.box_union(dim, size, lo, hi))
                                                  : points_input(rng.point_set(dim, size, lo, hi))));
      return 0;
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
