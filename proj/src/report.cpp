#include "nonconvex/report.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace nonconvex {

using json = nlohmann::ordered_json;

namespace {

std::string shortest(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

json num_json(double x) { return std::isfinite(x) ? json(x) : json(shortest(x)); }

double num_from(const json& v) {
  if (v.is_null()) return NAN;
  if (v.is_string()) {
    std::string s = v.get<std::string>();
    if (s == "nan") return NAN;
    if (s == "inf") return INFINITY;
    if (s == "-inf") return -INFINITY;
    throw InputError("report: bad number \"" + s + "\"");
  }
  return v.get<double>();
}

bool same_double(double a, double b) { return (std::isnan(a) && std::isnan(b)) || a == b; }

json opt_scalar(const std::optional<Scalar>& s) { return s ? json(to_string(*s)) : json(nullptr); }
std::optional<Scalar> opt_scalar_from(const json& v) {
  if (v.is_null()) return std::nullopt;
  return parse_scalar(v.get<std::string>());
}

json verifier_json(const VerifierReport& r, bool with_timings) {
  json j;
  j["name"] = r.name;
  j["instance"] = r.instance;
  j["relation"] = r.relation == Rel::Le ? "<=" : ">=";
  j["verdict"] = to_string(r.verdict);
  j["lhs_exact"] = opt_scalar(r.lhs_exact);
  j["rhs_exact"] = opt_scalar(r.rhs_exact);
  j["lhs"] = json::array({num_json(r.lhs_lower), num_json(r.lhs_upper)});
  j["rhs"] = json::array({num_json(r.rhs_lower), num_json(r.rhs_upper)});
  json vals = json::object();
  for (const auto& [k, v] : r.values) vals[k] = v;
  j["values"] = vals;
  j["detail"] = r.detail;
  j["seed"] = r.seed;
  j["trials"] = r.trials;
  j["failures"] = r.failures;
  j["inconclusive"] = r.inconclusive;
  if (with_timings) j["runtime_ms"] = r.runtime_ms;
  return j;
}

VerifierReport verifier_from(const json& j) {
  VerifierReport r;
  r.name = j.at("name").get<std::string>();
  r.instance = j.at("instance").get<std::string>();
  r.relation = j.at("relation").get<std::string>() == "<=" ? Rel::Le : Rel::Ge;
  std::string v = j.at("verdict").get<std::string>();
  r.verdict = v == "holds" ? Verdict::Holds : v == "violated" ? Verdict::Violated : Verdict::Inconclusive;
  r.lhs_exact = opt_scalar_from(j.at("lhs_exact"));
  r.rhs_exact = opt_scalar_from(j.at("rhs_exact"));
  r.lhs_lower = num_from(j.at("lhs")[0]);
  r.lhs_upper = num_from(j.at("lhs")[1]);
  r.rhs_lower = num_from(j.at("rhs")[0]);
  r.rhs_upper = num_from(j.at("rhs")[1]);
  for (const auto& [k, val] : j.at("values").items()) r.add(k, val.get<std::string>());
  r.detail = j.at("detail").get<std::string>();
  r.seed = j.at("seed").get<std::uint64_t>();
  r.trials = j.at("trials").get<std::size_t>();
  r.failures = j.at("failures").get<std::size_t>();
  r.inconclusive = j.at("inconclusive").get<std::size_t>();
  if (j.contains("runtime_ms")) r.runtime_ms = j["runtime_ms"].get<double>();
  return r;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string fmt(double x, int prec) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*f", prec, x);
  return buf;
}

std::string xml_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// cur <= prev + tol?  nullopt when the bounds overlap.
std::optional<bool> nonincreasing(const MeasureResult& prev, const MeasureResult& cur, double tol) {
  for (const auto& f : prev.flags)
    if (f.rfind("error", 0) == 0) return std::nullopt;
  for (const auto& f : cur.flags)
    if (f.rfind("error", 0) == 0) return std::nullopt;
  if (prev.exact_square && cur.exact_square) return *cur.exact_square <= *prev.exact_square;
  if (cur.upper <= prev.lower + tol) return true;
  if (cur.lower > prev.upper + tol) return false;
  return std::nullopt;
}

MeasureResult scaled_measure(const MeasureResult& m, unsigned k, const std::string& name) {
  Scalar kk{static_cast<long>(k)};
  MeasureResult r;
  if (m.exact) r = MeasureResult::from_exact(name, kk * *m.exact);
  else if (m.exact_square) r = MeasureResult::from_square(name, kk * kk * *m.exact_square);
  else r = MeasureResult::bounds(name, m.lower * k, m.upper * k);
  r.flags = m.flags;
  return r;
}

struct SetOps {
  const SetInput& s;
  SetInput average(unsigned k, const Config& cfg) const {
    if (s.kind == SetKind::Boxes) return boxes_input(average_set(s.boxes, k, cfg.cardinality_cap));
    SetInput r = points_input(average_set(s.points, k, cfg.cardinality_cap));
    return r;
  }
  static std::size_t size(const SetInput& x) { return x.kind == SetKind::Boxes ? x.boxes.size() : x.points.size(); }
  static MeasureRow measures(const SetInput& x, const Gauge& g, const Config& cfg, const std::vector<std::string>& which) {
    return x.kind == SetKind::Boxes ? measure_suite(x.boxes, cfg, which) : measure_suite(x.points, g, cfg, which);
  }
};

}  // namespace

bool operator==(const Cell& a, const Cell& b) { return a.text == b.text && same_double(a.value, b.value); }

bool operator==(const VerifierReport& a, const VerifierReport& b) {
  return a.name == b.name && a.instance == b.instance && a.relation == b.relation && a.lhs_exact == b.lhs_exact &&
         a.rhs_exact == b.rhs_exact && same_double(a.lhs_lower, b.lhs_lower) && same_double(a.lhs_upper, b.lhs_upper) &&
         same_double(a.rhs_lower, b.rhs_lower) && same_double(a.rhs_upper, b.rhs_upper) && a.verdict == b.verdict &&
         a.values == b.values && a.detail == b.detail && a.seed == b.seed && a.trials == b.trials &&
         a.failures == b.failures && a.inconclusive == b.inconclusive && a.runtime_ms == b.runtime_ms;
}

const std::string* Report::note(const std::string& key) const {
  for (const auto& [k, v] : notes)
    if (k == key) return &v;
  return nullptr;
}

std::size_t Report::column(const std::string& name) const {
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (columns[i] == name) return i;
  throw std::out_of_range("report has no column " + name);
}

Cell measure_cell(const MeasureResult& m) {
  for (const auto& f : m.flags)
    if (f.rfind("error", 0) == 0) return {f, NAN};
  if (m.exact) return {to_string(*m.exact), m.value};
  if (m.exact_square) return {"sqrt(" + to_string(*m.exact_square) + ")", m.value};
  if (m.lower == m.upper) return {shortest(m.value), m.value};
  return {"[" + shortest(m.lower) + ", " + shortest(m.upper) + "]", m.value};
}

std::string report_to_json(const Report& r, bool with_timings) {
  json j;
  j["schema_version"] = r.schema_version;
  j["command"] = r.command;
  if (!r.columns.empty()) {
    j["columns"] = r.columns;
    json rows = json::array();
    for (const auto& row : r.rows) {
      json jr = json::array();
      for (const auto& c : row) jr.push_back(json{{"text", c.text}, {"value", c.numeric() ? json(c.value) : json(nullptr)}});
      rows.push_back(jr);
    }
    j["rows"] = rows;
  }
  if (!r.notes.empty()) {
    json n = json::object();
    for (const auto& [k, v] : r.notes) n[k] = v;
    j["notes"] = n;
  }
  if (!r.results.empty()) {
    json res = json::array();
    for (const auto& v : r.results) res.push_back(verifier_json(v, with_timings));
    j["results"] = res;
  }
  if (with_timings) {
    json t = json::object();
    for (const auto& [k, v] : r.timings) t[k] = v;
    j["timings_ms"] = t;
  }
  return j.dump(2) + "\n";
}

Report report_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("report JSON: ") + e.what());
  }
  Report r;
  try {
    r.schema_version = j.at("schema_version").get<int>();
    r.command = j.at("command").get<std::vector<std::string>>();
    if (j.contains("columns")) {
      r.columns = j["columns"].get<std::vector<std::string>>();
      for (const auto& jr : j.at("rows")) {
        std::vector<Cell> row;
        for (const auto& c : jr) row.push_back({c.at("text").get<std::string>(), num_from(c.at("value"))});
        r.rows.push_back(std::move(row));
      }
    }
    if (j.contains("notes"))
      for (const auto& [k, v] : j["notes"].items()) r.notes.emplace_back(k, v.get<std::string>());
    if (j.contains("results"))
      for (const auto& v : j["results"]) r.results.push_back(verifier_from(v));
    if (j.contains("timings_ms"))
      for (const auto& [k, v] : j["timings_ms"].items()) r.timings.emplace_back(k, v.get<double>());
  } catch (const json::exception& e) {
    throw InputError(std::string("report JSON: ") + e.what());
  }
  return r;
}

std::string report_to_csv(const Report& r) {
  std::ostringstream os;
  if (!r.columns.empty()) {
    for (std::size_t i = 0; i < r.columns.size(); ++i) os << (i ? "," : "") << csv_field(r.columns[i]);
    os << "\n";
    for (const auto& row : r.rows) {
      for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << csv_field(row[i].text);
      os << "\n";
    }
  }
  if (!r.results.empty()) {
    os << "name,verdict,trials,failures,inconclusive,seed,lhs,rhs,instance\n";
    for (const auto& v : r.results) {
      std::string lhs = v.lhs_exact ? to_string(*v.lhs_exact) : "[" + shortest(v.lhs_lower) + ", " + shortest(v.lhs_upper) + "]";
      std::string rhs = v.rhs_exact ? to_string(*v.rhs_exact) : "[" + shortest(v.rhs_lower) + ", " + shortest(v.rhs_upper) + "]";
      os << csv_field(v.name) << "," << to_string(v.verdict) << "," << v.trials << "," << v.failures << ","
         << v.inconclusive << "," << v.seed << "," << csv_field(lhs) << "," << csv_field(rhs) << ","
         << csv_field(v.instance) << "\n";
    }
  }
  return os.str();
}

std::string summary_table(const std::vector<VerifierReport>& results) {
  std::size_t w = 8;
  for (const auto& r : results) w = std::max(w, r.name.size());
  std::ostringstream os;
  char line[512];
  std::snprintf(line, sizeof(line), "%-*s  %-12s  %7s  %8s  %12s\n", int(w), "verifier", "verdict", "trials",
                "failures", "inconclusive");
  os << line;
  for (const auto& r : results) {
    std::snprintf(line, sizeof(line), "%-*s  %-12s  %7zu  %8zu  %12zu\n", int(w), r.name.c_str(), to_string(r.verdict),
                  r.trials, r.failures, r.inconclusive);
    os << line;
    if (!r.detail.empty()) os << "  " << r.detail << "\n";
  }
  return os.str();
}

std::string emit_plot(const Report& r, std::vector<std::string>* warnings, const std::vector<std::string>& skip) {
  if (r.columns.size() < 2 || r.rows.empty()) throw GeometryError("plot: need an x column, a y column and a row");
  std::vector<std::size_t> series;
  for (std::size_t c = 1; c < r.columns.size(); ++c) {
    if (std::find(skip.begin(), skip.end(), r.columns[c]) != skip.end()) continue;
    bool any = false;
    for (const auto& row : r.rows) any = any || (c < row.size() && row[c].numeric() && std::isfinite(row[c].value));
    if (any) series.push_back(c);
    else if (warnings) warnings->push_back("plot: column " + r.columns[c] + " has no numeric values, skipped");
  }
  if (series.empty()) throw GeometryError("plot: no numeric column");
  double xmin = INFINITY, xmax = -INFINITY, ymax = 0, ymin = 0;
  for (const auto& row : r.rows) {
    if (!row[0].numeric()) continue;
    xmin = std::min(xmin, row[0].value);
    xmax = std::max(xmax, row[0].value);
    for (auto c : series)
      if (row[c].numeric() && std::isfinite(row[c].value)) {
        ymax = std::max(ymax, row[c].value);
        ymin = std::min(ymin, row[c].value);
      }
  }
  if (!std::isfinite(xmin)) throw GeometryError("plot: x column has no numeric values");
  if (xmax == xmin) {
    xmin -= 1;
    xmax += 1;
  }
  if (ymax == ymin) ymax = ymin + 1;
  const double W = 640, H = 400, L = 60, R = 140, T = 20, B = 50;
  auto px = [&](double x) { return L + (x - xmin) / (xmax - xmin) * (W - L - R); };
  auto py = [&](double y) { return H - B - (y - ymin) / (ymax - ymin) * (H - T - B); };
  static const char* palette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H << "\" viewBox=\"0 0 " << W
     << " " << H << "\">\n";
  os << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << H - B << "\" x2=\"" << W - R << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  os << "<line x1=\"" << L << "\" y1=\"" << T << "\" x2=\"" << L << "\" y2=\"" << H - B << "\" stroke=\"black\"/>\n";
  for (int i = 0; i <= 4; ++i) {
    double xv = xmin + (xmax - xmin) * i / 4, yv = ymin + (ymax - ymin) * i / 4;
    os << "<text x=\"" << fmt(px(xv), 2) << "\" y=\"" << H - B + 16 << "\" font-size=\"11\" text-anchor=\"middle\">"
       << fmt(xv, 2) << "</text>\n";
    os << "<text x=\"" << L - 6 << "\" y=\"" << fmt(py(yv) + 4, 2) << "\" font-size=\"11\" text-anchor=\"end\">"
       << fmt(yv, 3) << "</text>\n";
  }
  os << "<text x=\"" << fmt((L + W - R) / 2, 2) << "\" y=\"" << H - 12 << "\" font-size=\"13\" text-anchor=\"middle\">"
     << xml_escape(r.columns[0]) << "</text>\n";
  os << "<text x=\"16\" y=\"" << fmt((T + H - B) / 2, 2) << "\" font-size=\"13\" text-anchor=\"middle\" transform=\"rotate(-90 16 "
     << fmt((T + H - B) / 2, 2) << ")\">value</text>\n";
  for (std::size_t s = 0; s < series.size(); ++s) {
    std::size_t c = series[s];
    const char* color = palette[s % 8];
    std::vector<std::pair<double, double>> pts;
    for (const auto& row : r.rows)
      if (row[0].numeric() && row[c].numeric() && std::isfinite(row[c].value)) pts.emplace_back(px(row[0].value), py(row[c].value));
    if (pts.size() == 1) {
      os << "<circle cx=\"" << fmt(pts[0].first, 2) << "\" cy=\"" << fmt(pts[0].second, 2) << "\" r=\"3\" fill=\"" << color
         << "\"/>\n";
    } else {
      os << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
      for (std::size_t i = 0; i < pts.size(); ++i) os << (i ? " " : "") << fmt(pts[i].first, 2) << "," << fmt(pts[i].second, 2);
      os << "\"/>\n";
    }
    double ly = T + 14 + 18 * double(s);
    os << "<line x1=\"" << W - R + 10 << "\" y1=\"" << ly << "\" x2=\"" << W - R + 30 << "\" y2=\"" << ly << "\" stroke=\""
       << color << "\" stroke-width=\"2\"/>\n";
    os << "<text x=\"" << W - R + 36 << "\" y=\"" << ly + 4 << "\" font-size=\"12\">" << xml_escape(r.columns[c])
       << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

Report measure_report(const SetInput& s, const Gauge& g, const Config& cfg, const std::vector<std::string>& which) {
  Report r;
  r.columns = {"measure", "value", "lower", "upper", "exact", "certificate", "flags"};
  auto t0 = std::chrono::steady_clock::now();
  MeasureRow row = SetOps::measures(s, g, cfg, which);
  r.timings.emplace_back("measures", std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  for (const auto& m : row.measures) {
    Cell v = measure_cell(m);
    std::string flags;
    for (const auto& f : m.flags) flags += (flags.empty() ? "" : "; ") + f;
    r.rows.push_back({{m.measure, NAN}, v, {shortest(m.lower), m.lower}, {shortest(m.upper), m.upper},
                      {m.is_exact() ? "true" : "false", NAN}, {m.certificate, NAN}, {flags, NAN}});
  }
  return r;
}

Report sequence_report(const SetInput& s, unsigned kmax, const std::vector<std::string>& measures, const Gauge& g,
                       const Config& cfg) {
  if (kmax < 1) throw GeometryError("sequence: kmax must be at least 1");
  std::size_t m = SetOps::size(s);
  if (multiset_count(m, kmax) > double(cfg.cardinality_cap))
    throw BudgetExceeded("sequence: |A(" + std::to_string(kmax) + ")| would exceed the cardinality cap");
  bool want_c = std::find(measures.begin(), measures.end(), "c") != measures.end();
  bool want_d = std::find(measures.begin(), measures.end(), "d") != measures.end();
  Report r;
  r.columns = {"k", "size"};
  for (const auto& name : measures) r.columns.push_back(name);
  if (want_c) r.columns.push_back("k*c");
  if (want_d) r.columns.push_back("k*d");
  std::vector<std::vector<MeasureResult>> history(measures.size());
  SetOps ops{s};
  for (unsigned k = 1; k <= kmax; ++k) {
    auto t0 = std::chrono::steady_clock::now();
    SetInput ak = k == 1 ? s : ops.average(k, cfg);
    MeasureRow row = SetOps::measures(ak, g, cfg, measures);
    std::vector<Cell> cells{{std::to_string(k), double(k)}, {std::to_string(SetOps::size(ak)), double(SetOps::size(ak))}};
    for (std::size_t i = 0; i < measures.size(); ++i) {
      const MeasureResult* mr = row.find(measures[i]);
      if (!mr && measures[i] == "d") mr = row.find("dK");
      MeasureResult got = mr ? *mr : MeasureResult::bounds(measures[i], NAN, NAN);
      if (!mr) got.flags.push_back("error: measure unavailable for this set kind");
      history[i].push_back(got);
      cells.push_back(measure_cell(got));
    }
    auto rate = [&](const std::string& name) {
      auto it = std::find(measures.begin(), measures.end(), name);
      cells.push_back(measure_cell(scaled_measure(history[std::size_t(it - measures.begin())].back(), k, "k*" + name)));
    };
    if (want_c) rate("c");
    if (want_d) rate("d");
    r.rows.push_back(std::move(cells));
    r.timings.emplace_back("k=" + std::to_string(k),
                           std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count());
  }
  for (std::size_t i = 0; i < measures.size(); ++i) {
    auto flag = [&](const std::vector<std::size_t>& ks) {
      bool undetermined = false;
      for (std::size_t j = 1; j < ks.size(); ++j) {
        auto ok = nonincreasing(history[i][ks[j - 1]], history[i][ks[j]], cfg.float_tol);
        if (!ok) undetermined = true;
        else if (!*ok) return std::string("false");
      }
      return std::string(undetermined ? "undetermined" : "true");
    };
    std::vector<std::size_t> all, pow2;
    for (std::size_t k = 0; k < kmax; ++k) all.push_back(k);
    for (std::size_t k = 1; k <= kmax; k *= 2) pow2.push_back(k - 1);
    r.notes.emplace_back("monotone_" + measures[i], flag(all));
    r.notes.emplace_back("monotone_pow2_" + measures[i], flag(pow2));
  }
  return r;
}

}  // namespace nonconvex
