#include "nonconvex/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nonconvex {

using json = nlohmann::ordered_json;

namespace {

// DOM builder that keeps floating literals as their source text, so "0.1" stays 1/10.
struct ExactNumberParser : nlohmann::detail::json_sax_dom_parser<json> {
  using Base = nlohmann::detail::json_sax_dom_parser<json>;
  using Base::Base;
  bool number_float(json::number_float_t, const json::string_t& text) {
    json::string_t copy = text;
    return Base::string(copy);
  }
};

json parse_json_exact(const std::string& text) {
  json root;
  ExactNumberParser sax(root, true);
  try {
    json::sax_parse(text, &sax);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("JSON syntax: ") + e.what());
  }
  return root;
}

Scalar scalar_field(const json& v, const std::string& where) {
  try {
    if (v.is_string()) return parse_scalar(v.get<std::string>());
    if (v.is_number_integer()) return Scalar(v.get<long>());
    if (v.is_number_unsigned()) return parse_scalar(std::to_string(v.get<unsigned long>()));
  } catch (const std::exception& e) {
    throw InputError(where + ": " + e.what());
  }
  throw InputError(where + ": expected a number or \"p/q\" string, got " + v.dump());
}

Point point_field(const json& v, std::size_t dim, const std::string& where) {
  if (!v.is_array()) throw InputError(where + ": expected an array of coordinates");
  if (v.size() != dim)
    throw InputError(where + ": expected " + std::to_string(dim) + " coordinates, got " + std::to_string(v.size()));
  Point p(dim);
  for (std::size_t i = 0; i < dim; ++i) p[i] = scalar_field(v[i], where + "[" + std::to_string(i) + "]");
  return p;
}

json point_json(const Point& p) {
  json a = json::array();
  for (const auto& x : p.coords()) a.push_back(to_string(x));
  return a;
}

}  // namespace

const char* to_string(SetKind k) {
  switch (k) {
    case SetKind::Points: return "points";
    case SetKind::Boxes: return "boxes";
    case SetKind::Polytope: return "polytope";
  }
  return "?";
}

SetInput points_input(const PointSet& a) { return {SetKind::Points, a.dim(), a, {}}; }
SetInput boxes_input(const BoxUnion& u) { return {SetKind::Boxes, u.dim(), {}, u}; }

SetInput parse_set_json(const std::string& text) {
  json root = parse_json_exact(text);
  if (!root.is_object()) throw InputError("top level: expected an object with dim, kind, data");
  if (!root.contains("dim") || !root["dim"].is_number_integer() || root["dim"].get<long>() < 1)
    throw InputError("field \"dim\": expected a positive integer");
  SetInput s;
  s.dim = root["dim"].get<std::size_t>();
  std::string kind = root.value("kind", std::string("points"));
  if (kind == "points") s.kind = SetKind::Points;
  else if (kind == "boxes") s.kind = SetKind::Boxes;
  else if (kind == "polytope") s.kind = SetKind::Polytope;
  else throw InputError("field \"kind\": unknown kind \"" + kind + "\" (points, boxes, polytope)");
  if (!root.contains("data") || !root["data"].is_array() || root["data"].empty())
    throw InputError("field \"data\": expected a nonempty array");
  const json& data = root["data"];
  if (s.kind == SetKind::Boxes) {
    std::vector<Box> boxes;
    for (std::size_t i = 0; i < data.size(); ++i) {
      std::string where = "data[" + std::to_string(i) + "]";
      const json& b = data[i];
      if (!b.is_object() || !b.contains("lo") || !b.contains("hi"))
        throw InputError(where + ": expected {\"lo\": [...], \"hi\": [...]}");
      Point lo = point_field(b["lo"], s.dim, where + ".lo"), hi = point_field(b["hi"], s.dim, where + ".hi");
      for (std::size_t j = 0; j < s.dim; ++j)
        if (lo[j] > hi[j]) throw InputError(where + ": lo exceeds hi in coordinate " + std::to_string(j));
      boxes.push_back(make_box(lo, hi));
    }
    s.boxes = BoxUnion(s.dim, std::move(boxes));
  } else {
    std::vector<Point> pts;
    for (std::size_t i = 0; i < data.size(); ++i) pts.push_back(point_field(data[i], s.dim, "data[" + std::to_string(i) + "]"));
    s.points = PointSet(s.dim, std::move(pts));
  }
  return s;
}

std::string serialize_set_json(const SetInput& s) {
  json root;
  root["dim"] = s.dim;
  root["kind"] = to_string(s.kind);
  json data = json::array();
  if (s.kind == SetKind::Boxes) {
    for (const auto& b : s.boxes.boxes()) data.push_back(json{{"lo", point_json(b.lo)}, {"hi", point_json(b.hi)}});
  } else {
    for (const auto& p : s.points) data.push_back(point_json(p));
  }
  root["data"] = data;
  return root.dump(2) + "\n";
}

SetInput parse_points_csv(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<Point> pts;
  std::size_t dim = 0, lineno = 0;
  bool header_allowed = true;
  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;
    std::vector<std::string> fields;
    std::stringstream ls(line);
    for (std::string f; std::getline(ls, f, ',');) {
      auto a = f.find_first_not_of(" \t"), b = f.find_last_not_of(" \t");
      fields.push_back(a == std::string::npos ? "" : f.substr(a, b - a + 1));
    }
    Point p(fields.size());
    bool numeric = true;
    std::string err;
    std::size_t bad = 0;
    for (std::size_t i = 0; i < fields.size() && numeric; ++i) {
      try {
        p[i] = parse_scalar(fields[i]);
      } catch (const std::exception& e) {
        numeric = false;
        err = e.what();
        bad = i;
      }
    }
    if (!numeric) {
      if (header_allowed) {
        header_allowed = false;
        continue;
      }
      throw InputError("line " + std::to_string(lineno) + ", field " + std::to_string(bad + 1) + ": " + err);
    }
    header_allowed = false;
    if (dim == 0) dim = fields.size();
    if (fields.size() != dim)
      throw InputError("line " + std::to_string(lineno) + ": expected " + std::to_string(dim) + " fields, got " +
                       std::to_string(fields.size()));
    pts.push_back(std::move(p));
  }
  if (pts.empty()) throw InputError("CSV: no points");
  return points_input(PointSet(dim, std::move(pts)));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw InputError("cannot write " + path);
  out << text;
}

SetInput read_set_file(const std::string& path) {
  std::string text = read_file(path);
  try {
    if (path.size() >= 4 && path.compare(path.size() - 4, 4, ".csv") == 0) return parse_points_csv(text);
    return parse_set_json(text);
  } catch (const InputError& e) {
    throw InputError(path + ": " + e.what());
  }
}

Gauge gauge_by_name(const std::string& name, std::size_t dim) {
  Gauge g = name == "l2" || name == "euclidean" ? Gauge::euclidean(dim)
            : name == "linf" || name == "cube"  ? Gauge::cube(dim)
            : name == "l1" || name == "cross"   ? Gauge::cross_polytope(dim)
                                                : Gauge::euclidean(1);
  if (name == "l2" || name == "euclidean" || name == "linf" || name == "cube" || name == "l1" || name == "cross") {
    g.set_name(name);
    return g;
  }
  SetInput body = read_set_file(name);
  if (body.dim != dim) throw InputError(name + ": gauge dimension differs from the set");
  if (body.kind == SetKind::Boxes) throw InputError(name + ": gauge body must be given by points or polytope vertices");
  g = Gauge::polytope(convex_hull(body.points));
  g.set_name(name);
  return g;
}

Config parse_config_json(const std::string& text, Config c) {
  json root = parse_json_exact(text);
  if (!root.is_object()) throw InputError("config: expected an object");
  for (const auto& [key, v] : root.items()) {
    try {
      // Validated exactly, then converted with round-to-nearest (get_d truncates).
      auto real = [&] {
        std::string t = v.is_string() ? v.get<std::string>() : v.dump();
        Scalar q = parse_scalar(t);
        return t.find('/') == std::string::npos ? std::stod(t) : q.get_d();
      };
      auto count = [&] {
        if (!v.is_number_integer() || v.get<long>() < 0) throw InputError("expected a nonnegative integer");
        return v.get<std::size_t>();
      };
      if (key == "bisection_tol") c.bisection_tol = real();
      else if (key == "float_tol") c.float_tol = real();
      else if (key == "cardinality_cap") c.cardinality_cap = count();
      else if (key == "simplex_budget") c.simplex_budget = count();
      else if (key == "candidate_budget") c.candidate_budget = count();
      else if (key == "grid") c.grid = count();
      else if (key == "seed") c.seed = count();
      else if (key == "output_dir") c.output_dir = v.get<std::string>();
      else if (key == "plot") c.plot = v.get<bool>();
      else if (key == "timings") c.timings = v.get<bool>();
      else throw InputError("unknown key");
    } catch (const InputError& e) {
      throw InputError("config field \"" + key + "\": " + e.what());
    } catch (const std::exception& e) {
      throw InputError("config field \"" + key + "\": " + e.what());
    }
  }
  try {
    c.validate();
  } catch (const std::exception& e) {
    throw InputError(std::string("config: ") + e.what());
  }
  return c;
}

}  // namespace nonconvex
