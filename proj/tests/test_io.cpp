#include <gtest/gtest.h>

#include <filesystem>

#include "nonconvex/io.hpp"
#include "nonconvex/random.hpp"
#include "nonconvex/report.hpp"

using namespace nonconvex;

namespace {

std::string error_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const InputError& e) {
    return e.what();
  }
  return "";
}

const std::string* note(const Report& r, const std::string& k) { return r.note(k); }

}  // namespace

TEST(SetJson, ExactDecimalsAndRationals) {
  SetInput s = parse_set_json(R"({"dim": 2, "kind": "points", "data": [[0.1, "1/3"], [2, -0.25], ["7", 1e-3]]})");
  EXPECT_EQ(s.kind, SetKind::Points);
  ASSERT_EQ(s.points.size(), 3u);
  EXPECT_TRUE(s.points.contains(Point{frac(1, 10), frac(1, 3)}));
  EXPECT_TRUE(s.points.contains(Point{2, frac(-1, 4)}));
  EXPECT_TRUE(s.points.contains(Point{7, frac(1, 1000)}));
}

TEST(SetJson, RoundTrips) {
  Rng rng(3);
  for (int t = 0; t < 20; ++t) {
    SetInput p = points_input(rng.point_set(3, 6));
    EXPECT_EQ(parse_set_json(serialize_set_json(p)), p);
    SetInput b = boxes_input(rng.box_union(2, 3));
    EXPECT_EQ(parse_set_json(serialize_set_json(b)), b);
  }
  SetInput poly = parse_set_json(R"({"dim": 1, "kind": "polytope", "data": [[0], [1]]})");
  EXPECT_EQ(poly.kind, SetKind::Polytope);
  EXPECT_EQ(parse_set_json(serialize_set_json(poly)), poly);
}

TEST(SetJson, DiagnosticsNameTheField) {
  EXPECT_NE(error_of([] { parse_set_json("{\"dim\": 2,"); }).find("JSON syntax"), std::string::npos);
  EXPECT_NE(error_of([] { parse_set_json(R"({"dim": 0, "kind": "points", "data": [[1]]})"); }).find("dim"), std::string::npos);
  EXPECT_NE(error_of([] { parse_set_json(R"({"dim": 1, "kind": "blob", "data": [[1]]})"); }).find("blob"), std::string::npos);
  std::string e = error_of([] { parse_set_json(R"({"dim": 2, "kind": "points", "data": [[1, 2], [3]]})"); });
  EXPECT_NE(e.find("expected 2 coordinates"), std::string::npos) << e;
  EXPECT_NE(error_of([] { parse_set_json(R"({"dim": 1, "kind": "points", "data": [["1/0"]]})"); }), "");
  EXPECT_NE(error_of([] { parse_set_json(R"({"dim": 1, "kind": "boxes", "data": [{"lo": [2], "hi": [1]}]})"); }).find("lo exceeds hi"),
            std::string::npos);
}

TEST(SetCsv, ParsesAndReportsLines) {
  SetInput s = parse_points_csv("x,y\n# comment\n0,0\n1/2,0.5\n\n3,4\n");
  ASSERT_EQ(s.points.size(), 3u);
  EXPECT_TRUE(s.points.contains(Point{frac(1, 2), frac(1, 2)}));
  std::string e = error_of([] { parse_points_csv("0,0\n1,abc\n"); });
  EXPECT_NE(e.find("line 2, field 2"), std::string::npos) << e;
  e = error_of([] { parse_points_csv("0,0\n1,2,3\n"); });
  EXPECT_NE(e.find("line 2"), std::string::npos) << e;
  EXPECT_NE(error_of([] { parse_points_csv("# nothing\n"); }), "");
}

TEST(Files, ReadDispatchesOnExtension) {
  auto dir = std::filesystem::temp_directory_path() / "nonconvex_io_test";
  std::filesystem::create_directories(dir);
  write_file((dir / "a.csv").string(), "0\n1\n");
  write_file((dir / "a.json").string(), R"({"dim": 1, "kind": "points", "data": [[0], [1]]})");
  EXPECT_EQ(read_set_file((dir / "a.csv").string()), read_set_file((dir / "a.json").string()));
  EXPECT_THROW(read_set_file((dir / "missing.json").string()), InputError);
  std::filesystem::remove_all(dir);
}

TEST(Config, KnownKeysOnly) {
  Config c = parse_config_json(R"({"bisection_tol": 1e-4, "grid": 8, "seed": 9, "plot": true})");
  EXPECT_EQ(c.bisection_tol, 1e-4);
  EXPECT_EQ(c.grid, 8u);
  EXPECT_EQ(c.seed, 9u);
  EXPECT_TRUE(c.plot);
  EXPECT_EQ(c.simplex_budget, default_config().simplex_budget);
  std::string e = error_of([] { parse_config_json(R"({"gridd": 8})"); });
  EXPECT_NE(e.find("gridd"), std::string::npos) << e;
  EXPECT_THROW(parse_config_json(R"({"grid": -1})"), InputError);
}

TEST(Gauges, ByName) {
  EXPECT_EQ(gauge_by_name("l1", 3).norm_exact(Point{1, -2, 3}), 6);
  EXPECT_EQ(gauge_by_name("linf", 2).norm_exact(Point{1, -2}), 2);
  EXPECT_DOUBLE_EQ(gauge_by_name("l2", 2).norm(Point{3, 4}), 5);
  EXPECT_THROW(gauge_by_name("/nonexistent/gauge.json", 2), InputError);
}

TEST(Reports, JsonRoundTripKeepsExactValues) {
  SetInput s = points_input(PointSet(1, {Point{Scalar(0)}, Point{Scalar(1)}}));
  Report r = sequence_report(s, 4, {"c", "d", "v"}, Gauge::euclidean(1), default_config());
  r.command = {"sequence", "--kmax", "4"};
  r.results.push_back(compare_exact("x", "instance", frac(1, 3), Rel::Le, frac(1, 2)));
  r.results.back().add("key", "value");
  Report back = report_from_json(report_to_json(r));
  r.timings.clear();
  EXPECT_EQ(back, r);
  EXPECT_NE(report_to_json(r).find("\"1/3\""), std::string::npos);
  EXPECT_EQ(report_to_json(r, false).find("timings"), std::string::npos);
  std::string csv = report_to_csv(r);
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "k,size,c,d,v,k*c,k*d");
  EXPECT_NE(csv.find("name,verdict"), std::string::npos);
}

TEST(Reports, SequenceOnTwoPoints) {
  SetInput s = points_input(PointSet(1, {Point{Scalar(0)}, Point{Scalar(1)}}));
  Report r = sequence_report(s, 8, {"c", "d"}, Gauge::euclidean(1), default_config());
  ASSERT_EQ(r.rows.size(), 8u);
  std::size_t c = r.column("c"), d = r.column("d"), kc = r.column("k*c");
  for (std::size_t k = 1; k <= 8; ++k) {
    EXPECT_EQ(r.rows[k - 1][c].text, Scalar(frac(1, long(k))).get_str());
    EXPECT_EQ(r.rows[k - 1][d].text, Scalar(frac(1, long(2 * k))).get_str());
    EXPECT_EQ(r.rows[k - 1][kc].text, "1");
    EXPECT_EQ(r.rows[k - 1][r.column("size")].text, std::to_string(k + 1));
  }
  EXPECT_EQ(*note(r, "monotone_c"), "true");
  EXPECT_EQ(*note(r, "monotone_d"), "true");
  EXPECT_EQ(*note(r, "monotone_pow2_c"), "true");
  EXPECT_THROW(r.column("missing"), std::exception);
}

TEST(Reports, SequenceOnConvexBoxIsZero) {
  SetInput s = boxes_input(single_box(Point{0, 0}, Point{1, 2}));
  Report r = sequence_report(s, 3, {"delta", "c", "d"}, Gauge::euclidean(2), default_config());
  for (const auto& row : r.rows) {
    EXPECT_EQ(row[r.column("delta")].text, "0");
    EXPECT_EQ(row[r.column("c")].text, "0");
    EXPECT_EQ(row[r.column("d")].text, "0");
  }
}

TEST(Reports, MeasureReportRows) {
  SetInput s = points_input(PointSet(2, {Point{0, 0}, Point{1, 0}, Point{0, 1}}));
  Report r = measure_report(s, Gauge::euclidean(2), default_config(), {"c", "v"});
  ASSERT_EQ(r.rows.size(), 2u);
  EXPECT_EQ(r.rows[0][0].text, "c");
  EXPECT_EQ(r.rows[0][1].text, "2");
  EXPECT_EQ(r.rows[0][r.column("exact")].text, "true");
}

TEST(Plot, DeterministicSvg) {
  SetInput s = points_input(PointSet(1, {Point{Scalar(0)}, Point{Scalar(1)}}));
  Report r = sequence_report(s, 5, {"c", "d"}, Gauge::euclidean(1), default_config());
  std::string a = emit_plot(r), b = emit_plot(report_from_json(report_to_json(r)));
  EXPECT_EQ(a, b);
  EXPECT_EQ(a.rfind("<svg", 0), 0u);
  EXPECT_NE(a.find("polyline"), std::string::npos);
  EXPECT_NE(a.find("k*c"), std::string::npos);
}

TEST(Plot, SingleRowAndEmptyColumn) {
  Report r;
  r.columns = {"k", "y", "note"};
  r.rows.push_back({{"1", 1}, {"1/2", 0.5}, {"n/a", NAN}});
  std::vector<std::string> warnings;
  std::string svg = emit_plot(r, &warnings);
  EXPECT_NE(svg.find("<circle"), std::string::npos);
  ASSERT_EQ(warnings.size(), 1u);
  EXPECT_NE(warnings[0].find("note"), std::string::npos);
  Report empty;
  empty.columns = {"k", "y"};
  EXPECT_THROW(emit_plot(empty), GeometryError);
}

TEST(Summary, TableListsVerdicts) {
  std::vector<VerifierReport> rs{compare_exact("law-a", "", 1, Rel::Le, 2), compare_exact("law-b", "", 3, Rel::Le, 2)};
  std::string t = summary_table(rs);
  EXPECT_NE(t.find("law-a"), std::string::npos);
  EXPECT_NE(t.find("law-b"), std::string::npos);
  EXPECT_NE(t.find(to_string(Verdict::Violated)), std::string::npos);
}
