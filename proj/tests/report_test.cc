#include <gtest/gtest.h>

#include <sstream>

#include "aontlab/constructions.h"
#include "aontlab/demo.h"
#include "aontlab/error.h"
#include "aontlab/model_io.h"
#include "aontlab/report.h"
#include "json.hpp"
#include "test_support.h"

using namespace aontlab;
namespace ts = testing_support;
using ts::code_of;

namespace {

InputModel model(const char* file) { return read_model_file(ts::data_path(file)); }

std::vector<std::vector<std::string>> csv_cells(const std::string& text) {
  std::vector<std::vector<std::string>> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::string cell;
    std::istringstream ls(line);
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    if (!line.empty() && line.back() == ',') cells.emplace_back();
    out.push_back(cells);
  }
  return out;
}

}  // namespace

TEST(Analyze, ExampleOneRows) {
  const auto r = analyze(builtin("table1"), "table1", model("example1.json"), "ex1", 1, 1);
  ASSERT_EQ(r.rows.size(), 4u);
  const double want[] = {1.196889, 1.198335, 1.196889, 1.198335};
  const char* order[] = {"{1}|{3}", "{1}|{4}", "{2}|{3}", "{2}|{4}"};
  for (int i = 0; i < 4; ++i) {
    EXPECT_EQ(r.rows[i].pair.to_string(), order[i]);
    EXPECT_NEAR(r.rows[i].observed, want[i], 1e-6);
    ASSERT_TRUE(r.rows[i].formula);
    EXPECT_NEAR(*r.rows[i].formula, r.rows[i].observed, 1e-9);
  }
  EXPECT_EQ(r.theorems, std::vector<BoundSource>{BoundSource::symmetric});
  EXPECT_TRUE(r.all_within);
  EXPECT_FALSE(r.perfect_security);
}

TEST(Analyze, ExampleThreeAndFour) {
  const auto r3 = analyze(builtin("table2"), "table2", model("example3.json"), "ex3", 1, 2);
  ASSERT_EQ(r3.rows.size(), 9u);
  EXPECT_NEAR(r3.rows[0].observed, 1.067794, 1e-6);
  EXPECT_TRUE(r3.rows[1].exceeds_min_subset_cap);
  EXPECT_FALSE(r3.rows[0].formula);
  EXPECT_EQ(r3.theorems,
            (std::vector<BoundSource>{BoundSource::asymmetric_given_hy, BoundSource::asymmetric}));
  EXPECT_TRUE(r3.all_within);

  const auto r4 = analyze(builtin("table3"), "table3", model("example4.json"), "ex4", 1, 2);
  ASSERT_EQ(r4.rows.size(), 9u);
  EXPECT_NEAR(r4.rows[2].observed, 0.657504, 1e-6);
  EXPECT_EQ(r4.verdict.verdict, Verdict::weak_aont_only);
  EXPECT_EQ(r4.theorems, (std::vector<BoundSource>{BoundSource::weak_given_hy, BoundSource::weak}));
  EXPECT_TRUE(r4.all_within);
}

TEST(Analyze, UniformIsPerfectlySecure) {
  const auto r = analyze(builtin("table2"), "table2", uniform_model(3, 3), "uniform", 1, 2);
  EXPECT_TRUE(r.perfect_security);
  for (const auto& row : r.rows) EXPECT_NEAR(row.statistical_distance, 0.0, 1e-12);
}

TEST(Analyze, TheoremSelectionAndErrors) {
  const auto a = builtin("table1");
  const auto r = analyze(a, "t", model("example2.json"), "m", 1, 1);
  EXPECT_EQ(r.theorems, (std::vector<BoundSource>{BoundSource::symmetric,
                                                   BoundSource::nonuniform_at_most_t}));
  AnalyzeOptions only;
  only.theorems = {BoundSource::asymmetric};
  EXPECT_EQ(code_of([&] { analyze(builtin("table3"), "t", model("example4.json"), "m", 1, 2, only); }),
            Errc::classification_mismatch);
  AnalyzeOptions pairs;
  pairs.pairs = {{ColumnSet{2}, ColumnSet{4}}, {ColumnSet{1}, ColumnSet{3}}};
  const auto filtered = analyze(a, "t", model("example1.json"), "m", 1, 1, pairs);
  ASSERT_EQ(filtered.rows.size(), 2u);
  EXPECT_EQ(filtered.rows[0].pair.to_string(), "{1}|{3}");
  AnalyzeOptions bad;
  bad.pairs = {{ColumnSet{1, 2}, ColumnSet{}}};
  EXPECT_EQ(code_of([&] { analyze(a, "t", model("example1.json"), "m", 1, 1, bad); }),
            Errc::invalid_parameters);
  EXPECT_EQ(code_of([&] { analyze(a, "t", model("example4.json"), "m", 1, 1); }),
            Errc::arity_mismatch);

  const auto block = analyze(a, "t", make_block_dependent_model(
                                         2, 3, {2}, Distribution::uniform(3)),
                             "b", 1, 1);
  EXPECT_EQ(block.theorems, std::vector<BoundSource>{BoundSource::block_dependent});
  EXPECT_TRUE(block.column_entropies.empty());
}

TEST(ReportCsv, ReparsesToIdenticalValues) {
  const auto r = analyze(builtin("table2"), "table2", model("example3.json"), "ex3", 1, 2);
  const auto cells = csv_cells(report_to_csv(r));
  ASSERT_EQ(cells[0].size(), 12u);
  EXPECT_EQ(cells[0][0], "x");
  ASSERT_EQ(cells.size(), 1 + r.rows.size() * r.theorems.size());
  std::size_t line = 1;
  for (const auto& row : r.rows) {
    for (const auto& c : row.comparisons) {
      const auto& f = cells[line++];
      EXPECT_EQ(std::stod(f[3]), row.observed);
      EXPECT_EQ(std::stod(f[2]), row.h_x);
      EXPECT_EQ(std::stod(f[5]), row.statistical_distance);
      EXPECT_EQ(f[6], to_tag(c.interval.source));
      EXPECT_EQ(std::stod(f[7]), c.interval.lower);
      EXPECT_EQ(std::stod(f[8]), c.interval.upper);
    }
  }
}

TEST(ReportJson, CarriesFullPrecision) {
  const auto r = analyze(builtin("table3"), "table3", model("example4.json"), "ex4", 1, 2);
  const auto j = nlohmann::json::parse(report_to_json(r));
  EXPECT_EQ(j["classification"]["verdict"], "weak-aont-only");
  EXPECT_EQ(j["classification"]["failed_columns"], nlohmann::json::parse("[1,4]"));
  EXPECT_EQ(j["rows"].size(), 9u);
  EXPECT_EQ(j["rows"][2]["conditional_entropy"].get<double>(), r.rows[2].observed);
  EXPECT_TRUE(j["rows"][0]["formula"].is_null());
}

TEST(ReportTable, SixDecimals) {
  const auto r = analyze(builtin("table1"), "table1", model("example1.json"), "ex1", 1, 1);
  const auto text = report_to_table(r);
  EXPECT_NE(text.find("1.196889"), std::string::npos);
  EXPECT_NE(text.find("classification: aont"), std::string::npos);
  EXPECT_EQ(fixed6(1.0), "1.000000");
}

TEST(Demo, AllExamplesPass) {
  for (int n = 1; n <= 4; ++n) {
    const auto d = run_demo(n);
    EXPECT_TRUE(d.passed()) << demo_to_text(d);
  }
  EXPECT_EQ(code_of([] { run_demo(5); }), Errc::invalid_parameters);
}

TEST(Demo, FailsWhenToleranceIsTooTight) {
  // Reference values are rounded to 6 places; at 1e-12 some must miss.
  EXPECT_FALSE(run_demo(1, 1e-12).passed());
}
