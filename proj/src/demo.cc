#include "aontlab/demo.h"

#include <cmath>
#include <sstream>
#include <utility>

#include "aontlab/constructions.h"
#include "aontlab/entropy.h"
#include "aontlab/error.h"
#include "json.hpp"

namespace aontlab {

namespace {

using Masses = std::vector<std::pair<long, long>>;

InputModel independent(const std::vector<Masses>& columns, int v) {
  std::vector<Distribution> dists;
  for (const auto& m : columns) dists.push_back(Distribution::column(v, m));
  return make_independent_model(std::move(dists));
}

struct Reference {
  std::string label;
  double value;
};

struct ReferenceMarginal {
  int column;  // 1-based output column label
  Masses masses;
};

struct Expectations {
  std::vector<Reference> column_entropies;             // H(X_i)
  std::vector<std::pair<int, double>> output_entropies;  // (column, H)
  std::vector<ReferenceMarginal> marginals;
  std::vector<std::pair<SubsetPair, double>> conditionals;
};

SubsetPair pair(int x, int y) { return {ColumnSet{x}, ColumnSet{y}}; }

Expectations expectations(int example) {
  Expectations e;
  switch (example) {
    case 1:
      e.column_entropies = {{"H(X1)", 1.298795}, {"H(X2)", 1.459148}};
      e.output_entropies = {{3, 1.561053}, {4, 1.559607}};
      e.marginals = {{3, {{5, 12}, {13, 48}, {5, 16}}},
                     {4, {{1, 4}, {19, 48}, {17, 48}}}};
      e.conditionals = {{pair(1, 3), 1.196889}, {pair(2, 3), 1.196889},
                        {pair(1, 4), 1.198335}, {pair(2, 4), 1.198335}};
      break;
    case 2:
      e.column_entropies = {{"H(X1)", 1.584963}, {"H(X2)", 1.459148}};
      e.output_entropies = {{3, 1.584963}, {4, 1.584963}};
      e.marginals = {{3, {{1, 3}, {1, 3}, {1, 3}}}, {4, {{1, 3}, {1, 3}, {1, 3}}}};
      e.conditionals = {{pair(1, 3), 1.459148}, {pair(2, 3), 1.459148},
                        {pair(1, 4), 1.459148}, {pair(2, 4), 1.459148}};
      break;
    case 3:
      e.column_entropies = {
          {"H(X1)", 1.459148}, {"H(X2)", 1.500000}, {"H(X3)", 1.156780}};
      e.conditionals = {
          {pair(1, 4), 1.067794}, {pair(1, 5), 1.459148}, {pair(1, 6), 1.381719},
          {pair(2, 4), 1.500000}, {pair(2, 5), 1.098856}, {pair(2, 6), 1.381719},
          {pair(3, 4), 1.067794}, {pair(3, 5), 1.098856}, {pair(3, 6), 1.156780}};
      break;
    case 4:
      e.column_entropies = {
          {"H(X1)", 0.811278}, {"H(X2)", 0.918296}, {"H(X3)", 1.000000}};
      e.output_entropies = {{4, 0.994985}, {5, 0.994985}, {6, 0.870864}};
      e.marginals = {{4, {{13, 24}, {11, 24}}},
                     {5, {{11, 24}, {13, 24}}},
                     {6, {{7, 24}, {17, 24}}}};
      e.conditionals = {
          {pair(1, 4), 0.667521}, {pair(1, 5), 0.667521}, {pair(1, 6), 0.657504},
          {pair(2, 4), 0.740788}, {pair(2, 5), 0.740788}, {pair(2, 6), 0.727952},
          {pair(3, 4), 0.735665}, {pair(3, 5), 0.735665}, {pair(3, 6), 0.836044}};
      break;
  }
  return e;
}

std::string output_label(int column, int s) {
  return "Y" + std::to_string(column - s);
}

}  // namespace

DemoSetup demo_setup(int example) {
  switch (example) {
    case 1:
      return {1, "table1", 1, 1,
              independent({{{1, 4}, {1, 8}, {5, 8}}, {{1, 3}, {1, 6}, {1, 2}}}, 3)};
    case 2:
      return {2, "table1", 1, 1,
              independent({{{1, 3}, {1, 3}, {1, 3}}, {{1, 3}, {1, 6}, {1, 2}}}, 3)};
    case 3:
      return {3, "table2", 1, 2,
              independent({{{1, 6}, {1, 3}, {1, 2}},
                           {{1, 2}, {1, 4}, {1, 4}},
                           {{7, 10}, {1, 5}, {1, 10}}},
                          3)};
    case 4:
      return {4, "table3", 1, 2,
              independent({{{1, 4}, {3, 4}}, {{1, 3}, {2, 3}}, {{1, 2}, {1, 2}}}, 2)};
  }
  throw Error(Errc::invalid_parameters,
              "examples are numbered 1-4, got " + std::to_string(example));
}

bool DemoResult::passed() const {
  for (const auto& c : checks) {
    if (!c.pass) return false;
  }
  return !checks.empty();
}

DemoResult run_demo(int example, double tolerance) {
  const DemoSetup setup = demo_setup(example);
  const AontArray array = builtin(setup.array_name);
  const Expectations e = expectations(example);
  const int s = array.s();

  DemoResult result;
  result.example = example;
  AnalyzeOptions options;
  options.tolerance = tolerance;
  result.report = analyze(array, setup.array_name, setup.model,
                          "example " + std::to_string(example), setup.t_i,
                          setup.t_o, options);

  auto numeric = [&](std::string label, double expected, double computed) {
    result.checks.push_back({std::move(label), fixed6(expected), fixed6(computed),
                             std::abs(expected - computed) <= tolerance});
  };

  for (std::size_t i = 0; i < e.column_entropies.size(); ++i) {
    numeric(e.column_entropies[i].label, e.column_entropies[i].value,
            column_entropy(setup.model, static_cast<int>(i) + 1));
  }
  for (const auto& m : e.marginals) {
    const auto dist =
        marginal_distribution(array, setup.model, ColumnSet{m.column});
    for (std::size_t k = 0; k < m.masses.size(); ++k) {
      const Rational expected = make_rational(m.masses[k].first, m.masses[k].second);
      const Rational& got = dist.mass(k);
      result.checks.push_back(
          {"Pr[" + output_label(m.column, s) + "=" +
               array.alphabet().display(static_cast<Symbol>(k)) + "]",
           to_string(expected), to_string(got), expected == got});
    }
  }
  for (const auto& [column, value] : e.output_entropies) {
    numeric("H(" + output_label(column, s) + ")", value,
            subset_entropy(array, setup.model, ColumnSet{column}));
  }
  for (const auto& [p, value] : e.conditionals) {
    numeric("H(X" + std::to_string(p.x[0]) + "|" + output_label(p.y[0], s) + ")",
            value, conditional_entropy(array, setup.model, p));
  }

  // Qualitative claims that accompany the reference numbers.
  const double cap = min_subset_entropy(setup.model, setup.t_i);
  auto claim = [&](std::string label, bool holds) {
    result.checks.push_back({std::move(label), "true", holds ? "true" : "false", holds});
  };
  auto h = [&](int x, int y) { return conditional_entropy(array, setup.model, pair(x, y)); };
  switch (example) {
    case 1:
      claim("H(X|Y) < min H(Xi) for every pair", result.report.max_observed < cap);
      claim("H(X1|Y1) != H(X1|Y2)", std::abs(h(1, 3) - h(1, 4)) > 1e-9);
      break;
    case 2:
      claim("H(X|Y) = min H(Xi) for every pair",
            std::abs(result.report.min_observed - cap) <= tolerance &&
                std::abs(result.report.max_observed - cap) <= tolerance);
      break;
    case 3:
      claim("H(X1|Y2) > min H(Xi)", h(1, 5) > cap + tolerance);
      break;
    case 4:
      claim("H(X1|Y1) = H(X1|Y2) != H(X1|Y3)",
            std::abs(h(1, 4) - h(1, 5)) <= 1e-12 && std::abs(h(1, 4) - h(1, 6)) > 1e-9);
      claim("H(X1|Y1) != H(X2|Y1)", std::abs(h(1, 4) - h(2, 4)) > 1e-9);
      break;
  }
  return result;
}

std::string demo_to_text(const DemoResult& result) {
  std::ostringstream out;
  out << "example " << result.example << " ("
      << result.report.array_id << ", t_i=" << result.report.t_i
      << ", t_o=" << result.report.t_o << ")\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-40s %-12s %-12s %s\n", "quantity", "reference",
                "computed", "status");
  out << line;
  for (const auto& c : result.checks) {
    std::snprintf(line, sizeof line, "%-40s %-12s %-12s %s\n", c.label.c_str(),
                  c.expected.c_str(), c.computed.c_str(), c.pass ? "ok" : "FAIL");
    out << line;
  }
  out << (result.passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

std::string demo_to_json(const DemoResult& result) {
  nlohmann::json j;
  j["example"] = result.example;
  j["passed"] = result.passed();
  auto checks = nlohmann::json::array();
  for (const auto& c : result.checks) {
    checks.push_back({{"label", c.label},
                      {"reference", c.expected},
                      {"computed", c.computed},
                      {"pass", c.pass}});
  }
  j["checks"] = checks;
  j["report"] = nlohmann::json::parse(report_to_json(result.report));
  return j.dump(2);
}

}  // namespace aontlab
