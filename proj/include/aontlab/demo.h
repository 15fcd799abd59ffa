#pragma once

#include <string>
#include <vector>

#include "aontlab/input_model.h"
#include "aontlab/report.h"

namespace aontlab {

// Worked examples 1-4: a builtin array plus the priors that go with it.
struct DemoSetup {
  int example = 0;
  std::string array_name;
  int t_i = 0;
  int t_o = 0;
  InputModel model;
};

// Throws Errc::invalid_parameters for examples outside 1..4.
DemoSetup demo_setup(int example);

struct DemoCheck {
  std::string label;     // e.g. "H(X1|Y2)"
  std::string expected;  // reference value, 6 decimals
  std::string computed;
  bool pass = false;
};

struct DemoResult {
  int example = 0;
  std::vector<DemoCheck> checks;
  AnalysisReport report;

  bool passed() const;
};

// Recomputes every reference value of the example and compares: decimals at
// `tolerance`, probabilities exactly.
DemoResult run_demo(int example, double tolerance = kDefaultTolerance);

std::string demo_to_text(const DemoResult& result);
std::string demo_to_json(const DemoResult& result);

}  // namespace aontlab
