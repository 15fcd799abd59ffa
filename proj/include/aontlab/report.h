#pragma once

#include <optional>
#include <string>
#include <vector>

#include "aontlab/array.h"
#include "aontlab/bounds.h"
#include "aontlab/entropy.h"
#include "aontlab/input_model.h"

namespace aontlab {

struct ReportRow {
  SubsetPair pair;
  double h_x = 0.0;       // H(X), unconditioned
  double observed = 0.0;  // oracle H(X|Y)
  // Closed form sum H(X_i) - H(Y); set for symmetric AONTs under independent
  // models.
  std::optional<double> formula;
  double statistical_distance = 0.0;
  // observed > min over |X|-subsets of sum H(X_i) (+ tolerance); the cap that
  // holds for symmetric AONTs. Independent models only.
  bool exceeds_min_subset_cap = false;
  std::vector<BoundComparison> comparisons;
};

struct OutputEntropy {
  ColumnSet y;
  double entropy = 0.0;
};

struct AnalysisReport {
  std::string array_id;
  std::string model_id;
  int s = 0;
  int v = 0;
  int t_i = 0;
  int t_o = 0;
  double tolerance = kDefaultTolerance;
  ClassificationVerdict verdict;
  std::string verdict_detail;  // describe() of the failure, if any
  std::vector<BoundSource> theorems;
  // H(X_i) per input column; empty for block-dependent models.
  std::vector<double> column_entropies;
  std::vector<OutputEntropy> output_entropies;
  std::vector<ReportRow> rows;  // sorted by (X, Y)

  double min_observed = 0.0;
  double max_observed = 0.0;
  bool perfect_security = false;  // every row has H(X|Y) = H(X)
  bool all_within = true;         // every comparison within its interval
};

struct AnalyzeOptions {
  // Empty selects every result the array's classification and the model
  // support.
  std::vector<BoundSource> theorems;
  // Empty means every admissible pair.
  std::vector<SubsetPair> pairs;
  double tolerance = kDefaultTolerance;
};

// Results applicable to a classified array and model, in tag order.
std::vector<BoundSource> applicable_theorems(const ClassificationVerdict& verdict,
                                             const InputModel& model);

// Throws on invalid parameters, mismatched model, or an explicitly requested
// theorem the array does not support (Errc::classification_mismatch).
AnalysisReport analyze(const AontArray& array, std::string array_id,
                       const InputModel& model, std::string model_id, int t_i,
                       int t_o, const AnalyzeOptions& options = {});

// JSON carries full double precision; table prints 6 decimals; CSV carries
// full precision (%.17g) so values re-parse exactly.
std::string report_to_json(const AnalysisReport& report);
std::string report_to_table(const AnalysisReport& report);
std::string report_to_csv(const AnalysisReport& report);

// "%.6f"
std::string fixed6(double x);

}  // namespace aontlab
