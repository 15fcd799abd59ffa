#pragma once

#include <optional>
#include <string_view>
#include <vector>

#include "aontlab/entropy.h"
#include "aontlab/input_model.h"

namespace aontlab {

// Which result an interval comes from.
enum class BoundSource {
  symmetric,               // general symmetric AONT bounds
  nonuniform_at_most_t,    // exact value, at most t non-uniform inputs
  block_dependent,         // exact value, one dependent block of <= t inputs
  asymmetric_given_hy,     // asymmetric sandwich in terms of H(Y)
  asymmetric,              // asymmetric AONT bounds
  weak_given_hy,           // weak-AONT sandwich in terms of H(Y)
  weak,                    // weak-AONT bounds
};

// Stable tags used on the command line and in reports: thm-2.1, thm-2.4,
// thm-2.5, lemma-3.3, thm-3.1, lemma-4.2, thm-4.1.
std::string_view to_tag(BoundSource source);
// Throws Errc::invalid_parameters for unknown tags.
BoundSource parse_tag(std::string_view tag);

struct EntropyInterval {
  double lower = 0.0;
  double upper = 0.0;
  BoundSource source = BoundSource::symmetric;
  bool exact = false;
  // Candidates whose minimum is `upper`, in the order the bound lists them.
  // A single entry for bounds with a one-term upper side.
  std::vector<double> upper_terms;
};

// Sum of the k smallest column entropies (ties by column index).
double min_subset_entropy(const InputModel& model, int k);

// max{0, sum H - (s-t) log v} .. min over t-subsets of sum H(X_i).
// Throws Errc::invalid_t unless 1 <= t <= s; independent models only.
EntropyInterval bounds_symmetric(const InputModel& model, int t);

// sum of the r non-uniform column entropies + (t - r) log v.
// Throws Errc::too_many_nonuniform when r > t.
double exact_nonuniform_le_t(const InputModel& model, int t);

// H(block) + (t - |block|) log v. Throws Errc::block_too_large.
double exact_block_dependent(const InputModel& model, int t);

// Asymmetric bounds. `x` adds the per-pair H(X) term to the upper minimum;
// without it the interval is the model-level envelope.
EntropyInterval bounds_asymmetric(const InputModel& model, int t_i, int t_o,
                                  const std::optional<ColumnSet>& x = {});

// Sandwich in terms of a supplied H(Y). Throws Errc::hy_out_of_range unless
// 0 <= hY <= (s - t_o) log v (up to 1e-9).
EntropyInterval bounds_asymmetric_given_hy(const InputModel& model, int t_i,
                                           int t_o, double hy);

EntropyInterval bounds_weak(const InputModel& model, int t_i, int t_o,
                            const std::optional<ColumnSet>& x = {});
EntropyInterval bounds_weak_given_hy(const InputModel& model, int t_i, int t_o,
                                     double hy);

inline constexpr double kDefaultTolerance = 1e-6;

struct BoundComparison {
  SubsetPair pair;
  double observed = 0.0;
  EntropyInterval interval;
  bool within = false;
  bool attains_lower = false;
  bool attains_upper = false;
  // Parallel to interval.upper_terms.
  std::vector<bool> attains_upper_term;
};

// Evaluates the oracle H(X|Y) for `pair` and places it against the interval of
// `source`. Parameters are read off the pair: t_i = |X|, t_o = s - |Y|.
// Throws Errc::classification_mismatch when the array does not carry the
// structure the result assumes.
BoundComparison compare(const AontArray& array, const InputModel& model,
                        const SubsetPair& pair, BoundSource source,
                        double tolerance = kDefaultTolerance);

}  // namespace aontlab
