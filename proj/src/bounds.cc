#include "aontlab/bounds.h"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "aontlab/error.h"

namespace aontlab {

namespace {

constexpr double kExactTolerance = 1e-9;

double log2v(const InputModel& model) {
  return std::log2(static_cast<double>(model.v()));
}

void require_independent(const InputModel& model, const char* what) {
  if (model.kind() != ModelKind::independent) {
    throw Error(Errc::precondition_violation,
                std::string(what) + " needs mutually independent inputs");
  }
}

void require_asymmetric_parameters(const InputModel& model, int t_i, int t_o) {
  if (t_i < 1 || t_i > t_o || t_o > model.s()) {
    throw Error(Errc::invalid_parameters,
                "need 1 <= t_i <= t_o <= s, got t_i=" + std::to_string(t_i) +
                    " t_o=" + std::to_string(t_o) +
                    " s=" + std::to_string(model.s()));
  }
}

std::vector<double> column_entropies(const InputModel& model) {
  std::vector<double> h;
  for (int i = 1; i <= model.s(); ++i) h.push_back(column_entropy(model, i));
  return h;
}

double sum_entropy(const InputModel& model, const ColumnSet& x, int t_i) {
  if (static_cast<int>(x.size()) != t_i) {
    throw Error(Errc::invalid_parameters,
                "X must have exactly t_i = " + std::to_string(t_i) + " columns");
  }
  double h = 0.0;
  for (int c : x.indices()) h += column_entropy(model, c);
  return h;
}

// log2(v^(s-t_i) - v^(s-t_o) + 1): the largest possible completion set of a
// weak-AONT, in bits.
double weak_completion_bits(const InputModel& model, int t_i, int t_o) {
  const std::uint64_t a = checked_pow(model.v(), model.s() - t_i);
  const std::uint64_t b = checked_pow(model.v(), model.s() - t_o);
  return std::log2(static_cast<double>(a - b + 1));
}

EntropyInterval finish(BoundSource source, double lower,
                       std::vector<double> upper_terms) {
  EntropyInterval out;
  out.source = source;
  out.lower = std::max(0.0, lower);
  out.upper = *std::min_element(upper_terms.begin(), upper_terms.end());
  out.upper_terms = std::move(upper_terms);
  out.exact = std::abs(out.upper - out.lower) <= kExactTolerance;
  return out;
}

void require_hy(const InputModel& model, int t_o, double hy) {
  const double cap = (model.s() - t_o) * log2v(model);
  if (!(hy >= -kExactTolerance && hy <= cap + kExactTolerance)) {
    throw Error(Errc::hy_out_of_range,
                "H(Y) = " + std::to_string(hy) + " outside [0, " +
                    std::to_string(cap) + "]");
  }
}

}  // namespace

std::string_view to_tag(BoundSource source) {
  switch (source) {
    case BoundSource::symmetric: return "thm-2.1";
    case BoundSource::nonuniform_at_most_t: return "thm-2.4";
    case BoundSource::block_dependent: return "thm-2.5";
    case BoundSource::asymmetric_given_hy: return "lemma-3.3";
    case BoundSource::asymmetric: return "thm-3.1";
    case BoundSource::weak_given_hy: return "lemma-4.2";
    case BoundSource::weak: return "thm-4.1";
  }
  return "unknown";
}

BoundSource parse_tag(std::string_view tag) {
  for (auto s : {BoundSource::symmetric, BoundSource::nonuniform_at_most_t,
                 BoundSource::block_dependent, BoundSource::asymmetric_given_hy,
                 BoundSource::asymmetric, BoundSource::weak_given_hy,
                 BoundSource::weak}) {
    if (to_tag(s) == tag) return s;
  }
  throw Error(Errc::invalid_parameters, "unknown theorem tag '" +
                                            std::string(tag) + "'");
}

double min_subset_entropy(const InputModel& model, int k) {
  auto h = column_entropies(model);
  std::vector<int> order(h.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return h[a] < h[b]; });
  double sum = 0.0;
  for (int i = 0; i < k; ++i) sum += h[order[i]];
  return sum;
}

EntropyInterval bounds_symmetric(const InputModel& model, int t) {
  require_independent(model, "bounds_symmetric");
  if (t < 1 || t > model.s()) {
    throw Error(Errc::invalid_t, "t must lie in 1.." + std::to_string(model.s()));
  }
  const double total = total_input_entropy(model);
  return finish(BoundSource::symmetric, total - (model.s() - t) * log2v(model),
                {min_subset_entropy(model, t)});
}

double exact_nonuniform_le_t(const InputModel& model, int t) {
  require_independent(model, "exact_nonuniform_le_t");
  if (t < 1 || t > model.s()) {
    throw Error(Errc::invalid_t, "t must lie in 1.." + std::to_string(model.s()));
  }
  const int r = model.nonuniform_count();
  if (r > t) {
    throw Error(Errc::too_many_nonuniform,
                std::to_string(r) + " non-uniform inputs exceed t = " +
                    std::to_string(t));
  }
  double h = 0.0;
  for (const auto& d : model.columns()) {
    if (!d.is_uniform()) h += d.entropy();
  }
  return h + (t - r) * log2v(model);
}

double exact_block_dependent(const InputModel& model, int t) {
  if (model.kind() != ModelKind::block_dependent) {
    throw Error(Errc::precondition_violation,
                "exact_block_dependent needs a block-dependent model");
  }
  if (t < 1 || t > model.s()) {
    throw Error(Errc::invalid_t, "t must lie in 1.." + std::to_string(model.s()));
  }
  const int b = static_cast<int>(model.block().size());
  if (b > t) {
    throw Error(Errc::block_too_large,
                "block of " + std::to_string(b) + " columns exceeds t = " +
                    std::to_string(t));
  }
  return model.block_joint().entropy() + (t - b) * log2v(model);
}

EntropyInterval bounds_asymmetric(const InputModel& model, int t_i, int t_o,
                                  const std::optional<ColumnSet>& x) {
  require_independent(model, "bounds_asymmetric");
  require_asymmetric_parameters(model, t_i, t_o);
  const double lv = log2v(model);
  const double total = total_input_entropy(model);
  const double min_sum = min_subset_entropy(model, t_i);
  std::vector<double> terms;
  if (x) terms.push_back(sum_entropy(model, *x, t_i));
  terms.push_back(min_sum + (t_o - t_i) * lv);
  terms.push_back(min_sum + model.s() * lv - total);
  return finish(BoundSource::asymmetric, total - (model.s() - t_i) * lv,
                std::move(terms));
}

EntropyInterval bounds_asymmetric_given_hy(const InputModel& model, int t_i,
                                           int t_o, double hy) {
  require_independent(model, "bounds_asymmetric_given_hy");
  require_asymmetric_parameters(model, t_i, t_o);
  require_hy(model, t_o, hy);
  const double lv = log2v(model);
  const double total = total_input_entropy(model);
  return finish(BoundSource::asymmetric_given_hy,
                total - (t_o - t_i) * lv - hy,
                {total - hy, (model.s() + t_i - t_o) * lv - hy});
}

EntropyInterval bounds_weak(const InputModel& model, int t_i, int t_o,
                            const std::optional<ColumnSet>& x) {
  require_independent(model, "bounds_weak");
  require_asymmetric_parameters(model, t_i, t_o);
  const double lv = log2v(model);
  const double total = total_input_entropy(model);
  const double completion = weak_completion_bits(model, t_i, t_o);
  std::vector<double> terms;
  if (x) terms.push_back(sum_entropy(model, *x, t_i));
  terms.push_back(min_subset_entropy(model, t_i) + completion);
  return finish(BoundSource::weak,
                total - (model.s() - t_o) * lv - completion, std::move(terms));
}

EntropyInterval bounds_weak_given_hy(const InputModel& model, int t_i, int t_o,
                                     double hy) {
  require_independent(model, "bounds_weak_given_hy");
  require_asymmetric_parameters(model, t_i, t_o);
  require_hy(model, t_o, hy);
  const double total = total_input_entropy(model);
  return finish(BoundSource::weak_given_hy,
                total - weak_completion_bits(model, t_i, t_o) - hy,
                {total - hy});
}

BoundComparison compare(const AontArray& array, const InputModel& model,
                        const SubsetPair& pair, BoundSource source,
                        double tolerance) {
  validate_pair(array, pair);
  const int s = array.s();
  const int t_i = static_cast<int>(pair.x.size());
  const int t_o = s - static_cast<int>(pair.y.size());
  if (t_i > t_o) {
    throw Error(Errc::invalid_parameters,
                "|X| + |Y| exceeds s for pair " + pair.to_string());
  }

  auto require = [&](bool ok, const std::string& what) {
    if (!ok) {
      throw Error(Errc::classification_mismatch,
                  std::string(to_tag(source)) + " requires " + what);
    }
  };
  const bool symmetric_source = source == BoundSource::symmetric ||
                                source == BoundSource::nonuniform_at_most_t ||
                                source == BoundSource::block_dependent;
  if (symmetric_source) {
    require(t_i == t_o, "|X| + |Y| = s");
  }
  const Verdict verdict = classify(array, t_i, t_o).verdict;
  const bool weak_source =
      source == BoundSource::weak || source == BoundSource::weak_given_hy;
  require(weak_source ? verdict != Verdict::neither : verdict == Verdict::aont,
          weak_source ? "a weak-AONT or stronger" : "a verified AONT");

  BoundComparison cmp;
  cmp.pair = pair;
  cmp.observed = conditional_entropy(array, model, pair);
  switch (source) {
    case BoundSource::symmetric:
      cmp.interval = bounds_symmetric(model, t_i);
      break;
    case BoundSource::nonuniform_at_most_t: {
      const double h = exact_nonuniform_le_t(model, t_i);
      cmp.interval = finish(source, h, {h});
      break;
    }
    case BoundSource::block_dependent: {
      const double h = exact_block_dependent(model, t_i);
      cmp.interval = finish(source, h, {h});
      break;
    }
    case BoundSource::asymmetric_given_hy:
      cmp.interval = bounds_asymmetric_given_hy(
          model, t_i, t_o, subset_entropy(array, model, pair.y));
      break;
    case BoundSource::asymmetric:
      cmp.interval = bounds_asymmetric(model, t_i, t_o, pair.x);
      break;
    case BoundSource::weak_given_hy:
      cmp.interval = bounds_weak_given_hy(model, t_i, t_o,
                                          subset_entropy(array, model, pair.y));
      break;
    case BoundSource::weak:
      cmp.interval = bounds_weak(model, t_i, t_o, pair.x);
      break;
  }
  const auto& iv = cmp.interval;
  cmp.within = iv.lower - tolerance <= cmp.observed &&
               cmp.observed <= iv.upper + tolerance;
  cmp.attains_lower = std::abs(cmp.observed - iv.lower) <= tolerance;
  cmp.attains_upper = std::abs(cmp.observed - iv.upper) <= tolerance;
  for (double term : iv.upper_terms) {
    cmp.attains_upper_term.push_back(std::abs(cmp.observed - term) <= tolerance);
  }
  return cmp;
}

}  // namespace aontlab
