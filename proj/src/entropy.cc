#include "aontlab/entropy.h"

#include <algorithm>
#include <set>

#include "aontlab/error.h"

namespace aontlab {

std::string SubsetPair::to_string() const {
  return x.to_string() + "|" + y.to_string();
}

void validate_pair(const AontArray& array, const SubsetPair& pair) {
  const int s = array.s();
  if (pair.x.empty()) {
    throw Error(Errc::invalid_column_set, "X must be non-empty");
  }
  for (int c : pair.x.indices()) {
    if (c < 1 || c > s) {
      throw Error(Errc::invalid_column_set,
                  "X column " + std::to_string(c) + " is not an input");
    }
  }
  for (int c : pair.y.indices()) {
    if (c <= s || c > 2 * s) {
      throw Error(Errc::invalid_column_set,
                  "Y column " + std::to_string(c) + " is not an output");
    }
  }
}

std::vector<SubsetPair> admissible_pairs(int s, int x_size, int y_size) {
  std::vector<SubsetPair> pairs;
  const auto ys = subsets_of_size(s + 1, 2 * s, y_size);
  for (const auto& x : subsets_of_size(1, s, x_size)) {
    for (const auto& y : ys) pairs.push_back({x, y});
  }
  return pairs;
}

std::vector<Rational> row_masses(const AontArray& array,
                                 const InputModel& model) {
  if (model.s() != array.s() || model.v() != array.v()) {
    throw Error(Errc::arity_mismatch,
                "model (s=" + std::to_string(model.s()) +
                    ", v=" + std::to_string(model.v()) +
                    ") does not match array (s=" + std::to_string(array.s()) +
                    ", v=" + std::to_string(array.v()) + ")");
  }
  std::vector<Rational> masses;
  masses.reserve(array.row_count());
  for (std::size_t r = 0; r < array.row_count(); ++r) {
    masses.push_back(
        joint_probability(model, array.row(r).first(array.s())));
  }
  return masses;
}

namespace {

std::vector<Rational> accumulate(const AontArray& array,
                                 std::span<const Rational> masses,
                                 std::span<const int> cols) {
  const int v = array.v();
  std::vector<Rational> out(checked_pow(v, static_cast<int>(cols.size())),
                            Rational(0));
  for (std::size_t r = 0; r < array.row_count(); ++r) {
    if (sgn(masses[r]) == 0) continue;
    const Symbol* row = array.row(r).data();
    std::uint64_t code = 0;
    for (int c : cols) code = code * v + row[c - 1];
    out[code] += masses[r];
  }
  return out;
}

double clamp_nonnegative(double h) { return h < 0.0 && h > -1e-12 ? 0.0 : h; }

}  // namespace

Distribution marginal_distribution(const AontArray& array,
                                   const InputModel& model,
                                   const ColumnSet& cols) {
  array.require_in_range(cols);
  const auto masses = row_masses(array, model);
  return Distribution(array.v(), static_cast<int>(cols.size()),
                      accumulate(array, masses, cols.indices()));
}

double subset_entropy(const AontArray& array, const InputModel& model,
                      const ColumnSet& cols) {
  return marginal_distribution(array, model, cols).entropy();
}

double conditional_entropy(const AontArray& array, const InputModel& model,
                           const SubsetPair& pair) {
  validate_pair(array, pair);
  const auto masses = row_masses(array, model);
  const ColumnSet xy = pair.x | pair.y;
  const auto joint = accumulate(array, masses, xy.indices());
  const auto y = accumulate(array, masses, pair.y.indices());
  return clamp_nonnegative(entropy_bits(joint) - entropy_bits(y));
}

double conditional_entropy_formula(const AontArray& array,
                                   const InputModel& model,
                                   const SubsetPair& pair) {
  validate_pair(array, pair);
  if (model.kind() != ModelKind::independent) {
    throw Error(Errc::precondition_violation,
                "the closed form needs mutually independent inputs");
  }
  const int t = static_cast<int>(pair.x.size());
  if (static_cast<int>(pair.y.size()) != array.s() - t) {
    throw Error(Errc::precondition_violation,
                "|Y| must equal s - |X| = " + std::to_string(array.s() - t));
  }
  if (classify(array, t, t).verdict != Verdict::aont) {
    throw Error(Errc::precondition_violation,
                "array is not a (" + std::to_string(t) + "," +
                    std::to_string(array.s()) + "," +
                    std::to_string(array.v()) + ")-AONT");
  }
  return clamp_nonnegative(total_input_entropy(model) -
                           subset_entropy(array, model, pair.y));
}

CompletionSet completion_set(const AontArray& array, const SubsetPair& pair,
                             std::span<const Symbol> u,
                             std::span<const Symbol> w) {
  validate_pair(array, pair);
  if (u.size() != pair.x.size() || w.size() != pair.y.size()) {
    throw Error(Errc::arity_mismatch, "tuple lengths must match |X| and |Y|");
  }
  std::vector<int> rest;
  for (int c = 1; c <= array.s(); ++c) {
    if (!pair.x.contains(c)) rest.push_back(c);
  }
  CompletionSet result{ColumnSet(rest), {}};
  std::set<std::uint64_t> codes;
  for (std::size_t r = 0; r < array.row_count(); ++r) {
    bool match = true;
    for (std::size_t k = 0; match && k < u.size(); ++k) {
      match = array.at(r, pair.x[k]) == u[k];
    }
    for (std::size_t k = 0; match && k < w.size(); ++k) {
      match = array.at(r, pair.y[k]) == w[k];
    }
    if (!match) continue;
    std::uint64_t code = 0;
    for (int c : rest) code = code * array.v() + array.at(r, c);
    codes.insert(code);
  }
  for (std::uint64_t code : codes) {
    result.tuples.push_back(decode_tuple(code, array.v(), rest.size()));
  }
  return result;
}

Rational statistical_distance_exact(const AontArray& array,
                                    const InputModel& model,
                                    const SubsetPair& pair) {
  validate_pair(array, pair);
  const auto masses = row_masses(array, model);
  const ColumnSet xy = pair.x | pair.y;
  const auto joint = accumulate(array, masses, xy.indices());
  const auto px = accumulate(array, masses, pair.x.indices());
  const auto py = accumulate(array, masses, pair.y.indices());

  Rational worst = 0;
  for (std::uint64_t y = 0; y < py.size(); ++y) {
    if (sgn(py[y]) == 0) continue;
    Rational l1 = 0;
    for (std::uint64_t x = 0; x < px.size(); ++x) {
      Rational diff = joint[x * py.size() + y] / py[y] - px[x];
      l1 += abs(diff);
    }
    l1 /= 2;
    if (l1 > worst) worst = l1;
  }
  return worst;
}

double statistical_distance(const AontArray& array, const InputModel& model,
                            const SubsetPair& pair) {
  return statistical_distance_exact(array, model, pair).get_d();
}

}  // namespace aontlab
