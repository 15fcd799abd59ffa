#include "aontlab/input_model.h"

#include <algorithm>
#include <cmath>

#include "aontlab/error.h"

namespace aontlab {

Rational make_rational(long num, long den) {
  if (den <= 0) {
    throw Error(Errc::mass_sum_violation, "denominators must be positive");
  }
  Rational q(num, den);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

double entropy_bits(std::span<const Rational> masses) {
  double h = 0.0;
  for (const auto& p : masses) {
    if (sgn(p) <= 0) continue;
    const double x = p.get_d();
    h -= x * std::log2(x);
  }
  // Rounding can leave a point mass at -0.0 or a few ulps below zero.
  return h < 0.0 ? 0.0 : h;
}

// ---------------------------------------------------------------------------
// Distribution

Distribution::Distribution(int v, int arity, std::vector<Rational> masses)
    : v_(v), arity_(arity), masses_(std::move(masses)) {
  if (v < 2 || arity < 0) {
    throw Error(Errc::arity_mismatch, "need v >= 2 and arity >= 0");
  }
  const std::uint64_t expected = checked_pow(v, arity);
  if (masses_.size() != expected) {
    throw Error(Errc::arity_mismatch,
                "expected " + std::to_string(expected) + " masses, got " +
                    std::to_string(masses_.size()));
  }
  Rational sum = 0;
  for (const auto& p : masses_) {
    if (sgn(p) < 0) {
      throw Error(Errc::mass_sum_violation, "negative mass " + to_string(p));
    }
    sum += p;
  }
  if (sum != 1) {
    throw Error(Errc::mass_sum_violation,
                "masses sum to " + to_string(sum) + ", not 1");
  }
}

Distribution Distribution::uniform(int v, int arity) {
  const std::uint64_t n = checked_pow(v, arity);
  Rational p(1, n);
  return Distribution(v, arity, std::vector<Rational>(n, p));
}

Distribution Distribution::column(int v,
                                  std::span<const std::pair<long, long>> masses) {
  std::vector<Rational> q;
  q.reserve(masses.size());
  for (auto [num, den] : masses) q.push_back(make_rational(num, den));
  return Distribution(v, 1, std::move(q));
}

bool Distribution::is_uniform() const {
  const Rational p(1, masses_.size());
  return std::all_of(masses_.begin(), masses_.end(),
                     [&](const Rational& m) { return m == p; });
}

// ---------------------------------------------------------------------------
// InputModel

bool InputModel::in_block(int column) const {
  return kind_ == ModelKind::block_dependent &&
         std::binary_search(block_.begin(), block_.end(), column);
}

int InputModel::nonuniform_count() const {
  if (kind_ == ModelKind::block_dependent) {
    return block_joint().is_uniform() ? 0 : static_cast<int>(block_.size());
  }
  return static_cast<int>(std::count_if(
      columns_.begin(), columns_.end(),
      [](const Distribution& d) { return !d.is_uniform(); }));
}

InputModel make_independent_model(std::vector<Distribution> dists) {
  if (dists.empty()) {
    throw Error(Errc::arity_mismatch, "at least one input column required");
  }
  const int v = dists.front().v();
  for (std::size_t i = 0; i < dists.size(); ++i) {
    if (dists[i].arity() != 1) {
      throw Error(Errc::arity_mismatch,
                  "column " + std::to_string(i + 1) +
                      " distribution must be over single symbols");
    }
    if (dists[i].v() != v) {
      throw Error(Errc::arity_mismatch,
                  "column " + std::to_string(i + 1) + " uses alphabet size " +
                      std::to_string(dists[i].v()) + ", expected " +
                      std::to_string(v));
    }
  }
  InputModel m;
  m.kind_ = ModelKind::independent;
  m.s_ = static_cast<int>(dists.size());
  m.v_ = v;
  m.columns_ = std::move(dists);
  return m;
}

InputModel make_block_dependent_model(int s, int v, std::vector<int> block,
                                      Distribution joint) {
  if (s < 1) throw Error(Errc::invalid_parameters, "s must be positive");
  std::sort(block.begin(), block.end());
  if (std::adjacent_find(block.begin(), block.end()) != block.end()) {
    throw Error(Errc::block_out_of_range, "duplicate block index");
  }
  for (int c : block) {
    if (c < 1 || c > s) {
      throw Error(Errc::block_out_of_range,
                  "block index " + std::to_string(c) + " outside 1.." +
                      std::to_string(s));
    }
  }
  if (joint.v() != v || joint.arity() != static_cast<int>(block.size())) {
    throw Error(Errc::arity_mismatch,
                "block joint must be over Z_" + std::to_string(v) + "^" +
                    std::to_string(block.size()));
  }
  InputModel m;
  m.kind_ = ModelKind::block_dependent;
  m.s_ = s;
  m.v_ = v;
  m.block_ = std::move(block);
  m.block_joint_.push_back(std::move(joint));
  return m;
}

InputModel uniform_model(int s, int v) {
  return make_independent_model(
      std::vector<Distribution>(s, Distribution::uniform(v)));
}

Rational joint_probability(const InputModel& model, std::span<const Symbol> x) {
  if (static_cast<int>(x.size()) != model.s()) {
    throw Error(Errc::arity_mismatch, "input tuple must have length s");
  }
  for (Symbol sym : x) {
    if (sym >= static_cast<Symbol>(model.v())) {
      throw Error(Errc::arity_mismatch, "symbol outside the alphabet");
    }
  }
  if (model.kind() == ModelKind::independent) {
    Rational p = 1;
    for (std::size_t i = 0; i < x.size(); ++i) {
      p *= model.columns()[i].mass(x[i]);
    }
    return p;
  }
  std::uint64_t code = 0;
  for (int c : model.block()) code = code * model.v() + x[c - 1];
  Rational p = model.block_joint().mass(code);
  const int free_cols = model.s() - static_cast<int>(model.block().size());
  return p / Rational(checked_pow(model.v(), free_cols));
}

double column_entropy(const InputModel& model, int column) {
  if (column < 1 || column > model.s()) {
    throw Error(Errc::invalid_column_set,
                "input column " + std::to_string(column) + " outside 1.." +
                    std::to_string(model.s()));
  }
  if (model.kind() == ModelKind::independent) {
    return model.columns()[column - 1].entropy();
  }
  if (model.in_block(column)) {
    throw Error(Errc::block_column_query,
                "column " + std::to_string(column) +
                    " is in the dependent block; query the block entropy");
  }
  return std::log2(static_cast<double>(model.v()));
}

double total_input_entropy(const InputModel& model) {
  if (model.kind() == ModelKind::independent) {
    double sum = 0.0;
    for (const auto& d : model.columns()) sum += d.entropy();
    return sum;
  }
  const int free_cols = model.s() - static_cast<int>(model.block().size());
  return model.block_joint().entropy() +
         free_cols * std::log2(static_cast<double>(model.v()));
}

}  // namespace aontlab
