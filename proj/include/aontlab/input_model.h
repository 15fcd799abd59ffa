#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <vector>

#include "aontlab/array.h"

namespace aontlab {

// Exact probabilities. Every mass in the library is an mpq_class; only
// entropies are floating point.
using Rational = mpq_class;

Rational make_rational(long num, long den);
std::string to_string(const Rational& q);

// -sum p log2 p over the masses, with 0 log 0 = 0.
double entropy_bits(std::span<const Rational> masses);

// Probability mass function over Z_v^arity, stored densely and indexed by
// encode_tuple. Arity 0 is the point distribution on the empty tuple.
class Distribution {
 public:
  // Throws Errc::arity_mismatch when masses.size() != v^arity and
  // Errc::mass_sum_violation when a mass is negative or the sum is not 1.
  Distribution(int v, int arity, std::vector<Rational> masses);

  static Distribution uniform(int v, int arity = 1);
  // Single-symbol distribution from (num, den) pairs.
  static Distribution column(int v, std::span<const std::pair<long, long>> masses);

  int v() const noexcept { return v_; }
  int arity() const noexcept { return arity_; }
  const std::vector<Rational>& masses() const noexcept { return masses_; }
  const Rational& mass(std::uint64_t code) const { return masses_[code]; }
  const Rational& mass(std::span<const Symbol> tuple) const {
    return masses_[encode_tuple(tuple, v_)];
  }

  bool is_uniform() const;
  double entropy() const { return entropy_bits(masses_); }

  friend bool operator==(const Distribution&, const Distribution&) = default;

 private:
  int v_;
  int arity_;
  std::vector<Rational> masses_;
};

enum class ModelKind { independent, block_dependent };

// Prior on the s inputs: either s mutually independent columns, or one
// dependent block of input columns with every other column uniform and
// independent of everything else.
class InputModel {
 public:
  ModelKind kind() const noexcept { return kind_; }
  int s() const noexcept { return s_; }
  int v() const noexcept { return v_; }

  // Independent models only.
  const std::vector<Distribution>& columns() const noexcept { return columns_; }
  // Block-dependent models only: sorted 1-based input indices (may be empty).
  const std::vector<int>& block() const noexcept { return block_; }
  const Distribution& block_joint() const { return block_joint_.front(); }

  bool in_block(int column) const;

  // Number of input columns whose marginal is not uniform (independent
  // models).
  int nonuniform_count() const;

  friend InputModel make_independent_model(std::vector<Distribution> dists);
  friend InputModel make_block_dependent_model(int s, int v,
                                               std::vector<int> block,
                                               Distribution joint);

 private:
  InputModel() = default;

  ModelKind kind_ = ModelKind::independent;
  int s_ = 0;
  int v_ = 0;
  std::vector<Distribution> columns_;
  std::vector<int> block_;
  std::vector<Distribution> block_joint_;  // zero or one element
};

// Throws Errc::arity_mismatch (empty, non-unary, or mixed alphabets).
InputModel make_independent_model(std::vector<Distribution> dists);

// Throws Errc::block_out_of_range for indices outside 1..s or duplicates and
// Errc::arity_mismatch when the joint does not cover exactly the block.
InputModel make_block_dependent_model(int s, int v, std::vector<int> block,
                                      Distribution joint);

InputModel uniform_model(int s, int v);

// Pr[X_1..X_s = x]. Throws Errc::arity_mismatch when x is not in Z_v^s.
Rational joint_probability(const InputModel& model, std::span<const Symbol> x);

// H(X_i) in bits for a 1-based input column. Block columns of a dependent
// model throw Errc::block_column_query; columns outside the block are
// uniform and report log2 v.
double column_entropy(const InputModel& model, int column);

// Sum of H(X_i) for independent models; H(block) + (s-|B|) log2 v for
// block-dependent ones. Either way this is H(X_1, ..., X_s).
double total_input_entropy(const InputModel& model);

}  // namespace aontlab
