#pragma once

#include <vector>

#include "aontlab/array.h"
#include "aontlab/input_model.h"

namespace aontlab {

// A protected input set X (columns in 1..s, non-empty) and an observed output
// set Y (columns in s+1..2s, possibly empty when t_o = s).
struct SubsetPair {
  ColumnSet x;
  ColumnSet y;

  std::string to_string() const;  // "{1}|{4}"
  friend bool operator==(const SubsetPair&, const SubsetPair&) = default;
  friend auto operator<=>(const SubsetPair&, const SubsetPair&) = default;
};

// Throws Errc::invalid_column_set when the pair does not fit the array.
void validate_pair(const AontArray& array, const SubsetPair& pair);

// Every (X, Y) with |X| = x_size, |Y| = y_size, sorted by (X, Y).
std::vector<SubsetPair> admissible_pairs(int s, int x_size, int y_size);

// Pr[inputs of row r] for every row, computed once per (array, model).
std::vector<Rational> row_masses(const AontArray& array, const InputModel& model);

// Exact pmf of the projection onto `cols` (any columns, inputs or outputs).
// An empty column set yields the point mass on the empty tuple.
Distribution marginal_distribution(const AontArray& array,
                                   const InputModel& model,
                                   const ColumnSet& cols);

double subset_entropy(const AontArray& array, const InputModel& model,
                      const ColumnSet& cols);

// Brute-force H(X|Y) = H(X,Y) - H(Y) from the exact joint. Valid for any
// array, AONT or not.
double conditional_entropy(const AontArray& array, const InputModel& model,
                           const SubsetPair& pair);

// Closed form sum_i H(X_i) - H(Y) for a verified symmetric (t,s,v)-AONT with
// t = |X| and |Y| = s - t under an independent model. Throws
// Errc::precondition_violation otherwise.
double conditional_entropy_formula(const AontArray& array,
                                   const InputModel& model,
                                   const SubsetPair& pair);

// Complementary-input tuples u' (over the inputs outside X, in column order)
// that occur in a row together with X = u and Y = w. Sorted by encoding.
struct CompletionSet {
  ColumnSet complement;
  std::vector<std::vector<Symbol>> tuples;

  std::size_t size() const noexcept { return tuples.size(); }
};

CompletionSet completion_set(const AontArray& array, const SubsetPair& pair,
                             std::span<const Symbol> u,
                             std::span<const Symbol> w);

// max over y with Pr[Y=y] > 0 of (1/2) sum_u |Pr[X=u | Y=y] - Pr[X=u]|,
// evaluated exactly and converted once at the end.
Rational statistical_distance_exact(const AontArray& array,
                                    const InputModel& model,
                                    const SubsetPair& pair);
double statistical_distance(const AontArray& array, const InputModel& model,
                            const SubsetPair& pair);

}  // namespace aontlab
