#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "aontlab/array.h"

namespace aontlab {

// The three golden tables, rows in canonical order, glyphs a, b, c.
//   table1: (1,2,3)-AONT, 9 x 4
//   table2: asymmetric (1,2,3,3)-AONT, 27 x 6
//   table3: asymmetric (1,2,3,2)-weak-AONT, 8 x 6
// Throws Errc::unknown_name.
AontArray builtin(std::string_view name);
std::vector<std::string_view> builtin_names();

bool is_prime(int n);

// s x s matrix over Z_v, v prime.
class SquareMatrix {
 public:
  // Throws Errc::nonprime_modulus, or Errc::invalid_parameters for a
  // non-square or out-of-range entry list.
  SquareMatrix(int v, std::vector<std::vector<int>> rows);

  // The matrix whose row-major entries are the base-v digits of `index`,
  // first entry most significant. Indices enumerate all v^(s^2) matrices in
  // lexicographic order.
  static SquareMatrix from_index(int v, int order, std::uint64_t index);

  int v() const noexcept { return v_; }
  int order() const noexcept { return order_; }
  int at(int r, int c) const { return entries_[r * order_ + c]; }
  std::vector<std::vector<int>> rows() const;

  int determinant() const;  // mod v, in 0..v-1
  bool invertible() const { return determinant() != 0; }

  friend bool operator==(const SquareMatrix&, const SquareMatrix&) = default;
  friend auto operator<=>(const SquareMatrix&, const SquareMatrix&) = default;

 private:
  SquareMatrix(int v, int order, std::vector<int> entries);

  int v_;
  int order_;
  std::vector<int> entries_;
};

// Rows (x, xM mod v) for all x in Z_v^s, x in lexicographic order.
// Throws Errc::singular_matrix.
AontArray linear_aont(const SquareMatrix& m);

inline constexpr std::uint64_t kDefaultSearchCap = 19683;  // 3^9

struct SearchOptions {
  // Upper bound on the number of candidate matrices v^(s^2).
  std::uint64_t cap = kDefaultSearchCap;
  // Worker threads; 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

struct SearchResult {
  int s = 0;
  int v = 0;
  int t_i = 0;
  int t_o = 0;
  std::uint64_t candidates = 0;  // v^(s^2)
  std::uint64_t examined = 0;    // invertible matrices
  std::vector<SquareMatrix> found;
  double seconds = 0.0;
  unsigned threads = 1;
};

// Exhaustive search over all invertible s x s matrices over Z_v whose linear
// expansion is an asymmetric (t_i, t_o, s, v)-AONT. `found` is sorted in
// lexicographic matrix order regardless of thread count.
// Throws Errc::nonprime_modulus, Errc::invalid_parameters,
// Errc::search_space_too_large.
SearchResult search_linear(int s, int v, int t_i, int t_o,
                           const SearchOptions& options = {});

std::string matrix_to_json(const SquareMatrix& m);
std::string search_result_to_json(const SearchResult& result);

}  // namespace aontlab
