#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace aontlab {

using Symbol = std::uint32_t;

// v^e with overflow detection; throws Errc::invalid_parameters on overflow.
std::uint64_t checked_pow(std::uint64_t v, int e);

// Symbols are the integers 0..v-1. An alphabet may carry display glyphs
// (e.g. "a", "b", "c") used for parsing and printing only.
class Alphabet {
 public:
  explicit Alphabet(int size);
  Alphabet(int size, std::vector<std::string> glyphs);

  // The a, b, c, ... alphabet used by the golden tables.
  static Alphabet letters(int size);

  int size() const noexcept { return size_; }
  bool has_glyphs() const noexcept { return !glyphs_.empty(); }
  const std::vector<std::string>& glyphs() const noexcept { return glyphs_; }

  // Glyph for a symbol, or its decimal value when no glyphs are set.
  std::string display(Symbol sym) const;
  // Decodes a token; throws Errc::unknown_symbol.
  Symbol decode(const std::string& token) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  int size_;
  std::vector<std::string> glyphs_;
};

// 1-based column indices into a 2s-column array, sorted and duplicate-free.
// Columns 1..s are inputs, s+1..2s are outputs.
class ColumnSet {
 public:
  ColumnSet() = default;
  ColumnSet(std::initializer_list<int> indices);
  explicit ColumnSet(std::vector<int> indices);

  std::span<const int> indices() const noexcept { return indices_; }
  std::size_t size() const noexcept { return indices_.size(); }
  bool empty() const noexcept { return indices_.empty(); }
  int operator[](std::size_t i) const { return indices_[i]; }
  bool contains(int index) const;

  // Sorted union; both sets must be disjoint or overlapping indices collapse.
  ColumnSet operator|(const ColumnSet& other) const;

  // "{1,4}"
  std::string to_string() const;

  friend bool operator==(const ColumnSet&, const ColumnSet&) = default;
  friend auto operator<=>(const ColumnSet&, const ColumnSet&) = default;

 private:
  std::vector<int> indices_;
};

// A v^s x 2s array over Z_v. Immutable once built.
class AontArray {
 public:
  // Validates dimensions and symbol range; throws Errc::dimension_mismatch or
  // Errc::unknown_symbol.
  AontArray(Alphabet alphabet, int s, std::vector<std::vector<Symbol>> rows);

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  int v() const noexcept { return alphabet_.size(); }
  int s() const noexcept { return s_; }
  int width() const noexcept { return 2 * s_; }
  std::size_t row_count() const noexcept { return rows_; }

  std::span<const Symbol> row(std::size_t r) const {
    return {cells_.data() + r * width(), static_cast<std::size_t>(width())};
  }
  // 1-based column label.
  Symbol at(std::size_t r, int column) const {
    return cells_[r * width() + (column - 1)];
  }

  // Throws Errc::invalid_column_set unless every index lies in 1..2s.
  void require_in_range(const ColumnSet& cols) const;

 private:
  Alphabet alphabet_;
  int s_;
  std::size_t rows_;
  std::vector<Symbol> cells_;
};

// Builds an AontArray from textual tokens. Each token is decoded against
// `alphabet` when it has glyphs, or parsed as a decimal symbol otherwise.
AontArray parse_array(const std::vector<std::vector<std::string>>& raw,
                      const Alphabet& alphabet, int s);
// Overload taking v directly: tokens must be decimal symbols or single
// lowercase letters a.. (mapped to 0..).
AontArray parse_array(const std::vector<std::vector<std::string>>& raw, int v,
                      int s);

// Mixed-radix code of `tuple` with the first entry most significant.
std::uint64_t encode_tuple(std::span<const Symbol> tuple, int v);
std::vector<Symbol> decode_tuple(std::uint64_t code, int v, std::size_t len);

// Occurrence counts of every |cols|-tuple in the projection A_cols, indexed by
// encode_tuple. Size v^|cols|.
std::vector<std::uint64_t> projection_counts(const AontArray& array,
                                             const ColumnSet& cols);

enum class Property { unbiased, covering };
std::string_view to_string(Property p);

struct Violation {
  std::vector<Symbol> tuple;
  std::uint64_t observed = 0;
};

struct PropertyReport {
  Property property = Property::unbiased;
  ColumnSet columns;
  bool holds = false;
  // N / v^|I|; for covering this is the multiplicity an unbiased array would
  // have, reported for context.
  std::uint64_t expected_multiplicity = 0;
  // First violating tuple in encoding order; present iff !holds.
  std::optional<Violation> violation;
};

// "unbiased fails on {1,4}: tuple (a,a) occurs 1 time(s), expected 2"
std::string describe(const PropertyReport& report, const Alphabet& alphabet);

// Throws Errc::invalid_column_set (empty / out of range) or
// Errc::oversized_column_set (|cols| > s).
PropertyReport check_unbiased(const AontArray& array, const ColumnSet& cols);
PropertyReport check_covering(const AontArray& array, const ColumnSet& cols);

enum class Verdict { aont, weak_aont_only, neither };
std::string_view to_string(Verdict v);

struct ClassificationVerdict {
  int t_i = 0;
  int t_o = 0;
  Verdict verdict = Verdict::neither;
  // First failing column set: the first covering failure for `neither`, the
  // first unbiased failure for `weak_aont_only`.
  std::optional<PropertyReport> failure;
  std::size_t sets_checked = 0;
};

// {1..s}, {s+1..2s}, then every I u J with I ⊆ inputs, |I| = t_i and
// J ⊆ outputs, |J| = s - t_o, in lexicographic (I, J) order.
std::vector<ColumnSet> required_column_sets(int s, int t_i, int t_o);

// All k-subsets of {first, ..., last} in lexicographic order.
std::vector<ColumnSet> subsets_of_size(int first, int last, int k);

// Throws Errc::invalid_parameters unless 1 <= t_i <= t_o <= s.
ClassificationVerdict classify(const AontArray& array, int t_i, int t_o);

// True iff every required column set passes `property`. Stops at the first
// failure; this is the hot path of the linear search.
bool satisfies(const AontArray& array, int t_i, int t_o, Property property);

}  // namespace aontlab
