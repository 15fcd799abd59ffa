#include "aontlab/array.h"

#include <algorithm>
#include <charconv>
#include <limits>
#include <set>
#include <sstream>

#include "aontlab/error.h"

namespace aontlab {

std::string_view to_string(Errc code) {
  switch (code) {
    case Errc::dimension_mismatch: return "dimension-mismatch";
    case Errc::unknown_symbol: return "unknown-symbol";
    case Errc::invalid_column_set: return "invalid-column-set";
    case Errc::oversized_column_set: return "oversized-column-set";
    case Errc::invalid_parameters: return "invalid-parameters";
    case Errc::mass_sum_violation: return "mass-sum-violation";
    case Errc::arity_mismatch: return "arity-mismatch";
    case Errc::block_out_of_range: return "block-out-of-range";
    case Errc::block_column_query: return "block-column-query";
    case Errc::precondition_violation: return "precondition-violation";
    case Errc::invalid_t: return "invalid-t";
    case Errc::too_many_nonuniform: return "too-many-nonuniform";
    case Errc::block_too_large: return "block-too-large";
    case Errc::hy_out_of_range: return "hY-out-of-range";
    case Errc::classification_mismatch: return "classification-mismatch";
    case Errc::unknown_name: return "unknown-name";
    case Errc::singular_matrix: return "singular-matrix";
    case Errc::search_space_too_large: return "search-space-too-large";
    case Errc::nonprime_modulus: return "nonprime-v";
    case Errc::parse_error: return "parse-error";
    case Errc::io_error: return "io-error";
  }
  return "unknown-error";
}

std::uint64_t checked_pow(std::uint64_t v, int e) {
  std::uint64_t r = 1;
  for (int i = 0; i < e; ++i) {
    if (v != 0 && r > std::numeric_limits<std::uint64_t>::max() / v) {
      throw Error(Errc::invalid_parameters, "power overflows 64 bits");
    }
    r *= v;
  }
  return r;
}

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(int size) : size_(size) {
  if (size < 2) {
    throw Error(Errc::invalid_parameters, "alphabet size must be at least 2");
  }
}

Alphabet::Alphabet(int size, std::vector<std::string> glyphs)
    : Alphabet(size) {
  if (static_cast<int>(glyphs.size()) != size) {
    throw Error(Errc::invalid_parameters,
                "glyph count " + std::to_string(glyphs.size()) +
                    " does not match alphabet size " + std::to_string(size));
  }
  std::set<std::string> seen(glyphs.begin(), glyphs.end());
  if (seen.size() != glyphs.size()) {
    throw Error(Errc::invalid_parameters, "glyphs must be distinct");
  }
  for (const auto& g : glyphs) {
    if (g.empty() || g.find_first_of(", \t\r\n#") != std::string::npos) {
      throw Error(Errc::invalid_parameters, "invalid glyph '" + g + "'");
    }
  }
  glyphs_ = std::move(glyphs);
}

Alphabet Alphabet::letters(int size) {
  if (size > 26) {
    throw Error(Errc::invalid_parameters, "letter alphabets stop at 26");
  }
  std::vector<std::string> g;
  for (int i = 0; i < size; ++i) g.emplace_back(1, static_cast<char>('a' + i));
  return Alphabet(size, std::move(g));
}

std::string Alphabet::display(Symbol sym) const {
  if (has_glyphs() && sym < glyphs_.size()) return glyphs_[sym];
  return std::to_string(sym);
}

Symbol Alphabet::decode(const std::string& token) const {
  if (has_glyphs()) {
    auto it = std::find(glyphs_.begin(), glyphs_.end(), token);
    if (it == glyphs_.end()) {
      throw Error(Errc::unknown_symbol, "'" + token + "' is not in the alphabet");
    }
    return static_cast<Symbol>(it - glyphs_.begin());
  }
  Symbol value = 0;
  auto [ptr, ec] =
      std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size() ||
      value >= static_cast<Symbol>(size_)) {
    throw Error(Errc::unknown_symbol,
                "'" + token + "' is not a symbol of Z_" + std::to_string(size_));
  }
  return value;
}

// ---------------------------------------------------------------------------
// ColumnSet

ColumnSet::ColumnSet(std::initializer_list<int> indices)
    : ColumnSet(std::vector<int>(indices)) {}

ColumnSet::ColumnSet(std::vector<int> indices) : indices_(std::move(indices)) {
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw Error(Errc::invalid_column_set, "duplicate column index");
  }
  if (!indices_.empty() && indices_.front() < 1) {
    throw Error(Errc::invalid_column_set, "column indices start at 1");
  }
}

bool ColumnSet::contains(int index) const {
  return std::binary_search(indices_.begin(), indices_.end(), index);
}

ColumnSet ColumnSet::operator|(const ColumnSet& other) const {
  std::vector<int> merged;
  std::set_union(indices_.begin(), indices_.end(), other.indices_.begin(),
                 other.indices_.end(), std::back_inserter(merged));
  return ColumnSet(std::move(merged));
}

std::string ColumnSet::to_string() const {
  std::string out = "{";
  for (std::size_t i = 0; i < indices_.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(indices_[i]);
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// AontArray

AontArray::AontArray(Alphabet alphabet, int s,
                     std::vector<std::vector<Symbol>> rows)
    : alphabet_(std::move(alphabet)), s_(s), rows_(rows.size()) {
  if (s < 1) throw Error(Errc::invalid_parameters, "s must be positive");
  const std::uint64_t expected = checked_pow(alphabet_.size(), s);
  if (rows.size() != expected) {
    throw Error(Errc::dimension_mismatch,
                "expected v^s = " + std::to_string(expected) + " rows, got " +
                    std::to_string(rows.size()));
  }
  cells_.reserve(rows.size() * width());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (static_cast<int>(rows[r].size()) != width()) {
      throw Error(Errc::dimension_mismatch,
                  "row " + std::to_string(r + 1) + " has width " +
                      std::to_string(rows[r].size()) + ", expected 2s = " +
                      std::to_string(width()));
    }
    for (Symbol sym : rows[r]) {
      if (sym >= static_cast<Symbol>(alphabet_.size())) {
        throw Error(Errc::unknown_symbol,
                    "symbol " + std::to_string(sym) + " in row " +
                        std::to_string(r + 1) + " is outside Z_" +
                        std::to_string(alphabet_.size()));
      }
      cells_.push_back(sym);
    }
  }
}

void AontArray::require_in_range(const ColumnSet& cols) const {
  for (int c : cols.indices()) {
    if (c < 1 || c > width()) {
      throw Error(Errc::invalid_column_set,
                  "column " + std::to_string(c) + " outside 1.." +
                      std::to_string(width()));
    }
  }
}

AontArray parse_array(const std::vector<std::vector<std::string>>& raw,
                      const Alphabet& alphabet, int s) {
  std::vector<std::vector<Symbol>> rows;
  rows.reserve(raw.size());
  for (const auto& tokens : raw) {
    std::vector<Symbol> row;
    row.reserve(tokens.size());
    for (const auto& tok : tokens) row.push_back(alphabet.decode(tok));
    rows.push_back(std::move(row));
  }
  return AontArray(alphabet, s, std::move(rows));
}

AontArray parse_array(const std::vector<std::vector<std::string>>& raw, int v,
                      int s) {
  bool letters = !raw.empty();
  for (const auto& tokens : raw) {
    for (const auto& tok : tokens) {
      if (tok.size() != 1 || tok[0] < 'a' || tok[0] > 'z') letters = false;
    }
  }
  if (letters && v <= 26) return parse_array(raw, Alphabet::letters(v), s);
  return parse_array(raw, Alphabet(v), s);
}

// ---------------------------------------------------------------------------
// Tuple counting

std::uint64_t encode_tuple(std::span<const Symbol> tuple, int v) {
  std::uint64_t code = 0;
  for (Symbol sym : tuple) code = code * v + sym;
  return code;
}

std::vector<Symbol> decode_tuple(std::uint64_t code, int v, std::size_t len) {
  std::vector<Symbol> out(len);
  for (std::size_t i = len; i-- > 0;) {
    out[i] = static_cast<Symbol>(code % v);
    code /= v;
  }
  return out;
}

namespace {

// Fills `counts` (resized to v^|cols|) with projection counts.
void count_into(const AontArray& array, std::span<const int> cols,
                std::vector<std::uint64_t>& counts) {
  const int v = array.v();
  counts.assign(checked_pow(v, static_cast<int>(cols.size())), 0);
  for (std::size_t r = 0; r < array.row_count(); ++r) {
    const Symbol* row = array.row(r).data();
    std::uint64_t code = 0;
    for (int c : cols) code = code * v + row[c - 1];
    ++counts[code];
  }
}

void validate_for_check(const AontArray& array, const ColumnSet& cols) {
  if (cols.empty()) {
    throw Error(Errc::invalid_column_set, "column set must be non-empty");
  }
  array.require_in_range(cols);
  if (static_cast<int>(cols.size()) > array.s()) {
    throw Error(Errc::oversized_column_set,
                "|I| = " + std::to_string(cols.size()) + " exceeds s = " +
                    std::to_string(array.s()));
  }
}

PropertyReport evaluate(const AontArray& array, const ColumnSet& cols,
                        Property property,
                        std::vector<std::uint64_t>& counts) {
  count_into(array, cols.indices(), counts);
  PropertyReport report;
  report.property = property;
  report.columns = cols;
  report.expected_multiplicity = array.row_count() / counts.size();
  report.holds = true;
  for (std::uint64_t code = 0; code < counts.size(); ++code) {
    const bool bad = property == Property::unbiased
                         ? counts[code] != report.expected_multiplicity
                         : counts[code] == 0;
    if (bad) {
      report.holds = false;
      report.violation =
          Violation{decode_tuple(code, array.v(), cols.size()), counts[code]};
      break;
    }
  }
  return report;
}

}  // namespace

std::vector<std::uint64_t> projection_counts(const AontArray& array,
                                             const ColumnSet& cols) {
  array.require_in_range(cols);
  std::vector<std::uint64_t> counts;
  count_into(array, cols.indices(), counts);
  return counts;
}

std::string_view to_string(Property p) {
  return p == Property::unbiased ? "unbiased" : "covering";
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::aont: return "aont";
    case Verdict::weak_aont_only: return "weak-aont-only";
    case Verdict::neither: return "neither";
  }
  return "neither";
}

std::string describe(const PropertyReport& report, const Alphabet& alphabet) {
  std::string out = std::string(to_string(report.property)) +
                    (report.holds ? " holds on " : " fails on ") +
                    report.columns.to_string();
  if (report.violation) {
    out += ": tuple (";
    for (std::size_t i = 0; i < report.violation->tuple.size(); ++i) {
      if (i) out += ",";
      out += alphabet.display(report.violation->tuple[i]);
    }
    out += ") occurs " + std::to_string(report.violation->observed) +
           " time(s), expected " +
           (report.property == Property::unbiased
                ? std::to_string(report.expected_multiplicity)
                : std::string("at least 1"));
  }
  return out;
}

PropertyReport check_unbiased(const AontArray& array, const ColumnSet& cols) {
  validate_for_check(array, cols);
  std::vector<std::uint64_t> counts;
  return evaluate(array, cols, Property::unbiased, counts);
}

PropertyReport check_covering(const AontArray& array, const ColumnSet& cols) {
  validate_for_check(array, cols);
  std::vector<std::uint64_t> counts;
  return evaluate(array, cols, Property::covering, counts);
}

// ---------------------------------------------------------------------------
// Classification

std::vector<ColumnSet> subsets_of_size(int first, int last, int k) {
  std::vector<ColumnSet> out;
  const int n = last - first + 1;
  if (k < 0 || k > n) return out;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = first + i;
  while (true) {
    out.emplace_back(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == last - (k - 1 - i)) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

namespace {

void validate_parameters(int s, int t_i, int t_o) {
  if (t_i < 1 || t_i > t_o || t_o > s) {
    throw Error(Errc::invalid_parameters,
                "need 1 <= t_i <= t_o <= s, got t_i=" + std::to_string(t_i) +
                    " t_o=" + std::to_string(t_o) +
                    " s=" + std::to_string(s));
  }
}

}  // namespace

std::vector<ColumnSet> required_column_sets(int s, int t_i, int t_o) {
  validate_parameters(s, t_i, t_o);
  std::vector<ColumnSet> family;
  family.push_back(subsets_of_size(1, s, s).front());
  family.push_back(subsets_of_size(s + 1, 2 * s, s).front());
  const auto outputs = subsets_of_size(s + 1, 2 * s, s - t_o);
  for (const auto& in : subsets_of_size(1, s, t_i)) {
    for (const auto& out : outputs) family.push_back(in | out);
  }
  return family;
}

ClassificationVerdict classify(const AontArray& array, int t_i, int t_o) {
  const auto family = required_column_sets(array.s(), t_i, t_o);
  ClassificationVerdict result;
  result.t_i = t_i;
  result.t_o = t_o;
  result.verdict = Verdict::aont;
  std::vector<std::uint64_t> counts;
  for (const auto& cols : family) {
    ++result.sets_checked;
    auto unbiased = evaluate(array, cols, Property::unbiased, counts);
    if (unbiased.holds) continue;
    // The same counts decide covering: any zero entry.
    const bool covered =
        std::find(counts.begin(), counts.end(), 0) == counts.end();
    if (!covered) {
      PropertyReport cover = evaluate(array, cols, Property::covering, counts);
      result.verdict = Verdict::neither;
      result.failure = std::move(cover);
      return result;
    }
    if (result.verdict == Verdict::aont) {
      result.verdict = Verdict::weak_aont_only;
      result.failure = std::move(unbiased);
    }
  }
  return result;
}

bool satisfies(const AontArray& array, int t_i, int t_o, Property property) {
  const auto family = required_column_sets(array.s(), t_i, t_o);
  std::vector<std::uint64_t> counts;
  for (const auto& cols : family) {
    count_into(array, cols.indices(), counts);
    const std::uint64_t expected = array.row_count() / counts.size();
    for (std::uint64_t c : counts) {
      if (property == Property::unbiased ? c != expected : c == 0) return false;
    }
  }
  return true;
}

}  // namespace aontlab
