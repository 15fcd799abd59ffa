#include <gtest/gtest.h>

#include <algorithm>
#include <fstream>
#include <functional>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "aontlab/array.h"
#include "aontlab/array_io.h"
#include "aontlab/constructions.h"
#include "aontlab/error.h"
#include "test_support.h"

using namespace aontlab;
namespace ts = testing_support;
using ts::code_of;

namespace {

std::vector<std::vector<std::string>> raw_rows(const std::string& glyphs) {
  std::vector<std::vector<std::string>> raw;
  std::istringstream in(glyphs);
  std::string word;
  while (in >> word) {
    std::vector<std::string> row;
    for (char c : word) row.emplace_back(1, c);
    raw.push_back(row);
  }
  return raw;
}

}  // namespace

TEST(Alphabet, LettersRoundTrip) {
  const auto a = Alphabet::letters(3);
  EXPECT_EQ(a.decode("a"), 0u);
  EXPECT_EQ(a.decode("c"), 2u);
  EXPECT_EQ(a.display(1), "b");
  EXPECT_EQ(code_of([&] { a.decode("d"); }), Errc::unknown_symbol);
}

TEST(Alphabet, RejectsDuplicateGlyphsAndTinySizes) {
  EXPECT_THROW(Alphabet(2, {"x", "x"}), Error);
  EXPECT_THROW(Alphabet(3, {"x", "y"}), Error);
  EXPECT_THROW(Alphabet(1), Error);
}

TEST(ColumnSet, SortsAndFormats) {
  ColumnSet c{4, 1};
  EXPECT_EQ(c.to_string(), "{1,4}");
  EXPECT_TRUE(c.contains(4));
  EXPECT_EQ((ColumnSet{1} | ColumnSet{3}).to_string(), "{1,3}");
  EXPECT_THROW(ColumnSet({2, 2}), Error);
  EXPECT_TRUE(ColumnSet{}.empty());
}

TEST(ParseArray, TableOneIsValid) {
  const auto a = parse_array(raw_rows(ts::kTable1), 3, 2);
  EXPECT_EQ(a.row_count(), 9u);
  EXPECT_EQ(a.width(), 4);
  EXPECT_EQ(a.at(1, 3), 2u);  // row 2 = (a,b,c,b)
}

TEST(ParseArray, TableThreeIsValid) {
  const auto a = parse_array(raw_rows(ts::kTable3), 2, 3);
  EXPECT_EQ(a.row_count(), 8u);
}

TEST(ParseArray, RejectsBadShapes) {
  auto rows = raw_rows(ts::kTable1);
  rows.pop_back();
  EXPECT_EQ(code_of([&] { parse_array(rows, 3, 2); }), Errc::dimension_mismatch);
  auto wide = raw_rows(ts::kTable1);
  wide[3].push_back("a");
  EXPECT_EQ(code_of([&] { parse_array(wide, 3, 2); }), Errc::dimension_mismatch);
  auto bad = raw_rows(ts::kTable1);
  bad[0][0] = "z";
  EXPECT_EQ(code_of([&] { parse_array(bad, 3, 2); }), Errc::unknown_symbol);
  auto big = raw_rows(ts::kTable1);
  big[0][0] = "3";
  EXPECT_EQ(code_of([&] { parse_array(big, 3, 2); }), Errc::unknown_symbol);
}

TEST(Encoding, FirstEntryMostSignificant) {
  const std::vector<Symbol> t{1, 0, 2};
  EXPECT_EQ(encode_tuple(t, 3), 11u);
  EXPECT_EQ(decode_tuple(11, 3, 3), t);
  for (std::uint64_t c = 0; c < 81; ++c) EXPECT_EQ(encode_tuple(decode_tuple(c, 3, 4), 3), c);
}

TEST(CheckUnbiased, TableOne) {
  const auto a = builtin("table1");
  auto r = check_unbiased(a, {1, 2});
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.expected_multiplicity, 1u);
  EXPECT_FALSE(r.violation);
  r = check_unbiased(a, {3});
  EXPECT_TRUE(r.holds);
  EXPECT_EQ(r.expected_multiplicity, 3u);
}

TEST(CheckUnbiased, TableThreeFirstViolation) {
  const auto a = builtin("table3");
  const auto r = check_unbiased(a, {1, 4});
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.expected_multiplicity, 2u);
  ASSERT_TRUE(r.violation);
  // First offending tuple in encoding order.
  EXPECT_EQ(r.violation->tuple, (std::vector<Symbol>{0, 0}));
  EXPECT_EQ(r.violation->observed, 1u);
  // The over-represented pair.
  const auto counts = projection_counts(a, {1, 4});
  EXPECT_EQ(counts[1], 3u);
  EXPECT_EQ(describe(r, a.alphabet()),
            "unbiased fails on {1,4}: tuple (a,a) occurs 1 time(s), expected 2");
}

TEST(CheckUnbiased, RejectsBadColumnSets) {
  const auto a = builtin("table1");
  EXPECT_EQ(code_of([&] { check_unbiased(a, {1, 2, 3}); }), Errc::oversized_column_set);
  EXPECT_EQ(code_of([&] { check_covering(a, {1, 2, 3}); }), Errc::oversized_column_set);
  EXPECT_EQ(code_of([&] { check_unbiased(a, {5}); }), Errc::invalid_column_set);
  EXPECT_EQ(code_of([&] { check_unbiased(a, ColumnSet{}); }), Errc::invalid_column_set);
}

TEST(CheckCovering, Examples) {
  EXPECT_TRUE(check_covering(builtin("table3"), {1, 4}).holds);
  const auto t1 = builtin("table1");
  for (int k = 1; k <= 2; ++k)
    for (const auto& c : subsets_of_size(1, 4, k)) EXPECT_TRUE(check_covering(t1, c).holds);

  auto rows = raw_rows(ts::kTable1);
  for (auto& r : rows) r[2] = "a";
  const auto constant = parse_array(rows, 3, 2);
  const auto r = check_covering(constant, {3});
  ASSERT_FALSE(r.holds);
  EXPECT_EQ(r.violation->tuple, std::vector<Symbol>{1});
  EXPECT_EQ(r.violation->observed, 0u);
}

TEST(Classify, Goldens) {
  EXPECT_EQ(classify(builtin("table1"), 1, 1).verdict, Verdict::aont);
  EXPECT_EQ(classify(builtin("table2"), 1, 2).verdict, Verdict::aont);
  const auto w = classify(builtin("table3"), 1, 2);
  EXPECT_EQ(w.verdict, Verdict::weak_aont_only);
  ASSERT_TRUE(w.failure);
  EXPECT_EQ(w.failure->columns, (ColumnSet{1, 4}));
  EXPECT_EQ(w.failure->property, Property::unbiased);
}

TEST(Classify, RejectsBadParameters) {
  const auto a = builtin("table1");
  EXPECT_EQ(code_of([&] { classify(a, 2, 1); }), Errc::invalid_parameters);
  EXPECT_EQ(code_of([&] { classify(a, 0, 1); }), Errc::invalid_parameters);
  EXPECT_EQ(code_of([&] { classify(a, 1, 3); }), Errc::invalid_parameters);
}

TEST(Classify, FamilyShape) {
  const auto fam = required_column_sets(3, 1, 2);
  ASSERT_EQ(fam.size(), 2u + 3u * 3u);
  EXPECT_EQ(fam[0], (ColumnSet{1, 2, 3}));
  EXPECT_EQ(fam[1], (ColumnSet{4, 5, 6}));
  EXPECT_EQ(fam[2], (ColumnSet{1, 4}));
  EXPECT_EQ(fam.back(), (ColumnSet{3, 6}));
  // t_o = s leaves J empty.
  EXPECT_EQ(required_column_sets(2, 1, 2)[2], ColumnSet{1});
}

// Random v^s x 2s arrays: inputs in lexicographic order, outputs a random
// bijection or a random map, compared with the reference classifier.
TEST(ClassifyProperty, AgreesWithReference) {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const int s = 2 + trial % 2;
    const int v = s == 2 ? 3 : 2;
    const std::size_t n = naive::ipow(v, s);
    std::vector<std::uint64_t> image(n);
    std::iota(image.begin(), image.end(), 0);
    std::shuffle(image.begin(), image.end(), rng);
    if (trial % 5 == 0) image[rng() % n] = image[rng() % n];
    std::vector<std::vector<Symbol>> rows;
    for (std::size_t r = 0; r < n; ++r) {
      auto row = decode_tuple(r, v, s);
      const auto out = decode_tuple(image[r], v, s);
      row.insert(row.end(), out.begin(), out.end());
      rows.push_back(row);
    }
    const AontArray a(Alphabet(v), s, rows);
    const auto ref = ts::to_table(a);
    for (int ti = 1; ti <= s; ++ti)
      for (int to = ti; to <= s; ++to)
        EXPECT_EQ(to_string(classify(a, ti, to).verdict), naive::classify(ref, ti, to))
            << "trial " << trial << " (" << ti << "," << to << ")";
  }
}

TEST(ArrayProperty, UnbiasedImpliesCoveringAndRowOrderIrrelevant) {
  std::mt19937_64 rng(11);
  for (const char* name : {"table1", "table2", "table3"}) {
    const auto a = builtin(name);
    auto rows = ts::to_table(a).rows;
    std::shuffle(rows.begin(), rows.end(), rng);
    std::vector<std::vector<Symbol>> cells;
    for (const auto& r : rows) cells.emplace_back(r.begin(), r.end());
    const AontArray shuffled(a.alphabet(), a.s(), cells);
    for (int k = 1; k <= a.s(); ++k) {
      for (const auto& c : subsets_of_size(1, a.width(), k)) {
        const auto u = check_unbiased(a, c);
        if (u.holds) EXPECT_TRUE(check_covering(a, c).holds);
        const auto u2 = check_unbiased(shuffled, c);
        EXPECT_EQ(u.holds, u2.holds);
        if (u.violation) {
          EXPECT_EQ(u.violation->tuple, u2.violation->tuple);
          EXPECT_EQ(u.violation->observed, u2.violation->observed);
        }
        EXPECT_EQ(check_covering(a, c).holds, check_covering(shuffled, c).holds);
      }
    }
  }
}

TEST(ArrayProperty, SymmetricImpliesAsymmetricWithSmallerTi) {
  const auto a = linear_aont(SquareMatrix(3, {{1, 1, 1}, {1, 2, 1}, {1, 1, 2}}));
  ASSERT_EQ(classify(a, 2, 2).verdict, Verdict::aont);
  EXPECT_EQ(classify(a, 1, 2).verdict, Verdict::aont);
  EXPECT_EQ(classify(builtin("table1"), 1, 1).verdict, Verdict::aont);
}

TEST(ArrayProperty, AontRowsFormABijection) {
  for (const char* name : {"table1", "table2"}) {
    const auto t = ts::to_table(builtin(name));
    std::set<std::vector<int>> ins, outs;
    for (const auto& r : t.rows) {
      ins.insert({r.begin(), r.begin() + t.s});
      outs.insert({r.begin() + t.s, r.end()});
    }
    EXPECT_EQ(ins.size(), t.rows.size());
    EXPECT_EQ(outs.size(), t.rows.size());
  }
}

TEST(ArrayCsv, RoundTripIsByteExact) {
  std::ifstream in(ts::data_path("table1.csv"));
  std::stringstream original;
  original << in.rdbuf();
  std::istringstream again(original.str());
  const auto a = read_array_csv(again);
  EXPECT_EQ(a.alphabet(), Alphabet::letters(3));
  EXPECT_EQ(to_csv(a), original.str());
  for (auto name : builtin_names()) {
    const auto b = builtin(name);
    std::istringstream s(to_csv(b, false));
    const auto c = read_array_csv(s);
    EXPECT_EQ(to_csv(c, false), to_csv(b, false));
  }
}

TEST(ArrayCsv, InfersAlphabetWithoutHeader) {
  std::istringstream digits("0,1,1,0\n1,0,0,1\n0,0,0,0\n1,1,1,1\n");
  const auto a = read_array_csv(digits);
  EXPECT_EQ(a.v(), 2);
  EXPECT_EQ(a.s(), 2);
  std::istringstream glyphs("X,Y\nY,X\n");
  const auto g = read_array_csv(glyphs);
  EXPECT_EQ(g.v(), 2);
  EXPECT_EQ(g.alphabet().display(0), "X");
}

TEST(ArrayCsv, Errors) {
  EXPECT_EQ(code_of([] { read_array_file(ts::data_path("truncated.csv")); }),
            Errc::dimension_mismatch);
  EXPECT_EQ(code_of([] { read_array_file(ts::data_path("missing.csv")); }), Errc::io_error);
  std::istringstream ragged("# v=2 s=1\n0,1\n1\n");
  EXPECT_EQ(code_of([&] { read_array_csv(ragged); }), Errc::dimension_mismatch);
}
