#pragma once

#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <gtest/gtest.h>

#include "aontlab/array.h"
#include "aontlab/error.h"
#include "aontlab/input_model.h"
#include "naive_oracle.h"

namespace testing_support {

inline const std::string kTable1 = "aaaa abcb acbc babb bbac bcca cacc cbba ccab";
inline const std::string kTable2 =
    "aaaaaa aabbba aaccca abaabb abbbcb abccab acaacc acbbac acccbc "
    "baabab babcbb bacacb bbabbc bbbccc bbcaac bcabca bcbcaa bccaba "
    "caacac cababc cacbcc cbacba cbbaca cbcbaa ccaccb ccbaab cccbbb";
inline const std::string kTable3 = "aaaaaa aabbba ababab abbbaa baaabb bababa bbaaab bbbbbb";

// Code of the aontlab::Error thrown by f, failing the test when none is.
inline aontlab::Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const aontlab::Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no aontlab::Error thrown";
  return aontlab::Errc::io_error;
}

inline std::string data_path(const std::string& name) {
  return std::string(AONT_TEST_DATA) + "/" + name;
}

inline naive::Table to_table(const aontlab::AontArray& a) {
  naive::Table t{a.s(), a.v(), {}};
  for (std::size_t r = 0; r < a.row_count(); ++r) {
    const auto row = a.row(r);
    t.rows.emplace_back(row.begin(), row.end());
  }
  return t;
}

using Masses = std::vector<std::pair<long, long>>;

inline std::vector<long double> as_reals(const Masses& m) {
  std::vector<long double> out;
  for (auto [n, d] : m) out.push_back(static_cast<long double>(n) / d);
  return out;
}

// Weights in 0..9 over a common denominator; roughly one in six entries is
// zero so supports shrink now and then.
inline Masses random_masses(std::mt19937_64& rng, std::size_t n) {
  std::uniform_int_distribution<long> w(0, 9);
  std::vector<long> weights(n);
  long total = 0;
  while (total == 0) {
    total = 0;
    for (auto& x : weights) total += (x = w(rng) < 2 ? 0 : w(rng) + 1);
  }
  Masses out;
  for (long x : weights) out.emplace_back(x, total);
  return out;
}

struct RandomModel {
  aontlab::InputModel model;
  naive::Prior prior;
};

inline RandomModel random_independent(std::mt19937_64& rng, int s, int v) {
  std::vector<aontlab::Distribution> dists;
  std::vector<std::vector<long double>> reals;
  for (int i = 0; i < s; ++i) {
    const auto m = random_masses(rng, v);
    dists.push_back(aontlab::Distribution::column(v, m));
    reals.push_back(as_reals(m));
  }
  return {aontlab::make_independent_model(std::move(dists)), naive::product_prior(reals)};
}

// One dependent block at `block` (1-based, sorted), everything else uniform.
inline RandomModel random_block(std::mt19937_64& rng, int s, int v, std::vector<int> block) {
  const std::size_t cells = naive::ipow(v, block.size());
  const auto m = random_masses(rng, cells);
  aontlab::Distribution joint(v, static_cast<int>(block.size()), [&] {
    std::vector<aontlab::Rational> q;
    for (auto [n, d] : m) q.push_back(aontlab::make_rational(n, d));
    return q;
  }());
  const auto reals = as_reals(m);
  const long double rest = 1.0L / naive::ipow(v, s - static_cast<int>(block.size()));
  naive::Prior prior = [reals, block, v, rest](const std::vector<int>& x) {
    std::size_t code = 0;
    for (int c : block) code = code * v + x[c - 1];
    return reals[code] * rest;
  };
  return {aontlab::make_block_dependent_model(s, v, block, std::move(joint)), prior};
}

inline std::vector<int> to_vec(const aontlab::ColumnSet& c) {
  return {c.indices().begin(), c.indices().end()};
}

}  // namespace testing_support
