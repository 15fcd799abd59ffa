#include "aontlab/constructions.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>

#include "aontlab/error.h"
#include "json.hpp"

namespace aontlab {

namespace {

struct GoldenTable {
  std::string_view name;
  int s;
  const char* rows;
};

// Each row is 2s glyphs: inputs then outputs.
constexpr GoldenTable kTables[] = {
    {"table1", 2,
     "aaaa abcb acbc babb bbac bcca cacc cbba ccab"},
    {"table2", 3,
     "aaaaaa aabbba aaccca abaabb abbbcb abccab acaacc acbbac acccbc "
     "baabab babcbb bacacb bbabbc bbbccc bbcaac bcabca bcbcaa bccaba "
     "caacac cababc cacbcc cbacba cbbaca cbcbaa ccaccb ccbaab cccbbb"},
    {"table3", 3,
     "aaaaaa aabbba ababab abbbaa baaabb bababa bbaaab bbbbbb"},
};

}  // namespace

std::vector<std::string_view> builtin_names() {
  std::vector<std::string_view> names;
  for (const auto& t : kTables) names.push_back(t.name);
  return names;
}

AontArray builtin(std::string_view name) {
  for (const auto& t : kTables) {
    if (t.name != name) continue;
    std::vector<std::vector<std::string>> raw;
    std::string_view rest = t.rows;
    while (!rest.empty()) {
      const auto end = rest.find(' ');
      const auto word = rest.substr(0, end);
      std::vector<std::string> row;
      for (char c : word) row.emplace_back(1, c);
      raw.push_back(std::move(row));
      rest = end == std::string_view::npos ? std::string_view{}
                                           : rest.substr(end + 1);
    }
    return parse_array(raw, Alphabet::letters(3 - (t.name == "table3")), t.s);
  }
  throw Error(Errc::unknown_name, "no builtin array named '" +
                                      std::string(name) + "'");
}

bool is_prime(int n) {
  if (n < 2) return false;
  for (int d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// SquareMatrix

SquareMatrix::SquareMatrix(int v, int order, std::vector<int> entries)
    : v_(v), order_(order), entries_(std::move(entries)) {}

SquareMatrix::SquareMatrix(int v, std::vector<std::vector<int>> rows)
    : v_(v), order_(static_cast<int>(rows.size())) {
  if (!is_prime(v)) {
    throw Error(Errc::nonprime_modulus, std::to_string(v) + " is not prime");
  }
  if (rows.empty()) throw Error(Errc::invalid_parameters, "empty matrix");
  for (const auto& row : rows) {
    if (static_cast<int>(row.size()) != order_) {
      throw Error(Errc::invalid_parameters, "matrix must be square");
    }
    for (int e : row) {
      if (e < 0 || e >= v) {
        throw Error(Errc::invalid_parameters,
                    "entry " + std::to_string(e) + " outside Z_" +
                        std::to_string(v));
      }
      entries_.push_back(e);
    }
  }
}

SquareMatrix SquareMatrix::from_index(int v, int order, std::uint64_t index) {
  std::vector<int> entries(static_cast<std::size_t>(order) * order);
  for (std::size_t k = entries.size(); k-- > 0;) {
    entries[k] = static_cast<int>(index % v);
    index /= v;
  }
  return SquareMatrix(v, order, std::move(entries));
}

std::vector<std::vector<int>> SquareMatrix::rows() const {
  std::vector<std::vector<int>> out(order_);
  for (int r = 0; r < order_; ++r) {
    out[r].assign(entries_.begin() + r * order_,
                  entries_.begin() + (r + 1) * order_);
  }
  return out;
}

int SquareMatrix::determinant() const {
  // Gaussian elimination over the field Z_v.
  std::vector<long> a(entries_.begin(), entries_.end());
  const int n = order_;
  const long p = v_;
  auto inverse = [p](long x) {
    long result = 1, base = x % p, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  };
  long det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && a[pivot * n + col] == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (int k = 0; k < n; ++k) std::swap(a[pivot * n + k], a[col * n + k]);
      det = (p - det) % p;
    }
    det = det * a[col * n + col] % p;
    const long inv = inverse(a[col * n + col]);
    for (int r = col + 1; r < n; ++r) {
      const long f = a[r * n + col] * inv % p;
      if (f == 0) continue;
      for (int k = col; k < n; ++k) {
        a[r * n + k] = ((a[r * n + k] - f * a[col * n + k]) % p + p) % p;
      }
    }
  }
  return static_cast<int>(det);
}

AontArray linear_aont(const SquareMatrix& m) {
  if (!m.invertible()) {
    throw Error(Errc::singular_matrix, "determinant is 0 mod " +
                                           std::to_string(m.v()));
  }
  const int s = m.order();
  const int v = m.v();
  const std::uint64_t n = checked_pow(v, s);
  std::vector<std::vector<Symbol>> rows;
  rows.reserve(n);
  for (std::uint64_t code = 0; code < n; ++code) {
    std::vector<Symbol> row = decode_tuple(code, v, s);
    row.resize(2 * s);
    for (int j = 0; j < s; ++j) {
      long y = 0;
      for (int i = 0; i < s; ++i) y += static_cast<long>(row[i]) * m.at(i, j);
      row[s + j] = static_cast<Symbol>(y % v);
    }
    rows.push_back(std::move(row));
  }
  return AontArray(Alphabet(v), s, std::move(rows));
}

// ---------------------------------------------------------------------------
// Search

SearchResult search_linear(int s, int v, int t_i, int t_o,
                           const SearchOptions& options) {
  if (!is_prime(v)) {
    throw Error(Errc::nonprime_modulus, std::to_string(v) + " is not prime");
  }
  if (s < 1 || t_i < 1 || t_i > t_o || t_o > s) {
    throw Error(Errc::invalid_parameters, "need 1 <= t_i <= t_o <= s");
  }
  std::uint64_t candidates = 0;
  try {
    candidates = checked_pow(v, s * s);
    checked_pow(v, s);
  } catch (const Error&) {
    throw Error(Errc::search_space_too_large, "v^(s^2) overflows");
  }
  if (candidates > options.cap) {
    throw Error(Errc::search_space_too_large,
                std::to_string(v) + "^" + std::to_string(s * s) + " = " +
                    std::to_string(candidates) + " candidate matrices exceed cap " +
                    std::to_string(options.cap));
  }

  const auto start = std::chrono::steady_clock::now();
  unsigned threads = options.threads;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::uint64_t>(threads, std::max<std::uint64_t>(1, candidates / 64)));

  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> examined{0};
  std::vector<std::vector<std::uint64_t>> hits(threads);
  constexpr std::uint64_t kChunk = 256;

  auto worker = [&](unsigned id) {
    std::uint64_t local_examined = 0;
    while (true) {
      const std::uint64_t begin = next.fetch_add(kChunk);
      if (begin >= candidates) break;
      const std::uint64_t end = std::min(candidates, begin + kChunk);
      for (std::uint64_t index = begin; index < end; ++index) {
        const auto m = SquareMatrix::from_index(v, s, index);
        if (!m.invertible()) continue;
        ++local_examined;
        if (satisfies(linear_aont(m), t_i, t_o, Property::unbiased)) {
          hits[id].push_back(index);
        }
      }
    }
    examined += local_examined;
  };

  {
    std::vector<std::jthread> pool;
    for (unsigned id = 1; id < threads; ++id) pool.emplace_back(worker, id);
    worker(0);
  }

  std::vector<std::uint64_t> all;
  for (const auto& h : hits) all.insert(all.end(), h.begin(), h.end());
  std::sort(all.begin(), all.end());

  SearchResult result;
  result.s = s;
  result.v = v;
  result.t_i = t_i;
  result.t_o = t_o;
  result.candidates = candidates;
  result.examined = examined.load();
  result.threads = threads;
  for (std::uint64_t index : all) {
    result.found.push_back(SquareMatrix::from_index(v, s, index));
  }
  result.seconds = std::chrono::duration<double>(
                       std::chrono::steady_clock::now() - start)
                       .count();
  return result;
}

std::string matrix_to_json(const SquareMatrix& m) {
  return nlohmann::json(m.rows()).dump();
}

std::string search_result_to_json(const SearchResult& result) {
  nlohmann::json j;
  j["s"] = result.s;
  j["v"] = result.v;
  j["t_i"] = result.t_i;
  j["t_o"] = result.t_o;
  j["candidates"] = result.candidates;
  j["examined"] = result.examined;
  j["found"] = result.found.size();
  auto matrices = nlohmann::json::array();
  for (const auto& m : result.found) matrices.push_back(m.rows());
  j["matrices"] = matrices;
  j["seconds"] = result.seconds;
  j["threads"] = result.threads;
  return j.dump();
}

}  // namespace aontlab
