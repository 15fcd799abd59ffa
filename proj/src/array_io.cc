#include "aontlab/array_io.h"

#include <algorithm>
#include <fstream>
#include <optional>
#include <regex>
#include <sstream>

#include "aontlab/error.h"

namespace aontlab {

namespace {

std::string trim(const std::string& s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::vector<std::string> split_row(const std::string& line, std::size_t lineno) {
  std::vector<std::string> tokens;
  std::stringstream ss(line);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok = trim(tok);
    if (tok.empty() || tok.find_first_of(" \t") != std::string::npos) {
      throw Error(Errc::parse_error, "line " + std::to_string(lineno) +
                                         ": malformed symbol token");
    }
    tokens.push_back(tok);
  }
  if (!line.empty() && line.back() == ',') {
    throw Error(Errc::parse_error,
                "line " + std::to_string(lineno) + ": trailing comma");
  }
  return tokens;
}

bool all_tokens(const std::vector<std::vector<std::string>>& raw,
                bool (*pred)(const std::string&)) {
  for (const auto& row : raw) {
    for (const auto& t : row) {
      if (!pred(t)) return false;
    }
  }
  return !raw.empty();
}

bool is_decimal(const std::string& t) {
  return !t.empty() && t.size() < 10 &&
         std::all_of(t.begin(), t.end(), [](char c) { return c >= '0' && c <= '9'; });
}

bool is_letter(const std::string& t) {
  return t.size() == 1 && t[0] >= 'a' && t[0] <= 'z';
}

}  // namespace

AontArray read_array_csv(std::istream& in) {
  std::optional<int> v;
  std::optional<int> s;
  std::vector<std::vector<std::string>> raw;
  std::string line;
  std::size_t lineno = 0;
  static const std::regex header(R"(#\s*v\s*=\s*(\d+)\s+s\s*=\s*(\d+)\s*)");
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty()) continue;
    if (line.front() == '#') {
      std::smatch m;
      if (raw.empty() && !v && std::regex_match(line, m, header)) {
        v = std::stoi(m[1]);
        s = std::stoi(m[2]);
        continue;
      }
      throw Error(Errc::parse_error,
                  "line " + std::to_string(lineno) + ": unexpected '#' line");
    }
    raw.push_back(split_row(line, lineno));
  }
  if (raw.empty()) throw Error(Errc::parse_error, "no rows");

  if (!s) {
    if (raw.front().size() % 2 != 0) {
      throw Error(Errc::dimension_mismatch, "row width must be even (2s)");
    }
    s = static_cast<int>(raw.front().size() / 2);
  }

  if (all_tokens(raw, is_decimal)) {
    if (!v) {
      int max_sym = 0;
      for (const auto& row : raw)
        for (const auto& t : row) max_sym = std::max(max_sym, std::stoi(t));
      v = max_sym + 1;
    }
    return parse_array(raw, Alphabet(*v), *s);
  }
  if (all_tokens(raw, is_letter)) {
    if (!v) {
      char max_letter = 'a';
      for (const auto& row : raw)
        for (const auto& t : row) max_letter = std::max(max_letter, t[0]);
      v = max_letter - 'a' + 1;
    }
    if (*v > 26) {
      throw Error(Errc::unknown_symbol, "letter glyphs cover at most v = 26");
    }
    return parse_array(raw, Alphabet::letters(*v), *s);
  }

  std::vector<std::string> glyphs;
  for (const auto& row : raw) {
    for (const auto& t : row) {
      if (std::find(glyphs.begin(), glyphs.end(), t) == glyphs.end()) {
        glyphs.push_back(t);
      }
    }
  }
  if (!v) v = static_cast<int>(glyphs.size());
  if (static_cast<int>(glyphs.size()) > *v) {
    throw Error(Errc::unknown_symbol, std::to_string(glyphs.size()) +
                                          " distinct glyphs exceed v = " +
                                          std::to_string(*v));
  }
  for (int i = 0; static_cast<int>(glyphs.size()) < *v; ++i) {
    std::string filler = "_" + std::to_string(i);
    if (std::find(glyphs.begin(), glyphs.end(), filler) == glyphs.end()) {
      glyphs.push_back(filler);
    }
  }
  return parse_array(raw, Alphabet(*v, std::move(glyphs)), *s);
}

AontArray read_array_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  return read_array_csv(in);
}

void write_array_csv(std::ostream& out, const AontArray& array,
                     bool with_header) {
  if (with_header) out << "# v=" << array.v() << " s=" << array.s() << "\n";
  for (std::size_t r = 0; r < array.row_count(); ++r) {
    const auto row = array.row(r);
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c) out << ',';
      out << array.alphabet().display(row[c]);
    }
    out << '\n';
  }
}

std::string to_csv(const AontArray& array, bool with_header) {
  std::ostringstream out;
  write_array_csv(out, array, with_header);
  return out.str();
}

}  // namespace aontlab
