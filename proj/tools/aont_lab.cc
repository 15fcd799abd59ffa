// aont_lab: verify combinatorial AONT arrays, analyze input models against
// them, reproduce the worked examples and search linear constructions.
//
// Exit codes: 0 aont (or success), 1 weak-aont-only, 2 neither,
// 3 error, 4 demo mismatch.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "aontlab/array_io.h"
#include "aontlab/constructions.h"
#include "aontlab/demo.h"
#include "aontlab/error.h"
#include "aontlab/model_io.h"
#include "aontlab/report.h"
#include "json.hpp"

using namespace aontlab;

namespace {

constexpr int kExitError = 3;
constexpr int kExitDemoMismatch = 4;

struct ArraySource {
  std::string file;
  std::string builtin;
  std::string matrix;  // "1 0;0 1"
  int modulus = 0;
};

void add_array_options(CLI::App* cmd, ArraySource& src) {
  auto* file = cmd->add_option("--array", src.file, "array CSV file");
  auto* named = cmd->add_option("--builtin", src.builtin, "table1, table2 or table3");
  auto* matrix = cmd->add_option("--matrix", src.matrix,
                                 "linear transform, rows separated by ';'");
  cmd->add_option("--modulus", src.modulus, "prime field size for --matrix");
  file->excludes(named)->excludes(matrix);
  named->excludes(matrix);
}

SquareMatrix parse_matrix(const std::string& text, int v) {
  std::vector<std::vector<int>> rows;
  std::stringstream all(text);
  std::string line;
  while (std::getline(all, line, ';')) {
    std::stringstream cells(line);
    std::vector<int> row;
    int x;
    while (cells >> x) row.push_back(x);
    if (!cells.eof()) throw Error(Errc::parse_error, "bad matrix entry in '" + line + "'");
    rows.push_back(std::move(row));
  }
  return SquareMatrix(v, std::move(rows));
}

std::pair<AontArray, std::string> load_array(const ArraySource& src) {
  if (!src.builtin.empty()) return {builtin(src.builtin), src.builtin};
  if (!src.file.empty()) return {read_array_file(src.file), src.file};
  if (!src.matrix.empty()) {
    if (src.modulus == 0) throw Error(Errc::invalid_parameters, "--matrix needs --modulus");
    return {linear_aont(parse_matrix(src.matrix, src.modulus)),
            "matrix [" + src.matrix + "] mod " + std::to_string(src.modulus)};
  }
  throw Error(Errc::invalid_parameters, "one of --array, --builtin, --matrix is required");
}

// "1,2:4" -> X={1,2}, Y={4}; "1:" has an empty Y.
SubsetPair parse_pair(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) {
    throw Error(Errc::parse_error, "pair '" + text + "' must look like X:Y");
  }
  auto side = [&](std::string part) {
    std::vector<int> cols;
    std::stringstream in(part);
    std::string item;
    while (std::getline(in, item, ',')) {
      try {
        std::size_t used = 0;
        cols.push_back(std::stoi(item, &used));
        if (used != item.size()) throw std::invalid_argument(item);
      } catch (const std::logic_error&) {
        throw Error(Errc::parse_error, "bad column '" + item + "' in pair '" + text + "'");
      }
    }
    return ColumnSet(std::move(cols));
  };
  return {side(text.substr(0, colon)), side(text.substr(colon + 1))};
}

int verdict_exit(Verdict v) {
  switch (v) {
    case Verdict::aont: return 0;
    case Verdict::weak_aont_only: return 1;
    case Verdict::neither: return 2;
  }
  return kExitError;
}

unsigned env_threads() {
  const char* raw = std::getenv("AONT_LAB_THREADS");
  if (!raw || !*raw) return 0;
  try {
    const long n = std::stol(raw);
    return n < 0 ? 0u : static_cast<unsigned>(n);
  } catch (const std::logic_error&) {
    throw Error(Errc::invalid_parameters, std::string("AONT_LAB_THREADS='") + raw + "'");
  }
}

std::string verdict_json(const ClassificationVerdict& v, const std::string& id,
                         const AontArray& array) {
  nlohmann::json j = {{"array", id},
                      {"s", array.s()},
                      {"v", array.v()},
                      {"t_i", v.t_i},
                      {"t_o", v.t_o},
                      {"verdict", to_string(v.verdict)},
                      {"sets_checked", v.sets_checked}};
  if (v.failure) {
    const auto& f = *v.failure;
    j["detail"] = describe(f, array.alphabet());
    j["failed_property"] = to_string(f.property);
    j["failed_columns"] = std::vector<int>(f.columns.indices().begin(), f.columns.indices().end());
    if (f.violation) {
      std::vector<std::string> tuple;
      for (Symbol sym : f.violation->tuple) tuple.push_back(array.alphabet().display(sym));
      j["violating_tuple"] = tuple;
      j["observed_count"] = f.violation->observed;
      j["expected_count"] = f.expected_multiplicity;
    }
  }
  return j.dump(2);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"combinatorial AONT verifier and entropy analyzer"};
  app.require_subcommand(1);
  const std::vector<std::string> formats{"table", "json"};

  // verify
  ArraySource verify_src;
  int verify_ti = 1, verify_to = 1;
  std::string verify_format = "table";
  auto* verify = app.add_subcommand("verify", "classify an array");
  add_array_options(verify, verify_src);
  verify->add_option("--ti", verify_ti, "protected inputs")->required();
  verify->add_option("--to", verify_to, "missing outputs")->required();
  verify->add_option("--format", verify_format)->check(CLI::IsMember(formats));

  // analyze
  ArraySource analyze_src;
  std::string model_file;
  int analyze_ti = 1, analyze_to = 1;
  std::vector<std::string> theorem_tags, pair_texts;
  std::string analyze_format = "table";
  double tolerance = kDefaultTolerance;
  auto* analyze_cmd = app.add_subcommand("analyze", "conditional entropies and bounds");
  add_array_options(analyze_cmd, analyze_src);
  analyze_cmd->add_option("--model", model_file, "input model JSON")->required();
  analyze_cmd->add_option("--ti", analyze_ti)->required();
  analyze_cmd->add_option("--to", analyze_to)->required();
  analyze_cmd->add_option("--theorem", theorem_tags, "restrict to these bound tags");
  analyze_cmd->add_option("--pair", pair_texts, "restrict to pairs X:Y, e.g. 1:3");
  analyze_cmd->add_option("--format", analyze_format)
      ->check(CLI::IsMember({"table", "json", "csv"}));
  analyze_cmd->add_option("--tolerance", tolerance)->check(CLI::PositiveNumber);

  // demo
  int example = 1;
  std::string demo_format = "table";
  double demo_tolerance = kDefaultTolerance;
  auto* demo = app.add_subcommand("demo", "reproduce a worked example (1-4)");
  demo->add_option("example", example)->required()->check(CLI::Range(1, 4));
  demo->add_option("--format", demo_format)->check(CLI::IsMember(formats));
  demo->add_option("--tolerance", demo_tolerance)->check(CLI::PositiveNumber);

  // search
  int search_s = 2, search_v = 3, search_ti = 1, search_to = 1;
  std::uint64_t cap = kDefaultSearchCap;
  std::string search_format = "table";
  auto* search = app.add_subcommand("search", "enumerate linear AONTs over Z_v");
  search->add_option("--s", search_s)->required();
  search->add_option("--v", search_v)->required();
  search->add_option("--ti", search_ti)->required();
  search->add_option("--to", search_to)->required();
  search->add_option("--cap", cap, "maximum number of candidate matrices");
  search->add_option("--format", search_format)->check(CLI::IsMember(formats));

  // export
  ArraySource export_src;
  auto* export_cmd = app.add_subcommand("export", "print an array as CSV");
  add_array_options(export_cmd, export_src);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : kExitError;
  }

  try {
    if (*verify) {
      auto [array, id] = load_array(verify_src);
      const auto v = classify(array, verify_ti, verify_to);
      if (verify_format == "json") {
        std::cout << verdict_json(v, id, array) << "\n";
      } else {
        std::cout << to_string(v.verdict) << "\n";
        if (v.failure) std::cout << describe(*v.failure, array.alphabet()) << "\n";
      }
      return verdict_exit(v.verdict);
    }

    if (*analyze_cmd) {
      auto [array, id] = load_array(analyze_src);
      const InputModel model = read_model_file(model_file);
      AnalyzeOptions options;
      options.tolerance = tolerance;
      for (const auto& tag : theorem_tags) options.theorems.push_back(parse_tag(tag));
      for (const auto& p : pair_texts) options.pairs.push_back(parse_pair(p));
      const auto report = analyze(array, id, model, model_file, analyze_ti, analyze_to, options);
      if (analyze_format == "json") {
        std::cout << report_to_json(report) << "\n";
      } else if (analyze_format == "csv") {
        std::cout << report_to_csv(report);
      } else {
        std::cout << report_to_table(report);
      }
      return 0;
    }

    if (*demo) {
      const auto result = run_demo(example, demo_tolerance);
      std::cout << (demo_format == "json" ? demo_to_json(result) + "\n"
                                          : demo_to_text(result));
      return result.passed() ? 0 : kExitDemoMismatch;
    }

    if (*search) {
      SearchOptions options{.cap = cap, .threads = env_threads()};
      std::cerr << "searching " << search_s << "x" << search_s << " matrices over Z_"
                << search_v << " for (" << search_ti << "," << search_to << ")...\n";
      const auto result = search_linear(search_s, search_v, search_ti, search_to, options);
      std::cerr << "done: " << result.candidates << " candidates, " << result.threads
                << " thread(s), " << result.seconds << " s\n";
      if (search_format == "json") {
        std::cout << search_result_to_json(result) << "\n";
      } else {
        std::cout << result.examined << " examined, " << result.found.size() << " found\n";
        for (const auto& m : result.found) std::cout << matrix_to_json(m) << "\n";
      }
      return 0;
    }

    if (*export_cmd) {
      auto [array, id] = load_array(export_src);
      write_array_csv(std::cout, array);
      return 0;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: io-error: " << e.what() << "\n";
    return kExitError;
  }
  return 0;
}
