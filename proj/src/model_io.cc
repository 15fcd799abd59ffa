#include "aontlab/model_io.h"

#include <fstream>
#include <sstream>

#include "aontlab/error.h"
#include "json.hpp"

namespace aontlab {

using nlohmann::json;

namespace {

Rational rational_from(const json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_integer() ||
      !j[1].is_number_integer()) {
    throw Error(Errc::parse_error,
                "rational must be [numerator, denominator], got " + j.dump());
  }
  return make_rational(j[0].get<long>(), j[1].get<long>());
}

json rational_to(const Rational& q) {
  return json::array({q.get_num().get_si(), q.get_den().get_si()});
}

int required_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer()) {
    throw Error(Errc::parse_error, std::string("missing integer field '") + key + "'");
  }
  return j[key].get<int>();
}

}  // namespace

InputModel parse_model_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(Errc::parse_error, e.what());
  }
  if (!j.is_object()) throw Error(Errc::parse_error, "model must be an object");
  const int s = required_int(j, "s");
  const int v = required_int(j, "v");
  if (s < 1 || v < 2) throw Error(Errc::parse_error, "need s >= 1 and v >= 2");
  const std::string kind = j.value("kind", "");

  if (kind == "independent") {
    if (!j.contains("columns") || !j["columns"].is_array()) {
      throw Error(Errc::parse_error, "independent model needs 'columns'");
    }
    const auto& cols = j["columns"];
    if (static_cast<int>(cols.size()) != s) {
      throw Error(Errc::arity_mismatch, "expected " + std::to_string(s) +
                                            " columns, got " +
                                            std::to_string(cols.size()));
    }
    std::vector<Distribution> dists;
    for (const auto& col : cols) {
      if (!col.is_array()) throw Error(Errc::parse_error, "column must be a list");
      std::vector<Rational> masses;
      for (const auto& q : col) masses.push_back(rational_from(q));
      dists.emplace_back(v, 1, std::move(masses));
    }
    return make_independent_model(std::move(dists));
  }

  if (kind == "block-dependent") {
    if (!j.contains("block") || !j["block"].is_object()) {
      throw Error(Errc::parse_error, "block-dependent model needs 'block'");
    }
    const auto& b = j["block"];
    if (!b.contains("indices") || !b["indices"].is_array()) {
      throw Error(Errc::parse_error, "block needs 'indices'");
    }
    std::vector<int> indices;
    for (const auto& i : b["indices"]) {
      if (!i.is_number_integer()) throw Error(Errc::parse_error, "bad block index");
      indices.push_back(i.get<int>());
    }
    for (int c : indices) {
      if (c < 1 || c > s) {
        throw Error(Errc::block_out_of_range,
                    "block index " + std::to_string(c) + " outside 1.." +
                        std::to_string(s));
      }
    }
    const int arity = static_cast<int>(indices.size());
    std::vector<Rational> masses(checked_pow(v, arity), Rational(0));
    if (!b.contains("joint") || !b["joint"].is_array()) {
      throw Error(Errc::parse_error, "block needs 'joint'");
    }
    // Tuples follow the order of "indices" as written; reorder to sorted
    // column order since the model stores the block sorted.
    std::vector<std::size_t> order(arity);
    for (int k = 0; k < arity; ++k) order[k] = k;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t c) { return indices[a] < indices[c]; });
    for (const auto& entry : b["joint"]) {
      if (!entry.is_array() || entry.size() != 2 || !entry[0].is_array() ||
          static_cast<int>(entry[0].size()) != arity) {
        throw Error(Errc::parse_error, "joint entry must be [tuple, rational]");
      }
      std::vector<Symbol> tuple(arity);
      for (int k = 0; k < arity; ++k) {
        const auto& sym = entry[0][order[k]];
        if (!sym.is_number_integer() || sym.get<long>() < 0 || sym.get<long>() >= v) {
          throw Error(Errc::unknown_symbol, "joint tuple symbol out of range");
        }
        tuple[k] = sym.get<Symbol>();
      }
      masses[encode_tuple(tuple, v)] += rational_from(entry[1]);
    }
    return make_block_dependent_model(s, v, std::move(indices),
                                      Distribution(v, arity, std::move(masses)));
  }

  throw Error(Errc::parse_error,
              "kind must be 'independent' or 'block-dependent', got '" + kind + "'");
}

InputModel read_model_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(Errc::io_error, "cannot open " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_model_json(ss.str());
}

std::string model_to_json(const InputModel& model) {
  json j;
  j["s"] = model.s();
  j["v"] = model.v();
  if (model.kind() == ModelKind::independent) {
    j["kind"] = "independent";
    json cols = json::array();
    for (const auto& d : model.columns()) {
      json col = json::array();
      for (const auto& q : d.masses()) col.push_back(rational_to(q));
      cols.push_back(col);
    }
    j["columns"] = cols;
  } else {
    j["kind"] = "block-dependent";
    json joint = json::array();
    const auto& d = model.block_joint();
    for (std::uint64_t code = 0; code < d.masses().size(); ++code) {
      if (sgn(d.mass(code)) == 0) continue;
      joint.push_back(json::array(
          {decode_tuple(code, model.v(), model.block().size()),
           rational_to(d.mass(code))}));
    }
    j["block"] = {{"indices", model.block()}, {"joint", joint}};
  }
  return j.dump();
}

}  // namespace aontlab
