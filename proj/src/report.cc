#include "aontlab/report.h"

#include <algorithm>
#include <cstdio>
#include <map>
#include <sstream>

#include "aontlab/error.h"
#include "json.hpp"

namespace aontlab {

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

namespace {

std::string full(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

std::string cols_list(const ColumnSet& c) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(c[i]);
  }
  return out;
}

}  // namespace

std::vector<BoundSource> applicable_theorems(const ClassificationVerdict& verdict,
                                             const InputModel& model) {
  std::vector<BoundSource> out;
  const bool independent = model.kind() == ModelKind::independent;
  const bool symmetric = verdict.t_i == verdict.t_o;
  if (verdict.verdict == Verdict::aont && symmetric) {
    if (independent) {
      out.push_back(BoundSource::symmetric);
      if (model.nonuniform_count() <= verdict.t_i) {
        out.push_back(BoundSource::nonuniform_at_most_t);
      }
    } else if (static_cast<int>(model.block().size()) <= verdict.t_i) {
      out.push_back(BoundSource::block_dependent);
    }
  }
  if (!independent) return out;
  if (verdict.verdict == Verdict::aont && !symmetric) {
    out.push_back(BoundSource::asymmetric_given_hy);
    out.push_back(BoundSource::asymmetric);
  }
  if (verdict.verdict == Verdict::weak_aont_only) {
    out.push_back(BoundSource::weak_given_hy);
    out.push_back(BoundSource::weak);
  }
  return out;
}

AnalysisReport analyze(const AontArray& array, std::string array_id,
                       const InputModel& model, std::string model_id, int t_i,
                       int t_o, const AnalyzeOptions& options) {
  AnalysisReport report;
  report.array_id = std::move(array_id);
  report.model_id = std::move(model_id);
  report.s = array.s();
  report.v = array.v();
  report.t_i = t_i;
  report.t_o = t_o;
  report.tolerance = options.tolerance;
  report.verdict = classify(array, t_i, t_o);
  if (report.verdict.failure) {
    report.verdict_detail = describe(*report.verdict.failure, array.alphabet());
  }
  // Fails early on a model that does not fit the array.
  row_masses(array, model);

  report.theorems = options.theorems.empty()
                        ? applicable_theorems(report.verdict, model)
                        : options.theorems;

  const bool independent = model.kind() == ModelKind::independent;
  if (independent) {
    for (int i = 1; i <= array.s(); ++i) {
      report.column_entropies.push_back(column_entropy(model, i));
    }
  }

  auto pairs = options.pairs.empty()
                   ? admissible_pairs(array.s(), t_i, array.s() - t_o)
                   : options.pairs;
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  for (const auto& p : pairs) {
    validate_pair(array, p);
    if (static_cast<int>(p.x.size()) != t_i ||
        static_cast<int>(p.y.size()) != array.s() - t_o) {
      throw Error(Errc::invalid_parameters,
                  "pair " + p.to_string() + " needs |X| = t_i and |Y| = s - t_o");
    }
  }

  const bool use_formula = independent && t_i == t_o &&
                           report.verdict.verdict == Verdict::aont;
  const double cap = independent ? min_subset_entropy(model, t_i) : 0.0;

  std::map<ColumnSet, double> hy;
  for (const auto& p : pairs) {
    ReportRow row;
    row.pair = p;
    row.h_x = subset_entropy(array, model, p.x);
    row.observed = conditional_entropy(array, model, p);
    if (use_formula) row.formula = conditional_entropy_formula(array, model, p);
    row.statistical_distance = statistical_distance(array, model, p);
    row.exceeds_min_subset_cap =
        independent && row.observed > cap + options.tolerance;
    for (BoundSource src : report.theorems) {
      row.comparisons.push_back(compare(array, model, p, src, options.tolerance));
      report.all_within = report.all_within && row.comparisons.back().within;
    }
    if (!hy.count(p.y)) hy[p.y] = subset_entropy(array, model, p.y);
    report.rows.push_back(std::move(row));
  }
  for (const auto& [y, h] : hy) report.output_entropies.push_back({y, h});

  if (!report.rows.empty()) {
    auto [lo, hi] = std::minmax_element(
        report.rows.begin(), report.rows.end(),
        [](const ReportRow& a, const ReportRow& b) { return a.observed < b.observed; });
    report.min_observed = lo->observed;
    report.max_observed = hi->observed;
    report.perfect_security = std::all_of(
        report.rows.begin(), report.rows.end(), [&](const ReportRow& r) {
          return std::abs(r.observed - r.h_x) <= options.tolerance;
        });
  }
  return report;
}

std::string report_to_json(const AnalysisReport& report) {
  using nlohmann::json;
  json j;
  j["array"] = report.array_id;
  j["model"] = report.model_id;
  j["s"] = report.s;
  j["v"] = report.v;
  j["t_i"] = report.t_i;
  j["t_o"] = report.t_o;
  j["tolerance"] = report.tolerance;
  json verdict = {{"verdict", to_string(report.verdict.verdict)}};
  if (!report.verdict_detail.empty()) verdict["detail"] = report.verdict_detail;
  if (report.verdict.failure) {
    const auto& f = *report.verdict.failure;
    verdict["failed_property"] = to_string(f.property);
    verdict["failed_columns"] = std::vector<int>(f.columns.indices().begin(),
                                                 f.columns.indices().end());
    if (f.violation) {
      verdict["violating_tuple"] = f.violation->tuple;
      verdict["observed_count"] = f.violation->observed;
      verdict["expected_count"] = f.expected_multiplicity;
    }
  }
  j["classification"] = verdict;
  json theorems = json::array();
  for (auto t : report.theorems) theorems.push_back(to_tag(t));
  j["theorems"] = theorems;
  j["column_entropies"] = report.column_entropies;
  json outputs = json::array();
  for (const auto& o : report.output_entropies) {
    outputs.push_back({{"y", std::vector<int>(o.y.indices().begin(), o.y.indices().end())},
                       {"entropy", o.entropy}});
  }
  j["output_entropies"] = outputs;
  json rows = json::array();
  for (const auto& r : report.rows) {
    json row;
    row["x"] = std::vector<int>(r.pair.x.indices().begin(), r.pair.x.indices().end());
    row["y"] = std::vector<int>(r.pair.y.indices().begin(), r.pair.y.indices().end());
    row["h_x"] = r.h_x;
    row["conditional_entropy"] = r.observed;
    row["formula"] = r.formula ? json(*r.formula) : json(nullptr);
    row["statistical_distance"] = r.statistical_distance;
    row["exceeds_min_subset_cap"] = r.exceeds_min_subset_cap;
    json cmps = json::array();
    for (const auto& c : r.comparisons) {
      cmps.push_back({{"theorem", to_tag(c.interval.source)},
                      {"lower", c.interval.lower},
                      {"upper", c.interval.upper},
                      {"upper_terms", c.interval.upper_terms},
                      {"exact", c.interval.exact},
                      {"within", c.within},
                      {"attains_lower", c.attains_lower},
                      {"attains_upper", c.attains_upper},
                      {"attains_upper_term", c.attains_upper_term}});
    }
    row["bounds"] = cmps;
    rows.push_back(row);
  }
  j["rows"] = rows;
  j["summary"] = {{"min_observed", report.min_observed},
                  {"max_observed", report.max_observed},
                  {"perfect_security", report.perfect_security},
                  {"all_within", report.all_within}};
  return j.dump(2);
}

std::string report_to_table(const AnalysisReport& report) {
  std::ostringstream out;
  out << "array: " << report.array_id << "  (s=" << report.s
      << ", v=" << report.v << ")\n";
  out << "model: " << report.model_id << "\n";
  out << "parameters: t_i=" << report.t_i << " t_o=" << report.t_o << "\n";
  out << "classification: " << to_string(report.verdict.verdict);
  if (!report.verdict_detail.empty()) out << " (" << report.verdict_detail << ")";
  out << "\n";
  if (!report.column_entropies.empty()) {
    for (std::size_t i = 0; i < report.column_entropies.size(); ++i) {
      out << "H(X" << i + 1 << ") = " << fixed6(report.column_entropies[i])
          << (i + 1 < report.column_entropies.size() ? "  " : "\n");
    }
  }
  for (const auto& o : report.output_entropies) {
    out << "H(Y" << o.y.to_string() << ") = " << fixed6(o.entropy) << "\n";
  }
  out << "\n";
  char line[256];
  std::snprintf(line, sizeof line, "%-10s %-10s %10s %10s %10s %10s\n", "X", "Y",
                "H(X)", "H(X|Y)", "formula", "SD");
  out << line;
  for (const auto& r : report.rows) {
    std::snprintf(line, sizeof line, "%-10s %-10s %10s %10s %10s %10s%s\n",
                  r.pair.x.to_string().c_str(), r.pair.y.to_string().c_str(),
                  fixed6(r.h_x).c_str(), fixed6(r.observed).c_str(),
                  r.formula ? fixed6(*r.formula).c_str() : "-",
                  fixed6(r.statistical_distance).c_str(),
                  r.exceeds_min_subset_cap ? "  > min-subset cap" : "");
    out << line;
    for (const auto& c : r.comparisons) {
      out << "    " << to_tag(c.interval.source) << " ["
          << fixed6(c.interval.lower) << ", " << fixed6(c.interval.upper) << "]"
          << (c.within ? " within" : " OUTSIDE")
          << (c.attains_lower ? " attains-lower" : "")
          << (c.attains_upper ? " attains-upper" : "") << "\n";
    }
  }
  out << "\nsummary: min H(X|Y) = " << fixed6(report.min_observed)
      << ", max H(X|Y) = " << fixed6(report.max_observed)
      << ", perfect security: " << (report.perfect_security ? "yes" : "no")
      << ", all within bounds: " << (report.all_within ? "yes" : "no") << "\n";
  return out.str();
}

std::string report_to_csv(const AnalysisReport& report) {
  std::ostringstream out;
  out << "x,y,h_x,conditional_entropy,formula,statistical_distance,"
         "theorem,lower,upper,within,attains_lower,attains_upper\n";
  for (const auto& r : report.rows) {
    const std::string prefix = cols_list(r.pair.x) + "," + cols_list(r.pair.y) +
                               "," + full(r.h_x) + "," + full(r.observed) + "," +
                               (r.formula ? full(*r.formula) : "") + "," +
                               full(r.statistical_distance) + ",";
    if (r.comparisons.empty()) {
      out << prefix << ",,,,,\n";
      continue;
    }
    for (const auto& c : r.comparisons) {
      out << prefix << to_tag(c.interval.source) << "," << full(c.interval.lower)
          << "," << full(c.interval.upper) << "," << c.within << ","
          << c.attains_lower << "," << c.attains_upper << "\n";
    }
  }
  return out.str();
}

}  // namespace aontlab
