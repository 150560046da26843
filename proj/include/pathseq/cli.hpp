#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pathseq/error.hpp"
#include "pathseq/generalized.hpp"
#include "pathseq/graph.hpp"
#include "pathseq/invariants.hpp"
#include "pathseq/io.hpp"
#include "pathseq/numeric.hpp"
#include "pathseq/reconstruct.hpp"
#include "pathseq/starlike.hpp"

namespace pathseq::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitDomainError = 1;
inline constexpr int kExitUsageError = 2;

struct RunConfig {
  std::string command;
  std::vector<std::string> graph_paths;
  std::vector<std::string> starlike_paths;
  std::vector<std::string> generalized_paths;
  std::optional<std::string> profile_path;
  std::string index = "connectivity";
  std::optional<int> order;
  std::optional<int> max_order;
  int theorem = 7;
  int x_max = kDefaultConditionXMax;
  int t_max = kDefaultConditionTMax;
  double tol = kDefaultTolerance;
  std::string format = "json";
  std::uint64_t budget = kDefaultBudget;
  std::uint64_t seed = 0;
  std::optional<std::string> output;
  std::string family = "starlike";
  std::optional<std::int64_t> vertices;
  std::optional<std::int64_t> max_degree;
};

struct RunResult {
  int exit_code = kExitOk;
  std::string document;  // the report, or the error object on exit 1
  std::string diagnostic;  // usage message on exit 2
};

/// Invalid flag combination or value; maps to exit status 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Flat rendering of a report for --format csv.
struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<json>> rows;
};

inline std::string csv_cell(const json& v) {
  if (v.is_null()) return "";
  if (v.is_number_float()) return format_double(v.get<double>());
  if (v.is_number() || v.is_boolean()) return v.dump();
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") != std::string::npos) {
    std::string quoted = "\"";
    for (char c : s) quoted += (c == '"') ? std::string("\"\"") : std::string(1, c);
    return quoted + "\"";
  }
  return s;
}

inline std::string render_csv(const Table& table) {
  std::string out;
  const auto emit_row = [&](const auto& cells, auto&& to_text) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += to_text(cells[i]);
    }
    out += '\n';
  };
  emit_row(table.header, [](const std::string& s) { return s; });
  for (const auto& row : table.rows) emit_row(row, csv_cell);
  return out;
}

struct Report {
  json doc;
  Table table;
  int exit_code = kExitOk;
};

namespace detail {

/// One graph argument: an explicit graph or a tree spec.
struct Subject {
  std::optional<Graph> graph;
  std::optional<TreeSpec> spec;

  Graph realize() const {
    if (graph) return *graph;
    return std::visit(
        [](const auto& s) -> Graph {
          if constexpr (std::is_same_v<std::decay_t<decltype(s)>, StarlikeSpec>) {
            return realize_starlike(s);
          } else {
            return realize_generalized(s);
          }
        },
        *spec);
  }

  int rho(std::uint64_t budget) const {
    if (graph) return longest_path_length(*graph, budget);
    return std::visit([](const auto& s) { return s.longest_path(); }, *spec);
  }

  std::int64_t vertex_count() const {
    if (graph) return static_cast<std::int64_t>(graph->vertex_count());
    return std::visit([](const auto& s) { return s.vertex_count(); }, *spec);
  }

  /// Closed form when a spec is available, path enumeration otherwise.
  double invariant(int h, const InvariantFunction& f, std::uint64_t budget) const {
    if (!spec) return evaluate_invariant(*graph, h, f, budget);
    return std::visit(
        [&](const auto& s) {
          if constexpr (std::is_same_v<std::decay_t<decltype(s)>, StarlikeSpec>) {
            return starlike_invariant(s, h, f);
          } else {
            return generalized_invariant(s, h, f);
          }
        },
        *spec);
  }
};

inline std::vector<Subject> load_subjects(const RunConfig& cfg) {
  std::vector<Subject> out;
  for (const auto& p : cfg.graph_paths) out.push_back({read_edge_list_file(p), std::nullopt});
  for (const auto& p : cfg.starlike_paths) {
    out.push_back({std::nullopt, TreeSpec(parse_starlike(parse_json_text(read_text_file(p), p)))});
  }
  for (const auto& p : cfg.generalized_paths) {
    out.push_back({std::nullopt, parse_generalized(parse_json_text(read_text_file(p), p))});
  }
  return out;
}

inline Subject single_subject(const RunConfig& cfg) {
  const std::size_t sources =
      cfg.graph_paths.size() + cfg.starlike_paths.size() + cfg.generalized_paths.size();
  if (sources != 1) {
    throw UsageError("'" + cfg.command +
                     "' needs exactly one of --graph, --starlike, --generalized");
  }
  return load_subjects(cfg).front();
}

inline int require_order(const std::optional<int>& value, const char* flag) {
  if (!value) throw UsageError(std::string("missing required flag ") + flag);
  if (*value < 0) throw UsageError(std::string(flag) + " must be >= 0");
  return *value;
}

inline Report cmd_invariant(const RunConfig& cfg, const InvariantFunction& f) {
  const auto subject = single_subject(cfg);
  const int h = require_order(cfg.order, "--order");
  const double value = subject.invariant(h, f, cfg.budget);
  Report r;
  r.doc = {{"h", h}, {"index", f.name()}, {"value", value}};
  r.table = {{"h", "index", "value"}, {{h, f.name(), value}}};
  return r;
}

inline Report cmd_profile(const RunConfig& cfg, const InvariantFunction& f) {
  const auto subject = single_subject(cfg);
  const int rho = subject.rho(cfg.budget);
  const int top = cfg.max_order ? std::min(require_order(cfg.max_order, "--max-order"), rho) : rho;
  std::vector<double> values;
  if (subject.spec) {
    for (int h = 0; h <= top; ++h) values.push_back(subject.invariant(h, f, cfg.budget));
  } else {
    values = invariant_profile(*subject.graph, f, top, cfg.budget).values;
  }
  Report r;
  r.doc = {{"index", f.name()}, {"rho", rho}, {"max_order", top}, {"values", values}};
  r.table.header = {"h", "value"};
  for (int h = 0; h <= top; ++h) r.table.rows.push_back({h, values[h]});
  return r;
}

inline Report cmd_census(const RunConfig& cfg) {
  const auto subject = single_subject(cfg);
  const int h = require_order(cfg.order, "--order");
  Census census;
  std::string source = "enumeration";
  if (subject.spec && h >= 2) {
    source = "closed-form";
    census = std::visit(
        [&](const auto& s) {
          if constexpr (std::is_same_v<std::decay_t<decltype(s)>, StarlikeSpec>) {
            return starlike_census(s, h);
          } else {
            return generalized_census(s, h);
          }
        },
        *subject.spec);
  } else {
    census = path_census(subject.realize(), h, cfg.budget);
  }
  Report r;
  r.doc = to_json(census);
  r.doc["source"] = source;
  r.table.header = {"degrees", "count"};
  for (const auto& [cls, count] : census.entries()) {
    std::string key;
    for (Degree d : cls.degrees()) key += (key.empty() ? "" : " ") + std::to_string(d);
    r.table.rows.push_back({key, count});
  }
  return r;
}

inline Report cmd_verify(const RunConfig& cfg, const InvariantFunction& f) {
  const auto subject = single_subject(cfg);
  if (!subject.spec) throw UsageError("'verify' needs --starlike or --generalized");
  const Graph g = subject.realize();
  const int rho = subject.rho(cfg.budget);
  const int top = cfg.max_order ? std::min(require_order(cfg.max_order, "--max-order"), rho) : rho;
  double max_abs = 0.0;
  double max_scaled = 0.0;
  json rows = json::array();
  Report r;
  r.table.header = {"h", "closed_form", "enumeration", "abs_diff"};
  for (int h = 0; h <= top; ++h) {
    const double closed = subject.invariant(h, f, cfg.budget);
    const double brute = evaluate_invariant(g, h, f, cfg.budget);
    const double diff = std::abs(closed - brute);
    max_abs = std::max(max_abs, diff);
    max_scaled = std::max(max_scaled, scaled_difference(closed, brute));
    rows.push_back({{"h", h}, {"closed_form", closed}, {"enumeration", brute}});
    r.table.rows.push_back({h, closed, brute, diff});
  }
  const bool ok = max_scaled <= cfg.tol;
  r.doc = {{"index", f.name()},  {"max_order", top},         {"max_abs_diff", max_abs},
           {"max_rel_diff", max_scaled}, {"status", ok ? "ok" : "mismatch"}, {"rows", rows}};
  r.exit_code = ok ? kExitOk : kExitDomainError;
  return r;
}

inline Report cmd_reconstruct(const RunConfig& cfg, const InvariantFunction& f) {
  InvariantProfile profile;
  std::int64_t n = 0;
  std::optional<std::int64_t> r_value = cfg.max_degree;
  std::string family = cfg.family;
  if (cfg.profile_path) {
    if (!cfg.graph_paths.empty() || !cfg.starlike_paths.empty() ||
        !cfg.generalized_paths.empty()) {
      throw UsageError("'reconstruct' takes either --profile or one graph source, not both");
    }
    const auto doc = parse_json_text(read_text_file(*cfg.profile_path), *cfg.profile_path);
    profile = parse_profile(doc, n);
    if (!r_value && doc.contains("r") && doc.at("r").is_number_integer()) {
      r_value = doc.at("r").get<std::int64_t>();
    }
  } else {
    const auto subject = single_subject(cfg);
    n = subject.vertex_count();
    const int rho = subject.rho(cfg.budget);
    if (subject.spec) {
      if (const auto* gen = std::get_if<GenStarlikeSpec>(&*subject.spec)) {
        family = "generalized";
        if (!r_value) r_value = gen->max_degree();
      }
      for (int h = 0; h <= rho; ++h) profile.values.push_back(subject.invariant(h, f, cfg.budget));
    } else {
      profile = invariant_profile(*subject.graph, f, rho, cfg.budget);
      if (!r_value) {
        Degree top = 0;
        for (Vertex v = 0; v < subject.graph->vertex_count(); ++v) {
          top = std::max(top, subject.graph->degree(v));
        }
        r_value = top;
      }
    }
  }
  Report r;
  if (family == "starlike") {
    const auto result = reconstruct_starlike(n, profile, f, cfg.tol);
    r.doc = {{"family", family}, {"spec", to_json(result.spec)}, {"residuals", result.residuals},
             {"max_residual", result.max_residual()}};
  } else if (family == "generalized") {
    if (!r_value) throw UsageError("generalized reconstruction needs --max-degree");
    const auto result = reconstruct_generalized(n, *r_value, profile, f, cfg.tol);
    r.doc = {{"family", family}, {"spec", to_json(result.spec)}, {"residuals", result.residuals},
             {"max_residual", result.max_residual()}};
  } else {
    throw UsageError("--family must be starlike or generalized");
  }
  r.table.header = {"h", "residual"};
  const auto& residuals = r.doc.at("residuals");
  for (std::size_t h = 0; h < residuals.size(); ++h) r.table.rows.push_back({h, residuals[h]});
  return r;
}

inline Report cmd_distinguish(const RunConfig& cfg, const InvariantFunction& f) {
  if (!cfg.graph_paths.empty()) throw UsageError("'distinguish' compares tree specs, not graphs");
  if (cfg.starlike_paths.size() + cfg.generalized_paths.size() != 2) {
    throw UsageError("'distinguish' needs exactly two specs (--starlike / --generalized)");
  }
  const auto subjects = load_subjects(cfg);
  const auto result = distinguish(*subjects[0].spec, *subjects[1].spec, f, cfg.tol);
  Report r;
  r.doc = {{"index", f.name()},
           {"separated_at", result.separating_order ? json(*result.separating_order) : json()},
           {"verdict", result.separating_order ? "separated" : "indistinguishable"},
           {"max_order", result.max_order},
           {"differences", result.differences}};
  r.table.header = {"h", "abs_diff"};
  for (std::size_t h = 0; h < result.differences.size(); ++h) {
    r.table.rows.push_back({h, result.differences[h]});
  }
  return r;
}

inline Report cmd_check_conditions(const RunConfig& cfg, const InvariantFunction& f) {
  if (cfg.x_max < 4 || cfg.t_max < 0) throw UsageError("need --x-max >= 4 and --t-max >= 0");
  ConditionReport report;
  if (cfg.theorem == 7) {
    report = check_t7_conditions(f, cfg.x_max, cfg.t_max, cfg.tol);
  } else if (cfg.theorem == 8) {
    report = check_t8_conditions(f, cfg.x_max, cfg.t_max, cfg.tol);
  } else {
    throw UsageError("--theorem must be 7 or 8");
  }
  Report r;
  r.doc = to_json(report);
  r.doc["index"] = f.name();
  r.table.header = {"condition", "status", "min_margin"};
  r.table.rows.push_back({"a", r.doc["condition_a"], r.doc["min_margin_a"]});
  r.table.rows.push_back({"b", r.doc["condition_b"], r.doc["min_margin_b"]});
  return r;
}

inline Report cmd_survey(const RunConfig& cfg, const InvariantFunction& f) {
  if (!cfg.vertices) throw UsageError("'survey' needs --vertices");
  SurveyReport report;
  if (cfg.family == "starlike") {
    report = survey_starlike(*cfg.vertices, f, cfg.tol, cfg.budget);
  } else if (cfg.family == "generalized") {
    if (!cfg.max_degree) throw UsageError("generalized survey needs --max-degree");
    report = survey_generalized(*cfg.vertices, *cfg.max_degree, f, cfg.tol, cfg.budget);
  } else {
    throw UsageError("--family must be starlike or generalized");
  }
  Report r;
  r.doc = to_json(report);
  r.doc["family"] = cfg.family;
  r.doc["n"] = *cfg.vertices;
  r.doc["index"] = f.name();
  r.table.header = {"spec_a", "spec_b"};
  for (const auto& pair : r.doc.at("collisions")) {
    r.table.rows.push_back({pair[0].dump(), pair[1].dump()});
  }
  return r;
}

inline void validate(const RunConfig& cfg) {
  if (!(cfg.tol > 0)) throw UsageError("--tol must be > 0");
  if (cfg.budget == 0) throw UsageError("--budget must be > 0");
  if (cfg.format != "json" && cfg.format != "csv") throw UsageError("--format must be json or csv");
}

}  // namespace detail

inline std::string render(const Report& report, const std::string& format) {
  if (format == "csv") return render_csv(report.table);
  return report.doc.dump() + "\n";
}

inline json error_document(ErrorKind kind, const std::string& message) {
  return {{"error", {{"kind", std::string(to_string(kind))}, {"message", message}}}};
}

/// Dispatches one command. Never throws: domain errors become exit 1 with an
/// error object, usage errors exit 2.
inline RunResult run(const RunConfig& cfg) {
  using namespace detail;
  try {
    validate(cfg);
    InvariantRegistry registry;
    const auto index = [&] { return registry.resolve(cfg.index, cfg.seed); };
    Report report;
    if (cfg.command == "invariant") {
      report = cmd_invariant(cfg, index());
    } else if (cfg.command == "profile") {
      report = cmd_profile(cfg, index());
    } else if (cfg.command == "census") {
      report = cmd_census(cfg);
    } else if (cfg.command == "verify") {
      report = cmd_verify(cfg, index());
    } else if (cfg.command == "reconstruct") {
      report = cmd_reconstruct(cfg, index());
    } else if (cfg.command == "distinguish") {
      report = cmd_distinguish(cfg, index());
    } else if (cfg.command == "check-conditions") {
      report = cmd_check_conditions(cfg, index());
    } else if (cfg.command == "survey") {
      report = cmd_survey(cfg, index());
    } else {
      throw UsageError("unknown command '" + cfg.command + "'");
    }
    return {report.exit_code, render(report, cfg.format), ""};
  } catch (const UsageError& e) {
    return {kExitUsageError, "", e.what()};
  } catch (const Error& e) {
    return {kExitDomainError, error_document(e.kind(), e.what()).dump() + "\n", ""};
  }
}

/// Writes through a temporary file and renames it into place.
inline void write_atomically(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error(ErrorKind::IoError, "cannot write '" + tmp + "'");
    out << content;
    if (!out.flush()) throw Error(ErrorKind::IoError, "write to '" + tmp + "' failed");
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) throw Error(ErrorKind::IoError, "cannot move '" + tmp + "' to '" + path + "'");
}

}  // namespace pathseq::cli
