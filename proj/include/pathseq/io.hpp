#pragma once

#include <fstream>
#include <istream>
#include <limits>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "pathseq/error.hpp"
#include "pathseq/generalized.hpp"
#include "pathseq/graph.hpp"
#include "pathseq/reconstruct.hpp"
#include "pathseq/starlike.hpp"

namespace pathseq {

using json = nlohmann::json;

// Edge-list text: first line "n e", then e lines "u v" (0-based). Anything
// after '#' on a line is ignored, as are blank lines.
inline Graph read_edge_list(std::istream& in) {
  std::vector<std::vector<long long>> rows;
  std::string line;
  int line_no = 0;
  std::vector<int> row_lines;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream fields(line);
    std::vector<long long> row;
    std::string token;
    while (fields >> token) {
      std::size_t used = 0;
      long long value = 0;
      try {
        value = std::stoll(token, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (used != token.size() || value < 0) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) +
                                               ": expected a non-negative integer, got '" +
                                               token + "'");
      }
      row.push_back(value);
    }
    if (row.empty()) continue;
    if (row.size() != 2) {
      throw Error(ErrorKind::ParseError,
                  "line " + std::to_string(line_no) + ": expected two integers");
    }
    rows.push_back(std::move(row));
    row_lines.push_back(line_no);
  }
  if (rows.empty()) throw Error(ErrorKind::ParseError, "missing 'n e' header line");
  const auto n = static_cast<std::size_t>(rows[0][0]);
  const auto e = static_cast<std::size_t>(rows[0][1]);
  if (rows.size() - 1 != e) {
    throw Error(ErrorKind::ParseError, "header declares " + std::to_string(e) +
                                           " edges but " + std::to_string(rows.size() - 1) +
                                           " edge lines follow");
  }
  std::vector<Edge> edges;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto max_vertex = static_cast<long long>(std::numeric_limits<Vertex>::max());
    if (rows[i][0] > max_vertex || rows[i][1] > max_vertex) {
      throw Error(ErrorKind::VertexOutOfRange,
                  "line " + std::to_string(row_lines[i]) + ": vertex index too large");
    }
    edges.emplace_back(static_cast<Vertex>(rows[i][0]), static_cast<Vertex>(rows[i][1]));
  }
  return Graph::from_edges(n, edges);
}

inline std::string write_edge_list(const Graph& g) {
  std::ostringstream out;
  const auto edges = g.edges();
  out << g.vertex_count() << ' ' << edges.size() << '\n';
  for (const auto& [u, v] : edges) out << u << ' ' << v << '\n';
  return out.str();
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::IoError, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

inline Graph read_edge_list_file(const std::string& path) {
  std::istringstream in(read_text_file(path));
  return read_edge_list(in);
}

inline json parse_json_text(const std::string& text, const std::string& origin) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw Error(ErrorKind::ParseError, origin + ": " + e.what());
  }
}

namespace detail {

inline std::int64_t require_int(const json& obj, const char* key, const std::string& where) {
  if (!obj.is_object() || !obj.contains(key) || !obj.at(key).is_number_integer()) {
    throw Error(ErrorKind::ParseError, where + ": field '" + key + "' must be an integer");
  }
  return obj.at(key).get<std::int64_t>();
}

inline StarlikeSpec::BranchCounts parse_branches(const json& doc) {
  if (!doc.is_object() || !doc.contains("branches") || !doc.at("branches").is_array()) {
    throw Error(ErrorKind::ParseError, "spec must contain a 'branches' array");
  }
  StarlikeSpec::BranchCounts counts;
  for (const auto& entry : doc.at("branches")) {
    const auto length = require_int(entry, "length", "branch entry");
    const auto count = require_int(entry, "count", "branch entry");
    if (length < 1 || count < 1) {
      throw Error(ErrorKind::InvalidSpec, "branch length and count must be >= 1");
    }
    if (length > std::numeric_limits<int>::max()) {
      throw Error(ErrorKind::InvalidSpec, "branch length too large");
    }
    if (!counts.emplace(static_cast<int>(length), count).second) {
      throw Error(ErrorKind::InvalidSpec,
                  "branch length " + std::to_string(length) + " listed more than once");
    }
  }
  return counts;
}

}  // namespace detail

/// {"branches": [{"length": l, "count": c}, ...]}, lengths distinct.
inline StarlikeSpec parse_starlike(const json& doc) {
  return StarlikeSpec::from_counts(detail::parse_branches(doc));
}

/// {"clique": n1, "branches": [...]}; n1 = 2 normalizes to a starlike spec.
inline TreeSpec parse_generalized(const json& doc) {
  const auto clique = detail::require_int(doc, "clique", "generalized spec");
  return normalize_coalescence(clique, StarlikeSpec::from_counts(detail::parse_branches(doc)));
}

inline json to_json(const StarlikeSpec& spec) {
  json branches = json::array();
  for (const auto& [length, count] : spec.branch_counts()) {
    branches.push_back({{"length", length}, {"count", count}});
  }
  return {{"branches", branches}};
}

inline json to_json(const GenStarlikeSpec& spec) {
  json out = to_json(spec.star());
  out["clique"] = spec.clique_size();
  return out;
}

inline json to_json(const TreeSpec& spec) {
  return std::visit([](const auto& s) { return to_json(s); }, spec);
}

inline json to_json(const Census& census) {
  json entries = json::array();
  for (const auto& [cls, count] : census.entries()) {
    entries.push_back({{"degrees", std::vector<Degree>(cls.degrees().begin(), cls.degrees().end())},
                       {"count", count}});
  }
  return {{"h", census.order()}, {"total", census.total()}, {"entries", entries}};
}

inline json to_json(const ConditionReport& report) {
  const auto status = [](const ConditionOutcome& o) { return o.pass ? "pass" : "fail"; };
  json counterexamples = json::array();
  if (const auto& ce = report.condition_a.counterexample) {
    counterexamples.push_back({{"condition", "a"}, {"x", ce->first}, {"y", ce->second}});
  }
  if (const auto& ce = report.condition_b.counterexample) {
    counterexamples.push_back({{"condition", "b"}, {"t", ce->first}, {"x", ce->second}});
  }
  return {{"theorem", report.theorem},
          {"condition_a", status(report.condition_a)},
          {"condition_b", status(report.condition_b)},
          {"min_margin_a", report.condition_a.min_margin},
          {"min_margin_b", report.condition_b.min_margin},
          {"counterexamples", counterexamples},
          {"domain", {{"x_max", report.x_max}, {"t_max", report.t_max}}},
          {"tolerance", report.tolerance}};
}

inline json to_json(const SurveyReport& report) {
  json collisions = json::array();
  for (const auto& [a, b] : report.collisions) collisions.push_back({to_json(a), to_json(b)});
  return {{"specs", report.specs},
          {"pairs_checked", report.pairs_checked},
          {"collisions", collisions}};
}

inline json to_json(const InvariantProfile& profile) { return profile.values; }

inline InvariantProfile parse_profile(const json& doc, std::int64_t& n_out) {
  n_out = detail::require_int(doc, "n", "profile");
  if (!doc.contains("values") || !doc.at("values").is_array()) {
    throw Error(ErrorKind::ParseError, "profile must contain a 'values' array");
  }
  InvariantProfile profile;
  for (const auto& v : doc.at("values")) {
    if (!v.is_number()) throw Error(ErrorKind::ParseError, "profile values must be numbers");
    profile.values.push_back(v.get<double>());
  }
  return profile;
}

}  // namespace pathseq
