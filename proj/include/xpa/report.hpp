#pragma once

// Structured reports: a json payload (sorted keys, exact values as strings)
// rendered either as machine output or as indented human-readable text.
// Both renderings are deterministic, so identical runs produce identical
// bytes.

#include <string>

#include <json.hpp>

#include "xpa/action.hpp"
#include "xpa/matrix.hpp"

namespace xpa {

using Json = nlohmann::json;  // object keys are sorted (std::map)

inline Json json_vector(const Field& f, const Vec& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(f.to_string(x));
  return a;
}

inline Json json_matrix(const Matrix& m) {
  Json a = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) a.push_back(json_vector(m.field(), m.row(i)));
  return a;
}

inline Json json_checks(const VerificationReport& rep) {
  Json a = Json::array();
  for (const auto& c : rep.checks) {
    Json e;
    e["name"] = c.name;
    e["pass"] = c.pass;
    if (c.vacuous) e["vacuous"] = true;
    if (!c.witness.empty()) e["witness"] = c.witness;
    a.push_back(std::move(e));
  }
  return a;
}

inline Json json_check_list(const std::vector<CheckResult>& checks) {
  VerificationReport rep;
  rep.checks = checks;
  return json_checks(rep);
}

namespace report_detail {

inline void render_human(const Json& j, std::string& out, int indent) {
  std::string pad(static_cast<std::size_t>(indent) * 2, ' ');
  if (j.is_object()) {
    // Check entries get a compact one-line rendering.
    if (j.contains("name") && j.contains("pass") && j["pass"].is_boolean()) {
      out += pad + (j["pass"].get<bool>() ? "[ok]  " : "[FAIL]") + " " +
             j["name"].get<std::string>();
      if (j.contains("vacuous") && j["vacuous"].get<bool>()) out += " (vacuous)";
      if (j.contains("witness")) out += "  -- " + j["witness"].get<std::string>();
      out += "\n";
      return;
    }
    for (auto it = j.begin(); it != j.end(); ++it) {
      if (it->is_object() || it->is_array()) {
        out += pad + it.key() + ":\n";
        render_human(*it, out, indent + 1);
      } else {
        out += pad + it.key() + ": " + (it->is_string() ? it->get<std::string>() : it->dump()) +
               "\n";
      }
    }
  } else if (j.is_array()) {
    bool flat = true;
    for (const auto& e : j)
      if (e.is_object() || e.is_array()) flat = false;
    if (flat) {
      std::string line = pad;
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) line += " ";
        line += j[i].is_string() ? j[i].get<std::string>() : j[i].dump();
      }
      out += line + "\n";
      return;
    }
    for (const auto& e : j) render_human(e, out, indent);
  } else {
    out += pad + (j.is_string() ? j.get<std::string>() : j.dump()) + "\n";
  }
}

}  // namespace report_detail

/// format: "human" or "json-like".
inline std::string emit_report(const Json& j, const std::string& format) {
  if (format == "json-like") return j.dump(2) + "\n";
  if (format != "human") throw XpaError("InputError", "unknown format '" + format + "'");
  std::string out;
  report_detail::render_human(j, out, 0);
  return out;
}

}  // namespace xpa
