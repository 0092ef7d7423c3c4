// Run reports: the machine-readable result format shared by the CLI commands.
//
// Serialization is deterministic: checks appear in a fixed order with stable
// key ordering; elapsed_ms is the only field that varies between runs.
#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "twalg/decomposition.hpp"

namespace twalg {

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct RunReport {
  std::string command;
  int d = 0;
  std::vector<CheckLine> checks;
  long long elapsed_ms = 0;

  bool all_pass() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

inline std::string report_to_json(const RunReport& r) {
  nlohmann::ordered_json j;
  j["command"] = r.command;
  j["d"] = r.d;
  j["checks"] = nlohmann::ordered_json::array();
  for (const auto& c : r.checks) {
    nlohmann::ordered_json cj;
    cj["name"] = c.name;
    cj["pass"] = c.pass;
    cj["detail"] = c.detail;
    j["checks"].push_back(cj);
  }
  j["elapsed_ms"] = r.elapsed_ms;
  return j.dump(2) + "\n";
}

inline std::string csv_escape(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

inline std::string report_to_csv(const RunReport& r) {
  std::string out = "name,pass,detail\n";
  for (const auto& c : r.checks)
    out += csv_escape(c.name) + "," + (c.pass ? "true" : "false") + "," + csv_escape(c.detail) + "\n";
  return out;
}

inline std::string report_to_table(const RunReport& r) {
  std::string out = r.command + " (d=" + std::to_string(r.d) + ")\n";
  for (const auto& c : r.checks) {
    out += std::string(c.pass ? "  [pass] " : "  [FAIL] ") + c.name;
    if (!c.detail.empty()) out += "  -- " + c.detail;
    out += "\n";
  }
  out += r.all_pass() ? "all checks passed" : "CHECK FAILURES PRESENT";
  out += " (" + std::to_string(r.checks.size()) + " checks, " + std::to_string(r.elapsed_ms) +
         " ms)\n";
  return out;
}

// ---------------------------------------------------------------------------
// Decomposition reports have their own schema.

inline std::string decomposition_to_json(const DecompositionReport& rep) {
  nlohmann::ordered_json j;
  j["d"] = rep.d;
  j["blocks"] = nlohmann::ordered_json::array();
  for (const auto& b : rep.blocks) {
    nlohmann::ordered_json bj;
    bj["type"] = {b.hwv_type.r, b.hwv_type.s, b.hwv_type.t};
    bj["weight"] = {b.weight.m1, b.weight.m2};
    bj["dim"] = b.dim;
    bj["mult"] = b.mult;
    j["blocks"].push_back(bj);
  }
  j["total"] = rep.total;
  return j.dump(2) + "\n";
}

inline std::string decomposition_to_csv(const DecompositionReport& rep) {
  std::string out = "r,s,t,m1,m2,dim,mult\n";
  for (const auto& b : rep.blocks)
    out += std::to_string(b.hwv_type.r) + "," + std::to_string(b.hwv_type.s) + "," +
           std::to_string(b.hwv_type.t) + "," + std::to_string(b.weight.m1) + "," +
           std::to_string(b.weight.m2) + "," + std::to_string(b.dim) + "," +
           std::to_string(b.mult) + "\n";
  return out;
}

// Mirrors the classical "[r, s, t], (m1, m2) : dim, m" layout.
inline std::string decomposition_to_table(const DecompositionReport& rep) {
  std::string out = "d = " + std::to_string(rep.d) + "\n";
  for (const auto& b : rep.blocks)
    out += "  [" + std::to_string(b.hwv_type.r) + ", " + std::to_string(b.hwv_type.s) + ", " +
           std::to_string(b.hwv_type.t) + "], (" + std::to_string(b.weight.m1) + ", " +
           std::to_string(b.weight.m2) + ") : " + std::to_string(b.dim) + ", " +
           std::to_string(b.mult) + "\n";
  out += "  total " + std::to_string(rep.total) + "\n";
  return out;
}

}  // namespace twalg
