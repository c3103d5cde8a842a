#pragma once

#include <charconv>
#include <fstream>
#include <string>

#include "json.hpp"
#include "mzsv/fmzv_modp.hpp"
#include "mzsv/mzv_real.hpp"

namespace mzsv {

inline constexpr const char* kVersion = "0.1.0";

/// Shortest round-trip decimal form of a double.
inline std::string double_str(double v) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, ptr);
}

using json = nlohmann::ordered_json;

inline json result_entry(const RelationInstance& inst, const RealCheckResult& r) {
  json params(json::value_t::object);
  for (const auto& [k, v] : inst.params) params[k] = v;
  return json{
      {"id", r.id},
      {"family", family_name(inst.family)},
      {"params", params},
      {"space", value_space_name(inst.space)},
      {"lhs", double_str(r.lhs.value)},
      {"rhs", double_str(r.rhs.value)},
      {"difference_or_witness", double_str(r.diff)},
      {"status", r.pass ? "pass" : "fail"},
  };
}

inline json result_entry(const RelationInstance& inst, const ModpCheckResult& r) {
  json params(json::value_t::object);
  for (const auto& [k, v] : inst.params) params[k] = v;
  std::string witness = r.pass
      ? "all " + std::to_string(r.primes_checked) + " retained primes agree"
      : "p=" + std::to_string(r.witness_p) + ": " + std::to_string(r.lhs) +
            " != " + std::to_string(r.rhs);
  return json{
      {"id", r.id},
      {"family", family_name(inst.family)},
      {"params", params},
      {"space", value_space_name(inst.space)},
      {"lhs", std::to_string(r.lhs)},
      {"rhs", std::to_string(r.rhs)},
      {"difference_or_witness", witness},
      {"status", r.pass ? "pass" : "fail"},
  };
}

/// Full report: version, config echo, per-instance results sorted by id,
/// and summary counts. Deliberately carries no timestamp or host data so
/// identical runs serialize byte-identically.
inline json make_report(const json& config, std::vector<json> results) {
  std::sort(results.begin(), results.end(),
            [](const json& a, const json& b) { return a.at("id") < b.at("id"); });
  int passed = 0, failed = 0;
  for (const auto& r : results) {
    (r.at("status") == "pass" ? passed : failed)++;
  }
  return json{
      {"version", kVersion},
      {"config", config},
      {"results", results},
      {"summary", {{"total", passed + failed}, {"passed", passed}, {"failed", failed}}},
  };
}

inline void write_report(const json& report, const std::string& path) {
  std::ofstream os(path);
  if (!os) throw std::runtime_error("cannot open report file " + path);
  os << report.dump(2) << "\n";
}

}  // namespace mzsv
