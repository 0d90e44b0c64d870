#pragma once

#include <json.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace ewin {

struct SuiteConfig {
  std::string fixture_dir;
  int cover_depth = 44;
  int workers = 1;
  long max_boxes = 50000000;
  long property_cases = 1000;  // per property family
  std::uint64_t seed = 20240101;
};

struct CriterionResult {
  int criterion = 0;
  std::string name;
  bool pass = false;
  std::string error;  // err_name when the check threw
  nlohmann::json values = nlohmann::json::object();
  std::vector<std::string> failures;
  double seconds = 0, limit = 0;  // limit 0: none
};

struct SuiteReport {
  std::string suite;
  std::vector<CriterionResult> results;

  bool pass() const;
  bool any_error(const std::string& err) const;
  // 0 all pass, 3 a budget ran out, 1 otherwise
  int exit_code() const;
  // deterministic part; timings are kept out of it
  nlohmann::json body() const;
  // {"body", "checksum", "timings"}
  std::string to_json() const;
};

const std::vector<std::string>& suite_names();
// throws Err::usage for an unknown name
SuiteReport run_suite(const std::string& name, const SuiteConfig& cfg);
// acceptance criteria by number, 1..13
SuiteReport run_criteria(const std::vector<int>& ids, const SuiteConfig& cfg);

// golden tables: which = "Q", "R" or "TR"; rows r in [lo, hi] (discriminants for TR)
enum class TableFormat { csv, json };
std::string emit_table(const std::string& which, long lo, long hi, TableFormat fmt, const std::string& fixture_dir = "");

}  // namespace ewin
