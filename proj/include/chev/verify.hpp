#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "json.hpp"

namespace chev {

struct VerifyOptions {
  std::vector<std::string> types;  // empty: the suite's default types
  int max_weight = 2;              // weight coordinates range over [-max_weight, max_weight]
  int samples = 50;                // sampled (w, lambda) pairs in rank >= 3
  uint64_t seed = 1;
  int jobs = 1;
};

struct CaseResult {
  std::string suite;
  std::string name;
  bool pass = false;
  std::string detail;  // first mismatch, or the exception text
  double seconds = 0;
};

// A case returns an empty string on success, otherwise a description of the first mismatch.
struct VerifyCase {
  std::string suite;
  std::string name;
  std::function<std::string()> run;
};

const std::vector<std::string>& suite_names();  // without "all"
const std::vector<std::string>& suite_default_types(const std::string& suite);
std::vector<VerifyCase> suite_cases(const std::string& suite, const VerifyOptions& opt);

// Runs the cases on opt.jobs workers; results keep the order of the cases.
std::vector<CaseResult> run_cases(const std::vector<VerifyCase>& cases, int jobs);
std::vector<CaseResult> run_verify(const std::string& suite, const VerifyOptions& opt);

bool all_passed(const std::vector<CaseResult>& results);
nlohmann::json verify_json(const std::vector<CaseResult>& results);
std::string verify_text(const std::vector<CaseResult>& results);

// Scans C^w_{u,varpi_i} over minuscule varpi_i for coefficients of e^mu whose y-coefficients
// have mixed signs; reports, never asserts.
struct PositivityReport {
  std::string type;
  int i = 0;  // lambda = varpi_i
  std::string w, u;
  std::string coeff;
};
std::vector<PositivityReport> search_positivity(const std::vector<std::string>& types);

}  // namespace chev
