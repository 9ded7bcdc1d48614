#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "json.hpp"

namespace chev {

// One batch request.  Weights are in fundamental-weight coordinates.
struct JobSpec {
  std::string command = "chevalley";
  std::string type = "A2";
  std::vector<int> lambda;
  std::string w = "all";  // Weyl word or "all"
  std::string method = "chain";
  int sign = 1;
  std::string format = "text";
  std::string cache_dir;  // empty: CHEV_CACHE_DIR, if set

  nlohmann::json to_json() const;
  static JobSpec from_json(const nlohmann::json& j);  // throws std::invalid_argument
  void validate() const;                              // throws std::invalid_argument
  friend bool operator==(const JobSpec&, const JobSpec&) = default;
};

const std::vector<std::string>& job_commands();
const std::vector<std::string>& command_methods(const std::string& command);

enum ExitCode { exit_ok = 0, exit_failed = 1, exit_usage = 2 };

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);  // args without argv[0]

}  // namespace chev
