#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace rackoh::cli {

/// Stable process exit codes.
enum ExitCode : int {
  kSuccess = 0,
  kCheckFailed = 1,
  kInputError = 2,
  kResourceError = 3,
};

struct RunConfig {
  std::string command;  // verify | cohomology | h2 | group | corpus | rack | normalize
  std::string rack;     // builtin spec or file:path.json
  std::string module_file;
  std::string ring = "Q";
  std::uint64_t p = 0;
  std::size_t max_degree = 3;
  std::string twisted;   // "t=<rational>,k=<size>"
  std::string operator_matrix;  // JSON matrix, every element acts by it
  std::string coeff;     // Z, Q, Z<q>, 0
  std::string nonabelian;  // builtin group name
  bool invariant = false;
  bool json = false;
  std::size_t budget_mb = 0;  // 0: $RACKOH_BUDGET_MB or the default
  double search_budget = 1e8;
  std::size_t jobs = 0;  // 0: hardware concurrency
  std::string input;     // normalize: JSON file to re-emit
};

/// Parses `args` (without the program name) and runs the command.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// Runs an already parsed configuration; errors are mapped to exit codes.
int execute(const RunConfig& config, std::ostream& out, std::ostream& err);

}  // namespace rackoh::cli
