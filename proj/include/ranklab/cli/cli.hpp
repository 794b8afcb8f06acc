#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "json.hpp"

namespace ranklab::cli {

using Json = nlohmann::ordered_json;

enum ExitCode : int { kPass = 0, kCheckFailed = 1, kUsage = 2, kIo = 3 };

/// Parsed command line. Unset numeric fields are filled per subcommand by
/// resolve(); `given` lists the options the user supplied.
struct RunConfig {
  std::string command;
  std::string subcommand;
  int max_n = -1;
  int max_m = -1;
  int zq_order = -1;
  std::vector<int> t;
  int r = 0;
  int cap = -1;
  std::vector<int> n_list;
  double u = 0.25;
  std::vector<double> eps;
  int samples = 50;
  std::uint64_t seed = 7;
  double tol = -1;
  unsigned digits = 0;
  std::string route = "direct";
  int min_part = 1;
  int min_sum = 9;
  std::string format;
  std::string out;

  Json to_json() const;
};

/// Fills subcommand defaults (RANKLAB_PRECISION supplies digits when unset)
/// and checks every parameter; UsageError or DomainError on bad input.
void resolve(RunConfig& config);

/// Runs a resolved config and returns the exit code. The artifact goes to
/// config.out or `out`.
int dispatch(const RunConfig& config, std::ostream& out);

/// Full front end: parse, resolve, dispatch, map errors to exit codes.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace ranklab::cli
