#pragma once

#include <iosfwd>
#include <optional>
#include <string>

namespace packcert::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInfeasible = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string subcommand;  // bounds | etf | leven | scan | verify | construct
  std::optional<long> d, n;
  std::optional<int> s, t;
  std::optional<long> d_min, d_max;
  std::string mode;  // scan: etf | leven
  bool al_filter = false;
  std::optional<double> tolerance;
  std::optional<int> kmax;
  std::string format = "json";  // json | csv | text
  std::string input, output;
  std::string claim;  // verify: etf | leven | design:T
  std::string name;   // construct
  bool half = false;
};

/// Parses argv into a config. On --help or a usage error the message is
/// written to out/err and the exit code is returned instead.
struct ParseOutcome {
  std::optional<RunConfig> config;
  int exit_code = kExitOk;
};
ParseOutcome parse(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Executes one subcommand; reports go to out, diagnostics to err.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int main(int argc, const char* const* argv);

}  // namespace packcert::cli
