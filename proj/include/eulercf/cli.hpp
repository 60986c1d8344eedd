#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace eulercf {

// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitUsage = 2,         // bad flags / malformed values / invalid combinations
  kExitPrecondition = 3,  // a library precondition refused the computation
  kExitVerifyFailed = 4,  // a reported check came out false
};

enum class OutputFormat { text, csv, json };

// Fully parsed and validated invocation. Rationals stay as their original
// strings so reports echo exactly what was given.
struct RunConfig {
  std::string command;  // sum | convergents | contract | brouncker | verify
  std::optional<std::string> m, n, x;  // exactly one group: (m,n,x) or (a,b)
  std::optional<std::string> a, b;
  unsigned depth = 20;
  double tol = 1e-10;
  std::string tol_text = "1e-10";
  OutputFormat format = OutputFormat::text;
  std::optional<std::string> preset;    // odds | naturals (brouncker)
  std::optional<std::string> r_list;    // "1,3/2,2" (brouncker)
  unsigned max_r = 6;                   // verify grid
  unsigned term_cap = 12;               // verify grid
};

struct Check {
  std::string name;
  bool pass = false;
};

// Renderer-agnostic result of one invocation. Every cell is pre-rendered:
// rationals as "p/q", decimals at 17 significant digits, so all three
// formats carry byte-identical payloads.
struct Report {
  std::string command;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::vector<std::string> columns;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::pair<std::string, std::string>> oracle;  // empty: omitted
  std::vector<Check> checks;
};

std::string render_text(const Report& report);
std::string render_csv(const Report& report);
std::string render_json(const Report& report);

Report run_command(const RunConfig& config);
int exit_code_for(const Report& report);  // kExitOk or kExitVerifyFailed

// Parses argv (without the program name), runs the command, renders to
// `out`, diagnostics to `err`; returns the exit code. Never throws.
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace eulercf
