#ifndef IFG_CLI_HPP
#define IFG_CLI_HPP

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>

#include "ifg/limits.hpp"
#include "ifg/team.hpp"

namespace ifg::cli {

enum ExitCode : int {
  kSuccess = 0,
  kUsageError = 1,
  kBudgetExceeded = 2,
  kInvariantViolation = 3,
};

enum class OutputFormat { Text, Machine };

struct Command {
  std::string verb;  // eval | meaning | perfect | iso | closure
  std::string structurePath;
  std::optional<std::string> formula;
  std::string team = "full";
  std::optional<std::size_t> variables;
  OutputFormat format = OutputFormat::Text;
  std::string signature = "empty";  // closure: empty | full
  Limits limits;
};

// "full", "{}" or "{(0,0),(1,1)}". Throws std::invalid_argument on malformed
// literals or valuations outside the space.
Team parseTeam(std::string_view literal, const ValuationSpace& space);

// Dispatches on cmd.verb and returns an ExitCode. Diagnostics go to `err`.
int run(const Command& cmd, std::ostream& out, std::ostream& err);

int runEval(const Command& cmd, std::ostream& out);
int runMeaning(const Command& cmd, std::ostream& out);
int runPerfect(const Command& cmd, std::ostream& out);
int runIso(const Command& cmd, std::ostream& out);
int runClosure(const Command& cmd, std::ostream& out);

}  // namespace ifg::cli

#endif  // IFG_CLI_HPP
