#include <sstream>

#include "doctest.h"
#include "ifg/cli.hpp"
#include "ifg/closure.hpp"
#include "ifg/semantics.hpp"

using namespace ifg;

namespace {

std::string structurePath(const std::string& name) { return std::string(IFG_DATA_DIR) + "/structures/" + name + ".txt"; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome runCommand(const cli::Command& cmd) {
  std::ostringstream out, err;
  int code = cli::run(cmd, out, err);
  return {code, out.str(), err.str()};
}

cli::Command command(std::string verb, std::string structure, std::optional<std::string> formula) {
  cli::Command cmd;
  cmd.verb = std::move(verb);
  if (!structure.empty()) cmd.structurePath = structurePath(structure);
  cmd.formula = std::move(formula);
  return cmd;
}

const char* kSignalling = "A v0/{} . E v1/{v0} . v0 = v1";

}  // namespace

TEST_CASE("parseTeam") {
  ValuationSpace space(2, 2);
  CHECK(cli::parseTeam("full", space) == space.full());
  CHECK(cli::parseTeam("{}", space) == Team{});
  CHECK(cli::parseTeam("{(0,0), (1,1)}", space) == Team(0b1001));
  CHECK_THROWS_AS(cli::parseTeam("{(0,0),}", space), std::invalid_argument);
  CHECK_THROWS_AS(cli::parseTeam("(0,0)", space), std::invalid_argument);
  CHECK_THROWS_AS(cli::parseTeam("{(0,a)}", space), std::invalid_argument);
  CHECK_THROWS(cli::parseTeam("{(0,2)}", space));
  CHECK_THROWS(cli::parseTeam("{(0)}", space));
}

TEST_CASE("eval output matches the library") {
  Outcome o = runCommand(command("eval", "equality2", kSignalling));
  CHECK(o.code == cli::kSuccess);
  CHECK(o.out.find("plus: false, minus: false") != std::string::npos);

  Outcome taut = runCommand(command("eval", "equality2", "v0 = v0"));
  CHECK(taut.out.find("plus: true, minus: false") != std::string::npos);

  cli::Command empty = command("eval", "equality2", "v0 = v1");
  empty.team = "{}";
  CHECK(runCommand(empty).out.find("plus: true, minus: true") != std::string::npos);

  Structure s = loadStructure(structurePath("graph3"));
  for (const char* text : {"E v1/{} . E(v0,v1)", "A v1/{v0} . (E(v0,v1) |/{v0} P(v1))", "~P(v0)"}) {
    for (const char* team : {"full", "{(0,1),(2,2)}", "{(1,0)}"}) {
      cli::Command cmd = command("eval", "graph3", text);
      cmd.team = team;
      cmd.variables = 2;
      cmd.format = cli::OutputFormat::Machine;
      Outcome out = runCommand(cmd);
      Formula f = parse(text, 2);
      Team t = cli::parseTeam(team, ValuationSpace(3, 2));
      CHECK(out.code == cli::kSuccess);
      CHECK(out.out.find(std::string("PLUS=") + (modelsPlus(s, f, t) ? "true" : "false")) != std::string::npos);
      CHECK(out.out.find(std::string("MINUS=") + (modelsMinus(s, f, t) ? "true" : "false")) != std::string::npos);
    }
  }
}

TEST_CASE("meaning output") {
  cli::Command cmd = command("meaning", "equality2", "v0 = v1");
  cmd.format = cli::OutputFormat::Machine;
  Outcome o = runCommand(cmd);
  CHECK(o.code == cli::kSuccess);
  CHECK(o.out.find("PLUS_MAX={(0,0),(1,1)}\n") != std::string::npos);
  CHECK(o.out.find("MINUS_MAX={(0,1),(1,0)}\n") != std::string::npos);
  CHECK(o.out.find("PERFECT=yes") != std::string::npos);

  Outcome sig = runCommand(command("meaning", "equality2", kSignalling));
  CHECK(sig.out.find("perfect: no") != std::string::npos);
  CHECK(sig.out.find("double-suit: yes") != std::string::npos);

  Outcome z = runCommand(command("meaning", "equality2", "~(v0 = v0)"));
  CHECK(z.out.find("zero: yes") != std::string::npos);
}

TEST_CASE("perfect, iso and closure verbs") {
  Outcome p = runCommand(command("perfect", "equality2", "E v1/{v0} . v0 = v1"));
  CHECK(p.code == cli::kSuccess);
  CHECK(p.out.find("perfection: E v1/{} . v0 = v1") != std::string::npos);
  CHECK(p.out.find("perfect: no") != std::string::npos);

  cli::Command iso = command("iso", "equality2", std::nullopt);
  iso.variables = 1;
  Outcome i = runCommand(iso);
  CHECK(i.code == cli::kSuccess);
  CHECK(i.out.find("PASS (2 elements)") != std::string::npos);

  cli::Command closure = command("closure", "unary2", std::nullopt);
  closure.variables = 2;
  Outcome c = runCommand(closure);
  CHECK(c.code == cli::kSuccess);
  Structure s = loadStructure(structurePath("unary2"));
  CHECK(c.out.find("size: " + std::to_string(verifyIsomorphism(s, 2).reductSize) + "\n") != std::string::npos);
}

TEST_CASE("exit codes") {
  CHECK(runCommand(command("eval", "equality2", "(v0 = v1")).code == cli::kUsageError);
  CHECK(runCommand(command("eval", "", "v0 = v1")).code == cli::kUsageError);
  CHECK(runCommand(command("eval", "missing", "v0 = v1")).code == cli::kUsageError);
  CHECK(runCommand(command("frobnicate", "equality2", "v0 = v1")).code == cli::kUsageError);
  CHECK(runCommand(command("iso", "equality2", std::nullopt)).code == cli::kUsageError);
  CHECK(runCommand(command("eval", "unary2", "Q(v0)")).code == cli::kUsageError);
  Outcome budget = runCommand(command("meaning", "equality3", "v0 = v2"));
  CHECK(budget.code == cli::kBudgetExceeded);
  CHECK(budget.err.find("budget") != std::string::npos);
  cli::Command raised = command("meaning", "equality3", "E v0/{} . v0 = v2");
  raised.limits.meaningValuations = 27;
  CHECK(runCommand(raised).code == cli::kBudgetExceeded);  // dense families stop at 20 valuations
}
