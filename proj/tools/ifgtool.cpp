// Command-line front end for the IFG trump-semantics library.
//
//   ifgtool eval    --structure s.txt --formula "A v0/{} . E v1/{v0} . v0 = v1" [--team full]
//   ifgtool meaning --structure s.txt --formula "v0 = v1"
//   ifgtool perfect --formula "E v1/{v0} . v0 = v1" [--structure s.txt]
//   ifgtool iso     --structure s.txt --n 2
//   ifgtool closure --structure s.txt --n 2 [--signature empty|full] [--formula ...]

#include <iostream>

#include "CLI11.hpp"
#include "ifg/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Trump semantics and IFG-cylindric set algebras over finite structures"};
  app.require_subcommand(1);

  ifg::cli::Command cmd;
  std::string format = "text";
  std::size_t variables = 0;

  auto addCommon = [&](CLI::App* sub, bool formulaRequired) {
    sub->add_option("--structure", cmd.structurePath, "structure file");
    auto* f = sub->add_option("--formula", cmd.formula, "IFG formula");
    if (formulaRequired) f->required();
    sub->add_option("--n", variables, "number of variables N");
    sub->add_option("--format", format, "text or machine")->check(CLI::IsMember({"text", "machine"}));
    sub->add_option("--budget", cmd.limits.enumeration, "items per enumeration");
    sub->add_option("--meaning-valuations", cmd.limits.meaningValuations, "|A|^N ceiling for meanings");
    sub->add_option("--eval-valuations", cmd.limits.evalValuations, "|A|^N ceiling for per-team evaluation");
    sub->add_option("--closure-elements", cmd.limits.closureElements, "subalgebra size cap");
  };

  auto* eval = app.add_subcommand("eval", "decide |=+ and |=- on a team");
  addCommon(eval, true);
  eval->add_option("--team", cmd.team, "team literal such as {(0,0),(1,1)}, or 'full'");
  eval->get_option("--structure")->required();

  auto* meaning = app.add_subcommand("meaning", "maximal trumps and cotrumps of a formula");
  addCommon(meaning, true);
  meaning->get_option("--structure")->required();

  auto* perfect = app.add_subcommand("perfect", "perfection of a formula");
  addCommon(perfect, true);

  auto* iso = app.add_subcommand("iso", "check Cs_N against the empty-slash reduct");
  addCommon(iso, false);
  iso->get_option("--structure")->required();
  iso->get_option("--n")->required();

  auto* closure = app.add_subcommand("closure", "generate the subalgebra from atomic meanings");
  addCommon(closure, false);
  closure->add_option("--signature", cmd.signature, "empty or full")->check(CLI::IsMember({"empty", "full"}));
  closure->get_option("--structure")->required();
  closure->get_option("--n")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : ifg::cli::kUsageError;
  }

  cmd.verb = app.get_subcommands().front()->get_name();
  if (variables != 0) cmd.variables = variables;
  cmd.format = format == "machine" ? ifg::cli::OutputFormat::Machine : ifg::cli::OutputFormat::Text;
  return ifg::cli::run(cmd, std::cout, std::cerr);
}
