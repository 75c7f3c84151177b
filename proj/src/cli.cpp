#include "ifg/cli.hpp"

#include <cctype>
#include <ostream>
#include <stdexcept>

#include "ifg/algebra.hpp"
#include "ifg/closure.hpp"
#include "ifg/formula.hpp"
#include "ifg/model.hpp"
#include "ifg/semantics.hpp"

namespace ifg::cli {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const char* yesNo(bool b) { return b ? "yes" : "no"; }
const char* trueFalse(bool b) { return b ? "true" : "false"; }

Structure requireStructure(const Command& cmd) {
  if (cmd.structurePath.empty()) throw UsageError(cmd.verb + " needs --structure");
  return loadStructure(cmd.structurePath);
}

Formula requireFormula(const Command& cmd) {
  if (!cmd.formula) throw UsageError(cmd.verb + " needs --formula");
  return parse(*cmd.formula, cmd.variables);
}

void fact(std::ostream& out, OutputFormat format, const std::string& key, const std::string& value) {
  if (format == OutputFormat::Machine) {
    std::string upper;
    for (char c : key) upper += c == '-' || c == ' ' ? '_' : static_cast<char>(std::toupper(static_cast<unsigned char>(c)));
    out << upper << "=" << value << "\n";
  } else {
    out << key << ": " << value << "\n";
  }
}

}  // namespace

Team parseTeam(std::string_view literal, const ValuationSpace& space) {
  std::string text;
  for (char c : literal) {
    if (!std::isspace(static_cast<unsigned char>(c))) text += c;
  }
  if (text == "full") return space.full();
  if (text.size() < 2 || text.front() != '{' || text.back() != '}') {
    throw std::invalid_argument("team literal must be 'full' or '{(..),(..)}'");
  }
  Team team;
  std::size_t pos = 1;
  const std::size_t end = text.size() - 1;
  while (pos < end) {
    if (text[pos] != '(') throw std::invalid_argument("expected '(' in team literal");
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos || close > end) throw std::invalid_argument("unterminated valuation in team literal");
    Valuation a;
    std::size_t p = pos + 1;
    while (p < close) {
      std::size_t q = p;
      while (q < close && std::isdigit(static_cast<unsigned char>(text[q]))) ++q;
      if (q == p || q - p > 9) throw std::invalid_argument("expected an element in team literal");
      a.push_back(static_cast<Element>(std::stoul(text.substr(p, q - p))));
      p = q;
      if (p < close) {
        if (text[p] != ',') throw std::invalid_argument("expected ',' in team literal");
        ++p;
      }
    }
    team = team | Team::singleton(space.indexOf(a));
    pos = close + 1;
    if (pos < end) {
      if (text[pos] != ',') throw std::invalid_argument("expected ',' between valuations");
      ++pos;
      if (pos == end) throw std::invalid_argument("trailing ',' in team literal");
    }
  }
  return team;
}

int runEval(const Command& cmd, std::ostream& out) {
  Structure structure = requireStructure(cmd);
  Formula formula = requireFormula(cmd);
  EvalOptions options;
  options.limits = cmd.limits;
  Evaluator evaluator(structure, formula, options);
  Team team = parseTeam(cmd.team, evaluator.space());
  const bool plus = evaluator.plus(team);
  const bool minus = evaluator.minus(team);
  if (cmd.format == OutputFormat::Machine) {
    fact(out, cmd.format, "formula", formula.toString());
    fact(out, cmd.format, "n", std::to_string(formula.variableCount()));
    fact(out, cmd.format, "team", evaluator.space().format(team));
    fact(out, cmd.format, "plus", trueFalse(plus));
    fact(out, cmd.format, "minus", trueFalse(minus));
  } else {
    out << "formula: " << formula.toString() << "\n";
    out << "team: " << evaluator.space().format(team) << "\n";
    out << "plus: " << trueFalse(plus) << ", minus: " << trueFalse(minus) << "\n";
  }
  return kSuccess;
}

int runMeaning(const Command& cmd, std::ostream& out) {
  Structure structure = requireStructure(cmd);
  Formula formula = requireFormula(cmd);
  Meaning m = meaning(structure, formula, cmd.limits);
  ValuationSpace space = m.space();
  const bool machine = cmd.format == OutputFormat::Machine;
  fact(out, cmd.format, "formula", formula.toString());
  if (machine) {
    for (Team t : m.plus.maximal()) fact(out, cmd.format, "plus-max", space.format(t));
    for (Team t : m.minus.maximal()) fact(out, cmd.format, "minus-max", space.format(t));
  } else {
    out << "maximal trumps (" << m.plus.maximal().size() << "):\n";
    for (Team t : m.plus.maximal()) out << "  " << space.format(t) << "\n";
    out << "maximal cotrumps (" << m.minus.maximal().size() << "):\n";
    for (Team t : m.minus.maximal()) out << "  " << space.format(t) << "\n";
  }
  const bool doubleSuit = isDoubleSuit(m);
  fact(out, cmd.format, "suit", yesNo(isSuit(m.plus) && isSuit(m.minus)));
  fact(out, cmd.format, "double-suit", yesNo(doubleSuit));
  fact(out, cmd.format, "flat", yesNo(isFlat(m)));
  fact(out, cmd.format, "perfect", yesNo(isPerfect(m)));
  fact(out, cmd.format, "zero", yesNo(m == zero(m.universeSize, m.dimensions)));
  fact(out, cmd.format, "one", yesNo(m == one(m.universeSize, m.dimensions)));
  return doubleSuit ? kSuccess : kInvariantViolation;
}

int runPerfect(const Command& cmd, std::ostream& out) {
  Formula formula = requireFormula(cmd);
  Formula perfected = perfection(formula);
  fact(out, cmd.format, "formula", formula.toString());
  fact(out, cmd.format, "perfect", yesNo(isPerfect(formula)));
  fact(out, cmd.format, "perfection", perfected.toString());
  if (!cmd.structurePath.empty()) {
    Structure structure = loadStructure(cmd.structurePath);
    Meaning original = meaning(structure, formula, cmd.limits);
    Meaning perfectedMeaning = meaning(structure, perfected, cmd.limits);
    fact(out, cmd.format, "meaning-perfect", yesNo(isPerfect(original)));
    fact(out, cmd.format, "same-meaning", yesNo(original == perfectedMeaning));
  }
  return kSuccess;
}

int runIso(const Command& cmd, std::ostream& out) {
  Structure structure = requireStructure(cmd);
  if (!cmd.variables) throw UsageError("iso needs --n");
  IsomorphismReport report = verifyIsomorphism(structure, *cmd.variables, cmd.limits);
  out << (cmd.format == OutputFormat::Machine ? report.machine() : report.text());
  return report.passed() ? kSuccess : kInvariantViolation;
}

int runClosure(const Command& cmd, std::ostream& out) {
  Structure structure = requireStructure(cmd);
  if (!cmd.variables) throw UsageError("closure needs --n");
  const std::size_t n = *cmd.variables;
  Signature signature;
  if (cmd.signature == "empty") {
    signature = Signature::EmptyReduct;
  } else if (cmd.signature == "full") {
    signature = Signature::Full;
  } else {
    throw UsageError("--signature must be 'empty' or 'full'");
  }
  std::vector<AlgebraElement> generators;
  for (const Formula& atom : atomicFormulas(structure, n)) generators.push_back(meaning(structure, atom, cmd.limits));
  if (cmd.formula) generators.push_back(meaning(structure, parse(*cmd.formula, n), cmd.limits));

  Subalgebra closure = generateSubalgebra(generators, structure.universeSize(), n, signature, cmd.limits);
  std::size_t doubleSuits = 0, perfect = 0;
  for (const AlgebraElement& x : closure.elements) {
    doubleSuits += isDoubleSuit(x) ? 1 : 0;
    perfect += isPerfect(x) ? 1 : 0;
  }
  fact(out, cmd.format, "size", std::to_string(closure.elements.size()));
  fact(out, cmd.format, "double-suits", std::to_string(doubleSuits));
  fact(out, cmd.format, "perfect", std::to_string(perfect));
  return doubleSuits == closure.elements.size() ? kSuccess : kInvariantViolation;
}

int run(const Command& cmd, std::ostream& out, std::ostream& err) {
  try {
    if (cmd.verb == "eval") return runEval(cmd, out);
    if (cmd.verb == "meaning") return runMeaning(cmd, out);
    if (cmd.verb == "perfect") return runPerfect(cmd, out);
    if (cmd.verb == "iso") return runIso(cmd, out);
    if (cmd.verb == "closure") return runClosure(cmd, out);
    err << "error: unknown verb '" << cmd.verb << "'\n";
    return kUsageError;
  } catch (const BudgetExceeded& e) {
    err << "budget exceeded: " << e.what() << "\n";
    return kBudgetExceeded;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const LoadError& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kInvariantViolation;
  }
}

}  // namespace ifg::cli
