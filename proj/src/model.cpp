#include "ifg/model.hpp"

#include <cctype>
#include <fstream>
#include <optional>
#include <sstream>

namespace ifg {

Structure::Structure(std::size_t universeSize) : universe_(universeSize) {
  if (universe_ == 0) throw std::invalid_argument("universe must be nonempty");
}

void Structure::addRelation(const std::string& name, std::size_t arity,
                            std::set<std::vector<Element>> tuples) {
  if (name.empty()) throw std::invalid_argument("relation needs a name");
  if (relations_.count(name) != 0) throw std::invalid_argument("relation '" + name + "' declared twice");
  for (const auto& t : tuples) {
    if (t.size() != arity) throw std::invalid_argument("tuple arity mismatch in relation '" + name + "'");
    for (Element e : t) {
      if (e >= universe_) throw std::invalid_argument("tuple entry outside the universe in '" + name + "'");
    }
  }
  relations_.emplace(name, Relation{arity, std::move(tuples)});
}

const Relation& Structure::relation(const std::string& name) const {
  auto it = relations_.find(name);
  if (it == relations_.end()) throw std::out_of_range("unknown relation symbol '" + name + "'");
  return it->second;
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::size_t parseCount(const std::string& text, std::size_t line) {
  if (text.empty() || text.find_first_not_of("0123456789") != std::string::npos || text.size() > 9) {
    throw LoadError("line " + std::to_string(line) + ": expected a nonnegative integer, got '" + text + "'");
  }
  return static_cast<std::size_t>(std::stoul(text));
}

std::set<std::vector<Element>> parseTuples(const std::string& text, std::size_t line) {
  std::set<std::vector<Element>> tuples;
  std::size_t pos = 0;
  auto fail = [line](const std::string& msg) -> LoadError {
    return LoadError("line " + std::to_string(line) + ": " + msg);
  };
  while (true) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    if (text[pos] != '(') throw fail("expected '(' to start a tuple");
    std::size_t close = text.find(')', pos);
    if (close == std::string::npos) throw fail("unterminated tuple");
    std::string body = trim(std::string_view(text).substr(pos + 1, close - pos - 1));
    std::vector<Element> tuple;
    if (!body.empty()) {
      std::stringstream ss(body);
      std::string item;
      while (std::getline(ss, item, ',')) {
        tuple.push_back(static_cast<Element>(parseCount(trim(item), line)));
      }
    }
    tuples.insert(std::move(tuple));
    pos = close + 1;
  }
  return tuples;
}

}  // namespace

Structure parseStructure(std::string_view text) {
  std::optional<Structure> structure;
  std::istringstream in{std::string(text)};
  std::string raw;
  std::size_t lineNo = 0;
  while (std::getline(in, raw)) {
    ++lineNo;
    std::string line = trim(raw.substr(0, raw.find('#')));
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos) throw LoadError("line " + std::to_string(lineNo) + ": expected '='");
    std::istringstream head(line.substr(0, eq));
    std::string keyword;
    head >> keyword;
    std::string rhs = trim(std::string_view(line).substr(eq + 1));
    if (keyword == "universe") {
      std::string extra;
      if (head >> extra) throw LoadError("line " + std::to_string(lineNo) + ": unexpected '" + extra + "'");
      if (structure) throw LoadError("line " + std::to_string(lineNo) + ": universe declared twice");
      std::size_t size = parseCount(rhs, lineNo);
      if (size == 0) throw LoadError("line " + std::to_string(lineNo) + ": universe must be nonempty");
      structure.emplace(size);
    } else if (keyword == "rel") {
      if (!structure) throw LoadError("line " + std::to_string(lineNo) + ": 'universe' must come first");
      std::string name, arityText, extra;
      if (!(head >> name >> arityText) || (head >> extra)) {
        throw LoadError("line " + std::to_string(lineNo) + ": expected 'rel <name> <arity> = ...'");
      }
      try {
        structure->addRelation(name, parseCount(arityText, lineNo), parseTuples(rhs, lineNo));
      } catch (const std::invalid_argument& e) {
        throw LoadError("line " + std::to_string(lineNo) + ": " + e.what());
      }
    } else {
      throw LoadError("line " + std::to_string(lineNo) + ": unknown keyword '" + keyword + "'");
    }
  }
  if (!structure) throw LoadError("structure has no 'universe' line");
  return *structure;
}

Structure loadStructure(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw LoadError("cannot open structure file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parseStructure(buffer.str());
}

bool atomicEval(const Structure& structure, const Node& atom, const Valuation& a) {
  if (atom.kind != NodeKind::Atom) throw std::invalid_argument("atomicEval needs an atomic formula");
  auto value = [&a](VariableIndex i) {
    if (i >= a.size()) throw std::invalid_argument("atom variable outside the valuation");
    return a[i];
  };
  if (atom.isEquality()) {
    if (atom.arguments.size() != 2) throw std::invalid_argument("equality needs two arguments");
    return value(atom.arguments[0]) == value(atom.arguments[1]);
  }
  const Relation* rel = nullptr;
  try {
    rel = &structure.relation(atom.predicate);
  } catch (const std::out_of_range& e) {
    throw std::invalid_argument(e.what());
  }
  if (rel->arity != atom.arguments.size()) {
    throw std::invalid_argument("relation '" + atom.predicate + "' has arity " + std::to_string(rel->arity));
  }
  std::vector<Element> tuple;
  tuple.reserve(atom.arguments.size());
  for (VariableIndex i : atom.arguments) tuple.push_back(value(i));
  return rel->tuples.count(tuple) != 0;
}

namespace {

bool tarski(const Structure& s, const Node& node, Valuation& a) {
  switch (node.kind) {
    case NodeKind::Atom:
      return atomicEval(s, node, a);
    case NodeKind::Not:
      return !tarski(s, *node.left, a);
    case NodeKind::Or:
      return tarski(s, *node.left, a) || tarski(s, *node.right, a);
    case NodeKind::And:
      return tarski(s, *node.left, a) && tarski(s, *node.right, a);
    case NodeKind::Exists:
    case NodeKind::Forall: {
      const bool existential = node.kind == NodeKind::Exists;
      const Element saved = a[node.bound];
      bool result = !existential;
      for (Element b = 0; b < s.universeSize(); ++b) {
        a[node.bound] = b;
        if (tarski(s, *node.left, a) == existential) {
          result = existential;
          break;
        }
      }
      a[node.bound] = saved;
      return result;
    }
  }
  return false;
}

}  // namespace

bool tarskiEval(const Structure& structure, const Formula& formula, const Valuation& a) {
  if (!isPerfect(formula)) throw std::invalid_argument("tarskiEval needs a perfect formula");
  if (a.size() != formula.variableCount()) throw std::invalid_argument("valuation length differs from N");
  for (Element e : a) {
    if (e >= structure.universeSize()) throw std::invalid_argument("valuation entry outside the universe");
  }
  Valuation scratch = a;
  return tarski(structure, formula.root(), scratch);
}

Team allValuations(const Structure& structure, std::size_t variables, const Limits& limits) {
  if (variables == 0) throw std::invalid_argument("N must be positive");
  requireBudget(saturatingPower(structure.universeSize(), variables), limits.enumeration, "valuations");
  return ValuationSpace(structure.universeSize(), variables).full();
}

}  // namespace ifg
