#include "ifg/formula.hpp"

#include <algorithm>
#include <bit>
#include <sstream>

namespace ifg {

SlashSet::SlashSet(std::initializer_list<VariableIndex> indices) {
  for (VariableIndex i : indices) insert(i);
}

void SlashSet::insert(VariableIndex i) {
  if (i >= kMaxVariables) {
    throw std::invalid_argument("slash set index v" + std::to_string(i) + " out of range");
  }
  mask_ |= std::uint64_t{1} << i;
}

std::optional<VariableIndex> SlashSet::maxIndex() const {
  if (mask_ == 0) return std::nullopt;
  return static_cast<VariableIndex>(63 - std::countl_zero(mask_));
}

std::vector<VariableIndex> SlashSet::indices() const {
  std::vector<VariableIndex> out;
  for (std::uint64_t m = mask_; m != 0; m &= m - 1) {
    out.push_back(static_cast<VariableIndex>(std::countr_zero(m)));
  }
  return out;
}

std::string SlashSet::toString() const {
  std::string out = "{";
  bool first = true;
  for (VariableIndex i : indices()) {
    if (!first) out += ",";
    out += "v" + std::to_string(i);
    first = false;
  }
  return out + "}";
}

namespace {

std::shared_ptr<Node> makeNode(NodeKind kind) {
  auto node = std::make_shared<Node>();
  node->kind = kind;
  return node;
}

void requireChild(const NodePtr& child) {
  if (!child) throw std::invalid_argument("formula node has a null child");
}

}  // namespace

NodePtr equals(VariableIndex i, VariableIndex j) {
  auto node = makeNode(NodeKind::Atom);
  node->arguments = {i, j};
  return node;
}

NodePtr relation(std::string name, std::vector<VariableIndex> args) {
  if (name.empty()) throw std::invalid_argument("relation atom needs a name");
  auto node = makeNode(NodeKind::Atom);
  node->predicate = std::move(name);
  node->arguments = std::move(args);
  return node;
}

NodePtr negation(NodePtr child) {
  requireChild(child);
  auto node = makeNode(NodeKind::Not);
  node->left = std::move(child);
  return node;
}

static NodePtr binary(NodeKind kind, SlashSet slash, NodePtr left, NodePtr right) {
  requireChild(left);
  requireChild(right);
  auto node = makeNode(kind);
  node->slash = slash;
  node->left = std::move(left);
  node->right = std::move(right);
  return node;
}

static NodePtr quantifier(NodeKind kind, VariableIndex bound, SlashSet slash, NodePtr body) {
  requireChild(body);
  auto node = makeNode(kind);
  node->bound = bound;
  node->slash = slash;
  node->left = std::move(body);
  return node;
}

NodePtr disjunction(SlashSet slash, NodePtr left, NodePtr right) {
  return binary(NodeKind::Or, slash, std::move(left), std::move(right));
}

NodePtr conjunction(SlashSet slash, NodePtr left, NodePtr right) {
  return binary(NodeKind::And, slash, std::move(left), std::move(right));
}

NodePtr exists(VariableIndex bound, SlashSet slash, NodePtr body) {
  return quantifier(NodeKind::Exists, bound, slash, std::move(body));
}

NodePtr forall(VariableIndex bound, SlashSet slash, NodePtr body) {
  return quantifier(NodeKind::Forall, bound, slash, std::move(body));
}

bool structurallyEqual(const Node& a, const Node& b) {
  if (&a == &b) return true;
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case NodeKind::Atom:
      return a.predicate == b.predicate && a.arguments == b.arguments;
    case NodeKind::Not:
      return structurallyEqual(*a.left, *b.left);
    case NodeKind::Or:
    case NodeKind::And:
      return a.slash == b.slash && structurallyEqual(*a.left, *b.left) &&
             structurallyEqual(*a.right, *b.right);
    case NodeKind::Exists:
    case NodeKind::Forall:
      return a.bound == b.bound && a.slash == b.slash && structurallyEqual(*a.left, *b.left);
  }
  return false;
}

std::optional<VariableIndex> maxVariable(const Node& node) {
  std::optional<VariableIndex> best;
  auto bump = [&best](std::optional<VariableIndex> v) {
    if (v && (!best || *v > *best)) best = v;
  };
  switch (node.kind) {
    case NodeKind::Atom:
      for (VariableIndex i : node.arguments) bump(i);
      break;
    case NodeKind::Not:
      bump(maxVariable(*node.left));
      break;
    case NodeKind::Or:
    case NodeKind::And:
      bump(node.slash.maxIndex());
      bump(maxVariable(*node.left));
      bump(maxVariable(*node.right));
      break;
    case NodeKind::Exists:
    case NodeKind::Forall:
      bump(node.bound);
      bump(node.slash.maxIndex());
      bump(maxVariable(*node.left));
      break;
  }
  return best;
}

std::size_t depth(const Node& node) {
  switch (node.kind) {
    case NodeKind::Atom:
      return 0;
    case NodeKind::Not:
    case NodeKind::Exists:
    case NodeKind::Forall:
      return 1 + depth(*node.left);
    case NodeKind::Or:
    case NodeKind::And:
      return 1 + std::max(depth(*node.left), depth(*node.right));
  }
  return 0;
}

std::string toString(const Node& node) {
  switch (node.kind) {
    case NodeKind::Atom: {
      if (node.isEquality()) {
        return "v" + std::to_string(node.arguments.at(0)) + " = v" +
               std::to_string(node.arguments.at(1));
      }
      std::string out = node.predicate + "(";
      for (std::size_t k = 0; k < node.arguments.size(); ++k) {
        if (k != 0) out += ",";
        out += "v" + std::to_string(node.arguments[k]);
      }
      return out + ")";
    }
    case NodeKind::Not:
      return "~" + toString(*node.left);
    case NodeKind::Or:
    case NodeKind::And:
      return "(" + toString(*node.left) + (node.kind == NodeKind::Or ? " |/" : " &/") +
             node.slash.toString() + " " + toString(*node.right) + ")";
    case NodeKind::Exists:
    case NodeKind::Forall:
      return std::string(node.kind == NodeKind::Exists ? "E" : "A") + " v" +
             std::to_string(node.bound) + "/" + node.slash.toString() + " . " +
             toString(*node.left);
  }
  return {};
}

Formula::Formula(NodePtr root, std::size_t variableCount)
    : root_(std::move(root)), variableCount_(variableCount) {
  if (!root_) throw std::invalid_argument("formula has no root");
  if (variableCount_ == 0) throw std::invalid_argument("formula needs at least one variable");
  if (variableCount_ > kMaxVariables) {
    throw std::invalid_argument("formula has more than " + std::to_string(kMaxVariables) +
                                " variables");
  }
  if (auto top = maxVariable(*root_); top && *top >= variableCount_) {
    throw std::invalid_argument("variable v" + std::to_string(*top) +
                                " is outside the declared " + std::to_string(variableCount_) +
                                " variables");
  }
}

Formula::Formula(NodePtr root)
    : Formula(root, root ? maxVariable(*root).value_or(0) + 1 : 1) {}

namespace {

NodePtr expandNode(const NodePtr& node) {
  switch (node->kind) {
    case NodeKind::Atom:
      return node;
    case NodeKind::Not:
      return negation(expandNode(node->left));
    case NodeKind::Or:
      return disjunction(node->slash, expandNode(node->left), expandNode(node->right));
    case NodeKind::And:
      return negation(disjunction(node->slash, negation(expandNode(node->left)),
                                  negation(expandNode(node->right))));
    case NodeKind::Exists:
      return exists(node->bound, node->slash, expandNode(node->left));
    case NodeKind::Forall:
      return negation(exists(node->bound, node->slash, negation(expandNode(node->left))));
  }
  return node;
}

NodePtr perfectNode(const NodePtr& node) {
  switch (node->kind) {
    case NodeKind::Atom:
      return node;
    case NodeKind::Not:
      return negation(perfectNode(node->left));
    case NodeKind::Or:
      return disjunction({}, perfectNode(node->left), perfectNode(node->right));
    case NodeKind::And:
      return conjunction({}, perfectNode(node->left), perfectNode(node->right));
    case NodeKind::Exists:
      return exists(node->bound, {}, perfectNode(node->left));
    case NodeKind::Forall:
      return forall(node->bound, {}, perfectNode(node->left));
  }
  return node;
}

void collect(const NodePtr& node, TreePosition& path, std::vector<SubformulaEntry>& out) {
  out.push_back({path, node});
  auto descend = [&](std::uint8_t step, const NodePtr& child) {
    path.push_back(step);
    collect(child, path, out);
    path.pop_back();
  };
  switch (node->kind) {
    case NodeKind::Atom:
      break;
    case NodeKind::Not:
      descend(0, node->left);
      break;
    case NodeKind::Or:
      descend(1, node->left);
      descend(2, node->right);
      break;
    case NodeKind::Exists:
      descend(3, node->left);
      break;
    case NodeKind::And:
    case NodeKind::Forall:
      // unreachable after expansion
      break;
  }
}

}  // namespace

Formula expandAbbreviations(const Formula& formula) {
  return Formula(expandNode(formula.rootPtr()), formula.variableCount());
}

std::vector<SubformulaEntry> subformulaTree(const Formula& formula) {
  Formula core = expandAbbreviations(formula);
  std::vector<SubformulaEntry> out;
  TreePosition path;
  collect(core.rootPtr(), path, out);
  return out;
}

Polarity polarity(const Formula& formula, const TreePosition& position) {
  Formula core = expandAbbreviations(formula);
  const Node* at = &core.root();
  for (std::uint8_t step : position) {
    bool ok = (step == 0 && at->kind == NodeKind::Not) ||
              ((step == 1 || step == 2) && at->kind == NodeKind::Or) ||
              (step == 3 && at->kind == NodeKind::Exists);
    if (!ok) throw std::out_of_range("tree position does not address a subformula");
    at = step == 2 ? at->right.get() : at->left.get();
  }
  auto zeros = std::count(position.begin(), position.end(), std::uint8_t{0});
  return zeros % 2 == 0 ? Polarity::Positive : Polarity::Negative;
}

Formula perfection(const Formula& formula) {
  return Formula(perfectNode(formula.rootPtr()), formula.variableCount());
}

bool isPerfect(const Node& node) {
  switch (node.kind) {
    case NodeKind::Atom:
      return true;
    case NodeKind::Not:
      return isPerfect(*node.left);
    case NodeKind::Or:
    case NodeKind::And:
      return node.slash.empty() && isPerfect(*node.left) && isPerfect(*node.right);
    case NodeKind::Exists:
    case NodeKind::Forall:
      return node.slash.empty() && isPerfect(*node.left);
  }
  return false;
}

bool isPerfect(const Formula& formula) { return isPerfect(formula.root()); }

ParseError::ParseError(const std::string& message, std::size_t offset)
    : std::runtime_error("parse error at offset " + std::to_string(offset) + ": " + message),
      offset_(offset) {}

}  // namespace ifg
