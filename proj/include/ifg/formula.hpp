#ifndef IFG_FORMULA_HPP
#define IFG_FORMULA_HPP

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ifg {

// Index n of the variable v_n.
using VariableIndex = std::size_t;

// Formulas carry at most this many variables (slash sets are 64-bit masks).
inline constexpr std::size_t kMaxVariables = 64;

// The set J of variable indices hidden from a connective or quantifier.
class SlashSet {
 public:
  SlashSet() = default;
  SlashSet(std::initializer_list<VariableIndex> indices);
  static SlashSet fromMask(std::uint64_t mask) { return SlashSet(mask, 0); }

  bool contains(VariableIndex i) const { return i < kMaxVariables && ((mask_ >> i) & 1U) != 0; }
  bool empty() const { return mask_ == 0; }
  std::uint64_t mask() const { return mask_; }
  // Largest index in the set, if any.
  std::optional<VariableIndex> maxIndex() const;
  std::vector<VariableIndex> indices() const;

  void insert(VariableIndex i);

  // "{v0,v2}"
  std::string toString() const;

  friend bool operator==(const SlashSet&, const SlashSet&) = default;

 private:
  SlashSet(std::uint64_t mask, int) : mask_(mask) {}
  std::uint64_t mask_ = 0;
};

enum class NodeKind { Atom, Not, Or, And, Exists, Forall };

struct Node;
using NodePtr = std::shared_ptr<const Node>;

// One node of an IFG formula. And and Forall are kept as their own kinds so
// that printing reproduces the input; every semantic procedure reads them as
//   (a &/J b)    ==  ~(~a |/J ~b)
//   A vn/J . a   ==  ~E vn/J . ~a
struct Node {
  NodeKind kind = NodeKind::Atom;
  // Atom: empty predicate means equality of arguments[0] and arguments[1].
  std::string predicate;
  std::vector<VariableIndex> arguments;
  // Or/And/Exists/Forall.
  SlashSet slash;
  // Exists/Forall.
  VariableIndex bound = 0;
  // Not/Exists/Forall use `left` only.
  NodePtr left;
  NodePtr right;

  bool isEquality() const { return kind == NodeKind::Atom && predicate.empty(); }
  bool isQuantifier() const { return kind == NodeKind::Exists || kind == NodeKind::Forall; }
  bool isBinary() const { return kind == NodeKind::Or || kind == NodeKind::And; }
};

// Node constructors.
NodePtr equals(VariableIndex i, VariableIndex j);
NodePtr relation(std::string name, std::vector<VariableIndex> args);
NodePtr negation(NodePtr child);
NodePtr disjunction(SlashSet slash, NodePtr left, NodePtr right);
NodePtr conjunction(SlashSet slash, NodePtr left, NodePtr right);
NodePtr exists(VariableIndex bound, SlashSet slash, NodePtr body);
NodePtr forall(VariableIndex bound, SlashSet slash, NodePtr body);

bool structurallyEqual(const Node& a, const Node& b);
// Largest variable index mentioned anywhere in the tree, bound or slashed included.
std::optional<VariableIndex> maxVariable(const Node& node);
std::size_t depth(const Node& node);
std::string toString(const Node& node);

// An IFG_N formula: a tree paired with its variable count N. Two formulas
// with the same tree but different N are different objects.
class Formula {
 public:
  // Throws std::invalid_argument if N == 0, N > kMaxVariables, or some
  // variable index in the tree is >= N.
  Formula(NodePtr root, std::size_t variableCount);
  // Uses N = 1 + largest mentioned index.
  explicit Formula(NodePtr root);

  const Node& root() const { return *root_; }
  const NodePtr& rootPtr() const { return root_; }
  std::size_t variableCount() const { return variableCount_; }

  std::string toString() const { return ifg::toString(*root_); }

  friend bool operator==(const Formula& a, const Formula& b) {
    return a.variableCount_ == b.variableCount_ && structurallyEqual(*a.root_, *b.root_);
  }

 private:
  NodePtr root_;
  std::size_t variableCount_;
};

// Path from the root; 0 = under negation, 1/2 = left/right disjunct,
// 3 = under a quantifier.
using TreePosition = std::vector<std::uint8_t>;

struct SubformulaEntry {
  TreePosition position;
  NodePtr node;
};

enum class Polarity { Positive, Negative };

// The subformula tree in preorder. Abbreviations are unfolded first, so the
// positions are those of the formula built from ~, |/J and E only.
std::vector<SubformulaEntry> subformulaTree(const Formula& formula);

// Throws std::out_of_range if `position` does not address a subformula.
Polarity polarity(const Formula& formula, const TreePosition& position);

// Replaces And and Forall by their defining ~ / | / E forms.
Formula expandAbbreviations(const Formula& formula);

// Every slash set replaced by the empty set, at every depth.
Formula perfection(const Formula& formula);
bool isPerfect(const Formula& formula);
bool isPerfect(const Node& node);

// Thrown by parse(); offset is a byte index into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

// Grammar (whitespace-insensitive):
//   formula := "~" formula | "(" formula [binop formula] ")" | quant | atom
//   binop   := "|/" slash | "&/" slash
//   quant   := ("E" | "A") var "/" slash "." formula
//   slash   := "{" [ var ("," var)* ] "}"
//   atom    := var "=" var | ident "(" var ("," var)* ")"
//   var     := "v" digits
Formula parse(std::string_view text, std::optional<std::size_t> declaredVariables = std::nullopt);

}  // namespace ifg

#endif  // IFG_FORMULA_HPP
