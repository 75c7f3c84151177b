#include <cctype>
#include <limits>

#include "ifg/formula.hpp"

namespace ifg {

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  NodePtr parseTop() {
    skipSpace();
    if (atEnd()) throw ParseError("empty input", pos_);
    NodePtr root = parseFormula();
    skipSpace();
    if (!atEnd()) fail("unexpected trailing input");
    return root;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  bool atEnd() const { return pos_ >= text_.size(); }
  char peek() const { return atEnd() ? '\0' : text_[pos_]; }

  void skipSpace() {
    while (!atEnd() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view token) {
    skipSpace();
    if (text_.substr(pos_, token.size()) == token) {
      pos_ += token.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view token) {
    if (!accept(token)) fail("expected '" + std::string(token) + "'");
  }

  // True if a variable token "v<digits>" starts at `at` (after whitespace).
  bool variableAhead(std::size_t at) const {
    while (at < text_.size() && std::isspace(static_cast<unsigned char>(text_[at]))) ++at;
    return at + 1 < text_.size() && text_[at] == 'v' &&
           std::isdigit(static_cast<unsigned char>(text_[at + 1]));
  }

  VariableIndex parseVariable() {
    skipSpace();
    if (!variableAhead(pos_)) fail("expected a variable v<digits>");
    ++pos_;
    VariableIndex value = 0;
    while (!atEnd() && std::isdigit(static_cast<unsigned char>(peek()))) {
      VariableIndex digit = static_cast<VariableIndex>(peek() - '0');
      if (value > (std::numeric_limits<VariableIndex>::max() - digit) / 10) {
        fail("variable index too large");
      }
      value = value * 10 + digit;
      ++pos_;
    }
    return value;
  }

  SlashSet parseSlash() {
    expect("{");
    SlashSet slash;
    if (accept("}")) return slash;
    do {
      std::size_t at = pos_;
      VariableIndex v = parseVariable();
      if (v >= kMaxVariables) throw ParseError("variable index too large", at);
      slash.insert(v);
    } while (accept(","));
    expect("}");
    return slash;
  }

  NodePtr parseFormula() {
    skipSpace();
    if (atEnd()) fail("unexpected end of input");
    char c = peek();
    if (c == '~') {
      ++pos_;
      return negation(parseFormula());
    }
    if (c == '(') {
      ++pos_;
      NodePtr left = parseFormula();
      if (accept(")")) return left;
      bool isOr;
      if (accept("|/")) {
        isOr = true;
      } else if (accept("&/")) {
        isOr = false;
      } else {
        fail("expected '|/' or '&/'");
      }
      SlashSet slash = parseSlash();
      NodePtr right = parseFormula();
      expect(")");
      return isOr ? disjunction(slash, left, right) : conjunction(slash, left, right);
    }
    if ((c == 'E' || c == 'A') && variableAhead(pos_ + 1)) {
      ++pos_;
      VariableIndex bound = parseVariable();
      expect("/");
      SlashSet slash = parseSlash();
      expect(".");
      NodePtr body = parseFormula();
      return c == 'E' ? exists(bound, slash, body) : forall(bound, slash, body);
    }
    if (variableAhead(pos_)) {
      VariableIndex lhs = parseVariable();
      expect("=");
      VariableIndex rhs = parseVariable();
      return equals(lhs, rhs);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (!atEnd() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      expect("(");
      std::vector<VariableIndex> args;
      do {
        args.push_back(parseVariable());
      } while (accept(","));
      expect(")");
      return relation(std::move(name), std::move(args));
    }
    fail(std::string("unexpected character '") + c + "'");
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

Formula parse(std::string_view text, std::optional<std::size_t> declaredVariables) {
  NodePtr root = Parser(text).parseTop();
  std::size_t needed = maxVariable(*root).value_or(0) + 1;
  if (needed > kMaxVariables) {
    throw ParseError("formula uses more than " + std::to_string(kMaxVariables) + " variables", 0);
  }
  if (declaredVariables) {
    if (*declaredVariables == 0) throw ParseError("declared variable count must be positive", 0);
    if (needed > *declaredVariables) {
      throw ParseError("variable v" + std::to_string(needed - 1) + " is not below declared N = " +
                           std::to_string(*declaredVariables),
                       0);
    }
    return Formula(root, *declaredVariables);
  }
  return Formula(root, needed);
}

}  // namespace ifg
