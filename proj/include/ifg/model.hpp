#ifndef IFG_MODEL_HPP
#define IFG_MODEL_HPP

#include <cstddef>
#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "ifg/formula.hpp"
#include "ifg/limits.hpp"
#include "ifg/team.hpp"

namespace ifg {

class LoadError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Relation {
  std::size_t arity = 0;
  std::set<std::vector<Element>> tuples;
};

// A finite relational structure over the universe 0..|A|-1. Equality is always available.
class Structure {
 public:
  explicit Structure(std::size_t universeSize);

  // Throws std::invalid_argument if a tuple has the wrong arity or leaves the universe,
  // or if the name is already taken.
  void addRelation(const std::string& name, std::size_t arity, std::set<std::vector<Element>> tuples);

  std::size_t universeSize() const { return universe_; }
  const std::map<std::string, Relation>& relations() const { return relations_; }
  // Throws std::out_of_range for an unknown symbol.
  const Relation& relation(const std::string& name) const;

 private:
  std::size_t universe_;
  std::map<std::string, Relation> relations_;
};

// Line-oriented text:
//   universe = 3
//   rel R 1 = (0) (2)
//   rel E 2 = (0,1) (1,0)
// '#' starts a comment. Throws LoadError with a line number on malformed input.
Structure parseStructure(std::string_view text);
Structure loadStructure(const std::string& path);

// Satisfaction of an atom at one valuation. Throws std::invalid_argument
// for an unknown relation or an arity mismatch.
bool atomicEval(const Structure& structure, const Node& atom, const Valuation& a);

// Classical satisfaction of a perfect formula (~ as ¬, |/{} as ∨, E vn/{} as ∃vn, and
// the abbreviations as ∧ and ∀). Throws std::invalid_argument if the formula is not perfect.
bool tarskiEval(const Structure& structure, const Formula& formula, const Valuation& a);

// ^N A as a team. Throws BudgetExceeded if |A|^N exceeds the enumeration
// budget or the team capacity.
Team allValuations(const Structure& structure, std::size_t variables, const Limits& limits = {});

}  // namespace ifg

#endif  // IFG_MODEL_HPP
