#ifndef IFG_SEMANTICS_HPP
#define IFG_SEMANTICS_HPP

#include <cstdint>
#include <memory>
#include <unordered_map>
#include <vector>

#include "ifg/algebra.hpp"
#include "ifg/family.hpp"
#include "ifg/formula.hpp"
#include "ifg/limits.hpp"
#include "ifg/model.hpp"
#include "ifg/team.hpp"

namespace ifg {

namespace detail {
class DeadStates;
}

struct EvalOptions {
  Limits limits;
  // Cut a cover or choice-function branch as soon as a partial part or image
  // fails. Sound because trump families are downward closed.
  bool prunePartialChoices = true;
};

// Per-team trump semantics: 𝔄 ⊨⁺ φ[V] and 𝔄 ⊨⁻ φ[W], computed clause by
// clause with a (node, team) memo that persists across calls. The structure
// must outlive the evaluator.
class Evaluator {
 public:
  // Throws BudgetExceeded if |A|^N exceeds limits.evalValuations.
  Evaluator(const Structure& structure, Formula formula, EvalOptions options = {});
  ~Evaluator();
  Evaluator(Evaluator&&) noexcept;

  const ValuationSpace& space() const { return space_; }
  const Formula& formula() const { return formula_; }

  bool plus(Team team) { return plus(formula_.root(), team); }
  bool minus(Team team) { return minus(formula_.root(), team); }
  // `node` must belong to this evaluator's formula.
  bool plus(const Node& node, Team team);
  bool minus(const Node& node, Team team);

 private:
  struct Key {
    const Node* node;
    std::uint64_t team;
    bool positive;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const {
      std::size_t h = std::hash<const void*>{}(k.node);
      h ^= std::hash<std::uint64_t>{}(k.team) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
      return h * 2 + (k.positive ? 1 : 0);
    }
  };

  bool evaluate(const Node& node, Team team, bool positive);
  Team truthSet(const Node& atom);
  const std::vector<Team>& blockMasks(SlashSet slash);
  // Some V = V1 ∪_J V2 with want(left, V1) and want(right, V2).
  bool coverSearch(const Node& left, const Node& right, bool positive, Team team, SlashSet slash);
  // Some J-independent f with want(body, V(n:f)).
  bool choiceSearch(const Node& body, bool positive, Team team, VariableIndex n, SlashSet slash);
  Team fillCoordinate(Team team, VariableIndex n) const;

  const Structure& structure_;
  Formula formula_;
  EvalOptions options_;
  ValuationSpace space_;
  std::unordered_map<Key, bool, KeyHash> memo_;
  std::unordered_map<const Node*, Team> truth_;
  std::unordered_map<std::uint64_t, std::vector<Team>> blocks_;
  // failed cover and choice states, shared by all searches of this evaluator
  std::unique_ptr<detail::DeadStates> dead_;
};

bool modelsPlus(const Structure& structure, const Formula& formula, Team team, const EvalOptions& options = {});
bool modelsMinus(const Structure& structure, const Formula& formula, Team team, const EvalOptions& options = {});

// 𝔄 ⊨± φ, i.e. on the full team ^N A.
bool isTrueSentencewise(const Structure& structure, const Formula& formula, const EvalOptions& options = {});
bool isFalseSentencewise(const Structure& structure, const Formula& formula, const EvalOptions& options = {});

// ‖φ‖ = ⟨⟦φ⟧⁺, ⟦φ⟧⁻⟩.
using Meaning = AlgebraElement;

// ‖φ‖ computed bottom-up with the algebra operations:
// atoms -> ⟨𝒫(truth set), 𝒫(falsity set)⟩, ~ -> neg, |/J -> +_J, E vn/J -> C_{n,J},
// and the abbreviations through their definitions.
// Throws BudgetExceeded if |A|^N exceeds limits.meaningValuations.
Meaning meaning(const Structure& structure, const Formula& formula, const Limits& limits = {});

// Trumps and cotrumps found by running the per-team evaluator on every team.
struct ExplicitMeaning {
  DenseFamily plus;
  DenseFamily minus;
};
ExplicitMeaning meaningByTeams(const Structure& structure, const Formula& formula, const EvalOptions& options = {});

}  // namespace ifg

#endif  // IFG_SEMANTICS_HPP
