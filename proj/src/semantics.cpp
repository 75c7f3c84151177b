#include "ifg/semantics.hpp"

#include "dead_states.hpp"

namespace ifg {

namespace {

ValuationSpace evaluationSpace(const Structure& structure, const Formula& formula, const Limits& limits) {
  std::uint64_t count = saturatingPower(structure.universeSize(), formula.variableCount());
  requireBudget(count, limits.evalValuations, "|A|^N for per-team evaluation");
  return ValuationSpace(structure.universeSize(), formula.variableCount());
}


}  // namespace

Evaluator::Evaluator(const Structure& structure, Formula formula, EvalOptions options)
    : structure_(structure),
      formula_(std::move(formula)),
      options_(options),
      space_(evaluationSpace(structure, formula_, options.limits)),
      dead_(std::make_unique<detail::DeadStates>(detail::DeadStates::slotsFor(space_.count()))) {}

Evaluator::~Evaluator() = default;
Evaluator::Evaluator(Evaluator&&) noexcept = default;

bool Evaluator::plus(const Node& node, Team team) {
  if (!space_.contains(team)) throw std::invalid_argument("team outside ^N A");
  return evaluate(node, team, true);
}

bool Evaluator::minus(const Node& node, Team team) {
  if (!space_.contains(team)) throw std::invalid_argument("team outside ^N A");
  return evaluate(node, team, false);
}

Team Evaluator::truthSet(const Node& atom) {
  if (auto it = truth_.find(&atom); it != truth_.end()) return it->second;
  Team truth;
  for (std::size_t idx = 0; idx < space_.count(); ++idx) {
    if (atomicEval(structure_, atom, space_.valuation(idx))) truth = truth | Team::singleton(idx);
  }
  truth_.emplace(&atom, truth);
  return truth;
}

const std::vector<Team>& Evaluator::blockMasks(SlashSet slash) {
  auto [it, inserted] = blocks_.try_emplace(slash.mask());
  if (inserted) {
    std::vector<std::size_t> ids = space_.blockIds(slash);
    std::vector<Team> masks(space_.count());
    for (std::size_t idx = 0; idx < ids.size(); ++idx) masks[ids[idx]] = masks[ids[idx]] | Team::singleton(idx);
    std::erase_if(masks, [](Team t) { return t.empty(); });
    it->second = std::move(masks);
  }
  return it->second;
}

Team Evaluator::fillCoordinate(Team team, VariableIndex n) const {
  Team out;
  team.forEachMember([&](std::size_t idx) {
    for (Element b = 0; b < space_.universeSize(); ++b) out = out | Team::singleton(space_.variantIndex(idx, n, b));
  });
  return out;
}

bool Evaluator::coverSearch(const Node& left, const Node& right, bool positive, Team team, SlashSet slash) {
  std::vector<Team> blocks;
  blocks.reserve(team.size());
  for (Team m : blockMasks(slash)) {
    if (Team part = m & team; !part.empty()) blocks.push_back(part);
  }
  // classes are sent to one part at a time, so each cover is visited once
  const std::uint64_t id = dead_->begin();
  std::uint64_t steps = 0;
  const bool prune = options_.prunePartialChoices;
  auto search = [&](auto&& self, std::size_t i, Team first, Team second) -> bool {
    requireBudget(++steps, options_.limits.enumeration, "cover search");
    if (i == blocks.size()) return evaluate(left, first, positive) && evaluate(right, second, positive);
    if (prune && i > 0 && !(evaluate(left, first, positive) && evaluate(right, second, positive))) return false;
    if (dead_->contains(id, first.bits(), i)) return false;
    if (self(self, i + 1, first | blocks[i], second) || self(self, i + 1, first, second | blocks[i])) return true;
    dead_->insert(id, first.bits(), i);
    return false;
  };
  return search(search, 0, Team{}, Team{});
}

bool Evaluator::choiceSearch(const Node& body, bool positive, Team team, VariableIndex n, SlashSet slash) {
  std::vector<Team> blocks;
  blocks.reserve(team.size());
  for (Team m : blockMasks(slash)) {
    if (Team part = m & team; !part.empty()) blocks.push_back(part);
  }
  const std::size_t universe = space_.universeSize();
  std::vector<Team> images(blocks.size() * universe);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (Element b = 0; b < universe; ++b) images[i * universe + b] = variation(space_, blocks[i], n, b);
  }
  // (blocks assigned so far, image so far) states already known to fail
  const std::uint64_t id = dead_->begin();
  std::uint64_t steps = 0;
  const bool prune = options_.prunePartialChoices;
  auto search = [&](auto&& self, std::size_t i, Team image) -> bool {
    requireBudget(++steps, options_.limits.enumeration, "choice-function search");
    if (i == blocks.size()) return evaluate(body, image, positive);
    if (prune && i > 0 && !evaluate(body, image, positive)) return false;
    if (dead_->contains(id, image.bits(), i)) return false;
    for (Element b = 0; b < universe; ++b) {
      if (self(self, i + 1, image | images[i * universe + b])) return true;
    }
    dead_->insert(id, image.bits(), i);
    return false;
  };
  return search(search, 0, Team{});
}

bool Evaluator::evaluate(const Node& node, Team team, bool positive) {
  if (node.kind == NodeKind::Atom) {
    Team truth = truthSet(node);
    return positive ? team.isSubsetOf(truth) : !team.intersects(truth);
  }
  if (node.kind == NodeKind::Not) return evaluate(*node.left, team, !positive);

  const Key key{&node, team.bits(), positive};
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  bool result = false;
  switch (node.kind) {
    case NodeKind::Or:
      result = positive ? coverSearch(*node.left, *node.right, true, team, node.slash)
                        : evaluate(*node.left, team, false) && evaluate(*node.right, team, false);
      break;
    case NodeKind::And:
      // ~(~a |/J ~b)
      result = positive ? evaluate(*node.left, team, true) && evaluate(*node.right, team, true)
                        : coverSearch(*node.left, *node.right, false, team, node.slash);
      break;
    case NodeKind::Exists:
      result = positive ? choiceSearch(*node.left, true, team, node.bound, node.slash)
                        : evaluate(*node.left, fillCoordinate(team, node.bound), false);
      break;
    case NodeKind::Forall:
      // ~E vn/J . ~a
      result = positive ? evaluate(*node.left, fillCoordinate(team, node.bound), true)
                        : choiceSearch(*node.left, false, team, node.bound, node.slash);
      break;
    case NodeKind::Atom:
    case NodeKind::Not:
      break;
  }
  memo_.emplace(key, result);
  return result;
}

bool modelsPlus(const Structure& structure, const Formula& formula, Team team, const EvalOptions& options) {
  return Evaluator(structure, formula, options).plus(team);
}

bool modelsMinus(const Structure& structure, const Formula& formula, Team team, const EvalOptions& options) {
  return Evaluator(structure, formula, options).minus(team);
}

bool isTrueSentencewise(const Structure& structure, const Formula& formula, const EvalOptions& options) {
  Evaluator evaluator(structure, formula, options);
  return evaluator.plus(evaluator.space().full());
}

bool isFalseSentencewise(const Structure& structure, const Formula& formula, const EvalOptions& options) {
  Evaluator evaluator(structure, formula, options);
  return evaluator.minus(evaluator.space().full());
}

namespace {

class MeaningBuilder {
 public:
  MeaningBuilder(const Structure& structure, std::size_t dims, const Limits& limits)
      : structure_(structure), space_(structure.universeSize(), dims), limits_(limits) {}

  Meaning build(const Node& node) {
    if (auto it = cache_.find(&node); it != cache_.end()) return it->second;
    Meaning result = compute(node);
    cache_.emplace(&node, result);
    return result;
  }

 private:
  Meaning compute(const Node& node) {
    const std::size_t u = space_.universeSize();
    const std::size_t d = space_.dimensions();
    switch (node.kind) {
      case NodeKind::Atom: {
        Team truth;
        for (std::size_t idx = 0; idx < space_.count(); ++idx) {
          if (atomicEval(structure_, node, space_.valuation(idx))) truth = truth | Team::singleton(idx);
        }
        return {u, d, TeamFamily::powerSet(truth), TeamFamily::powerSet(space_.full() - truth)};
      }
      case NodeKind::Not:
        return neg(build(*node.left));
      case NodeKind::Or:
        return plusJ(build(*node.left), build(*node.right), node.slash, limits_);
      case NodeKind::And:
        return neg(plusJ(neg(build(*node.left)), neg(build(*node.right)), node.slash, limits_));
      case NodeKind::Exists:
        return cyl(node.bound, node.slash, build(*node.left), limits_);
      case NodeKind::Forall:
        return neg(cyl(node.bound, node.slash, neg(build(*node.left)), limits_));
    }
    throw std::logic_error("unknown node kind");
  }

  const Structure& structure_;
  ValuationSpace space_;
  Limits limits_;
  std::unordered_map<const Node*, Meaning> cache_;
};

}  // namespace

Meaning meaning(const Structure& structure, const Formula& formula, const Limits& limits) {
  std::uint64_t count = saturatingPower(structure.universeSize(), formula.variableCount());
  requireBudget(count, limits.meaningValuations, "|A|^N for meaning computation");
  return MeaningBuilder(structure, formula.variableCount(), limits).build(formula.root());
}

ExplicitMeaning meaningByTeams(const Structure& structure, const Formula& formula, const EvalOptions& options) {
  std::uint64_t count = saturatingPower(structure.universeSize(), formula.variableCount());
  requireBudget(count, options.limits.meaningValuations, "|A|^N for meaning computation");
  Evaluator evaluator(structure, formula, options);
  ExplicitMeaning out{DenseFamily(evaluator.space().count()), DenseFamily(evaluator.space().count())};
  for (std::uint64_t bits = 0; bits < out.plus.teamCount(); ++bits) {
    if (evaluator.plus(Team(bits))) out.plus.insert(Team(bits));
    if (evaluator.minus(Team(bits))) out.minus.insert(Team(bits));
  }
  return out;
}

}  // namespace ifg
