#include "ifg/algebra.hpp"

#include "dead_states.hpp"

namespace ifg {

namespace {

void requireSameShape(const AlgebraElement& x, const AlgebraElement& y) {
  if (x.universeSize != y.universeSize || x.dimensions != y.dimensions) {
    throw std::invalid_argument("algebra elements of different dimension or base set");
  }
}

ValuationSpace operationSpace(const AlgebraElement& x, const Limits& limits) {
  ValuationSpace space = x.space();
  requireBudget(space.count(), limits.meaningValuations, "|A|^N for algebra operations");
  return space;
}

Team lowestBit(std::uint64_t m) { return Team(m & (~m + 1)); }

// Calls `member` on every team whose immediate subsets are all in the result
// built so far. Exact whenever the target family is downward closed.
template <typename Predicate>
DenseFamily sweepDownwardClosed(std::size_t valuations, Predicate member) {
  DenseFamily out(valuations);
  for (std::uint64_t bits = 0; bits < out.teamCount(); ++bits) {
    bool candidate = true;
    for (std::uint64_t m = bits; m != 0 && candidate; m &= m - 1) {
      candidate = out.contains(Team(bits) - lowestBit(m));
    }
    if (candidate && member(Team(bits))) out.insert(Team(bits));
  }
  return out;
}

template <typename Predicate>
DenseFamily sweepAll(std::size_t valuations, Predicate member) {
  DenseFamily out(valuations);
  for (std::uint64_t bits = 0; bits < out.teamCount(); ++bits) {
    if (member(Team(bits))) out.insert(Team(bits));
  }
  return out;
}

// Full ≈_J blocks of ^N A, indexed by block id.
std::vector<Team> blockMasks(const ValuationSpace& space, SlashSet slash) {
  std::vector<std::size_t> ids = space.blockIds(slash);
  std::vector<Team> masks(space.count());
  for (std::size_t idx = 0; idx < ids.size(); ++idx) masks[ids[idx]] = masks[ids[idx]] | Team::singleton(idx);
  std::erase_if(masks, [](Team t) { return t.empty(); });
  return masks;
}

// Reused across the candidate teams of one sweep.
struct SearchScratch {
  explicit SearchScratch(const ValuationSpace& space) : dead(detail::DeadStates::slotsFor(space.count())) {}
  std::vector<Team> blocks;
  std::vector<Team> images;
  detail::DeadStates dead;
};

void blocksOf(Team team, const std::vector<Team>& masks, std::vector<Team>& out) {
  out.clear();
  for (Team m : masks) {
    if (Team part = m & team; !part.empty()) out.push_back(part);
  }
}

// Some J-saturated split team = V1 ⊔ V2 with V1 ∈ x, V2 ∈ y. With `prune`,
// a partial split with a side outside its family cuts the branch, which is
// exact for downward-closed x and y.
bool hasSaturatedSplit(Team team, const std::vector<Team>& masks, const DenseFamily& x, const DenseFamily& y,
                       bool prune, SearchScratch& scratch) {
  blocksOf(team, masks, scratch.blocks);
  const std::vector<Team>& blocks = scratch.blocks;
  auto search = [&](auto&& self, std::size_t i, Team left, Team right) -> bool {
    if (i == blocks.size()) return x.contains(left) && y.contains(right);
    if (prune && !(x.contains(left) && y.contains(right))) return false;
    return self(self, i + 1, left | blocks[i], right) || self(self, i + 1, left, right | blocks[i]);
  };
  return search(search, 0, Team{}, Team{});
}

// Some J-independent f on the team with team(n:f) ∈ x. With `prune`, a
// partial image outside x cuts the branch, which is exact for downward-closed x.
bool hasIndependentChoice(const ValuationSpace& space, Team team, VariableIndex n, const std::vector<Team>& masks,
                          const DenseFamily& x, bool prune, SearchScratch& scratch) {
  blocksOf(team, masks, scratch.blocks);
  const std::vector<Team>& blocks = scratch.blocks;
  const std::size_t universe = space.universeSize();
  scratch.images.resize(blocks.size() * universe);
  for (std::size_t i = 0; i < blocks.size(); ++i) {
    for (Element b = 0; b < universe; ++b) scratch.images[i * universe + b] = variation(space, blocks[i], n, b);
  }
  const std::uint64_t id = scratch.dead.begin();
  auto search = [&](auto&& self, std::size_t i, Team image) -> bool {
    if (i == blocks.size()) return x.contains(image);
    if (prune && !x.contains(image)) return false;
    if (scratch.dead.contains(id, image.bits(), i)) return false;
    for (Element b = 0; b < universe; ++b) {
      if (self(self, i + 1, image | scratch.images[i * universe + b])) return true;
    }
    scratch.dead.insert(id, image.bits(), i);
    return false;
  };
  return search(search, 0, Team{});
}

}  // namespace

AlgebraElement zero(std::size_t universeSize, std::size_t dimensions) {
  ValuationSpace space(universeSize, dimensions);
  return {universeSize, dimensions, TeamFamily::emptyTeamOnly(), TeamFamily::powerSet(space.full())};
}

AlgebraElement one(std::size_t universeSize, std::size_t dimensions) {
  return neg(zero(universeSize, dimensions));
}

AlgebraElement diag(VariableIndex i, VariableIndex j, std::size_t universeSize, std::size_t dimensions) {
  ValuationSpace space(universeSize, dimensions);
  return embedF(classicalDiag(space, i, j), universeSize, dimensions);
}

AlgebraElement neg(const AlgebraElement& x) { return {x.universeSize, x.dimensions, x.minus, x.plus}; }

DenseFamily unionJFamily(const ValuationSpace& space, const DenseFamily& x, const DenseFamily& y, SlashSet slash) {
  std::vector<Team> masks = blockMasks(space, slash);
  SearchScratch scratch(space);
  return sweepAll(space.count(), [&](Team v) { return hasSaturatedSplit(v, masks, x, y, false, scratch); });
}

DenseFamily choiceVariationFamily(const ValuationSpace& space, VariableIndex n, SlashSet slash,
                                  const DenseFamily& x) {
  if (n >= space.dimensions()) throw std::out_of_range("cylindrification index out of range");
  std::vector<Team> masks = blockMasks(space, slash);
  SearchScratch scratch(space);
  return sweepAll(space.count(),
                  [&](Team v) { return hasIndependentChoice(space, v, n, masks, x, false, scratch); });
}

DenseFamily fullVariationFamily(const ValuationSpace& space, VariableIndex n, const DenseFamily& x) {
  if (n >= space.dimensions()) throw std::out_of_range("cylindrification index out of range");
  std::vector<Element> all(space.universeSize());
  for (Element b = 0; b < all.size(); ++b) all[b] = b;
  return sweepAll(space.count(), [&](Team w) { return x.contains(variation(space, w, n, all)); });
}

AlgebraElement plusJ(const AlgebraElement& x, const AlgebraElement& y, SlashSet slash, const Limits& limits) {
  requireSameShape(x, y);
  ValuationSpace space = operationSpace(x, limits);
  const DenseFamily xs = x.plus.toDense(space.count());
  const DenseFamily ys = y.plus.toDense(space.count());
  std::vector<Team> masks = blockMasks(space, slash);
  // both inputs are downward closed, hence so is the result
  SearchScratch scratch(space);
  DenseFamily plus = sweepDownwardClosed(
      space.count(), [&](Team v) { return hasSaturatedSplit(v, masks, xs, ys, true, scratch); });

  std::vector<Team> meet;
  for (Team a : x.minus.maximal()) {
    for (Team b : y.minus.maximal()) meet.push_back(a & b);
  }
  return {x.universeSize, x.dimensions, plus.maximal(), TeamFamily::generatedBy(meet)};
}

AlgebraElement timesJ(const AlgebraElement& x, const AlgebraElement& y, SlashSet slash, const Limits& limits) {
  return neg(plusJ(neg(x), neg(y), slash, limits));
}

AlgebraElement cyl(VariableIndex n, SlashSet slash, const AlgebraElement& x, const Limits& limits) {
  ValuationSpace space = operationSpace(x, limits);
  if (n >= space.dimensions()) throw std::out_of_range("cylindrification index out of range");
  const DenseFamily xs = x.plus.toDense(space.count());
  std::vector<Team> masks = blockMasks(space, slash);
  SearchScratch scratch(space);
  DenseFamily plus = sweepDownwardClosed(
      space.count(), [&](Team v) { return hasIndependentChoice(space, v, n, masks, xs, true, scratch); });

  // W(n:A) ⊆ M  iff  W ⊆ the largest n-cylinder inside M
  std::vector<Team> minus;
  std::vector<Element> all(space.universeSize());
  for (Element b = 0; b < all.size(); ++b) all[b] = b;
  for (Team m : x.minus.maximal()) {
    Team inner;
    m.forEachMember([&](std::size_t idx) {
      if (variation(space, Team::singleton(idx), n, all).isSubsetOf(m)) inner = inner | Team::singleton(idx);
    });
    minus.push_back(inner);
  }
  TeamFamily minusFamily = x.minus.empty() ? TeamFamily{} : TeamFamily::generatedBy(minus);
  return {x.universeSize, x.dimensions, plus.maximal(), minusFamily};
}

bool isDoubleSuit(const AlgebraElement& x) {
  if (!isSuit(x.plus) || !isSuit(x.minus)) return false;
  for (Team a : x.plus.maximal()) {
    for (Team b : x.minus.maximal()) {
      if (a.intersects(b)) return false;
    }
  }
  return true;
}

bool isFlat(const AlgebraElement& x) { return isDoubleSuit(x) && x.plus.isPowerSet(); }

std::optional<ClassicalElement> perfectWitness(const AlgebraElement& x) {
  if (!x.plus.isPowerSet() || !x.minus.isPowerSet()) return std::nullopt;
  ValuationSpace space = x.space();
  Team v = x.plus.maximal().front();
  if (x.minus.maximal().front() != complement(space, v)) return std::nullopt;
  return v;
}

bool isPerfect(const AlgebraElement& x) { return perfectWitness(x).has_value(); }

AlgebraElement embedF(ClassicalElement v, std::size_t universeSize, std::size_t dimensions) {
  ValuationSpace space(universeSize, dimensions);
  if (!space.contains(v)) throw std::invalid_argument("team outside the valuation space");
  return {universeSize, dimensions, TeamFamily::powerSet(v), TeamFamily::powerSet(complement(space, v))};
}

ClassicalElement embedG(const AlgebraElement& x) { return x.plus.unionOfMembers(); }

ClassicalElement complement(const ValuationSpace& space, ClassicalElement v) { return space.full() - v; }

ClassicalElement unite(ClassicalElement v, ClassicalElement w) { return v | w; }

ClassicalElement intersect(ClassicalElement v, ClassicalElement w) { return v & w; }

ClassicalElement cylinder(const ValuationSpace& space, VariableIndex n, ClassicalElement v) {
  std::vector<Element> all(space.universeSize());
  for (Element b = 0; b < all.size(); ++b) all[b] = b;
  return variation(space, v, n, all);
}

ClassicalElement classicalDiag(const ValuationSpace& space, VariableIndex i, VariableIndex j) {
  if (i >= space.dimensions() || j >= space.dimensions()) throw std::out_of_range("diagonal index out of range");
  Team out;
  for (std::size_t idx = 0; idx < space.count(); ++idx) {
    if (space.coordinate(idx, i) == space.coordinate(idx, j)) out = out | Team::singleton(idx);
  }
  return out;
}

std::string describe(const AlgebraElement& x) {
  ValuationSpace space = x.space();
  std::string out = "plus:";
  for (Team t : x.plus.maximal()) out += " " + space.format(t);
  out += "\nminus:";
  for (Team t : x.minus.maximal()) out += " " + space.format(t);
  return out;
}

}  // namespace ifg
