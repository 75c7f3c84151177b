#include "ifg/team.hpp"

#include <stdexcept>

namespace ifg {

std::vector<std::size_t> Team::members() const {
  std::vector<std::size_t> out;
  out.reserve(size());
  for (std::uint64_t m = bits_; m != 0; m &= m - 1) {
    out.push_back(static_cast<std::size_t>(std::countr_zero(m)));
  }
  return out;
}

std::uint64_t saturatingPower(std::uint64_t base, std::uint64_t exponent) {
  std::uint64_t result = 1;
  for (std::uint64_t k = 0; k < exponent; ++k) {
    if (base != 0 && result > UINT64_MAX / base) return UINT64_MAX;
    result *= base;
  }
  return result;
}

ValuationSpace::ValuationSpace(std::size_t universeSize, std::size_t dimensions)
    : universe_(universeSize), dims_(dimensions) {
  if (universe_ == 0) throw std::invalid_argument("universe must be nonempty");
  if (dims_ == 0) throw std::invalid_argument("valuation space needs at least one variable");
  std::uint64_t count = saturatingPower(universe_, dims_);
  if (count > kMaxTeamValuations) {
    throw BudgetExceeded("|A|^N = " + (count == UINT64_MAX ? std::string("overflow") : std::to_string(count)) +
                         " valuations exceeds the team capacity of " +
                         std::to_string(kMaxTeamValuations));
  }
  count_ = static_cast<std::size_t>(count);
  coords_.resize(count_ * dims_);
  for (std::size_t idx = 0; idx < count_; ++idx) {
    std::size_t rest = idx;
    for (std::size_t n = dims_; n-- > 0;) {
      coords_[idx * dims_ + n] = static_cast<Element>(rest % universe_);
      rest /= universe_;
    }
  }
  variants_.resize(count_ * dims_ * universe_);
  for (std::size_t idx = 0; idx < count_; ++idx) {
    std::size_t weight = 1;
    for (std::size_t n = dims_; n-- > 0;) {
      std::size_t base = idx - coords_[idx * dims_ + n] * weight;
      for (std::size_t b = 0; b < universe_; ++b) {
        variants_[(idx * dims_ + n) * universe_ + b] = base + b * weight;
      }
      weight *= universe_;
    }
  }
}

std::size_t ValuationSpace::indexOf(const Valuation& a) const {
  if (a.size() != dims_) throw std::invalid_argument("valuation has the wrong length");
  std::size_t idx = 0;
  for (Element e : a) {
    if (e >= universe_) throw std::out_of_range("valuation entry outside the universe");
    idx = idx * universe_ + e;
  }
  return idx;
}

Valuation ValuationSpace::valuation(std::size_t index) const {
  if (index >= count_) throw std::out_of_range("valuation index out of range");
  return Valuation(coords_.begin() + static_cast<std::ptrdiff_t>(index * dims_),
                   coords_.begin() + static_cast<std::ptrdiff_t>((index + 1) * dims_));
}

std::vector<std::size_t> ValuationSpace::blockIds(SlashSet slash) const {
  std::vector<std::size_t> ids(count_);
  for (std::size_t idx = 0; idx < count_; ++idx) {
    std::size_t rep = idx;
    for (VariableIndex n : slash.indices()) {
      if (n < dims_) rep = variantIndex(rep, n, 0);
    }
    ids[idx] = rep;
  }
  return ids;
}

std::string ValuationSpace::format(const Valuation& a) const {
  std::string out = "(";
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (n != 0) out += ",";
    out += std::to_string(a[n]);
  }
  return out + ")";
}

std::string ValuationSpace::format(Team team) const {
  std::string out = "{";
  bool first = true;
  for (std::size_t idx : team.members()) {
    if (!first) out += ",";
    out += format(valuation(idx));
    first = false;
  }
  return out + "}";
}

bool agreesOutside(const Valuation& a, const Valuation& b, SlashSet slash) {
  if (a.size() != b.size()) throw std::invalid_argument("valuations of different length");
  for (std::size_t n = 0; n < a.size(); ++n) {
    if (!slash.contains(n) && a[n] != b[n]) return false;
  }
  return true;
}

std::vector<Team> classes(const ValuationSpace& space, Team team, SlashSet slash) {
  std::vector<std::size_t> ids = space.blockIds(slash);
  std::vector<Team> out;
  std::vector<std::size_t> seen;
  // members() is increasing, so blocks come out ordered by smallest member
  for (std::size_t idx : team.members()) {
    std::size_t k = 0;
    while (k < seen.size() && seen[k] != ids[idx]) ++k;
    if (k == seen.size()) {
      seen.push_back(ids[idx]);
      out.emplace_back();
    }
    out[k] = out[k] | Team::singleton(idx);
  }
  return out;
}

std::optional<Team> unionJ(const ValuationSpace& space, std::span<const Team> parts, SlashSet slash) {
  Team all;
  for (Team part : parts) {
    if (!space.contains(part)) throw std::invalid_argument("team outside the valuation space");
    if (part.intersects(all)) return std::nullopt;
    all = all | part;
  }
  for (Team block : classes(space, all, slash)) {
    bool inside = false;
    for (Team part : parts) {
      if (block.intersects(part)) {
        if (!block.isSubsetOf(part)) return std::nullopt;
        inside = true;
      }
    }
    if (!inside) return std::nullopt;
  }
  return all;
}

void forEachSaturatedCover(const ValuationSpace& space, Team team, SlashSet slash, std::size_t parts,
                           const CoverVisitor& visit, const Limits& limits) {
  if (parts == 0) throw std::invalid_argument("a cover needs at least one part");
  std::vector<Team> blocks = classes(space, team, slash);
  requireBudget(saturatingPower(parts, blocks.size()), limits.enumeration, "saturated covers");

  // Odometer over part assignments; block 0 is the fastest-changing digit.
  std::vector<std::size_t> assign(blocks.size(), 0);
  std::vector<Team> cover(parts);
  while (true) {
    std::fill(cover.begin(), cover.end(), Team{});
    for (std::size_t b = 0; b < blocks.size(); ++b) cover[assign[b]] = cover[assign[b]] | blocks[b];
    if (!visit(cover)) return;
    std::size_t b = 0;
    while (b < blocks.size() && ++assign[b] == parts) assign[b++] = 0;
    if (b == blocks.size()) return;
  }
}

std::vector<std::vector<Team>> saturatedCovers(const ValuationSpace& space, Team team, SlashSet slash,
                                               std::size_t parts, const Limits& limits) {
  std::vector<std::vector<Team>> out;
  forEachSaturatedCover(
      space, team, slash, parts,
      [&out](std::span<const Team> cover) {
        out.emplace_back(cover.begin(), cover.end());
        return true;
      },
      limits);
  return out;
}

Valuation variant(const Valuation& a, VariableIndex n, Element b) {
  if (n >= a.size()) throw std::out_of_range("variant index out of range");
  Valuation out = a;
  out[n] = b;
  return out;
}

static void requireIndex(const ValuationSpace& space, VariableIndex n) {
  if (n >= space.dimensions()) throw std::out_of_range("variable index out of range");
}

static void requireElement(const ValuationSpace& space, Element b) {
  if (b >= space.universeSize()) throw std::out_of_range("element outside the universe");
}

Team variation(const ValuationSpace& space, Team team, VariableIndex n, Element value) {
  requireIndex(space, n);
  requireElement(space, value);
  Team out;
  team.forEachMember([&](std::size_t idx) { out = out | Team::singleton(space.variantIndex(idx, n, value)); });
  return out;
}

Team variation(const ValuationSpace& space, Team team, VariableIndex n, std::span<const Element> values) {
  requireIndex(space, n);
  Team out;
  for (Element b : values) {
    requireElement(space, b);
    team.forEachMember([&](std::size_t idx) { out = out | Team::singleton(space.variantIndex(idx, n, b)); });
  }
  return out;
}

Team variation(const ValuationSpace& space, Team team, VariableIndex n, const ChoiceFunction& f) {
  requireIndex(space, n);
  Team out;
  for (std::size_t idx : team.members()) {
    auto it = f.find(idx);
    if (it == f.end()) throw std::invalid_argument("choice function is not total on the team");
    requireElement(space, it->second);
    out = out | Team::singleton(space.variantIndex(idx, n, it->second));
  }
  return out;
}

void forEachIndependentFunction(const ValuationSpace& space, Team team, SlashSet slash,
                                const FunctionVisitor& visit, const Limits& limits) {
  std::vector<Team> blocks = classes(space, team, slash);
  const std::size_t universe = space.universeSize();
  requireBudget(saturatingPower(universe, blocks.size()), limits.enumeration, "independent functions");

  std::vector<std::vector<std::size_t>> blockMembers;
  for (Team block : blocks) blockMembers.push_back(block.members());

  std::vector<Element> values(blocks.size(), 0);
  ChoiceFunction f;
  while (true) {
    f.clear();
    for (std::size_t b = 0; b < blocks.size(); ++b) {
      for (std::size_t idx : blockMembers[b]) f.emplace(idx, values[b]);
    }
    if (!visit(f)) return;
    std::size_t b = 0;
    while (b < blocks.size() && ++values[b] == universe) values[b++] = 0;
    if (b == blocks.size()) return;
  }
}

std::vector<ChoiceFunction> independentFunctions(const ValuationSpace& space, Team team, SlashSet slash,
                                                 const Limits& limits) {
  std::vector<ChoiceFunction> out;
  forEachIndependentFunction(
      space, team, slash,
      [&out](const ChoiceFunction& f) {
        out.push_back(f);
        return true;
      },
      limits);
  return out;
}

}  // namespace ifg
