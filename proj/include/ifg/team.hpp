#ifndef IFG_TEAM_HPP
#define IFG_TEAM_HPP

#include <bit>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "ifg/formula.hpp"
#include "ifg/limits.hpp"

namespace ifg {

// Universe elements are 0..|A|-1.
using Element = std::uint32_t;
// Entry i is the value of v_i.
using Valuation = std::vector<Element>;

// Teams are bit sets over valuation indices, so ^N A may hold at most this many valuations.
inline constexpr std::size_t kMaxTeamValuations = 64;

// A set of valuations, stored as a bit set over the lexicographic indices of
// the ambient ValuationSpace.
class Team {
 public:
  constexpr Team() = default;
  constexpr explicit Team(std::uint64_t bits) : bits_(bits) {}
  static constexpr Team singleton(std::size_t index) { return Team(std::uint64_t{1} << index); }

  constexpr std::uint64_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr std::size_t size() const { return static_cast<std::size_t>(std::popcount(bits_)); }
  constexpr bool contains(std::size_t index) const { return ((bits_ >> index) & 1U) != 0; }
  constexpr bool isSubsetOf(Team other) const { return (bits_ & ~other.bits_) == 0; }
  constexpr bool intersects(Team other) const { return (bits_ & other.bits_) != 0; }

  constexpr Team operator|(Team o) const { return Team(bits_ | o.bits_); }
  constexpr Team operator&(Team o) const { return Team(bits_ & o.bits_); }
  // Set difference.
  constexpr Team operator-(Team o) const { return Team(bits_ & ~o.bits_); }

  // Member indices in increasing order.
  std::vector<std::size_t> members() const;
  // Calls visit(index) for each member in increasing order.
  template <typename Visit>
  constexpr void forEachMember(Visit visit) const {
    for (std::uint64_t m = bits_; m != 0; m &= m - 1) visit(static_cast<std::size_t>(std::countr_zero(m)));
  }

  friend constexpr bool operator==(Team, Team) = default;
  friend constexpr auto operator<=>(Team a, Team b) { return a.bits_ <=> b.bits_; }

 private:
  std::uint64_t bits_ = 0;
};

// ^N A with valuations indexed lexicographically (coordinate 0 most significant).
class ValuationSpace {
 public:
  // Throws BudgetExceeded if |A|^N exceeds kMaxTeamValuations,
  // std::invalid_argument for an empty universe or N == 0.
  ValuationSpace(std::size_t universeSize, std::size_t dimensions);

  std::size_t universeSize() const { return universe_; }
  std::size_t dimensions() const { return dims_; }
  std::size_t count() const { return count_; }
  Team full() const { return Team(count_ == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count_) - 1); }

  Element coordinate(std::size_t index, VariableIndex n) const { return coords_[index * dims_ + n]; }
  std::size_t indexOf(const Valuation& a) const;
  Valuation valuation(std::size_t index) const;
  // Index of a(n:b).
  std::size_t variantIndex(std::size_t index, VariableIndex n, Element b) const {
    return variants_[(index * dims_ + n) * universe_ + b];
  }
  // ≈_J block id of each valuation (the index of its representative with J-coordinates zeroed).
  std::vector<std::size_t> blockIds(SlashSet slash) const;

  bool contains(Team team) const { return team.isSubsetOf(full()); }

  // "{(0,0),(1,1)}"
  std::string format(Team team) const;
  std::string format(const Valuation& a) const;

  friend bool operator==(const ValuationSpace& a, const ValuationSpace& b) {
    return a.universe_ == b.universe_ && a.dims_ == b.dims_;
  }

 private:
  std::size_t universe_;
  std::size_t dims_;
  std::size_t count_;
  std::vector<Element> coords_;
  std::vector<std::size_t> variants_;
};

// a ≈_J b: a and b agree on every coordinate outside J.
// Throws std::invalid_argument on a length mismatch.
bool agreesOutside(const Valuation& a, const Valuation& b, SlashSet slash);

// ≈_J equivalence classes of `team`, ordered by smallest member.
std::vector<Team> classes(const ValuationSpace& space, Team team, SlashSet slash);

// ⋃_J parts: the union if the parts are pairwise disjoint and each is closed
// under ≈_J within the union; nullopt where the partial operation is undefined.
std::optional<Team> unionJ(const ValuationSpace& space, std::span<const Team> parts, SlashSet slash);

// Every k-tuple (V1..Vk) with team = V1 ∪_J ... ∪_J Vk, produced by sending
// each ≈_J class to one part. Empty parts allowed. The visitor returns false
// to stop early. Throws BudgetExceeded if k^classes exceeds the enumeration limit.
using CoverVisitor = std::function<bool(std::span<const Team>)>;
void forEachSaturatedCover(const ValuationSpace& space, Team team, SlashSet slash, std::size_t parts,
                           const CoverVisitor& visit, const Limits& limits = {});
std::vector<std::vector<Team>> saturatedCovers(const ValuationSpace& space, Team team, SlashSet slash,
                                               std::size_t parts, const Limits& limits = {});

// a(n:b). Throws std::out_of_range if n >= a.size().
Valuation variant(const Valuation& a, VariableIndex n, Element b);

// Explicit finite map from valuation index to element.
using ChoiceFunction = std::map<std::size_t, Element>;

// V(n:b), V(n:B) and V(n:f).
Team variation(const ValuationSpace& space, Team team, VariableIndex n, Element value);
Team variation(const ValuationSpace& space, Team team, VariableIndex n, std::span<const Element> values);
// Throws std::invalid_argument if f is not defined on every member of `team`.
Team variation(const ValuationSpace& space, Team team, VariableIndex n, const ChoiceFunction& f);

// All f: team -> A constant on every ≈_J class of the team (|A|^classes of them).
using FunctionVisitor = std::function<bool(const ChoiceFunction&)>;
void forEachIndependentFunction(const ValuationSpace& space, Team team, SlashSet slash,
                                const FunctionVisitor& visit, const Limits& limits = {});
std::vector<ChoiceFunction> independentFunctions(const ValuationSpace& space, Team team, SlashSet slash,
                                                 const Limits& limits = {});

// base^exponent, saturating at UINT64_MAX.
std::uint64_t saturatingPower(std::uint64_t base, std::uint64_t exponent);

}  // namespace ifg

#endif  // IFG_TEAM_HPP
