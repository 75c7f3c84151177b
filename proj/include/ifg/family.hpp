#ifndef IFG_FAMILY_HPP
#define IFG_FAMILY_HPP

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "ifg/team.hpp"

namespace ifg {

// Dense families (one bit per team) are limited to spaces of at most this many valuations.
inline constexpr std::size_t kMaxDenseValuations = 20;

class TeamFamily;

// An explicit family of teams over a valuation space: one membership bit per
// subset of ^N A. No closure property is assumed.
class DenseFamily {
 public:
  // Throws BudgetExceeded if the space has more than kMaxDenseValuations valuations.
  explicit DenseFamily(std::size_t valuationCount);

  std::size_t valuationCount() const { return valuations_; }
  std::uint64_t teamCount() const { return std::uint64_t{1} << valuations_; }

  bool contains(Team team) const {
    return ((words_[team.bits() >> 6] >> (team.bits() & 63)) & 1U) != 0;
  }
  void insert(Team team) { words_[team.bits() >> 6] |= std::uint64_t{1} << (team.bits() & 63); }
  std::uint64_t size() const;

  // Every subset of a member is a member.
  bool isDownwardClosed() const;
  // Smallest downward-closed family containing this one.
  DenseFamily downwardClosure() const;
  // Maximal members. Represents the downward closure of this family.
  TeamFamily maximal() const;

  friend bool operator==(const DenseFamily&, const DenseFamily&) = default;

 private:
  std::size_t valuations_;
  std::vector<std::uint64_t> words_;
};

// A downward-closed family of teams, stored as its antichain of maximal
// teams (kept sorted). The empty antichain is the empty family; {∅} is the
// family containing only the empty team.
class TeamFamily {
 public:
  TeamFamily() = default;
  // Downward closure of `teams`.
  static TeamFamily generatedBy(std::span<const Team> teams);
  // 𝒫(V).
  static TeamFamily powerSet(Team team) { return generatedBy(std::span<const Team>(&team, 1)); }
  // {∅}.
  static TeamFamily emptyTeamOnly() { return powerSet(Team{}); }

  const std::vector<Team>& maximal() const { return maximal_; }
  bool empty() const { return maximal_.empty(); }
  bool contains(Team team) const;
  // ⋃ of the family.
  Team unionOfMembers() const;
  // 𝒫(V) for some V, i.e. a single maximal team.
  bool isPowerSet() const { return maximal_.size() == 1; }

  DenseFamily toDense(std::size_t valuationCount) const;
  // Every member, in increasing bit order. Only for small spaces.
  std::vector<Team> members(std::size_t valuationCount) const;

  friend bool operator==(const TeamFamily&, const TeamFamily&) = default;
  friend auto operator<=>(const TeamFamily& a, const TeamFamily& b) { return a.maximal_ <=> b.maximal_; }

 private:
  friend class DenseFamily;
  std::vector<Team> maximal_;
};

// X* is a suit: nonempty and downward closed. The explicit-family overload
// checks closure; an antichain-backed family is downward closed by construction.
bool isSuit(const DenseFamily& family);
bool isSuit(const TeamFamily& family);

}  // namespace ifg

#endif  // IFG_FAMILY_HPP
