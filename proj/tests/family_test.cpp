#include <random>

#include "doctest.h"
#include "ifg/family.hpp"
#include "support/oracles.hpp"

using namespace ifg;

TEST_CASE("TeamFamily antichains") {
  TeamFamily empty;
  CHECK(empty.empty());
  CHECK_FALSE(empty.contains(Team{}));
  CHECK_FALSE(isSuit(empty));

  TeamFamily zeroOnly = TeamFamily::emptyTeamOnly();
  CHECK(zeroOnly.contains(Team{}));
  CHECK_FALSE(zeroOnly.contains(Team(1)));
  CHECK(zeroOnly.isPowerSet());
  CHECK(isSuit(zeroOnly));

  std::vector<Team> gens{Team(0b0011), Team(0b0001), Team(0b0110), Team(0b0011)};
  TeamFamily f = TeamFamily::generatedBy(gens);
  CHECK(f.maximal() == std::vector<Team>{Team(0b0011), Team(0b0110)});
  CHECK(f.contains(Team(0b0100)));
  CHECK_FALSE(f.contains(Team(0b0101)));
  CHECK(f.unionOfMembers() == Team(0b0111));
  CHECK_FALSE(f.isPowerSet());
  CHECK(f.members(4).size() == 6);
}

TEST_CASE("DenseFamily closure and maxima agree with explicit enumeration") {
  std::mt19937_64 rng(5);
  for (int round = 0; round < 200; ++round) {
    const std::size_t m = 1 + round % 6;
    DenseFamily raw(m);
    std::uniform_int_distribution<std::uint64_t> pick(0, (std::uint64_t{1} << m) - 1);
    std::vector<Team> gens;
    for (int k = 0; k < 3; ++k) {
      Team t(pick(rng));
      raw.insert(t);
      gens.push_back(t);
    }
    // oracle: union of power sets of the generators
    DenseFamily expected(m);
    for (Team g : gens) {
      DenseFamily p = testing::powerSetFamily(m, g);
      for (std::uint64_t b = 0; b < expected.teamCount(); ++b) {
        if (p.contains(Team(b))) expected.insert(Team(b));
      }
    }
    DenseFamily closed = raw.downwardClosure();
    CHECK(closed == expected);
    CHECK(closed.isDownwardClosed());
    CHECK(isSuit(closed));
    TeamFamily anti = closed.maximal();
    CHECK(anti == TeamFamily::generatedBy(gens));
    CHECK(anti.toDense(m) == expected);
    CHECK(raw.maximal() == anti);
    // antichain: no member below another
    for (Team a : anti.maximal()) {
      for (Team b : anti.maximal()) CHECK((a == b || !a.isSubsetOf(b)));
    }
    for (std::uint64_t b = 0; b < expected.teamCount(); ++b) CHECK(anti.contains(Team(b)) == expected.contains(Team(b)));
    CHECK(anti.members(m).size() == expected.size());
  }
}

TEST_CASE("DenseFamily predicates") {
  DenseFamily f(3);
  CHECK(f.size() == 0);
  CHECK(f.isDownwardClosed());
  CHECK_FALSE(isSuit(f));
  f.insert(Team(0b011));
  CHECK_FALSE(f.isDownwardClosed());
  CHECK(f.downwardClosure().size() == 4);
  CHECK_THROWS_AS(DenseFamily(kMaxDenseValuations + 1), BudgetExceeded);
}
