#include "ifg/family.hpp"

#include <algorithm>

namespace ifg {

DenseFamily::DenseFamily(std::size_t valuationCount) : valuations_(valuationCount) {
  if (valuations_ > kMaxDenseValuations) {
    throw BudgetExceeded("explicit team families need |A|^N <= " + std::to_string(kMaxDenseValuations) +
                         ", got " + std::to_string(valuations_));
  }
  words_.assign(std::max<std::uint64_t>(1, teamCount() / 64), 0);
}

std::uint64_t DenseFamily::size() const {
  std::uint64_t n = 0;
  for (std::uint64_t w : words_) n += static_cast<std::uint64_t>(std::popcount(w));
  return n;
}

bool DenseFamily::isDownwardClosed() const {
  const std::uint64_t total = teamCount();
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    Team team(bits);
    if (!contains(team)) continue;
    for (std::uint64_t m = bits; m != 0; m &= m - 1) {
      if (!contains(Team(bits & ~(m & (~m + 1))))) return false;
    }
  }
  return true;
}

DenseFamily DenseFamily::downwardClosure() const {
  DenseFamily out = *this;
  // Every immediate subset of a team is numerically smaller, so one descending sweep suffices.
  for (std::uint64_t bits = teamCount(); bits-- > 0;) {
    if (!out.contains(Team(bits))) continue;
    for (std::uint64_t m = bits; m != 0; m &= m - 1) out.insert(Team(bits & ~(m & (~m + 1))));
  }
  return out;
}

TeamFamily DenseFamily::maximal() const {
  DenseFamily closed = isDownwardClosed() ? *this : downwardClosure();
  TeamFamily out;
  const std::uint64_t total = teamCount();
  const std::uint64_t full = total - 1;
  for (std::uint64_t bits = 0; bits < total; ++bits) {
    if (!closed.contains(Team(bits))) continue;
    bool isMax = true;
    for (std::uint64_t m = full & ~bits; m != 0; m &= m - 1) {
      if (closed.contains(Team(bits | (m & (~m + 1))))) {
        isMax = false;
        break;
      }
    }
    if (isMax) out.maximal_.push_back(Team(bits));
  }
  return out;
}

TeamFamily TeamFamily::generatedBy(std::span<const Team> teams) {
  std::vector<Team> sorted(teams.begin(), teams.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  TeamFamily out;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sorted.size() && !dominated; ++j) {
      dominated = i != j && sorted[i].isSubsetOf(sorted[j]);
    }
    if (!dominated) out.maximal_.push_back(sorted[i]);
  }
  return out;
}

bool TeamFamily::contains(Team team) const {
  return std::any_of(maximal_.begin(), maximal_.end(), [team](Team m) { return team.isSubsetOf(m); });
}

Team TeamFamily::unionOfMembers() const {
  Team out;
  for (Team m : maximal_) out = out | m;
  return out;
}

DenseFamily TeamFamily::toDense(std::size_t valuationCount) const {
  DenseFamily out(valuationCount);
  for (Team m : maximal_) {
    if (m.bits() >= out.teamCount()) throw std::invalid_argument("team outside the valuation space");
    out.insert(m);
  }
  return out.downwardClosure();
}

std::vector<Team> TeamFamily::members(std::size_t valuationCount) const {
  std::vector<Team> out;
  DenseFamily dense = toDense(valuationCount);
  for (std::uint64_t bits = 0; bits < dense.teamCount(); ++bits) {
    if (dense.contains(Team(bits))) out.push_back(Team(bits));
  }
  return out;
}

bool isSuit(const DenseFamily& family) { return family.size() != 0 && family.isDownwardClosed(); }

bool isSuit(const TeamFamily& family) { return !family.empty(); }

}  // namespace ifg
