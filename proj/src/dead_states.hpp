#ifndef IFG_SRC_DEAD_STATES_HPP
#define IFG_SRC_DEAD_STATES_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

namespace ifg::detail {

// States (search id, team built so far, next block) known to fail. Each
// search takes a fresh id from begin(), so nested searches can share a table.
// Direct-mapped and lossy: a colliding insert evicts the old entry and
// lookups only hit on an exact match, so eviction costs time, never a verdict.
class DeadStates {
 public:
  explicit DeadStates(std::size_t slots) : slots_(slots == 0 ? 1 : slots) {}

  // A table size that grows with the number of valuations in the space.
  static std::size_t slotsFor(std::size_t valuations) {
    const std::size_t want = 16 * valuations * valuations;
    return want < 64 ? 64 : (want > 4096 ? 4096 : want);
  }

  std::uint64_t begin() { return ++lastSearch_; }

  bool contains(std::uint64_t search, std::uint64_t team, std::size_t next) const {
    const Slot& s = slots_[slot(search, team, next)];
    return s.search == search && s.team == team && s.next == next;
  }

  void insert(std::uint64_t search, std::uint64_t team, std::size_t next) {
    slots_[slot(search, team, next)] = {search, team, next};
  }

 private:
  struct Slot {
    std::uint64_t search = 0;
    std::uint64_t team = 0;
    std::size_t next = 0;
  };

  std::size_t slot(std::uint64_t search, std::uint64_t team, std::size_t next) const {
    std::uint64_t h = team * 0x9e3779b97f4a7c15ULL;
    h ^= (search + (static_cast<std::uint64_t>(next) << 40)) * 0xc2b2ae3d27d4eb4fULL;
    return static_cast<std::size_t>((h ^ (h >> 29)) % slots_.size());
  }

  std::vector<Slot> slots_;
  std::uint64_t lastSearch_ = 0;
};

}  // namespace ifg::detail

#endif  // IFG_SRC_DEAD_STATES_HPP
