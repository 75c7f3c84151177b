#ifndef IFG_LIMITS_HPP
#define IFG_LIMITS_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace ifg {

// Raised whenever a search or enumeration would exceed its configured size.
// Results are never silently truncated.
class BudgetExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Size guards shared by every exhaustive procedure in the library.
struct Limits {
  // Items produced by a single enumeration (covers, choice functions, teams).
  std::uint64_t enumeration = std::uint64_t{1} << 20;
  // |A|^N ceiling for bottom-up meaning computation and algebra operations.
  std::size_t meaningValuations = 16;
  // |A|^N ceiling for per-team evaluation of a formula.
  std::size_t evalValuations = 27;
  // Elements in a generated subalgebra.
  std::size_t closureElements = 10000;
};

inline void requireBudget(std::uint64_t used, std::uint64_t limit, std::string_view what) {
  if (used > limit) {
    throw BudgetExceeded(std::string(what) + ": " + std::to_string(used) + " exceeds budget of " +
                         std::to_string(limit));
  }
}

}  // namespace ifg

#endif  // IFG_LIMITS_HPP
