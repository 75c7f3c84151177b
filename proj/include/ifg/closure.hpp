#ifndef IFG_CLOSURE_HPP
#define IFG_CLOSURE_HPP

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "ifg/algebra.hpp"
#include "ifg/formula.hpp"
#include "ifg/limits.hpp"
#include "ifg/model.hpp"

namespace ifg {

enum class Signature {
  // 0, 1, D_ij, ¬, +_J, ·_J, C_{n,J} for every J ⊆ N
  Full,
  // 0, 1, D_ij, ¬, +_∅, ·_∅, C_{n,∅}
  EmptyReduct,
};

struct OperationRecord {
  std::string operation;  // e.g. "neg", "plus{v0}", "cyl1{}"
  std::vector<std::size_t> arguments;
  std::size_t result;
};

struct Subalgebra {
  // Generators first, then constants, then elements in breadth-first discovery order.
  std::vector<AlgebraElement> elements;
  // Only filled when requested.
  std::vector<OperationRecord> table;

  // Index of `x`, or elements.size() if absent.
  std::size_t find(const AlgebraElement& x) const;
};

// Least set containing the generators and the constants, closed under the
// chosen signature. Throws BudgetExceeded past limits.closureElements.
Subalgebra generateSubalgebra(std::span<const AlgebraElement> generators, std::size_t universeSize,
                              std::size_t dimensions, Signature signature, const Limits& limits = {},
                              bool recordTable = false);

// Least subset of 𝒫(^N A) containing the generators, ∅, ^N A and every D_ij,
// closed under complement, union and every C_n.
std::vector<ClassicalElement> generateClassical(std::span<const ClassicalElement> generators,
                                                const ValuationSpace& space, const Limits& limits = {});

// Every atomic formula over N variables: v_i = v_j for all i, j and R(args) for
// every relation R and every argument tuple.
std::vector<Formula> atomicFormulas(const Structure& structure, std::size_t dimensions);

struct IsomorphismReport {
  struct Check {
    std::string name;
    std::size_t instances = 0;
    std::size_t failures = 0;
    bool passed() const { return failures == 0; }
  };
  std::size_t universeSize = 0;
  std::size_t dimensions = 0;
  std::size_t classicalSize = 0;  // |Cs_N(𝔄)|
  std::size_t reductSize = 0;     // |Cs_IFG_{N,∅}(𝔄)|
  std::vector<Check> checks;

  bool passed() const;
  std::string text() const;
  // One "EQ <name> PASS|FAIL" line per check.
  std::string machine() const;
};

// Builds Cs_N(𝔄) from the atomic classical meanings and Cs_IFG_{N,∅}(𝔄) from
// the atomic trump meanings (computed team by team), then checks that
// F(V) = ⟨𝒫(V), 𝒫(^N A ∖ V)⟩ is a bijective homomorphism with inverse G(X) = ⋃X⁺.
IsomorphismReport verifyIsomorphism(const Structure& structure, std::size_t dimensions, const Limits& limits = {});

}  // namespace ifg

#endif  // IFG_CLOSURE_HPP
