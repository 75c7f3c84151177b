#ifndef IFG_ALGEBRA_HPP
#define IFG_ALGEBRA_HPP

#include <compare>
#include <cstddef>
#include <optional>
#include <string>

#include "ifg/family.hpp"
#include "ifg/formula.hpp"
#include "ifg/limits.hpp"
#include "ifg/team.hpp"

namespace ifg {

// An element ⟨X⁺, X⁻⟩ of the IFG-cylindric power set algebra over ^N A.
// Both coordinates are stored as antichains, so every element built here is a
// pair of (possibly empty) downward-closed families.
struct AlgebraElement {
  std::size_t universeSize = 1;
  std::size_t dimensions = 1;
  TeamFamily plus;
  TeamFamily minus;

  ValuationSpace space() const { return ValuationSpace(universeSize, dimensions); }

  friend bool operator==(const AlgebraElement&, const AlgebraElement&) = default;
  friend auto operator<=>(const AlgebraElement& a, const AlgebraElement& b) {
    if (auto c = a.universeSize <=> b.universeSize; c != 0) return c;
    if (auto c = a.dimensions <=> b.dimensions; c != 0) return c;
    if (auto c = a.plus <=> b.plus; c != 0) return c;
    return a.minus <=> b.minus;
  }
};

// Elements of the ordinary cylindric set algebra are subsets of ^N A.
using ClassicalElement = Team;

AlgebraElement zero(std::size_t universeSize, std::size_t dimensions);
AlgebraElement one(std::size_t universeSize, std::size_t dimensions);
// D_ij = ⟨𝒫{a : a_i = a_j}, 𝒫{a : a_i ≠ a_j}⟩. Throws std::out_of_range for i or j >= N.
AlgebraElement diag(VariableIndex i, VariableIndex j, std::size_t universeSize, std::size_t dimensions);

AlgebraElement neg(const AlgebraElement& x);
// (X +_J Y)⁺ = {V1 ∪_J V2 : V1 ∈ X⁺, V2 ∈ Y⁺},  (X +_J Y)⁻ = X⁻ ∩ Y⁻.
AlgebraElement plusJ(const AlgebraElement& x, const AlgebraElement& y, SlashSet slash, const Limits& limits = {});
// (X ·_J Y)⁺ = X⁺ ∩ Y⁺,  (X ·_J Y)⁻ = {W1 ∪_J W2 : W1 ∈ X⁻, W2 ∈ Y⁻}.
AlgebraElement timesJ(const AlgebraElement& x, const AlgebraElement& y, SlashSet slash, const Limits& limits = {});
// C_{n,J}(X)⁺ = {V : V(n:f) ∈ X⁺ for some f: V → A independent of J},
// C_{n,J}(X)⁻ = {W : W(n:A) ∈ X⁻}.
AlgebraElement cyl(VariableIndex n, SlashSet slash, const AlgebraElement& x, const Limits& limits = {});

// The coordinate computations above on explicit families, evaluated on every
// team with no closure assumption about the inputs or the result.
DenseFamily unionJFamily(const ValuationSpace& space, const DenseFamily& x, const DenseFamily& y, SlashSet slash);
DenseFamily choiceVariationFamily(const ValuationSpace& space, VariableIndex n, SlashSet slash, const DenseFamily& x);
DenseFamily fullVariationFamily(const ValuationSpace& space, VariableIndex n, const DenseFamily& x);

bool isDoubleSuit(const AlgebraElement& x);
// Double suit with X⁺ = 𝒫(V).
bool isFlat(const AlgebraElement& x);
// X = ⟨𝒫(V), 𝒫(^N A ∖ V)⟩; returns V.
std::optional<ClassicalElement> perfectWitness(const AlgebraElement& x);
bool isPerfect(const AlgebraElement& x);

// F(V) = ⟨𝒫(V), 𝒫(^N A ∖ V)⟩.
AlgebraElement embedF(ClassicalElement v, std::size_t universeSize, std::size_t dimensions);
// G(X) = ⋃X⁺.
ClassicalElement embedG(const AlgebraElement& x);

// Operations of the ordinary cylindric set algebra Cs_N.
ClassicalElement complement(const ValuationSpace& space, ClassicalElement v);
ClassicalElement unite(ClassicalElement v, ClassicalElement w);
ClassicalElement intersect(ClassicalElement v, ClassicalElement w);
// C_n(V) = V(n:A).
ClassicalElement cylinder(const ValuationSpace& space, VariableIndex n, ClassicalElement v);
ClassicalElement classicalDiag(const ValuationSpace& space, VariableIndex i, VariableIndex j);

// Multi-line listing of both antichains.
std::string describe(const AlgebraElement& x);

}  // namespace ifg

#endif  // IFG_ALGEBRA_HPP
