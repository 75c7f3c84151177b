#include "ifg/closure.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "ifg/semantics.hpp"

namespace ifg {

std::size_t Subalgebra::find(const AlgebraElement& x) const {
  return static_cast<std::size_t>(std::find(elements.begin(), elements.end(), x) - elements.begin());
}

namespace {

std::vector<SlashSet> slashesFor(Signature signature, std::size_t dimensions) {
  if (signature == Signature::EmptyReduct) return {SlashSet{}};
  std::vector<SlashSet> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << dimensions); ++mask) out.push_back(SlashSet::fromMask(mask));
  return out;
}

class ClosureBuilder {
 public:
  ClosureBuilder(const Limits& limits, bool record) : limits_(limits), record_(record) {}

  std::size_t add(const AlgebraElement& x) {
    auto [it, inserted] = index_.try_emplace(x, out_.elements.size());
    if (inserted) {
      requireBudget(out_.elements.size() + 1, limits_.closureElements, "subalgebra closure");
      out_.elements.push_back(x);
    }
    return it->second;
  }

  void apply(const std::string& op, std::vector<std::size_t> args, const AlgebraElement& result) {
    std::size_t r = add(result);
    if (record_) out_.table.push_back({op, std::move(args), r});
  }

  const AlgebraElement& at(std::size_t i) const { return out_.elements[i]; }
  std::size_t size() const { return out_.elements.size(); }
  Subalgebra take() { return std::move(out_); }

 private:
  Limits limits_;
  bool record_;
  Subalgebra out_;
  std::map<AlgebraElement, std::size_t> index_;
};

}  // namespace

Subalgebra generateSubalgebra(std::span<const AlgebraElement> generators, std::size_t universeSize,
                              std::size_t dimensions, Signature signature, const Limits& limits, bool recordTable) {
  ClosureBuilder builder(limits, recordTable);
  for (const AlgebraElement& g : generators) {
    if (g.universeSize != universeSize || g.dimensions != dimensions) {
      throw std::invalid_argument("generator has a different base set or dimension");
    }
    builder.add(g);
  }
  builder.add(zero(universeSize, dimensions));
  builder.add(one(universeSize, dimensions));
  for (VariableIndex i = 0; i < dimensions; ++i) {
    for (VariableIndex j = 0; j < dimensions; ++j) builder.add(diag(i, j, universeSize, dimensions));
  }

  const std::vector<SlashSet> slashes = slashesFor(signature, dimensions);
  for (std::size_t i = 0; i < builder.size(); ++i) {
    // copy: the builder's storage may grow while we work
    const AlgebraElement x = builder.at(i);
    builder.apply("neg", {i}, neg(x));
    for (SlashSet j : slashes) {
      for (VariableIndex n = 0; n < dimensions; ++n) {
        builder.apply("cyl" + std::to_string(n) + j.toString(), {i}, cyl(n, j, x, limits));
      }
    }
    for (std::size_t k = 0; k <= i; ++k) {
      const AlgebraElement y = builder.at(k);
      for (SlashSet j : slashes) {
        builder.apply("plus" + j.toString(), {i, k}, plusJ(x, y, j, limits));
        builder.apply("times" + j.toString(), {i, k}, timesJ(x, y, j, limits));
        if (k != i) {
          builder.apply("plus" + j.toString(), {k, i}, plusJ(y, x, j, limits));
          builder.apply("times" + j.toString(), {k, i}, timesJ(y, x, j, limits));
        }
      }
    }
  }
  return builder.take();
}

std::vector<ClassicalElement> generateClassical(std::span<const ClassicalElement> generators,
                                                const ValuationSpace& space, const Limits& limits) {
  std::vector<ClassicalElement> elements;
  std::set<ClassicalElement> seen;
  auto add = [&](ClassicalElement v) {
    if (seen.insert(v).second) {
      requireBudget(elements.size() + 1, limits.closureElements, "classical closure");
      elements.push_back(v);
    }
  };
  for (ClassicalElement g : generators) {
    if (!space.contains(g)) throw std::invalid_argument("generator outside ^N A");
    add(g);
  }
  add(Team{});
  add(space.full());
  for (VariableIndex i = 0; i < space.dimensions(); ++i) {
    for (VariableIndex j = 0; j < space.dimensions(); ++j) add(classicalDiag(space, i, j));
  }
  for (std::size_t i = 0; i < elements.size(); ++i) {
    const ClassicalElement v = elements[i];
    add(complement(space, v));
    for (VariableIndex n = 0; n < space.dimensions(); ++n) add(cylinder(space, n, v));
    for (std::size_t k = 0; k <= i; ++k) add(unite(v, elements[k]));
  }
  return elements;
}

std::vector<Formula> atomicFormulas(const Structure& structure, std::size_t dimensions) {
  std::vector<Formula> out;
  for (VariableIndex i = 0; i < dimensions; ++i) {
    for (VariableIndex j = 0; j < dimensions; ++j) out.emplace_back(equals(i, j), dimensions);
  }
  for (const auto& [name, rel] : structure.relations()) {
    std::vector<VariableIndex> args(rel.arity, 0);
    while (true) {
      out.emplace_back(relation(name, args), dimensions);
      std::size_t k = 0;
      while (k < args.size() && ++args[k] == dimensions) args[k++] = 0;
      if (k == args.size()) break;
    }
  }
  return out;
}

bool IsomorphismReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.passed(); });
}

std::string IsomorphismReport::text() const {
  std::ostringstream out;
  out << "|A| = " << universeSize << ", N = " << dimensions << "\n";
  out << "|Cs_N| = " << classicalSize << ", |Cs_IFG_N,0| = " << reductSize << "\n";
  for (const Check& c : checks) {
    out << (c.passed() ? "PASS  " : "FAIL  ") << c.name << "  (" << c.instances << " instances";
    if (!c.passed()) out << ", " << c.failures << " failures";
    out << ")\n";
  }
  out << (passed() ? "PASS" : "FAIL") << " (" << reductSize << " elements)\n";
  return out.str();
}

std::string IsomorphismReport::machine() const {
  std::ostringstream out;
  out << "UNIVERSE=" << universeSize << "\nN=" << dimensions << "\nCLASSICAL_SIZE=" << classicalSize
      << "\nREDUCT_SIZE=" << reductSize << "\n";
  for (const Check& c : checks) out << "EQ " << c.name << (c.passed() ? " PASS" : " FAIL") << "\n";
  out << "RESULT=" << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

IsomorphismReport verifyIsomorphism(const Structure& structure, std::size_t dimensions, const Limits& limits) {
  const std::size_t u = structure.universeSize();
  requireBudget(saturatingPower(u, dimensions), limits.meaningValuations, "|A|^N for isomorphism check");
  const ValuationSpace space(u, dimensions);

  std::vector<ClassicalElement> classicalAtoms;
  std::vector<AlgebraElement> trumpAtoms;
  EvalOptions options;
  options.limits = limits;
  for (const Formula& atom : atomicFormulas(structure, dimensions)) {
    Team truth;
    for (std::size_t idx = 0; idx < space.count(); ++idx) {
      if (atomicEval(structure, atom.root(), space.valuation(idx))) truth = truth | Team::singleton(idx);
    }
    classicalAtoms.push_back(truth);
    ExplicitMeaning m = meaningByTeams(structure, atom, options);
    trumpAtoms.push_back({u, dimensions, m.plus.maximal(), m.minus.maximal()});
  }

  const std::vector<ClassicalElement> cs = generateClassical(classicalAtoms, space, limits);
  const Subalgebra reduct = generateSubalgebra(trumpAtoms, u, dimensions, Signature::EmptyReduct, limits);
  const std::set<AlgebraElement> reductSet(reduct.elements.begin(), reduct.elements.end());

  IsomorphismReport report;
  report.universeSize = u;
  report.dimensions = dimensions;
  report.classicalSize = cs.size();
  report.reductSize = reduct.elements.size();
  // check() hands out references into this vector
  report.checks.reserve(16);

  auto F = [&](ClassicalElement v) { return embedF(v, u, dimensions); };
  auto check = [&](const std::string& name) -> IsomorphismReport::Check& {
    report.checks.push_back({name, 0, 0});
    return report.checks.back();
  };
  auto record = [](IsomorphismReport::Check& c, bool ok) {
    ++c.instances;
    if (!ok) ++c.failures;
  };

  record(check("F(0)=0"), F(Team{}) == zero(u, dimensions));
  record(check("F(1)=1"), F(space.full()) == one(u, dimensions));
  {
    auto& c = check("F(D_ij)=D_ij");
    for (VariableIndex i = 0; i < dimensions; ++i) {
      for (VariableIndex j = 0; j < dimensions; ++j) {
        record(c, F(classicalDiag(space, i, j)) == diag(i, j, u, dimensions));
      }
    }
  }
  {
    auto& c = check("F(-V)=~F(V)");
    for (ClassicalElement v : cs) record(c, F(complement(space, v)) == neg(F(v)));
  }
  {
    auto& plus = check("F(V+W)=F(V)+_0F(W)");
    auto& times = check("F(V*W)=F(V)._0F(W)");
    for (ClassicalElement v : cs) {
      for (ClassicalElement w : cs) {
        record(plus, F(unite(v, w)) == plusJ(F(v), F(w), {}, limits));
        record(times, F(intersect(v, w)) == timesJ(F(v), F(w), {}, limits));
      }
    }
  }
  {
    auto& c = check("F(C_n(V))=C_n,0(F(V))");
    for (ClassicalElement v : cs) {
      for (VariableIndex n = 0; n < dimensions; ++n) record(c, F(cylinder(space, n, v)) == cyl(n, {}, F(v), limits));
    }
  }
  {
    auto& into = check("F(V) in Cs_IFG_N,0");
    auto& gf = check("G(F(V))=V");
    std::set<AlgebraElement> image;
    for (ClassicalElement v : cs) {
      AlgebraElement fv = F(v);
      record(into, reductSet.count(fv) != 0);
      record(gf, embedG(fv) == v);
      image.insert(fv);
    }
    record(check("F onto Cs_IFG_N,0"), image == reductSet);
    record(check("|Cs_N|=|Cs_IFG_N,0|"), cs.size() == reduct.elements.size());
  }
  {
    auto& fg = check("F(G(X))=X");
    auto& perfect = check("X perfect");
    for (const AlgebraElement& x : reduct.elements) {
      record(fg, F(embedG(x)) == x);
      record(perfect, isPerfect(x));
    }
  }
  return report;
}

}  // namespace ifg
