// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Arguments select criteria by number (default: all).

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "ifg/closure.hpp"
#include "ifg/semantics.hpp"
#include "support/corpus.hpp"
#include "support/oracles.hpp"

using namespace ifg;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
  bool passed;
  std::string detail;
};

double secondsSince(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f s", s);
  return buf;
}

// Counts checks and remembers the first failing one.
struct Tally {
  std::uint64_t checks = 0;
  std::uint64_t violations = 0;
  std::string first;

  void expect(bool ok, const std::function<std::string()>& what) {
    ++checks;
    if (ok) return;
    if (violations++ == 0) first = what();
  }
  std::string summary() const {
    std::string s = std::to_string(checks) + " checks, " + std::to_string(violations) + " violations";
    if (violations != 0) s += "; first: " + first;
    return s;
  }
};

const std::vector<SlashSet> kEmptySlash{SlashSet{}};

// Criterion 2 corpus: every perfect formula of depth <= 3 over equality atoms, N = 2.
void forEachExhaustivePerfect(const std::function<void(const NodePtr&)>& visit) {
  testing::forEachFormula(testing::equalityAtoms(2), 2, 3, kEmptySlash, visit);
}

struct RandomBatch {
  std::size_t universe;
  std::size_t variables;
  std::vector<NodePtr> formulas;
};

// Criterion 2 random part: 200 perfect formulas of depth <= 5 per space with |A|^N <= 16.
std::vector<RandomBatch> randomPerfectBatches() {
  std::vector<RandomBatch> out;
  std::mt19937_64 rng(20240601);
  for (auto [u, n] : {std::pair<std::size_t, std::size_t>{2, 2}, {3, 2}, {4, 2}, {2, 3}, {2, 4}}) {
    testing::RandomFormulaOptions options;
    options.variables = n;
    options.maxDepth = 5;
    RandomBatch batch{u, n, {}};
    auto atoms = testing::equalityAtoms(n);
    for (int i = 0; i < 200; ++i) batch.formulas.push_back(testing::randomFormula(rng, atoms, options));
    out.push_back(std::move(batch));
  }
  return out;
}

// Criterion 3 corpus: 200 imperfect formulas, depth <= 4, N = 2.
std::vector<NodePtr> randomImperfect() {
  std::mt19937_64 rng(777);
  testing::RandomFormulaOptions options;
  options.maxDepth = 4;
  std::vector<NodePtr> out;
  auto atoms = testing::equalityAtoms(2);
  for (int i = 0; i < 200; ++i) out.push_back(testing::randomImperfectFormula(rng, atoms, options));
  return out;
}

// Every formula of depth <= 2 over equality atoms with arbitrary slash sets, N = 2.
void forEachExhaustiveSlashed(const std::function<void(const NodePtr&)>& visit) {
  testing::forEachFormula(testing::equalityAtoms(2), 2, 2, testing::allSlashes(2), visit);
}

DenseFamily meet(const DenseFamily& a, const DenseFamily& b) {
  DenseFamily out(a.valuationCount());
  for (std::uint64_t t = 0; t < a.teamCount(); ++t) {
    if (a.contains(Team(t)) && b.contains(Team(t))) out.insert(Team(t));
  }
  return out;
}

Outcome criterion1() {
  const auto start = Clock::now();
  Formula f = parse("A v0/{} . E v1/{v0} . v0 = v1");
  bool ok = true;
  std::ostringstream d;
  for (std::size_t u : {2, 3}) {
    Structure s(u);
    const bool t = isTrueSentencewise(s, f), fl = isFalseSentencewise(s, f);
    ok = ok && !t && !fl;
    d << "|A|=" << u << " true=" << t << " false=" << fl << "; ";
  }
  Structure one(1);
  const bool t = isTrueSentencewise(one, f);
  ok = ok && t;
  d << "|A|=1 true=" << t;
  const double secs = secondsSince(start);
  ok = ok && secs < 1.0;
  return {ok, d.str() + " (" + seconds(secs) + ", limit 1 s)"};
}

void checkPointwise(Tally& tally, const Structure& s, const Formula& f) {
  const Team truth = testing::tarskiTruthSet(s, f);
  Evaluator eval(s, f);
  const std::uint64_t teams = std::uint64_t{1} << eval.space().count();
  for (std::uint64_t bits = 0; bits < teams; ++bits) {
    const Team v(bits);
    const bool plus = eval.plus(v), minus = eval.minus(v);
    auto where = [&] { return f.toString() + " on " + eval.space().format(v); };
    tally.expect(plus == v.isSubsetOf(truth), where);
    tally.expect(minus == !v.intersects(truth), where);
  }
}

Outcome criterion2() {
  const auto start = Clock::now();
  Tally tally;
  std::size_t exhaustive = 0, random = 0;
  Structure two(2);
  forEachExhaustivePerfect([&](const NodePtr& node) {
    ++exhaustive;
    checkPointwise(tally, two, Formula(node, 2));
  });
  for (const RandomBatch& batch : randomPerfectBatches()) {
    Structure s(batch.universe);
    for (const NodePtr& node : batch.formulas) {
      ++random;
      checkPointwise(tally, s, Formula(node, batch.variables));
    }
  }
  const double secs = secondsSince(start);
  std::ostringstream d;
  d << exhaustive << " exhaustive + " << random << " random perfect formulas, all teams; " << tally.summary()
    << " (" << seconds(secs) << ", limit 300 s)";
  return {tally.violations == 0 && secs < 300.0, d.str()};
}

void checkPerfectionPreserves(Tally& tally, const Structure& s, const Formula& f) {
  const Formula p = perfection(f);
  Evaluator ef(s, f), ep(s, p);
  const std::uint64_t teams = std::uint64_t{1} << ef.space().count();
  for (std::uint64_t bits = 0; bits < teams; ++bits) {
    const Team v(bits);
    auto where = [&] { return f.toString() + " on " + ef.space().format(v); };
    tally.expect(!ef.plus(v) || ep.plus(v), where);
    tally.expect(!ef.minus(v) || ep.minus(v), where);
  }
}

Outcome criterion3() {
  const auto start = Clock::now();
  Tally tally;
  Structure two(2);
  std::size_t formulas = 0;
  for (const NodePtr& node : randomImperfect()) {
    ++formulas;
    checkPerfectionPreserves(tally, two, Formula(node, 2));
  }
  std::size_t slashed = 0;
  forEachExhaustiveSlashed([&](const NodePtr& node) {
    ++slashed;
    checkPerfectionPreserves(tally, two, Formula(node, 2));
  });
  std::ostringstream d;
  d << formulas << " random imperfect + " << slashed << " exhaustive slashed formulas, all teams; " << tally.summary()
    << " (" << seconds(secondsSince(start)) << ")";
  return {tally.violations == 0, d.str()};
}

// Criteria 4, 7 and 8 read the same meanings, so they share one pass.
struct MeaningPass {
  Tally doubleSuits;   // criterion 4
  Tally perfection;    // criterion 7
  Tally coherence;     // criterion 8
  std::size_t formulas = 0;
  std::size_t perfectMeanings = 0;
  std::size_t subformulas = 0;
  double secs = 0;
  bool done = false;
};

MeaningPass& meaningPass() {
  static MeaningPass pass;
  if (pass.done) return pass;
  const auto start = Clock::now();

  auto visit = [&](const Structure& s, const Formula& f, bool everySubformula) {
    ++pass.formulas;
    const Meaning m = meaning(s, f);
    const ExplicitMeaning teams = meaningByTeams(s, f);
    const std::size_t count = m.space().count();
    auto where = [&] { return f.toString(); };

    pass.doubleSuits.expect(isDoubleSuit(m), where);
    pass.doubleSuits.expect(isSuit(teams.plus) && isSuit(teams.minus), where);
    DenseFamily both = meet(teams.plus, teams.minus);
    pass.doubleSuits.expect(both.size() == 1 && both.contains(Team{}), where);

    if (isPerfect(m)) {
      ++pass.perfectMeanings;
      pass.perfection.expect(meaning(s, perfection(f)) == m, where);
    }

    pass.coherence.expect(m.plus.toDense(count) == teams.plus && m.minus.toDense(count) == teams.minus, where);
    if (everySubformula) {
      // one evaluator over the expanded tree answers for each of its nodes
      const Formula expanded = expandAbbreviations(f);
      Evaluator eval(s, expanded);
      std::vector<NodePtr> pending{expanded.rootPtr()};
      while (!pending.empty()) {
        NodePtr node = pending.back();
        pending.pop_back();
        if (node->left) pending.push_back(node->left);
        if (node->right) pending.push_back(node->right);
        ++pass.subformulas;
        const Formula sub(node, f.variableCount());
        const Meaning ms = meaning(s, sub);
        for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << count); ++bits) {
          pass.coherence.expect(ms.plus.contains(Team(bits)) == eval.plus(*node, Team(bits)) &&
                                    ms.minus.contains(Team(bits)) == eval.minus(*node, Team(bits)),
                                [&] { return sub.toString(); });
        }
      }
    }
  };

  Structure two(2);
  // closed under subformulas, so checking each member covers every subformula
  forEachExhaustivePerfect([&](const NodePtr& node) { visit(two, Formula(node, 2), false); });
  for (const RandomBatch& batch : randomPerfectBatches()) {
    Structure s(batch.universe);
    for (const NodePtr& node : batch.formulas) visit(s, Formula(node, batch.variables), true);
  }
  for (const NodePtr& node : randomImperfect()) visit(two, Formula(node, 2), true);
  forEachExhaustiveSlashed([&](const NodePtr& node) { visit(two, Formula(node, 2), false); });

  pass.secs = secondsSince(start);
  pass.done = true;
  return pass;
}

Outcome criterion4() {
  MeaningPass& pass = meaningPass();
  std::ostringstream d;
  d << pass.formulas << " meanings from the criterion 2 and 3 corpora plus exhaustive slashed formulas; "
    << pass.doubleSuits.summary() << " (shared pass " << seconds(pass.secs) << ")";
  return {pass.doubleSuits.violations == 0, d.str()};
}

Outcome criterion5() {
  const auto start = Clock::now();
  Tally tally;
  Structure two(2);
  std::vector<AlgebraElement> atoms;
  for (const Formula& atom : atomicFormulas(two, 2)) atoms.push_back(meaning(two, atom));
  std::size_t perfect = 0, total = 0;
  for (Signature sig : {Signature::EmptyReduct, Signature::Full}) {
    Subalgebra sub = generateSubalgebra(atoms, 2, 2, sig);
    for (const AlgebraElement& x : sub.elements) {
      ++total;
      const bool p = isPerfect(x);
      perfect += p ? 1 : 0;
      const bool sumIsOne = plusJ(x, neg(x), {}) == one(2, 2);
      const bool productIsZero = timesJ(x, neg(x), {}) == zero(2, 2);
      tally.expect(p == sumIsOne && sumIsOne == productIsZero, [&] { return describe(x); });
    }
  }
  std::ostringstream d;
  d << total << " elements of the empty-slash reduct and full closures (" << perfect << " perfect); "
    << tally.summary() << " (" << seconds(secondsSince(start)) << ")";
  return {tally.violations == 0, d.str()};
}

Outcome criterion6() {
  bool ok = true;
  std::ostringstream d;
  for (auto [u, n] : {std::pair<std::size_t, std::size_t>{2, 1}, {2, 2}, {3, 2}}) {
    for (bool unary : {false, true}) {
      Structure s(u);
      if (unary) s.addRelation("R", 1, {{0}});
      const auto start = Clock::now();
      IsomorphismReport report = verifyIsomorphism(s, n);
      const double secs = secondsSince(start);
      const bool pass = report.passed() && secs < 120.0;
      ok = ok && pass;
      d << "(" << u << "," << n << (unary ? ",R" : ",=") << ") " << (pass ? "PASS" : "FAIL") << " |Cs|="
        << report.classicalSize << " " << seconds(secs) << "; ";
      if (!report.passed()) std::cerr << report.text();
    }
  }
  return {ok, d.str() + "limit 120 s each"};
}

Outcome criterion7() {
  MeaningPass& pass = meaningPass();
  std::ostringstream d;
  d << pass.perfectMeanings << " of " << pass.formulas << " meanings perfect; " << pass.perfection.summary();
  return {pass.perfection.violations == 0 && pass.perfectMeanings > 0, d.str()};
}

Outcome criterion8() {
  MeaningPass& pass = meaningPass();
  std::ostringstream d;
  d << pass.formulas << " formulas (exhaustive corpus closed under subformulas) + " << pass.subformulas
    << " subformulas of random formulas; " << pass.coherence.summary();
  return {pass.coherence.violations == 0, d.str()};
}

Outcome criterion9() {
  const auto start = Clock::now();
  Tally tally;
  std::size_t teamsChecked = 0;
  auto checkTeam = [&](const ValuationSpace& space, Team v, SlashSet j) {
    ++teamsChecked;
    auto where = [&] { return space.format(v) + " / " + j.toString(); };
    auto fs = independentFunctions(space, v, j);
    std::set<ChoiceFunction> got(fs.begin(), fs.end());
    tally.expect(got.size() == fs.size() && got == testing::bruteIndependentFunctions(space, v, j), where);
    for (std::size_t k : {2, 3}) {
      auto cs = saturatedCovers(space, v, j, k);
      std::set<std::vector<Team>> covers(cs.begin(), cs.end());
      tally.expect(covers.size() == cs.size() && covers == testing::bruteSaturatedCovers(space, v, j, k), where);
    }
  };
  for (auto [u, n] : {std::pair<std::size_t, std::size_t>{2, 1}, {3, 1}, {2, 2}, {3, 2}, {2, 3}}) {
    ValuationSpace space(u, n);
    for (Team v : testing::teamsUpTo(space, 6)) {
      for (SlashSet j : testing::allSlashes(n)) checkTeam(space, v, j);
    }
  }
  // ^3 {0,1,2} has too many small teams to list; sample them
  ValuationSpace big(3, 3);
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<std::size_t> size(0, 6), member(0, big.count() - 1);
  for (int i = 0; i < 1500; ++i) {
    Team v;
    const std::size_t want = size(rng);
    while (v.size() < want) v = v | Team::singleton(member(rng));
    for (SlashSet j : testing::allSlashes(3)) checkTeam(big, v, j);
  }
  std::ostringstream d;
  d << teamsChecked << " (team, J) pairs with |V| <= 6, |A| <= 3; " << tally.summary() << " ("
    << seconds(secondsSince(start)) << ")";
  return {tally.violations == 0, d.str()};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"signalling sentence on |A| in {1,2,3}", criterion1},
      {"conservative extension over perfect formulas", criterion2},
      {"perfection preserves trumps and cotrumps", criterion3},
      {"meanings are double suits", criterion4},
      {"perfect iff X +0 ~X = 1 iff X .0 ~X = 0", criterion5},
      {"Cs_N isomorphic to the empty-slash reduct", criterion6},
      {"perfect meanings survive perfection", criterion7},
      {"algebraic meaning equals per-team verdicts", criterion8},
      {"team enumerations match brute force", criterion9},
  };
  std::set<std::size_t> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoul(argv[i]));

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected.empty() && selected.count(i + 1) == 0) continue;
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.passed ? 0 : 1;
    std::cout << (o.passed ? "[PASS] " : "[FAIL] ") << "C" << i + 1 << " " << criteria[i].first << ": " << o.detail
              << std::endl;
  }
  std::cout << (failures == 0 ? "all selected criteria passed" : std::to_string(failures) + " criteria failed")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
