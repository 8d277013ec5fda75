#include <algorithm>
#include <set>

#include "liftkit/fintop/dictionary.hpp"
#include "liftkit/harness/laws.hpp"

namespace liftkit::harness {

namespace {

constexpr const char* kCT = "({a<->b}->{a=b}, {a->b}->{a=b}, {b}->{a->b}, {a<-o->b}->{a=o=b})";
constexpr const char* kProperClass = "({a}->{a->b})^r_{<5}^lr";

std::string slug(std::string s) {
  std::replace(s.begin(), s.end(), '.', '-');
  return s;
}

// Dictionary formulas that are a single orthogonal of explicit generators.
std::vector<const fintop::DictionaryEntry*> one_step_entries() {
  std::vector<const fintop::DictionaryEntry*> out;
  std::set<std::string> seen;
  for (const auto& e : fintop::lifting_dictionary()) {
    if (e.bounded || e.quantifier == fintop::Quantifier::EachPair ||
        e.quantifier == fintop::Quantifier::EachPoint)
      continue;
    if (seen.insert(e.formula).second) out.push_back(&e);
  }
  return out;
}

std::vector<Law> build() {
  using K = LawKind;
  std::vector<Law> laws;
  auto add = [&](Law l) { laws.push_back(std::move(l)); };

  // topology
  add({"enumeration.counts", "topology", K::EnumerationCounts, true,
       "homeomorphism classes 1, 1, 3, 9, 33, 139, 718; labeled 1, 1, 4, 29, 355, 6942",
       "space enumeration matches the published counts (OEIS A001930, A000798)"});
  for (const auto& e : fintop::lifting_dictionary()) {
    if (e.bounded || fintop::is_space_entry(e)) continue;
    add({"map." + slug(e.id), "topology", K::MapDictionary, true, fintop::describe(e),
         "lifting membership agrees with the " + std::string(fintop::name(std::get<fintop::MapProperty>(e.property))) +
             " oracle on every map",
         {e.id}, {std::string(fintop::name(std::get<fintop::MapProperty>(e.property)))}});
  }
  add({"closed.members", "topology", K::MembersSatisfy, true,
       "every member of ({a}->{a->b})^r_{<5} is a closed map", "members of the bounded class are closed maps",
       {"({a}->{a->b})^r_{<5}"}, {"ClosedMap"}, 4});
  add({"closed.generators", "topology", K::MapsSatisfy, true,
       std::string("every map of C_T = ") + kCT + " is closed", "the four C_T generators are closed maps",
       {"{a<->b}->{a=b}", "{a->b}->{a=b}", "{b}->{a->b}", "{a<-o->b}->{a=o=b}"}, {"ClosedMap"}});

  // appendixA
  for (const auto& e : fintop::lifting_dictionary()) {
    if (e.bounded || !fintop::is_space_entry(e)) continue;
    add({"space." + slug(e.id), "appendixA", K::SpaceDictionary, true, fintop::describe(e),
         "lifting formula agrees with the neighbourhood-based oracle on every space", {e.id},
         {std::string(fintop::name(std::get<fintop::SpaceProperty>(e.property)))}});
  }

  // closure
  for (const auto* e : one_step_entries()) {
    add({"closure." + slug(e->id), "closure", K::ClosureLaws, true, e->formula,
         "closure under composition and retracts, pullbacks and products (right classes), pushouts and "
         "coproducts (left classes)",
         {e->formula}, {}, 3});
  }
  add({"closure.direction", "closure", K::ClosureDirection, false,
       "left classes: pushouts and coproducts; right classes: pullbacks and products",
       "which constructions preserve left and right classes, tried in both directions", {}, {}, 3,
       "summarises the closure.* laws, including the constructions not expected to preserve the class"});
  add({"engine.iso-self-lifting", "closure", K::IsoSelfLifting, true, "h lifts against h iff h is an isomorphism",
       "self-lifting characterises isomorphisms", {}, {"iso"}, 3});
  add({"engine.identity-membership", "closure", K::IdentityMembership, true,
       "identities lie in C^l and C^r", "for every registry generator set C", {}, {}, 0});
  add({"engine.antitonicity", "closure", K::Antitonicity, true, "C inside D implies D^l inside C^l and D^r inside C^r",
       "for every pair of registry generator sets, with D the union", {}, {}, 3});
  add({"engine.reflexivity", "closure", K::Reflexivity, true, "C lies inside C^lr and C^rl",
       "every generator is a member of its double orthogonals, with the inner step truncated at the bound", {},
       {}, 4});
  add({"engine.inheritance", "closure", K::Inheritance, true,
       "X->{*} in C^l and a mono A->X in C^l imply A->{*} in C^l",
       "for every registry generator set C and every injective map at the bound", {}, {}, 4});

  // groups
  for (const char* p : {"2", "3", "5"}) {
    add({std::string("groups.prime-to-") + p, "groups", K::PrimeToP, true,
         std::string("H->0 in (Z") + p + "->0)^r iff " + p + " does not divide |H|",
         "every catalog group H", {p}});
  }
  add({"groups.split", "groups", K::SplitLaw, true, "f in {0->G : G in catalog, |G| <= |cod f|}^r iff f has a section",
       "every surjective homomorphism between catalog groups of order <= 8", {}, {"section"}});

  // experimental
  add({"exp.lll-split", "experimental", K::ClassVsReadings, false, "({}->{*})^lll vs maps which split",
       "computed extension compared with split readings", {"({}->{*})^lll"},
       {"split-epi", "split-mono", "split", "iso"}, 3, "all three inner steps quantify over infinite classes"});
  add({"exp.rl-discrete", "experimental", K::ClassVsReadings, false, "({}->{*})^rl vs maps A->A+D, D discrete",
       "computed extension compared with the coproduct-with-discrete reading", {"({}->{*})^rl"},
       {"coproduct-with-discrete"}, 3, "the inner class of surjections is infinite"});
  add({"exp.proper-probe", "experimental", K::TerminalProbe, false,
       std::string(kProperClass) + " contains every K->{*} (finite K is compact)",
       "membership of K->{*} in the proper-map class and in C_T^lr",
       {kProperClass, std::string(kCT) + "^lr"}, {"proper"}, 4, "the l step quantifies over an infinite class"});
  add({"exp.open-point-lr", "experimental", K::ClassVsReadings, false, "({b}->{a->b})^r_{<5}^lr",
       "computed extension compared with direct map properties", {"({b}->{a->b})^r_{<5}^lr"},
       {"ClosedMap", "OpenMap", "ClosedInclusion", "SubspaceEmbedding"}, 4,
       "the l step quantifies over an infinite class"});
  add({"exp.open-point-lrr", "experimental", K::ClassVsReadings, false, "({b}->{a->b})^lrr",
       "computed extension compared with direct map properties", {"({b}->{a->b})^lrr"},
       {"ClosedMap", "OpenMap", "ClosedInclusion", "SubspaceEmbedding"}, 4,
       "every inner step quantifies over an infinite class"});
  add({"exp.normal-lr", "experimental", K::ClassVsReadings, false,
       "({a<-U->x<-V->b}->{a<-U=x=V->b})^lr", "computed extension compared with direct map properties",
       {"({a<-U->x<-V->b}->{a<-U=x=V->b})^lr"}, {"ClosedMap", "OpenMap", "ClosedInclusion", "SubspaceEmbedding"}, 4,
       "the l step quantifies over an infinite class"});
  add({"exp.connected-readings", "experimental", K::ClassVsReadings, false,
       "({a,b}->{a=b})^l vs pi0-injective and clopen-image readings",
       "which description of the class matches", {"({a,b}->{a=b})^l"},
       {"pi0-injective", "disjoint-clopens-disjoint-images", "clopen-images-disjoint"}, 0,
       "two descriptions of the same class are candidates; the comparison decides between them"});
  add({"exp.surjective-r", "experimental", K::ClassVsReadings, false, "({a}->{a<->b})^r vs surjections",
       "stated description compared with the computed class", {"({a}->{a<->b})^r"}, {"surjective"}, 0,
       "the stated description is contradicted at small sizes"});
  add({"exp.clopen-l", "experimental", K::ClassVsReadings, false, "({a}->{a,b})^l vs X empty or f surjective",
       "stated description compared with the computed class", {"({a}->{a,b})^l"},
       {"empty-or-surjective", "clopen-image-law"}, 0, "the stated description is contradicted at small sizes"});
  for (const auto& e : fintop::lifting_dictionary()) {
    if (!e.bounded) continue;
    add({"bounded." + slug(e.id), "experimental", K::BoundedDictionary, false, fintop::describe(e),
         "bounded verdicts compared with the direct oracle", {e.id}, {},
         fintop::is_space_entry(e) ? std::size_t{0} : std::size_t{3},
         "the formula iterates orthogonals of infinite classes"});
  }
  for (const char* p : {"2", "3"}) {
    add({std::string("groups.p-group-") + p, "experimental", K::GroupPGroup, false,
         std::string("H->0 in (Z") + p + "->0)^rr iff H is a " + p + "-group",
         "inner class truncated to catalog groups of order <= 8", {p}, {"p-group"}, 0,
         "the inner class is infinite"});
  }
  add({"groups.nilpotent", "experimental", K::GroupNilpotent, false,
       "H->HxH (diagonal) in {0->G : G arbitrary}^lr vs nilpotent",
       "G ranges over catalog groups of order <= 8; H over catalog groups of order <= 8", {}, {"nilpotent"}, 0,
       "G arbitrary is replaced by a finite catalog and the l step is truncated"});
  add({"groups.solvable", "experimental", K::GroupSolvable, false,
       "0->H in {0->A : A abelian}^lr vs solvable",
       "A ranges over abelian catalog groups of order <= 8; H over the catalog plus S4 and A5", {}, {"solvable"},
       0, "A arbitrary abelian is replaced by a finite catalog and the l step is truncated"});
  add({"groups.cyclic-surjection", "experimental", K::GroupCyclicSurjection, false,
       "f in {0->Zn : n <= 8}^r vs surjective", "finite cyclic stand-in for the infinite generator 0->Z",
       {}, {"surjective"}, 0, "the generator 0->Z is infinite"});
  return laws;
}

}  // namespace

std::span<const Law> law_registry() {
  static const std::vector<Law> laws = build();
  return laws;
}

std::vector<std::string> suite_names() { return {"topology", "appendixA", "closure", "groups", "experimental"}; }

std::vector<std::string> registry_generator_sets() {
  std::vector<std::string> out;
  for (const auto* e : one_step_entries()) {
    std::string gens = e->formula.substr(0, e->formula.rfind(')') + 1);
    if (std::find(out.begin(), out.end(), gens) == out.end()) out.push_back(gens);
  }
  out.emplace_back(kCT);
  return out;
}

}  // namespace liftkit::harness
