#include "liftkit/fintop/dictionary.hpp"

#include <array>
#include <map>
#include <mutex>

#include "liftkit/notation/notation.hpp"

namespace liftkit::fintop {

namespace {

using P = SpaceProperty;
using Q = Quantifier;
using MP = MapProperty;

const std::vector<DictionaryEntry>& table() {
  static const std::vector<DictionaryEntry> entries = {
      {"T0", P::T0, Q::TerminalMap, "({a<->b}->{a=b})^r"},
      {"R0", P::R0, Q::TerminalMap, "({x->y}->{x<->y})^r"},
      {"T1", P::T1, Q::TerminalMap, "({a->b}->{a=b})^r"},
      {"Hausdorff", P::Hausdorff, Q::EachPair, "{x->o<-y}->{x=o=y}"},
      {"Urysohn", P::Urysohn, Q::EachPair, "{x->x'<-X->y'<-y}->{x=x'=X=y'=y}"},
      {"Regular", P::Regular, Q::EachPoint, "{x->X<-U->F}->{x=X=U->F}"},
      {"Normal", P::Normal, Q::InitialMap, "({a<-U->x<-V->b}->{a<-U=x=V->b})^l"},
      {"ExtremallyDisconnected", P::ExtremallyDisconnected, Q::InitialMap,
       "({U->Z', Z<-V}->{U->Z'=Z<-V})^l"},
      {"Connected", P::Connected, Q::TerminalMap, "({a,b}->{a=b})^l"},
      {"NonEmpty", P::NonEmpty, Q::TerminalMap, "({}->{*})^l"},
      {"Empty", P::Empty, Q::TerminalMap, "({}->{*})^ll", true},
      {"Discrete", P::Discrete, Q::InitialMap, "({}->{*})^rl", true},
      {"Antidiscrete", P::Antidiscrete, Q::TerminalMap, "({a,b}->{a=b})^rr", true},
      {"Antidiscrete.alt", P::Antidiscrete, Q::TerminalMap, "({a<->b}->{a=b})^lr", true},

      {"Surjective", MP::Surjective, Q::Map, "({}->{*})^r"},
      {"Surjective.alt", MP::Surjective, Q::Map, "({a}->{a<->b})^l"},
      {"Injective", MP::Injective, Q::Map, "({a,b}->{a=b})^r"},
      {"Injective.alt", MP::Injective, Q::Map, "({a<->b}->{a=b})^l"},
      {"DenseImage", MP::DenseImage, Q::Map, "({b}->{a->b})^l"},
      {"InducedTopology", MP::InducedTopology, Q::Map, "({a->b}->{a=b})^l"},
      {"FibrewiseT0", MP::FibrewiseT0, Q::Map, "({a<->b}->{a=b})^r"},
      {"FibrewiseT1", MP::FibrewiseT1, Q::Map, "({a->b}->{a=b})^r"},
      {"ClopenImageLaw", MP::ClopenImageLaw, Q::Map, "({a}->{a,b})^l"},
      {"OpenMap", MP::OpenMap, Q::Map, "({b}->{a->b})^r"},
      {"ClosedMap", MP::ClosedMap, Q::Map, "({a}->{a->b})^r"},
      {"SubspaceEmbedding", MP::SubspaceEmbedding, Q::Map, "({}->{*})^rr", true},
      {"ClosedInclusion", MP::ClosedInclusion, Q::Map, "({b}->{a->b})^lr", true},
  };
  return entries;
}

// Parsed formulas, shared across calls.
struct Parsed {
  std::mutex mutex;
  std::map<std::string, notation::Expr> exprs;
  std::map<std::string, SpaceMap> maps;
};

Parsed& parsed() {
  static Parsed p;
  return p;
}

notation::Expr expr_of(const DictionaryEntry& e) {
  auto& p = parsed();
  std::lock_guard lock(p.mutex);
  auto it = p.exprs.find(e.formula);
  if (it == p.exprs.end()) it = p.exprs.emplace(e.formula, notation::parse_class_expr(e.formula)).first;
  return it->second;
}

SpaceMap map_of(const DictionaryEntry& e) {
  auto& p = parsed();
  std::lock_guard lock(p.mutex);
  auto it = p.maps.find(e.formula);
  if (it == p.maps.end()) it = p.maps.emplace(e.formula, notation::parse_map(e.formula)).first;
  return it->second;
}

TopVerdict each_inclusion(const DictionaryEntry& e, const SpacePtr& x, const TopEvaluator& ev) {
  const SpaceMap test = map_of(e);
  const auto& cat = ev.category();
  TopVerdict v;
  v.kind = engine::VerdictKind::ExactYes;
  const std::size_t n = x->size();
  auto check = [&](std::vector<std::uint8_t> order) {
    const auto sub = share(FiniteSpace::discrete(order.size()));
    const SpaceMap inc(sub, x, std::move(order));
    if (cat.lifts(inc, test)) return true;
    const auto r = cat.lift(inc, test);
    v.kind = engine::VerdictKind::ExactNo;
    v.witness = inc;
    v.square = r.square;
    return false;
  };
  if (e.quantifier == Quantifier::EachPoint) {
    for (std::size_t p = 0; p < n; ++p)
      if (!check({static_cast<std::uint8_t>(p)})) return v;
  } else {
    // Injective maps from the discrete pair, in both orders.
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = 0; q < n; ++q)
        if (p != q && !check({static_cast<std::uint8_t>(p), static_cast<std::uint8_t>(q)}))
          return v;
  }
  return v;
}

}  // namespace

std::span<const DictionaryEntry> lifting_dictionary() { return table(); }

bool is_space_entry(const DictionaryEntry& entry) {
  return std::holds_alternative<SpaceProperty>(entry.property);
}

std::string describe(const DictionaryEntry& e) {
  switch (e.quantifier) {
    case Quantifier::TerminalMap: return "X->{*} in " + e.formula;
    case Quantifier::InitialMap: return "{}->X in " + e.formula;
    case Quantifier::Map: return "f in " + e.formula;
    case Quantifier::EachPair: return "each injective {x,y}->X lifts against " + e.formula;
    case Quantifier::EachPoint: return "each {x}->X lifts against " + e.formula;
  }
  return e.formula;
}

TopVerdict evaluate(const DictionaryEntry& entry, const SpacePtr& x, const TopEvaluator& ev) {
  switch (entry.quantifier) {
    case Quantifier::TerminalMap: return ev.member(expr_of(entry), SpaceMap::to_point(x));
    case Quantifier::InitialMap: return ev.member(expr_of(entry), SpaceMap::from_empty(x));
    case Quantifier::EachPair:
    case Quantifier::EachPoint: return each_inclusion(entry, x, ev);
    case Quantifier::Map: break;
  }
  throw std::invalid_argument("dictionary entry " + entry.id + " applies to maps");
}

TopVerdict evaluate(const DictionaryEntry& entry, const SpaceMap& f, const TopEvaluator& ev) {
  if (entry.quantifier != Quantifier::Map)
    throw std::invalid_argument("dictionary entry " + entry.id + " applies to spaces");
  return ev.member(expr_of(entry), f);
}

}  // namespace liftkit::fintop
