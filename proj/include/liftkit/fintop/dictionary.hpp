#pragma once

#include <span>
#include <string>
#include <variant>

#include "liftkit/engine/evaluator.hpp"
#include "liftkit/fintop/category.hpp"
#include "liftkit/fintop/oracles.hpp"

namespace liftkit::fintop {

/// How a dictionary formula is applied to a space X or a map f.
enum class Quantifier {
  TerminalMap,  // X -> {*} belongs to the class
  InitialMap,   // {} -> X belongs to the class
  Map,          // f belongs to the class
  EachPair,     // every injective {x,y} -> X lifts against `test`
  EachPoint,    // every {x} -> X lifts against `test`
};

struct DictionaryEntry {
  std::string id;
  std::variant<SpaceProperty, MapProperty> property;
  Quantifier quantifier;
  /// Class expression for the member quantifiers, test map for the others.
  std::string formula;
  /// True when the formula involves an orthogonal of an infinite class, so
  /// that only bounded verdicts are possible.
  bool bounded = false;
};

/// Every lifting formula with a direct oracle; several may share a property.
std::span<const DictionaryEntry> lifting_dictionary();

/// Human-readable rendering, e.g. "X->{*} in ({a<->b}->{a=b})^r".
std::string describe(const DictionaryEntry& entry);

using TopEvaluator = engine::Evaluator<TopCategory>;
using TopVerdict = engine::Verdict<SpaceMap>;

/// Applies a space entry to `x`. For point-quantified entries the witness is
/// the failing inclusion and the square is the one without a diagonal.
TopVerdict evaluate(const DictionaryEntry& entry, const SpacePtr& x, const TopEvaluator& ev);
TopVerdict evaluate(const DictionaryEntry& entry, const SpaceMap& f, const TopEvaluator& ev);

bool is_space_entry(const DictionaryEntry& entry);

}  // namespace liftkit::fintop
