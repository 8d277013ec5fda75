#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "liftkit/engine/category.hpp"
#include "liftkit/engine/expr.hpp"

namespace liftkit::engine {

enum class ClosureLaw { Composition, Pullback, Pushout, Retract, Product, Coproduct };

inline std::string_view to_string(ClosureLaw law) {
  switch (law) {
    case ClosureLaw::Composition: return "composition";
    case ClosureLaw::Pullback: return "pullback";
    case ClosureLaw::Pushout: return "pushout";
    case ClosureLaw::Retract: return "retract";
    case ClosureLaw::Product: return "product";
    case ClosureLaw::Coproduct: return "coproduct";
  }
  return "?";
}

/// A constructed instance whose result left the class.
template <class M>
struct ClosureViolation {
  /// Class members the construction started from.
  std::vector<M> inputs;
  /// The auxiliary map (pullback/pushout leg partner), if any.
  std::optional<M> along;
  M result;
};

template <class M>
struct ClosureCheck {
  ClosureLaw law;
  /// Side of the class under test.
  Side side;
  /// Whether the law is a theorem for this side (composition, retracts, and
  /// pullbacks/products for right classes, pushouts/coproducts for left ones).
  bool expected;
  std::size_t checked = 0;
  std::size_t violations = 0;
  std::optional<ClosureViolation<M>> first;
};

template <class M>
struct ClosureReport {
  std::vector<ClosureCheck<M>> checks;

  bool expected_laws_hold() const {
    for (const auto& c : checks)
      if (c.expected && c.violations) return false;
    return true;
  }
};

inline bool closure_law_expected(ClosureLaw law, Side side) {
  switch (law) {
    case ClosureLaw::Composition:
    case ClosureLaw::Retract: return true;
    case ClosureLaw::Pullback:
    case ClosureLaw::Product: return side == Side::Right;
    case ClosureLaw::Pushout:
    case ClosureLaw::Coproduct: return side == Side::Left;
  }
  return false;
}

/**
 * Empirical closure laws of the one-step class `expr` (its size bound, if
 * any, is ignored: the laws concern the unbounded class). Every law is tried
 * for both sides' constructions so that the report shows which direction
 * holds. Instances:
 *  - composition: members f, g composable after any automorphism of the
 *    middle object, ends of size <= bound;
 *  - pullback of a member along every map into its codomain, pushout of a
 *    member along every map out of its domain, sources of size <= bound;
 *  - retracts obtained by splitting compatible idempotents on both ends;
 *  - products and coproducts of pairs of members of size <= product_bound.
 */
template <HasFiniteLimits C>
ClosureReport<typename C::Morphism> check_closure_laws(const C& cat, const OrthExpr<typename C::Morphism>& expr,
                                                       std::size_t bound, std::size_t product_bound = 2) {
  using M = typename C::Morphism;
  if (expr.steps.size() != 1) throw std::invalid_argument("closure laws need a one-step class");
  const Side side = expr.steps.front().side;
  auto member = [&](const M& h) {
    for (const auto& g : expr.generators) {
      if (!(side == Side::Left ? decide(cat, h, g) : decide(cat, g, h))) return false;
    }
    return true;
  };

  const auto all = cat.morphisms(bound);
  std::vector<M> members;
  for (const auto& h : all)
    if (member(h)) members.push_back(h);
  const auto objects = cat.objects(bound);

  auto same_object = [&](const typename C::Object& a, const typename C::Object& b) {
    return cat.equal(cat.identity(a), cat.identity(b));
  };
  auto automorphisms = [&](const typename C::Object& b) {
    std::vector<M> out;
    const auto ends = cat.homs(b, b);
    const M id = cat.identity(b);
    for (const auto& h : ends)
      for (const auto& k : ends)
        if (cat.equal(cat.compose(h, k), id) && cat.equal(cat.compose(k, h), id)) {
          out.push_back(h);
          break;
        }
    return out;
  };

  ClosureReport<M> report;
  auto start = [&](ClosureLaw law) -> ClosureCheck<M>& {
    report.checks.push_back({law, side, closure_law_expected(law, side), 0, 0, std::nullopt});
    return report.checks.back();
  };
  auto record = [&](ClosureCheck<M>& check, const M& result, std::vector<M> inputs, std::optional<M> along) {
    ++check.checked;
    if (member(result)) return;
    if (check.violations++ == 0) check.first = ClosureViolation<M>{std::move(inputs), std::move(along), result};
  };

  {
    auto& check = start(ClosureLaw::Composition);
    for (const auto& f : members)
      for (const auto& g : members) {
        if (!same_object(cat.codomain(f), cat.domain(g))) continue;
        for (const auto& alpha : automorphisms(cat.codomain(f))) {
          const M twisted = cat.compose(f, alpha);
          record(check, cat.compose(twisted, g), {twisted, g}, std::nullopt);
        }
      }
  }
  {
    auto& check = start(ClosureLaw::Pullback);
    for (const auto& g : members)
      for (const auto& z : objects)
        for (const auto& f : cat.homs(z, cat.codomain(g))) record(check, cat.pullback_leg(g, f), {g}, f);
  }
  {
    auto& check = start(ClosureLaw::Pushout);
    for (const auto& f : members)
      for (const auto& z : objects)
        for (const auto& g : cat.homs(cat.domain(f), z)) record(check, cat.pushout_leg(f, g), {f}, g);
  }
  {
    auto& check = start(ClosureLaw::Retract);
    for (const auto& h : members)
      for (const auto& ea : cat.idempotents(cat.domain(h)))
        for (const auto& eb : cat.idempotents(cat.codomain(h))) {
          if (!cat.equal(cat.compose(h, eb), cat.compose(ea, h))) continue;
          record(check, cat.split(h, ea, eb), {h, ea, eb}, std::nullopt);
        }
  }
  std::vector<M> small;
  for (const auto& h : members)
    if (cat.size(cat.domain(h)) <= product_bound && cat.size(cat.codomain(h)) <= product_bound) small.push_back(h);
  {
    auto& check = start(ClosureLaw::Product);
    for (const auto& f : small)
      for (const auto& g : small) record(check, cat.product(f, g), {f, g}, std::nullopt);
  }
  {
    auto& check = start(ClosureLaw::Coproduct);
    for (const auto& f : small)
      for (const auto& g : small) record(check, cat.coproduct(f, g), {f, g}, std::nullopt);
  }
  return report;
}

}  // namespace liftkit::engine
