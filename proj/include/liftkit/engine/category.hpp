#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <vector>

namespace liftkit::engine {

/// A commuting square `top ; g == f ; bottom` for the pair (f, g).
/// `top: dom f -> dom g`, `bottom: cod f -> cod g`.
template <class M>
struct Square {
  M top;
  M bottom;
};

template <class M>
struct LiftResult {
  bool holds = true;
  /// When holds: a diagonal for `square`. Both are absent when no square commutes.
  std::optional<M> diagonal;
  /// When holds, the first commuting square; otherwise the first one with no diagonal.
  std::optional<Square<M>> square;
};

/**
 * A finitely enumerable category.
 *
 * `compose(f, g)` is diagrammatic (first f, then g). `key` must be invariant
 * under isomorphism in the arrow category and totally ordered, with total
 * object size as the leading component so that the least key is the
 * smallest morphism. `morphisms(n)` returns one representative per
 * isomorphism class among morphisms whose ends have size <= n, sorted by key.
 * `lift(f, g)` decides f ⧄ g; categories may use any strategy there, the
 * generic `check_lifting_naive` is the reference.
 */
template <class C>
concept Category = requires(const C& cat, const typename C::Object& o,
                            const typename C::Morphism& m, std::size_t n) {
  typename C::Object;
  typename C::Morphism;
  typename C::Key;
  { cat.objects(n) } -> std::same_as<std::vector<typename C::Object>>;
  { cat.homs(o, o) } -> std::same_as<std::vector<typename C::Morphism>>;
  { cat.compose(m, m) } -> std::same_as<typename C::Morphism>;
  { cat.identity(o) } -> std::same_as<typename C::Morphism>;
  { cat.domain(m) } -> std::convertible_to<typename C::Object>;
  { cat.codomain(m) } -> std::convertible_to<typename C::Object>;
  { cat.size(o) } -> std::convertible_to<std::size_t>;
  { cat.equal(m, m) } -> std::convertible_to<bool>;
  { cat.key(m) } -> std::same_as<typename C::Key>;
  { cat.morphisms(n) } -> std::same_as<std::vector<typename C::Morphism>>;
  { cat.lift(m, m) } -> std::same_as<LiftResult<typename C::Morphism>>;
};

/// Categories that can build the diagrams used by closure-law checks.
template <class C>
concept HasFiniteLimits = Category<C> && requires(const C& cat, const typename C::Morphism& m,
                                                  const typename C::Object& o) {
  { cat.pullback_leg(m, m) } -> std::same_as<typename C::Morphism>;
  { cat.pushout_leg(m, m) } -> std::same_as<typename C::Morphism>;
  { cat.product(m, m) } -> std::same_as<typename C::Morphism>;
  { cat.coproduct(m, m) } -> std::same_as<typename C::Morphism>;
  { cat.idempotents(o) } -> std::same_as<std::vector<typename C::Morphism>>;
  { cat.split(m, m, m) } -> std::same_as<typename C::Morphism>;
};

/// f ⧄ g without witnesses, using the category's `lifts` fast path when present.
template <Category C>
bool decide(const C& cat, const typename C::Morphism& f, const typename C::Morphism& g) {
  if constexpr (requires { { cat.lifts(f, g) } -> std::convertible_to<bool>; }) {
    return cat.lifts(f, g);
  } else {
    return cat.lift(f, g).holds;
  }
}

template <Category C>
std::size_t total_size(const C& cat, const typename C::Morphism& m) {
  return cat.size(cat.domain(m)) + cat.size(cat.codomain(m));
}

/**
 * Reference decision of f ⧄ g by exhaustive search: every pair (top, bottom)
 * in hom(dom f, dom g) x hom(cod f, cod g) that commutes must admit a
 * diagonal in hom(cod f, dom g). Squares are visited top-major in hom-set
 * order, so the reported counterexample is the first in that order.
 */
template <Category C>
LiftResult<typename C::Morphism> check_lifting_naive(const C& cat, const typename C::Morphism& f,
                                                     const typename C::Morphism& g) {
  using M = typename C::Morphism;
  LiftResult<M> result;
  const auto tops = cat.homs(cat.domain(f), cat.domain(g));
  const auto bottoms = cat.homs(cat.codomain(f), cat.codomain(g));
  const auto diagonals = cat.homs(cat.codomain(f), cat.domain(g));
  for (const auto& i : tops) {
    const M ig = cat.compose(i, g);
    for (const auto& j : bottoms) {
      if (!cat.equal(ig, cat.compose(f, j))) continue;
      std::optional<M> found;
      for (const auto& d : diagonals) {
        if (cat.equal(cat.compose(f, d), i) && cat.equal(cat.compose(d, g), j)) {
          found = d;
          break;
        }
      }
      if (!found) {
        result.holds = false;
        result.diagonal.reset();
        result.square = Square<M>{i, j};
        return result;
      }
      if (!result.square) {
        result.square = Square<M>{i, j};
        result.diagonal = *found;
      }
    }
  }
  return result;
}

}  // namespace liftkit::engine
