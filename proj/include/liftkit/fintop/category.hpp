#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <vector>

#include "liftkit/engine/category.hpp"
#include "liftkit/fintop/canonical.hpp"
#include "liftkit/fintop/map.hpp"

namespace liftkit::fintop {

/**
 * Finite topological spaces and continuous maps.
 *
 * Objects returned by `objects` and the ends of morphisms from `morphisms`
 * are canonical homeomorphism representatives, shared between calls.
 * hom(empty, X) has one element and hom(X, empty) is empty unless X is.
 */
class TopCategory {
 public:
  using Object = SpacePtr;
  using Morphism = SpaceMap;
  using Key = MorphismKey;

  TopCategory();

  std::vector<Object> objects(std::size_t max_size) const;
  std::vector<Morphism> homs(const Object& a, const Object& b) const;
  Morphism compose(const Morphism& f, const Morphism& g) const { return f.then(g); }
  Morphism identity(const Object& a) const { return SpaceMap::identity(a); }
  const Object& domain(const Morphism& m) const { return m.domain_ptr(); }
  const Object& codomain(const Morphism& m) const { return m.codomain_ptr(); }
  std::size_t size(const Object& a) const { return a->size(); }
  bool equal(const Morphism& f, const Morphism& g) const { return f == g; }
  Key key(const Morphism& m) const { return canonical_key(m); }
  std::vector<Morphism> morphisms(std::size_t max_size) const;

  /// Decides f ⧄ g. Squares are visited in the same order as
  /// engine::check_lifting_naive; the diagonal is built point by point from
  /// the constraints f;d = top and d;g = bottom, with monotonicity pruning.
  engine::LiftResult<Morphism> lift(const Morphism& f, const Morphism& g) const;

  /// Same decision without building witnesses.
  bool lifts(const Morphism& f, const Morphism& g) const;

  /// Leg P -> Z of the pullback of g: X -> Y along f: Z -> Y.
  Morphism pullback_leg(const Morphism& g, const Morphism& f) const;
  /// Leg C -> Q of the pushout of f: A -> B along g: A -> C.
  Morphism pushout_leg(const Morphism& f, const Morphism& g) const;
  Morphism product(const Morphism& f, const Morphism& g) const;
  Morphism coproduct(const Morphism& f, const Morphism& g) const;
  std::vector<Morphism> idempotents(const Object& a) const;
  /// For idempotents ea, eb with h;eb == ea;h: h restricted to Im ea -> Im eb.
  Morphism split(const Morphism& h, const Morphism& ea, const Morphism& eb) const;

 private:
  struct Shared {
    std::mutex mutex;
    std::vector<Object> objects;
    std::size_t built = 0;
    std::map<std::size_t, std::vector<Morphism>> morphisms;
  };
  std::vector<Object> objects_cached(std::size_t max_size) const;

  std::shared_ptr<Shared> shared_;
};

static_assert(engine::Category<TopCategory>);
static_assert(engine::HasFiniteLimits<TopCategory>);

}  // namespace liftkit::fintop
