#pragma once

#include <map>
#include <memory>
#include <mutex>
#include <tuple>
#include <vector>

#include "liftkit/engine/category.hpp"
#include "liftkit/fingrp/hom.hpp"

namespace liftkit::fingrp {

/**
 * Finite groups and homomorphisms, restricted to the catalog.
 *
 * `objects(n)` and `morphisms(n)` range over catalog groups of order <= n;
 * morphism representatives are taken up to automorphisms of both ends.
 * `key` identifies each end with its catalog group by isomorphism, so it
 * throws for groups outside the catalog; `lift` accepts any groups.
 * Automorphism groups are enumerated, so keys and `morphisms(n)` get slow
 * for ends like Z2xZ2xZ2xZ2.
 */
class GroupCategory {
 public:
  using Object = GroupPtr;
  using Morphism = GroupHom;
  /// (total order, domain order, domain catalog index, codomain catalog
  /// index, least images over the automorphism orbit).
  using Key = std::tuple<std::size_t, std::size_t, std::size_t, std::size_t, std::vector<Element>>;

  GroupCategory();

  std::vector<Object> objects(std::size_t max_order) const { return catalog(max_order); }
  std::vector<Morphism> homs(const Object& a, const Object& b) const { return enumerate_homs(a, b); }
  Morphism compose(const Morphism& f, const Morphism& g) const { return f.then(g); }
  Morphism identity(const Object& a) const { return GroupHom::identity(a); }
  const Object& domain(const Morphism& m) const { return m.domain_ptr(); }
  const Object& codomain(const Morphism& m) const { return m.codomain_ptr(); }
  std::size_t size(const Object& a) const { return a->order(); }
  bool equal(const Morphism& f, const Morphism& g) const { return f == g; }
  Key key(const Morphism& m) const;
  std::vector<Morphism> morphisms(std::size_t max_order) const;

  /// Decides f ⧄ g, visiting squares in the order of engine::check_lifting_naive.
  engine::LiftResult<Morphism> lift(const Morphism& f, const Morphism& g) const;
  bool lifts(const Morphism& f, const Morphism& g) const;

  /// Index of the catalog group isomorphic to g, with an isomorphism from
  /// that catalog group to g. Throws std::invalid_argument if there is none.
  std::pair<std::size_t, GroupHom> identify(const GroupPtr& g) const;

 private:
  struct Shared {
    std::mutex mutex;
    std::map<std::size_t, std::vector<GroupHom>> automorphisms;
    std::map<std::size_t, std::vector<Morphism>> morphisms;
  };
  const std::vector<GroupHom>& auts(std::size_t index) const;

  std::shared_ptr<Shared> shared_;
};

static_assert(engine::Category<GroupCategory>);

}  // namespace liftkit::fingrp
