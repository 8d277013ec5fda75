#pragma once

#include "liftkit/fintop/map.hpp"
#include "liftkit/fintop/space.hpp"

namespace liftkit::fintop {

/// Componentwise preorder; point (a, b) has index a * |B| + b.
FiniteSpace product(const FiniteSpace& a, const FiniteSpace& b);
/// Disjoint union; points of `a` come first.
FiniteSpace coproduct(const FiniteSpace& a, const FiniteSpace& b);

/// A limit or colimit object with its two legs.
struct Cone {
  SpacePtr space;
  SpaceMap left;
  SpaceMap right;
};

/// Limit of X -f-> Z <-g- Y: the subspace {(x, y) : f x = g y} of X x Y.
/// `left` projects to X, `right` to Y.
Cone pullback(const SpaceMap& f, const SpaceMap& g);

/// Colimit of X <-f- Z -g-> Y: the set pushout, preordered by the closure of
/// the images of both relations. `left` injects X, `right` injects Y.
Cone pushout(const SpaceMap& f, const SpaceMap& g);

SpaceMap product(const SpaceMap& f, const SpaceMap& g);
SpaceMap coproduct(const SpaceMap& f, const SpaceMap& g);

/// The inclusion of the subspace on `points` into `space`.
SpaceMap inclusion(const SpacePtr& space, PointSet points);

}  // namespace liftkit::fintop
