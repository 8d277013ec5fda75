#pragma once

#include <functional>
#include <span>
#include <string>

#include "liftkit/fintop/map.hpp"

namespace liftkit::harness {

/// A candidate description of a morphism class, compared against a computed
/// class by the experimental laws.
struct Reading {
  std::string name;
  std::string description;
  std::function<bool(const fintop::SpaceMap&)> holds;
};

/// split-epi, split-mono, split, iso, coproduct-with-discrete,
/// pi0-injective, clopen-images-disjoint, disjoint-clopens-disjoint-images,
/// surjective, empty-or-surjective, clopen-image-law, proper.
std::span<const Reading> readings();
/// Throws std::out_of_range for an unknown name.
const Reading& reading(const std::string& name);

bool is_isomorphism(const fintop::SpaceMap& f);

}  // namespace liftkit::harness
