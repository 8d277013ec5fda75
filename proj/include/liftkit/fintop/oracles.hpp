#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "liftkit/fintop/map.hpp"
#include "liftkit/fintop/space.hpp"

namespace liftkit::fintop {

enum class SpaceProperty {
  T0,
  R0,
  T1,
  Hausdorff,
  Urysohn,
  Regular,
  Normal,
  ExtremallyDisconnected,
  Connected,  // the empty space counts as connected
  Discrete,
  Antidiscrete,
  Empty,
  NonEmpty,
};

enum class MapProperty {
  Surjective,
  Injective,
  DenseImage,
  SubspaceEmbedding,
  ClosedInclusion,
  ClosedMap,
  OpenMap,
  InducedTopology,
  FibrewiseT0,
  FibrewiseT1,
  ClopenImageLaw,
};

std::span<const SpaceProperty> all_space_properties();
std::span<const MapProperty> all_map_properties();

std::string_view name(SpaceProperty p);
std::string_view name(MapProperty p);
std::optional<SpaceProperty> parse_space_property(std::string_view s);
std::optional<MapProperty> parse_map_property(std::string_view s);

// Neighbourhood-level predicates. Sets are bitmasks over the points of `x`.

/// Some open set contains exactly one of the two points.
bool topologically_distinguishable(const FiniteSpace& x, std::size_t p, std::size_t q);
/// Each set is disjoint from the closure of the other.
bool separated(const FiniteSpace& x, PointSet a, PointSet b);
bool separated_by_neighbourhoods(const FiniteSpace& x, PointSet a, PointSet b);
bool separated_by_closed_neighbourhoods(const FiniteSpace& x, PointSet a, PointSet b);

/// Direct set-theoretic evaluation; no lifting machinery involved.
bool space_oracle(const FiniteSpace& x, SpaceProperty p);
bool map_oracle(const SpaceMap& f, MapProperty p);

/// Every two separated sets have disjoint open neighbourhoods.
bool completely_normal(const FiniteSpace& x);

/// f has a continuous section s (f after s is the identity of the codomain).
bool has_section(const SpaceMap& f);
/// f has a continuous retraction r (r after f is the identity of the domain).
bool has_retraction(const SpaceMap& f);

/// Connected components as point sets, ordered by least point.
std::vector<PointSet> components(const FiniteSpace& x);

}  // namespace liftkit::fintop
