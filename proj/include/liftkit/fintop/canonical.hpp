#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "liftkit/fintop/map.hpp"
#include "liftkit/fintop/space.hpp"

namespace liftkit::fintop {

/// Canonicalization is exhaustive over point orders; refuse larger spaces.
inline constexpr std::size_t kMaxCanonicalSize = 12;

/// A permutation `perm[old_point] = new_point`.
using Relabeling = std::vector<std::uint8_t>;

struct Canonical {
  FiniteSpace space;
  /// Every relabeling that sends the input onto `space`; a coset of Aut.
  std::vector<Relabeling> relabelings;
};

/**
 * Lexicographically minimal relation matrix over all point permutations.
 * Matrix entries are compared in shell order: for k = 1..n-1 and j < k the
 * pair (k->j, j->k), so a partially placed order already fixes a prefix and
 * branches that cannot win are cut early.
 */
Canonical canonicalize(const FiniteSpace& space);

FiniteSpace canonical_space(const FiniteSpace& space);

/// Bit-matrix string of the canonical relabeling, e.g. "11/01" for Sierpinski.
std::string canonical_form(const FiniteSpace& space);

bool is_homeomorphic(const FiniteSpace& a, const FiniteSpace& b);

/// All relation-preserving permutations of the points.
std::vector<Relabeling> automorphisms(const FiniteSpace& space);

/**
 * Isomorphism-invariant key of a map (isomorphism in the arrow category:
 * homeomorphisms on both ends forming a commuting square). Orders maps by
 * total size first, so the smallest key is the smallest witness.
 */
struct MorphismKey {
  std::size_t total = 0;
  std::size_t domain_size = 0;
  std::string domain;
  std::string codomain;
  std::vector<std::uint8_t> images;

  friend auto operator<=>(const MorphismKey&, const MorphismKey&) = default;
  friend bool operator==(const MorphismKey&, const MorphismKey&) = default;
};

MorphismKey canonical_key(const SpaceMap& map);

/// The representative of `map`'s isomorphism class between canonical spaces.
SpaceMap canonical_map(const SpaceMap& map);

std::string to_string(const MorphismKey& key);

}  // namespace liftkit::fintop
