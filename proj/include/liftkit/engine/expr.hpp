#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

namespace liftkit::engine {

enum class Side { Left, Right };

inline char side_letter(Side s) { return s == Side::Left ? 'l' : 'r'; }

/// One orthogonal step. `bound = n` restricts the resulting class to
/// morphisms whose domain and codomain both have fewer than n elements.
struct Step {
  Side side = Side::Left;
  std::optional<std::size_t> bound;

  friend bool operator==(const Step&, const Step&) = default;
};

/// An iterated orthogonal of an explicit generator set: steps apply in order,
/// so `(C)^r_{<5}^lr` is generators C with steps [r<5, l, r].
template <class M>
struct OrthExpr {
  std::vector<M> generators;
  std::vector<Step> steps;

  OrthExpr prefix(std::size_t count) const {
    return {generators, std::vector<Step>(steps.begin(), steps.begin() + count)};
  }
};

}  // namespace liftkit::engine
