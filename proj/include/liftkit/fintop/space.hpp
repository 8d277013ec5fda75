#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace liftkit::fintop {

/// Bitmask over the points of a space; bit y set means point y is in the set.
using PointSet = std::uint64_t;

inline constexpr std::size_t kMaxPoints = 64;

inline constexpr PointSet bit(std::size_t x) { return PointSet{1} << x; }

inline constexpr PointSet all_points(std::size_t n) {
  return n >= kMaxPoints ? ~PointSet{0} : (bit(n) - 1);
}

inline int popcount(PointSet s) { return std::popcount(s); }

/// Calls `f(x)` for every member of `s` in increasing order.
template <class F>
void for_each_point(PointSet s, F&& f) {
  while (s) {
    f(static_cast<std::size_t>(std::countr_zero(s)));
    s &= s - 1;
  }
}

using Arrow = std::pair<std::size_t, std::size_t>;

/**
 * A finite topological space, stored as its specialization preorder.
 *
 * `arrow(x, y)` (written x->y, or x↘y) holds iff y lies in the closure of x.
 * A subset is closed iff it is closed under ->-successors and open iff it is
 * closed under ->-predecessors. In the Sierpinski space {a->b} the point a is
 * open and b is closed.
 *
 * Labels are for display only: equality compares the relation, never labels.
 */
class FiniteSpace {
 public:
  FiniteSpace() = default;

  /// Reflexive-transitive closure of `arrows` over `labels.size()` points.
  /// Throws std::invalid_argument on duplicate labels or out-of-range arrows.
  static FiniteSpace from_arrows(std::vector<std::string> labels,
                                 std::span<const Arrow> arrows);

  /// `closures[x]` must already be a preorder (reflexive, transitive).
  static FiniteSpace from_closures(std::vector<PointSet> closures,
                                   std::vector<std::string> labels = {});

  static FiniteSpace discrete(std::size_t n);
  static FiniteSpace antidiscrete(std::size_t n);
  static FiniteSpace point() { return discrete(1); }
  static FiniteSpace empty() { return {}; }

  std::size_t size() const { return closure_.size(); }
  bool is_empty() const { return closure_.empty(); }
  PointSet points() const { return all_points(size()); }

  bool arrow(std::size_t x, std::size_t y) const { return (closure_[x] >> y) & 1U; }
  bool equivalent(std::size_t x, std::size_t y) const { return arrow(x, y) && arrow(y, x); }

  /// cl{x}: every y with x->y.
  PointSet closure(std::size_t x) const { return closure_[x]; }
  /// Smallest open set containing x: every y with y->x.
  PointSet star(std::size_t x) const { return star_[x]; }

  PointSet closure_of(PointSet s) const;
  /// Smallest open set containing `s`.
  PointSet open_hull(PointSet s) const;
  PointSet interior_of(PointSet s) const;
  bool is_closed(PointSet s) const { return closure_of(s) == s; }
  bool is_open(PointSet s) const { return open_hull(s) == s; }
  bool is_clopen(PointSet s) const { return is_closed(s) && is_open(s); }

  /// All open sets, in increasing bitmask order.
  std::vector<PointSet> open_sets() const;
  std::vector<PointSet> closed_sets() const;

  const std::string& label(std::size_t x) const;
  const std::vector<std::string>& labels() const { return labels_; }
  /// Index of the point named `name`, or size() when absent.
  std::size_t find(const std::string& name) const;

  FiniteSpace with_labels(std::vector<std::string> labels) const;
  /// Point x of this space becomes point `to[x]` of the result.
  FiniteSpace permuted(std::span<const std::uint8_t> to) const;
  /// Subspace on `s` with the induced preorder; points keep their order.
  FiniteSpace subspace(PointSet s) const;

  std::span<const PointSet> closures() const { return closure_; }

  /// Row-major 0/1 matrix with rows separated by '/', e.g. "11/01".
  std::string matrix_string() const;

  friend bool operator==(const FiniteSpace& a, const FiniteSpace& b) {
    return a.closure_ == b.closure_;
  }

 private:
  void build_stars();

  std::vector<PointSet> closure_;
  std::vector<PointSet> star_;
  std::vector<std::string> labels_;
};

/// Default display name for point `x` of an unlabeled space: a, b, ..., z, p26, ...
std::string default_label(std::size_t x);

/// True iff `closures` is reflexive and transitive.
bool is_preorder(std::span<const PointSet> closures);

}  // namespace liftkit::fintop
