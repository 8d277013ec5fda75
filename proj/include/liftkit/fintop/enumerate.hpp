#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <type_traits>
#include <stdexcept>
#include <vector>

#include "liftkit/fintop/map.hpp"
#include "liftkit/fintop/space.hpp"

namespace liftkit::fintop {

/// Thrown when a request exceeds an enumeration guard.
class GuardError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

inline constexpr std::size_t kMaxEnumerationSize = 7;

namespace detail {

template <class Visit>
class MonotoneSearch {
 public:
  MonotoneSearch(const FiniteSpace& from, const FiniteSpace& to, std::span<const PointSet> candidates,
                 Visit& visit)
      : from_(from), to_(to), candidates_(candidates), visit_(visit), images_(from.size()) {
    succ_before_.resize(from.size());
    pred_before_.resize(from.size());
    for (std::size_t x = 0; x < from.size(); ++x) {
      succ_before_[x] = from.closure(x) & (bit(x) - 1);
      pred_before_[x] = from.star(x) & (bit(x) - 1);
    }
  }

  bool run(std::size_t x) {
    if (x == images_.size()) return visit_(std::span<const std::uint8_t>(images_));
    PointSet allowed = candidates_[x] & to_.points();
    for_each_point(succ_before_[x], [&](std::size_t q) { allowed &= to_.star(images_[q]); });
    for_each_point(pred_before_[x], [&](std::size_t q) { allowed &= to_.closure(images_[q]); });
    while (allowed) {
      images_[x] = static_cast<std::uint8_t>(std::countr_zero(allowed));
      allowed &= allowed - 1;
      if (!run(x + 1)) return false;
    }
    return true;
  }

 private:
  const FiniteSpace& from_;
  const FiniteSpace& to_;
  std::span<const PointSet> candidates_;
  Visit& visit_;
  std::vector<std::uint8_t> images_;
  std::vector<PointSet> succ_before_;
  std::vector<PointSet> pred_before_;
};

}  // namespace detail

/**
 * Visits every monotone map `from -> to` whose value at each x lies in
 * `candidates[x]`, in lexicographic order of the image vector. Assignments
 * are pruned point by point against the arrows to already-placed points.
 * `visit(std::span<const uint8_t>)` returns false to stop; the return value
 * is false iff the search was stopped.
 */
template <class Visit>
bool for_each_monotone(const FiniteSpace& from, const FiniteSpace& to,
                       std::span<const PointSet> candidates, Visit&& visit) {
  detail::MonotoneSearch<std::remove_reference_t<Visit>> search(from, to, candidates, visit);
  return search.run(0);
}

template <class Visit>
bool for_each_monotone(const FiniteSpace& from, const FiniteSpace& to, Visit&& visit) {
  std::vector<PointSet> any(from.size(), to.points());
  return for_each_monotone(from, to, std::span<const PointSet>(any), visit);
}

/// All continuous maps `from -> to`, in lexicographic order of images.
std::vector<SpaceMap> enumerate_maps(const SpacePtr& from, const SpacePtr& to);

std::size_t count_maps(const FiniteSpace& from, const FiniteSpace& to);

/**
 * Spaces with exactly `size` points. Labeled: every preorder on {0..size-1}.
 * Up to homeomorphism: one representative per class, in canonical form,
 * sorted by canonical matrix. Throws GuardError above kMaxEnumerationSize;
 * labeled listings stop at 6 points (use count_spaces for 7).
 */
std::vector<FiniteSpace> enumerate_spaces(std::size_t size, bool up_to_homeomorphism);

/// Homeomorphism representatives of sizes 0..max_size (the empty space first).
std::vector<FiniteSpace> enumerate_spaces_upto(std::size_t max_size);

std::size_t count_spaces(std::size_t size, bool up_to_homeomorphism);

/// Every way to add one new last point to `base`; calls `emit(closures)`
/// with the extended preorder.
void for_each_one_point_extension(const FiniteSpace& base,
                                  const std::function<void(std::vector<PointSet>&&)>& emit);

}  // namespace liftkit::fintop
