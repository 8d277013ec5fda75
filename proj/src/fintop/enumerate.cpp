#include "liftkit/fintop/enumerate.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>

#include "liftkit/fintop/canonical.hpp"

namespace liftkit::fintop {

std::vector<SpaceMap> enumerate_maps(const SpacePtr& from, const SpacePtr& to) {
  std::vector<SpaceMap> out;
  for_each_monotone(*from, *to, [&](std::span<const std::uint8_t> img) {
    out.push_back(SpaceMap::trusted(from, to, {img.begin(), img.end()}));
    return true;
  });
  return out;
}

std::size_t count_maps(const FiniteSpace& from, const FiniteSpace& to) {
  std::size_t n = 0;
  for_each_monotone(from, to, [&](std::span<const std::uint8_t>) {
    ++n;
    return true;
  });
  return n;
}

void for_each_one_point_extension(const FiniteSpace& base,
                                  const std::function<void(std::vector<PointSet>&&)>& emit) {
  const std::size_t n = base.size();
  if (n + 1 > kMaxPoints) throw GuardError("space too large to extend");
  const auto closed = base.closed_sets();
  const auto open = base.open_sets();
  for (PointSet below : closed) {
    for (PointSet above : open) {
      // Every u above the new point must reach every v below it.
      bool ok = true;
      for_each_point(above, [&](std::size_t u) {
        if ((base.closure(u) & below) != below) ok = false;
      });
      if (!ok) continue;
      std::vector<PointSet> cl(base.closures().begin(), base.closures().end());
      for_each_point(above, [&](std::size_t u) { cl[u] |= bit(n); });
      cl.push_back(below | bit(n));
      emit(std::move(cl));
    }
  }
}

namespace {

void check_guard(std::size_t size) {
  if (size > kMaxEnumerationSize) {
    throw GuardError("space enumeration is limited to " + std::to_string(kMaxEnumerationSize) +
                     " points");
  }
}

bool closure_less(const FiniteSpace& a, const FiniteSpace& b) {
  return std::lexicographical_compare(a.closures().begin(), a.closures().end(),
                                      b.closures().begin(), b.closures().end());
}

// Homeomorphism representatives by size, built by one-point extension of the
// previous size and deduplicated by canonical form.
class RepresentativeCache {
 public:
  const std::vector<FiniteSpace>& get(std::size_t size) {
    std::lock_guard lock(mutex_);
    if (levels_.empty()) levels_.push_back({FiniteSpace::empty()});
    while (levels_.size() <= size) {
      std::map<std::string, FiniteSpace> found;
      for (const auto& base : levels_.back()) {
        for_each_one_point_extension(base, [&](std::vector<PointSet>&& cl) {
          FiniteSpace c = canonical_space(FiniteSpace::from_closures(std::move(cl)));
          auto key = c.matrix_string();
          found.try_emplace(std::move(key), std::move(c));
        });
      }
      std::vector<FiniteSpace> level;
      for (auto& [key, space] : found) level.push_back(std::move(space));
      levels_.push_back(std::move(level));
    }
    return levels_[size];
  }

 private:
  std::mutex mutex_;
  std::vector<std::vector<FiniteSpace>> levels_;
};

RepresentativeCache& cache() {
  static RepresentativeCache c;
  return c;
}

template <class Emit>
void for_each_labeled(std::size_t size, const FiniteSpace& base, Emit& emit) {
  if (base.size() == size) {
    emit(base);
    return;
  }
  for_each_one_point_extension(base, [&](std::vector<PointSet>&& cl) {
    for_each_labeled(size, FiniteSpace::from_closures(std::move(cl)), emit);
  });
}

}  // namespace

std::vector<FiniteSpace> enumerate_spaces(std::size_t size, bool up_to_homeomorphism) {
  check_guard(size);
  if (up_to_homeomorphism) return cache().get(size);
  if (size > 6) throw GuardError("labeled listing is limited to 6 points; use count_spaces");
  std::vector<FiniteSpace> out;
  auto emit = [&](const FiniteSpace& s) { out.push_back(s); };
  for_each_labeled(size, FiniteSpace::empty(), emit);
  std::sort(out.begin(), out.end(), closure_less);
  return out;
}

std::vector<FiniteSpace> enumerate_spaces_upto(std::size_t max_size) {
  check_guard(max_size);
  std::vector<FiniteSpace> out;
  for (std::size_t n = 0; n <= max_size; ++n) {
    const auto& level = cache().get(n);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

std::size_t count_spaces(std::size_t size, bool up_to_homeomorphism) {
  check_guard(size);
  if (up_to_homeomorphism) return cache().get(size).size();
  std::size_t count = 0;
  auto emit = [&](const FiniteSpace&) { ++count; };
  for_each_labeled(size, FiniteSpace::empty(), emit);
  return count;
}

}  // namespace liftkit::fintop
