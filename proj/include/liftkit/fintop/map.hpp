#pragma once

#include <cstdint>
#include <memory>
#include <vector>

#include "liftkit/fintop/space.hpp"

namespace liftkit::fintop {

using SpacePtr = std::shared_ptr<const FiniteSpace>;

inline SpacePtr share(FiniteSpace s) { return std::make_shared<const FiniteSpace>(std::move(s)); }

/// A continuous (monotone) map between finite spaces.
class SpaceMap {
 public:
  /// Throws std::invalid_argument if `images` has the wrong length, points
  /// outside the codomain, or is not monotone.
  SpaceMap(SpacePtr domain, SpacePtr codomain, std::vector<std::uint8_t> images);

  /// Skips validation; for enumerators that only produce monotone maps.
  static SpaceMap trusted(SpacePtr domain, SpacePtr codomain, std::vector<std::uint8_t> images);

  static SpaceMap identity(SpacePtr space);
  /// The unique map from the empty space.
  static SpaceMap from_empty(SpacePtr codomain);
  /// The unique map to a one-point space.
  static SpaceMap to_point(SpacePtr domain);

  const FiniteSpace& domain() const { return *domain_; }
  const FiniteSpace& codomain() const { return *codomain_; }
  const SpacePtr& domain_ptr() const { return domain_; }
  const SpacePtr& codomain_ptr() const { return codomain_; }

  std::uint8_t operator()(std::size_t x) const { return images_[x]; }
  const std::vector<std::uint8_t>& images() const { return images_; }

  PointSet image() const { return image_of(domain_->points()); }
  PointSet image_of(PointSet s) const;
  PointSet preimage(PointSet s) const;

  /// Diagrammatic composite: first this map, then `next`.
  SpaceMap then(const SpaceMap& next) const;

  bool is_injective() const;
  bool is_surjective() const;
  bool is_bijective() const { return is_injective() && is_surjective(); }
  /// Bijective with monotone inverse.
  bool is_homeomorphism() const;

  std::size_t total_size() const { return domain_->size() + codomain_->size(); }

  friend bool operator==(const SpaceMap& a, const SpaceMap& b) {
    return a.images_ == b.images_ && *a.domain_ == *b.domain_ && *a.codomain_ == *b.codomain_;
  }

 private:
  SpaceMap() = default;

  SpacePtr domain_;
  SpacePtr codomain_;
  std::vector<std::uint8_t> images_;
};

bool is_monotone(const FiniteSpace& domain, const FiniteSpace& codomain,
                 const std::vector<std::uint8_t>& images);

}  // namespace liftkit::fintop
