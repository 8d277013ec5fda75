#include "liftkit/fintop/map.hpp"

#include <stdexcept>

namespace liftkit::fintop {

bool is_monotone(const FiniteSpace& domain, const FiniteSpace& codomain,
                 const std::vector<std::uint8_t>& images) {
  for (std::size_t x = 0; x < domain.size(); ++x) {
    const PointSet need = codomain.closure(images[x]);
    bool ok = true;
    for_each_point(domain.closure(x), [&](std::size_t y) {
      if (!(need & bit(images[y]))) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

SpaceMap::SpaceMap(SpacePtr domain, SpacePtr codomain, std::vector<std::uint8_t> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (!domain_ || !codomain_) throw std::invalid_argument("null space");
  if (images_.size() != domain_->size()) throw std::invalid_argument("assignment length mismatch");
  for (auto v : images_) {
    if (v >= codomain_->size()) throw std::invalid_argument("image outside codomain");
  }
  if (!is_monotone(*domain_, *codomain_, images_)) {
    throw std::invalid_argument("assignment is not monotone");
  }
}

SpaceMap SpaceMap::trusted(SpacePtr domain, SpacePtr codomain, std::vector<std::uint8_t> images) {
  SpaceMap m;
  m.domain_ = std::move(domain);
  m.codomain_ = std::move(codomain);
  m.images_ = std::move(images);
  return m;
}

SpaceMap SpaceMap::identity(SpacePtr space) {
  std::vector<std::uint8_t> img(space->size());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = static_cast<std::uint8_t>(x);
  return trusted(space, space, std::move(img));
}

SpaceMap SpaceMap::from_empty(SpacePtr codomain) {
  return trusted(share(FiniteSpace::empty()), std::move(codomain), {});
}

SpaceMap SpaceMap::to_point(SpacePtr domain) {
  std::vector<std::uint8_t> img(domain->size(), 0);
  return trusted(domain, share(FiniteSpace::point()), std::move(img));
}

PointSet SpaceMap::image_of(PointSet s) const {
  PointSet r = 0;
  for_each_point(s, [&](std::size_t x) { r |= bit(images_[x]); });
  return r;
}

PointSet SpaceMap::preimage(PointSet s) const {
  PointSet r = 0;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    if (s & bit(images_[x])) r |= bit(x);
  }
  return r;
}

SpaceMap SpaceMap::then(const SpaceMap& next) const {
  if (!(*codomain_ == next.domain())) throw std::invalid_argument("maps are not composable");
  std::vector<std::uint8_t> img(images_.size());
  for (std::size_t x = 0; x < img.size(); ++x) img[x] = next.images_[images_[x]];
  return trusted(domain_, next.codomain_, std::move(img));
}

bool SpaceMap::is_injective() const {
  PointSet seen = 0;
  for (auto v : images_) {
    if (seen & bit(v)) return false;
    seen |= bit(v);
  }
  return true;
}

bool SpaceMap::is_surjective() const { return image() == codomain_->points(); }

bool SpaceMap::is_homeomorphism() const {
  if (!is_bijective()) return false;
  for (std::size_t x = 0; x < images_.size(); ++x) {
    for (std::size_t y = 0; y < images_.size(); ++y) {
      if (codomain_->arrow(images_[x], images_[y]) && !domain_->arrow(x, y)) return false;
    }
  }
  return true;
}

}  // namespace liftkit::fintop
