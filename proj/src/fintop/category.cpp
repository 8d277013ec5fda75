#include "liftkit/fintop/category.hpp"

#include <algorithm>

#include "liftkit/fintop/constructions.hpp"
#include "liftkit/fintop/enumerate.hpp"

namespace liftkit::fintop {

namespace {

using Images = std::vector<std::uint8_t>;

struct LiftSearch {
  bool holds = true;
  bool have_square = false;
  Images top, bottom, diagonal;
};

// Visits squares top-major. With `witness` false, stops at the first failure
// and records nothing.
LiftSearch search_lift(const SpaceMap& f, const SpaceMap& g, bool witness) {
  const FiniteSpace& a = f.domain();
  const FiniteSpace& b = f.codomain();
  const FiniteSpace& x = g.domain();
  const FiniteSpace& y = g.codomain();

  std::vector<PointSet> fibre(y.size());
  for (std::size_t p = 0; p < y.size(); ++p) fibre[p] = g.preimage(bit(p));

  LiftSearch out;
  std::vector<PointSet> bottom_cand(b.size());
  std::vector<PointSet> forced(b.size());
  std::vector<PointSet> diag_cand(b.size());

  for_each_monotone(a, x, [&](std::span<const std::uint8_t> top) {
    std::fill(bottom_cand.begin(), bottom_cand.end(), y.points());
    std::fill(forced.begin(), forced.end(), x.points());
    for (std::size_t p = 0; p < a.size(); ++p) {
      bottom_cand[f(p)] &= bit(g(top[p]));
      forced[f(p)] &= bit(top[p]);
    }
    return for_each_monotone(b, y, std::span<const PointSet>(bottom_cand),
                             [&](std::span<const std::uint8_t> bottom) {
      bool empty = false;
      for (std::size_t q = 0; q < b.size(); ++q) {
        diag_cand[q] = fibre[bottom[q]] & forced[q];
        if (!diag_cand[q]) empty = true;
      }
      bool found = false;
      if (!empty) {
        found = !for_each_monotone(b, x, std::span<const PointSet>(diag_cand),
                                   [&](std::span<const std::uint8_t> d) {
          if (witness && !out.have_square) out.diagonal.assign(d.begin(), d.end());
          return false;
        });
      }
      if (!found) {
        out.holds = false;
        if (witness) {
          out.have_square = true;
          out.top.assign(top.begin(), top.end());
          out.bottom.assign(bottom.begin(), bottom.end());
          out.diagonal.clear();
        }
        return false;
      }
      if (witness && !out.have_square) {
        out.have_square = true;
        out.top.assign(top.begin(), top.end());
        out.bottom.assign(bottom.begin(), bottom.end());
      }
      return true;
    });
  });
  return out;
}

}  // namespace

TopCategory::TopCategory() : shared_(std::make_shared<Shared>()) {}

std::vector<TopCategory::Object> TopCategory::objects_cached(std::size_t max_size) const {
  std::lock_guard lock(shared_->mutex);
  auto& all = shared_->objects;
  // Extend the shared listing size by size so earlier pointers stay valid.
  while (shared_->built < max_size + 1) {
    for (auto& s : enumerate_spaces(shared_->built, true)) all.push_back(share(std::move(s)));
    ++shared_->built;
  }
  std::vector<Object> out;
  for (const auto& o : all)
    if (o->size() <= max_size) out.push_back(o);
  return out;
}

std::vector<TopCategory::Object> TopCategory::objects(std::size_t max_size) const {
  return objects_cached(max_size);
}

std::vector<TopCategory::Morphism> TopCategory::homs(const Object& a, const Object& b) const {
  return enumerate_maps(a, b);
}

std::vector<TopCategory::Morphism> TopCategory::morphisms(std::size_t max_size) const {
  {
    std::lock_guard lock(shared_->mutex);
    if (auto it = shared_->morphisms.find(max_size); it != shared_->morphisms.end()) return it->second;
  }
  const auto& objs = objects_cached(max_size);
  std::vector<std::vector<Relabeling>> auts;
  std::vector<std::string> matrices;
  for (const auto& o : objs) {
    auts.push_back(automorphisms(*o));
    matrices.push_back(o->matrix_string());
  }
  std::vector<std::pair<MorphismKey, Morphism>> found;
  Images img;
  for (std::size_t i = 0; i < objs.size(); ++i) {
    for (std::size_t j = 0; j < objs.size(); ++j) {
      for_each_monotone(*objs[i], *objs[j], [&](std::span<const std::uint8_t> f) {
        img.resize(f.size());
        for (const auto& alpha : auts[i]) {
          for (const auto& beta : auts[j]) {
            for (std::size_t x = 0; x < f.size(); ++x) img[alpha[x]] = beta[f[x]];
            if (std::lexicographical_compare(img.begin(), img.end(), f.begin(), f.end())) return true;
          }
        }
        MorphismKey key{objs[i]->size() + objs[j]->size(), objs[i]->size(), matrices[i], matrices[j],
                        Images(f.begin(), f.end())};
        found.emplace_back(std::move(key), SpaceMap::trusted(objs[i], objs[j], Images(f.begin(), f.end())));
        return true;
      });
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<Morphism> out;
  out.reserve(found.size());
  for (auto& [k, m] : found) out.push_back(std::move(m));
  std::lock_guard lock(shared_->mutex);
  return shared_->morphisms.emplace(max_size, std::move(out)).first->second;
}

engine::LiftResult<SpaceMap> TopCategory::lift(const Morphism& f, const Morphism& g) const {
  const LiftSearch s = search_lift(f, g, true);
  engine::LiftResult<SpaceMap> r;
  r.holds = s.holds;
  if (s.have_square) {
    r.square = engine::Square<SpaceMap>{
        SpaceMap::trusted(f.domain_ptr(), g.domain_ptr(), s.top),
        SpaceMap::trusted(f.codomain_ptr(), g.codomain_ptr(), s.bottom)};
    if (s.holds) r.diagonal = SpaceMap::trusted(f.codomain_ptr(), g.domain_ptr(), s.diagonal);
  }
  return r;
}

bool TopCategory::lifts(const Morphism& f, const Morphism& g) const {
  return search_lift(f, g, false).holds;
}

TopCategory::Morphism TopCategory::pullback_leg(const Morphism& g, const Morphism& f) const {
  return pullback(g, f).right;
}

TopCategory::Morphism TopCategory::pushout_leg(const Morphism& f, const Morphism& g) const {
  return pushout(f, g).right;
}

TopCategory::Morphism TopCategory::product(const Morphism& f, const Morphism& g) const {
  return fintop::product(f, g);
}

TopCategory::Morphism TopCategory::coproduct(const Morphism& f, const Morphism& g) const {
  return fintop::coproduct(f, g);
}

std::vector<TopCategory::Morphism> TopCategory::idempotents(const Object& a) const {
  std::vector<Morphism> out;
  for (auto& e : enumerate_maps(a, a))
    if (e.then(e) == e) out.push_back(std::move(e));
  return out;
}

TopCategory::Morphism TopCategory::split(const Morphism& h, const Morphism& ea,
                                         const Morphism& eb) const {
  auto from = inclusion(h.domain_ptr(), ea.image());
  auto to = inclusion(h.codomain_ptr(), eb.image());
  Images img;
  for (std::size_t x = 0; x < from.domain().size(); ++x) {
    const std::uint8_t target = h(from(x));
    std::uint8_t idx = 0;
    for (std::size_t y = 0; y < to.domain().size(); ++y)
      if (to(y) == target) idx = static_cast<std::uint8_t>(y);
    img.push_back(idx);
  }
  return SpaceMap(from.domain_ptr(), to.domain_ptr(), std::move(img));
}

}  // namespace liftkit::fintop
