#include "liftkit/fingrp/category.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace liftkit::fingrp {

namespace {

using Images = std::vector<Element>;

struct LiftSearch {
  bool holds = true;
  std::optional<std::size_t> top, bottom, diagonal;
};

LiftSearch search_lift(const std::vector<GroupHom>& tops, const std::vector<GroupHom>& bottoms,
                       const std::vector<GroupHom>& diagonals, const GroupHom& f, const GroupHom& g) {
  std::map<std::pair<Images, Images>, std::size_t> by_triangle;
  for (std::size_t k = 0; k < diagonals.size(); ++k)
    by_triangle.emplace(std::pair{f.then(diagonals[k]).images(), diagonals[k].then(g).images()}, k);
  LiftSearch out;
  std::vector<Images> fj(bottoms.size());
  for (std::size_t b = 0; b < bottoms.size(); ++b) fj[b] = f.then(bottoms[b]).images();
  for (std::size_t t = 0; t < tops.size(); ++t) {
    const Images ig = tops[t].then(g).images();
    for (std::size_t b = 0; b < bottoms.size(); ++b) {
      if (fj[b] != ig) continue;
      auto it = by_triangle.find({tops[t].images(), bottoms[b].images()});
      if (it == by_triangle.end()) {
        out = {false, t, b, std::nullopt};
        return out;
      }
      if (!out.top) out = {true, t, b, it->second};
    }
  }
  return out;
}

}  // namespace

GroupCategory::GroupCategory() : shared_(std::make_shared<Shared>()) {}

const std::vector<GroupHom>& GroupCategory::auts(std::size_t index) const {
  {
    std::lock_guard lock(shared_->mutex);
    if (auto it = shared_->automorphisms.find(index); it != shared_->automorphisms.end()) return it->second;
  }
  auto a = automorphisms(catalog()[index]);
  std::lock_guard lock(shared_->mutex);
  return shared_->automorphisms.emplace(index, std::move(a)).first->second;
}

std::pair<std::size_t, GroupHom> GroupCategory::identify(const GroupPtr& g) const {
  const auto& cat = catalog();
  for (std::size_t i = 0; i < cat.size(); ++i)
    if (cat[i] == g) return {i, GroupHom::identity(g)};
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (cat[i]->order() != g->order()) continue;
    auto isos = isomorphisms(cat[i], g);
    if (!isos.empty()) return {i, isos.front()};
  }
  throw std::invalid_argument("group " + g->name() + " is not isomorphic to a catalog group");
}

GroupCategory::Key GroupCategory::key(const Morphism& m) const {
  auto [di, alpha] = identify(m.domain_ptr());
  auto [ci, beta] = identify(m.codomain_ptr());
  // Transport m to the catalog ends: alpha ; m ; beta^-1.
  Images inv_beta(beta.images().size());
  for (std::size_t x = 0; x < inv_beta.size(); ++x) inv_beta[beta(static_cast<Element>(x))] = static_cast<Element>(x);
  Images base(alpha.images().size());
  for (std::size_t x = 0; x < base.size(); ++x) base[x] = inv_beta[m(alpha(static_cast<Element>(x)))];
  Images best = base, img(base.size());
  for (const auto& a : auts(di)) {
    for (const auto& b : auts(ci)) {
      for (std::size_t x = 0; x < base.size(); ++x) img[a(static_cast<Element>(x))] = b(base[x]);
      if (img < best) best = img;
    }
  }
  const std::size_t dn = m.domain().order();
  return {dn + m.codomain().order(), dn, di, ci, std::move(best)};
}

std::vector<GroupCategory::Morphism> GroupCategory::morphisms(std::size_t max_order) const {
  {
    std::lock_guard lock(shared_->mutex);
    if (auto it = shared_->morphisms.find(max_order); it != shared_->morphisms.end()) return it->second;
  }
  const auto& cat = catalog();
  std::vector<std::pair<Key, Morphism>> found;
  for (std::size_t i = 0; i < cat.size(); ++i) {
    if (cat[i]->order() > max_order) continue;
    for (std::size_t j = 0; j < cat.size(); ++j) {
      if (cat[j]->order() > max_order) continue;
      std::set<Images> seen;
      Images img(cat[i]->order());
      for (const auto& h : enumerate_homs(cat[i], cat[j])) {
        if (seen.count(h.images())) continue;
        Images best = h.images();
        for (const auto& a : auts(i)) {
          for (const auto& b : auts(j)) {
            for (std::size_t x = 0; x < img.size(); ++x) img[a(static_cast<Element>(x))] = b(h(static_cast<Element>(x)));
            seen.insert(img);
            if (img < best) best = img;
          }
        }
        Key k{cat[i]->order() + cat[j]->order(), cat[i]->order(), i, j, best};
        found.emplace_back(std::move(k), GroupHom::trusted(cat[i], cat[j], best));
      }
    }
  }
  std::sort(found.begin(), found.end(), [](const auto& l, const auto& r) { return l.first < r.first; });
  std::vector<Morphism> out;
  for (auto& [k, m] : found) out.push_back(std::move(m));
  std::lock_guard lock(shared_->mutex);
  return shared_->morphisms.emplace(max_order, std::move(out)).first->second;
}

engine::LiftResult<GroupHom> GroupCategory::lift(const Morphism& f, const Morphism& g) const {
  const auto tops = homs(f.domain_ptr(), g.domain_ptr());
  const auto bottoms = homs(f.codomain_ptr(), g.codomain_ptr());
  const auto diagonals = homs(f.codomain_ptr(), g.domain_ptr());
  const LiftSearch s = search_lift(tops, bottoms, diagonals, f, g);
  engine::LiftResult<GroupHom> r;
  r.holds = s.holds;
  if (s.top) r.square = engine::Square<GroupHom>{tops[*s.top], bottoms[*s.bottom]};
  if (s.diagonal) r.diagonal = diagonals[*s.diagonal];
  return r;
}

bool GroupCategory::lifts(const Morphism& f, const Morphism& g) const { return lift(f, g).holds; }

}  // namespace liftkit::fingrp
