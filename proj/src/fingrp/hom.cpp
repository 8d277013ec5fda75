#include "liftkit/fingrp/hom.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace liftkit::fingrp {

namespace {

constexpr Element kUnset = 255;

// Extends generator images to the whole group; false if inconsistent.
bool extend(const FiniteGroup& g, const FiniteGroup& h, const std::vector<Element>& gens,
            const std::vector<Element>& gen_images, std::vector<Element>& img) {
  img.assign(g.order(), kUnset);
  img[g.identity()] = h.identity();
  std::vector<Element> queue{g.identity()};
  for (std::size_t i = 0; i < queue.size(); ++i) {
    const Element x = queue[i];
    for (std::size_t k = 0; k < gens.size(); ++k) {
      const Element y = g.mul(x, gens[k]);
      const Element v = h.mul(img[x], gen_images[k]);
      if (img[y] == kUnset) {
        img[y] = v;
        queue.push_back(y);
      } else if (img[y] != v) {
        return false;
      }
    }
  }
  return true;
}

std::vector<GroupHom> search(const GroupPtr& g, const GroupPtr& h, bool bijective) {
  if (bijective && g->order() != h->order()) return {};
  if (bijective && g->order_histogram() != h->order_histogram()) return {};
  if (g->order() > kMaxHomDomain)
    throw std::length_error("hom search from " + g->name() + ": order exceeds " + std::to_string(kMaxHomDomain));
  const auto& gens = g->generators();
  std::vector<std::vector<Element>> cand(gens.size());
  double space = 1;
  for (std::size_t k = 0; k < gens.size(); ++k) {
    const std::size_t o = g->element_order(gens[k]);
    for (std::size_t y = 0; y < h->order(); ++y) {
      const std::size_t oy = h->element_order(static_cast<Element>(y));
      if (bijective ? oy == o : o % oy == 0) cand[k].push_back(static_cast<Element>(y));
    }
    space *= static_cast<double>(cand[k].size());
  }
  if (space > static_cast<double>(kMaxHomCandidates))
    throw std::length_error("hom search " + g->name() + " -> " + h->name() + " is too large");

  std::vector<GroupHom> out;
  std::vector<Element> chosen(gens.size()), img;
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    // Prune on the subgroup generated by the generators chosen so far.
    if (k > 0) {
      std::vector<Element> sub_gens(gens.begin(), gens.begin() + k);
      std::vector<Element> sub_imgs(chosen.begin(), chosen.begin() + k);
      if (!extend(*g, *h, sub_gens, sub_imgs, img)) return;
    }
    if (k == gens.size()) {
      if (bijective) {
        std::vector<bool> hit(h->order(), false);
        for (Element e : img) {
          if (hit[e]) return;
          hit[e] = true;
        }
      }
      out.push_back(GroupHom::trusted(g, h, img));
      return;
    }
    for (Element c : cand[k]) {
      chosen[k] = c;
      rec(k + 1);
    }
  };
  if (gens.empty()) {
    out.push_back(GroupHom::zero(g, h));
    return out;
  }
  rec(0);
  return out;
}

}  // namespace

GroupHom::GroupHom(GroupPtr domain, GroupPtr codomain, std::vector<Element> images)
    : domain_(std::move(domain)), codomain_(std::move(codomain)), images_(std::move(images)) {
  if (images_.size() != domain_->order()) throw std::invalid_argument("hom: wrong number of images");
  for (Element e : images_)
    if (e >= codomain_->order()) throw std::invalid_argument("hom: image out of range");
  for (std::size_t a = 0; a < images_.size(); ++a)
    for (std::size_t b = 0; b < images_.size(); ++b)
      if (images_[domain_->mul(static_cast<Element>(a), static_cast<Element>(b))] !=
          codomain_->mul(images_[a], images_[b]))
        throw std::invalid_argument("hom: not a homomorphism " + domain_->name() + " -> " +
                                    codomain_->name());
}

GroupHom GroupHom::trusted(GroupPtr domain, GroupPtr codomain, std::vector<Element> images) {
  GroupHom h;
  h.domain_ = std::move(domain);
  h.codomain_ = std::move(codomain);
  h.images_ = std::move(images);
  return h;
}

GroupHom GroupHom::identity(const GroupPtr& g) {
  std::vector<Element> img(g->order());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = static_cast<Element>(i);
  return trusted(g, g, std::move(img));
}

GroupHom GroupHom::zero(GroupPtr domain, GroupPtr codomain) {
  std::vector<Element> img(domain->order(), codomain->identity());
  return trusted(std::move(domain), std::move(codomain), std::move(img));
}

GroupHom GroupHom::then(const GroupHom& g) const {
  if (!(*codomain_ == g.domain())) throw std::invalid_argument("hom: composing mismatched ends");
  std::vector<Element> img(images_.size());
  for (std::size_t i = 0; i < img.size(); ++i) img[i] = g(images_[i]);
  return trusted(domain_, g.codomain_ptr(), std::move(img));
}

bool GroupHom::is_injective() const {
  return std::count(images_.begin(), images_.end(), codomain_->identity()) == 1;
}

bool GroupHom::is_surjective() const {
  std::vector<bool> hit(codomain_->order(), false);
  for (Element e : images_) hit[e] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

bool GroupHom::is_trivial() const {
  return std::all_of(images_.begin(), images_.end(), [&](Element e) { return e == codomain_->identity(); });
}

std::string GroupHom::describe() const {
  std::string s = domain_->name() + "->" + codomain_->name() + " [";
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(images_[i]);
  }
  return s + "]";
}

std::vector<GroupHom> enumerate_homs(const GroupPtr& g, const GroupPtr& h) { return search(g, h, false); }
std::vector<GroupHom> isomorphisms(const GroupPtr& g, const GroupPtr& h) { return search(g, h, true); }
std::vector<GroupHom> automorphisms(const GroupPtr& g) { return search(g, g, true); }

bool has_section(const GroupHom& f) {
  const auto id = GroupHom::identity(f.codomain_ptr());
  for (const auto& s : enumerate_homs(f.codomain_ptr(), f.domain_ptr()))
    if (s.then(f) == id) return true;
  return false;
}

}  // namespace liftkit::fingrp
