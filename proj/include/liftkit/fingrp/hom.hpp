#pragma once

#include <string>
#include <vector>

#include "liftkit/fingrp/group.hpp"

namespace liftkit::fingrp {

class GroupHom {
 public:
  /// Throws std::invalid_argument unless `images` is a homomorphism.
  GroupHom(GroupPtr domain, GroupPtr codomain, std::vector<Element> images);
  static GroupHom trusted(GroupPtr domain, GroupPtr codomain, std::vector<Element> images);
  static GroupHom identity(const GroupPtr& g);
  /// The trivial homomorphism.
  static GroupHom zero(GroupPtr domain, GroupPtr codomain);

  const FiniteGroup& domain() const { return *domain_; }
  const FiniteGroup& codomain() const { return *codomain_; }
  const GroupPtr& domain_ptr() const { return domain_; }
  const GroupPtr& codomain_ptr() const { return codomain_; }
  const std::vector<Element>& images() const { return images_; }
  Element operator()(Element x) const { return images_[x]; }

  /// Diagrammatic composite: first *this, then g.
  GroupHom then(const GroupHom& g) const;
  bool is_injective() const;
  bool is_surjective() const;
  bool is_trivial() const;

  /// "Z4->Z2 [0,1,0,1]".
  std::string describe() const;

  friend bool operator==(const GroupHom& a, const GroupHom& b) {
    return a.images_ == b.images_ && *a.domain_ == *b.domain_ && *a.codomain_ == *b.codomain_;
  }

 private:
  GroupHom() = default;
  GroupPtr domain_, codomain_;
  std::vector<Element> images_;
};

/// Size guards for `enumerate_homs`.
inline constexpr std::size_t kMaxHomDomain = 16;
inline constexpr std::size_t kMaxHomCandidates = 20'000'000;

/// All homomorphisms g -> h, lexicographic by images of the generators of g.
/// Throws std::length_error when |g| > kMaxHomDomain or the generator-image
/// search space exceeds kMaxHomCandidates.
std::vector<GroupHom> enumerate_homs(const GroupPtr& g, const GroupPtr& h);
std::vector<GroupHom> isomorphisms(const GroupPtr& g, const GroupPtr& h);
std::vector<GroupHom> automorphisms(const GroupPtr& g);
/// A homomorphism s with s;f = id, if any.
bool has_section(const GroupHom& f);

}  // namespace liftkit::fingrp
