#include "liftkit/fintop/canonical.hpp"

#include <algorithm>
#include <climits>

#include "liftkit/fintop/enumerate.hpp"

namespace liftkit::fintop {

namespace {

class ShellSearch {
 public:
  explicit ShellSearch(const FiniteSpace& s)
      : s_(s), n_(s.size()), best_(n_, UINT32_MAX), cur_(n_, 0), order_(n_, 0) {}

  void run() {
    if (n_ == 0) {
      found_.emplace_back();
      return;
    }
    dfs(0, 0);
  }

  std::vector<std::vector<std::uint8_t>>& orders() { return found_; }

 private:
  std::uint32_t chunk(std::size_t v, std::size_t k) const {
    std::uint32_t c = 0;
    for (std::size_t j = 0; j < k; ++j) {
      c = (c << 2) | (s_.arrow(v, order_[j]) ? 2U : 0U) | (s_.arrow(order_[j], v) ? 1U : 0U);
    }
    return c;
  }

  // -1, 0, +1: cur_ prefix of length k against best_.
  int compare_prefix(std::size_t k) const {
    for (std::size_t j = 0; j < k; ++j) {
      if (cur_[j] != best_[j]) return cur_[j] < best_[j] ? -1 : 1;
    }
    return 0;
  }

  void dfs(std::size_t k, PointSet used) {
    for (std::size_t v = 0; v < n_; ++v) {
      if (used & bit(v)) continue;
      const int prefix = compare_prefix(k);
      if (prefix > 0) return;
      order_[k] = static_cast<std::uint8_t>(v);
      const std::uint32_t c = chunk(v, k);
      if (prefix == 0 && c > best_[k]) continue;
      cur_[k] = c;
      if (k + 1 == n_) {
        const int whole = compare_prefix(n_);
        if (whole < 0) {
          best_ = cur_;
          found_.clear();
        }
        if (whole <= 0) found_.push_back(order_);
      } else {
        dfs(k + 1, used | bit(v));
      }
    }
  }

  const FiniteSpace& s_;
  std::size_t n_;
  std::vector<std::uint32_t> best_;
  std::vector<std::uint32_t> cur_;
  std::vector<std::uint8_t> order_;
  std::vector<std::vector<std::uint8_t>> found_;
};

Relabeling invert(const std::vector<std::uint8_t>& order) {
  Relabeling perm(order.size());
  for (std::size_t k = 0; k < order.size(); ++k) perm[order[k]] = static_cast<std::uint8_t>(k);
  return perm;
}

}  // namespace

Canonical canonicalize(const FiniteSpace& space) {
  if (space.size() > kMaxCanonicalSize) {
    throw GuardError("canonical form limited to " + std::to_string(kMaxCanonicalSize) + " points");
  }
  ShellSearch search(space);
  search.run();
  Canonical out;
  for (const auto& order : search.orders()) out.relabelings.push_back(invert(order));
  std::sort(out.relabelings.begin(), out.relabelings.end());
  const FiniteSpace unlabeled = FiniteSpace::from_closures(
      std::vector<PointSet>(space.closures().begin(), space.closures().end()));
  out.space = unlabeled.permuted(out.relabelings.front());
  return out;
}

FiniteSpace canonical_space(const FiniteSpace& space) { return canonicalize(space).space; }

std::string canonical_form(const FiniteSpace& space) {
  return canonical_space(space).matrix_string();
}

bool is_homeomorphic(const FiniteSpace& a, const FiniteSpace& b) {
  return a.size() == b.size() && canonical_space(a) == canonical_space(b);
}

std::vector<Relabeling> automorphisms(const FiniteSpace& space) {
  const std::size_t n = space.size();
  std::vector<Relabeling> out;
  Relabeling perm(n);
  auto dfs = [&](auto&& self, std::size_t x, PointSet used) -> void {
    if (x == n) {
      out.push_back(perm);
      return;
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (used & bit(v)) continue;
      bool ok = space.arrow(x, x) == space.arrow(v, v);
      for (std::size_t q = 0; q < x && ok; ++q) {
        ok = space.arrow(x, q) == space.arrow(v, perm[q]) && space.arrow(q, x) == space.arrow(perm[q], v);
      }
      if (!ok) continue;
      perm[x] = static_cast<std::uint8_t>(v);
      self(self, x + 1, used | bit(v));
    }
  };
  dfs(dfs, 0, 0);
  return out;
}

MorphismKey canonical_key(const SpaceMap& map) {
  const Canonical a = canonicalize(map.domain());
  const Canonical b = canonicalize(map.codomain());
  MorphismKey key;
  key.total = map.total_size();
  key.domain_size = map.domain().size();
  key.domain = a.space.matrix_string();
  key.codomain = b.space.matrix_string();
  std::vector<std::uint8_t> img(map.domain().size());
  bool first = true;
  for (const auto& sigma : a.relabelings) {
    for (const auto& tau : b.relabelings) {
      for (std::size_t x = 0; x < img.size(); ++x) img[sigma[x]] = tau[map(x)];
      if (first || img < key.images) key.images = img;
      first = false;
    }
  }
  return key;
}

SpaceMap canonical_map(const SpaceMap& map) {
  const MorphismKey key = canonical_key(map);
  return SpaceMap::trusted(share(canonical_space(map.domain())),
                           share(canonical_space(map.codomain())), key.images);
}

std::string to_string(const MorphismKey& key) {
  std::string out = "[" + key.domain + "]->[" + key.codomain + "]:";
  for (auto v : key.images) out += std::to_string(v) + ",";
  if (!key.images.empty()) out.pop_back();
  return out;
}

}  // namespace liftkit::fintop
