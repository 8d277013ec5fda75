#include "liftkit/fintop/space.hpp"

#include <algorithm>
#include <set>

namespace liftkit::fintop {

std::string default_label(std::size_t x) {
  if (x < 26) return std::string(1, static_cast<char>('a' + x));
  return "p" + std::to_string(x);
}

bool is_preorder(std::span<const PointSet> closures) {
  for (std::size_t x = 0; x < closures.size(); ++x) {
    if (!(closures[x] & bit(x))) return false;
    bool ok = true;
    for_each_point(closures[x], [&](std::size_t y) {
      if (y >= closures.size() || (closures[y] & ~closures[x])) ok = false;
    });
    if (!ok) return false;
  }
  return true;
}

FiniteSpace FiniteSpace::from_arrows(std::vector<std::string> labels,
                                     std::span<const Arrow> arrows) {
  const std::size_t n = labels.size();
  if (n > kMaxPoints) throw std::invalid_argument("space has more than 64 points");
  std::set<std::string> seen;
  for (const auto& l : labels) {
    if (!seen.insert(l).second) throw std::invalid_argument("duplicate label '" + l + "'");
  }
  std::vector<PointSet> cl(n);
  for (std::size_t x = 0; x < n; ++x) cl[x] = bit(x);
  for (auto [x, y] : arrows) {
    if (x >= n || y >= n) throw std::invalid_argument("arrow endpoint out of range");
    cl[x] |= bit(y);
  }
  // Warshall over bitmask rows.
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t x = 0; x < n; ++x) {
      if (cl[x] & bit(k)) cl[x] |= cl[k];
    }
  }
  return from_closures(std::move(cl), std::move(labels));
}

FiniteSpace FiniteSpace::from_closures(std::vector<PointSet> closures,
                                       std::vector<std::string> labels) {
  if (closures.size() > kMaxPoints) throw std::invalid_argument("space has more than 64 points");
  if (!labels.empty() && labels.size() != closures.size()) {
    throw std::invalid_argument("label count does not match point count");
  }
  if (!is_preorder(closures)) throw std::invalid_argument("relation is not a preorder");
  FiniteSpace s;
  s.closure_ = std::move(closures);
  s.labels_ = std::move(labels);
  s.build_stars();
  return s;
}

FiniteSpace FiniteSpace::discrete(std::size_t n) {
  std::vector<PointSet> cl(n);
  for (std::size_t x = 0; x < n; ++x) cl[x] = bit(x);
  return from_closures(std::move(cl));
}

FiniteSpace FiniteSpace::antidiscrete(std::size_t n) {
  return from_closures(std::vector<PointSet>(n, all_points(n)));
}

void FiniteSpace::build_stars() {
  star_.assign(size(), 0);
  for (std::size_t x = 0; x < size(); ++x) {
    for_each_point(closure_[x], [&](std::size_t y) { star_[y] |= bit(x); });
  }
}

PointSet FiniteSpace::closure_of(PointSet s) const {
  PointSet r = 0;
  for_each_point(s, [&](std::size_t x) { r |= closure_[x]; });
  return r;
}

PointSet FiniteSpace::open_hull(PointSet s) const {
  PointSet r = 0;
  for_each_point(s, [&](std::size_t x) { r |= star_[x]; });
  return r;
}

PointSet FiniteSpace::interior_of(PointSet s) const {
  PointSet r = 0;
  for (std::size_t x = 0; x < size(); ++x) {
    if ((star_[x] & ~s) == 0) r |= bit(x);
  }
  return r;
}

std::vector<PointSet> FiniteSpace::open_sets() const {
  std::vector<PointSet> out;
  const PointSet full = points();
  for (PointSet s = 0;; s = (s - full) & full) {
    if (is_open(s)) out.push_back(s);
    if (s == full) break;
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<PointSet> FiniteSpace::closed_sets() const {
  std::vector<PointSet> out;
  for (PointSet u : open_sets()) out.push_back(points() & ~u);
  std::sort(out.begin(), out.end());
  return out;
}

const std::string& FiniteSpace::label(std::size_t x) const {
  static const std::vector<std::string> defaults = [] {
    std::vector<std::string> v;
    for (std::size_t i = 0; i < kMaxPoints; ++i) v.push_back(default_label(i));
    return v;
  }();
  return labels_.empty() ? defaults[x] : labels_[x];
}

std::size_t FiniteSpace::find(const std::string& name) const {
  for (std::size_t x = 0; x < size(); ++x) {
    if (label(x) == name) return x;
  }
  return size();
}

FiniteSpace FiniteSpace::with_labels(std::vector<std::string> labels) const {
  return from_closures(closure_, std::move(labels));
}

FiniteSpace FiniteSpace::permuted(std::span<const std::uint8_t> to) const {
  std::vector<PointSet> cl(size(), 0);
  std::vector<std::string> labels(labels_.empty() ? 0 : size());
  for (std::size_t x = 0; x < size(); ++x) {
    PointSet row = 0;
    for_each_point(closure_[x], [&](std::size_t y) { row |= bit(to[y]); });
    cl[to[x]] = row;
    if (!labels.empty()) labels[to[x]] = labels_[x];
  }
  FiniteSpace s;
  s.closure_ = std::move(cl);
  s.labels_ = std::move(labels);
  s.build_stars();
  return s;
}

FiniteSpace FiniteSpace::subspace(PointSet s) const {
  std::vector<std::size_t> keep;
  for_each_point(s & points(), [&](std::size_t x) { keep.push_back(x); });
  std::vector<PointSet> cl(keep.size(), 0);
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < keep.size(); ++i) {
    for (std::size_t j = 0; j < keep.size(); ++j) {
      if (arrow(keep[i], keep[j])) cl[i] |= bit(j);
    }
    if (!labels_.empty()) labels.push_back(labels_[keep[i]]);
  }
  FiniteSpace r;
  r.closure_ = std::move(cl);
  r.labels_ = std::move(labels);
  r.build_stars();
  return r;
}

std::string FiniteSpace::matrix_string() const {
  std::string out;
  for (std::size_t x = 0; x < size(); ++x) {
    if (x) out += '/';
    for (std::size_t y = 0; y < size(); ++y) out += arrow(x, y) ? '1' : '0';
  }
  return out;
}

}  // namespace liftkit::fintop
