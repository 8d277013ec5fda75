#include "liftkit/harness/readings.hpp"

#include <stdexcept>
#include <vector>

#include "liftkit/fintop/oracles.hpp"

namespace liftkit::harness {

using fintop::PointSet;
using fintop::SpaceMap;

namespace {

std::vector<PointSet> clopen_sets(const fintop::FiniteSpace& x) {
  const auto comps = fintop::components(x);
  std::vector<PointSet> out;
  for (std::size_t m = 0; m < (std::size_t{1} << comps.size()); ++m) {
    PointSet s = 0;
    for (std::size_t i = 0; i < comps.size(); ++i)
      if ((m >> i) & 1U) s |= comps[i];
    out.push_back(s);
  }
  return out;
}

std::size_t component_of(const std::vector<PointSet>& comps, std::size_t p) {
  for (std::size_t i = 0; i < comps.size(); ++i)
    if ((comps[i] >> p) & 1U) return i;
  return comps.size();
}

bool pi0_injective(const SpaceMap& f) {
  const auto dom = fintop::components(f.domain());
  const auto cod = fintop::components(f.codomain());
  std::vector<bool> used(cod.size(), false);
  for (PointSet c : dom) {
    const std::size_t target = component_of(cod, f(static_cast<std::size_t>(std::countr_zero(c))));
    if (used[target]) return false;
    used[target] = true;
  }
  return true;
}

bool clopen_images_disjoint(const SpaceMap& f, bool only_disjoint_sets) {
  const auto sets = clopen_sets(f.domain());
  for (std::size_t i = 0; i < sets.size(); ++i)
    for (std::size_t j = i + 1; j < sets.size(); ++j) {
      if (only_disjoint_sets && (sets[i] & sets[j])) continue;
      if (f.image_of(sets[i]) & f.image_of(sets[j])) return false;
    }
  return true;
}

bool coproduct_with_discrete(const SpaceMap& f) {
  if (!fintop::map_oracle(f, fintop::MapProperty::SubspaceEmbedding)) return false;
  const auto& y = f.codomain();
  const PointSet img = f.image();
  if (!y.is_clopen(img)) return false;
  const PointSet rest = y.points() & ~img;
  bool discrete = true;
  fintop::for_each_point(rest, [&](std::size_t p) {
    if ((y.closure(p) & rest) != fintop::bit(p)) discrete = false;
  });
  return discrete;
}

const std::vector<Reading>& table() {
  using fintop::has_retraction;
  using fintop::has_section;
  static const std::vector<Reading> t = {
      {"split-epi", "f has a continuous section", [](const SpaceMap& f) { return has_section(f); }},
      {"split-mono", "f has a continuous retraction", [](const SpaceMap& f) { return has_retraction(f); }},
      {"split", "f has a section or a retraction",
       [](const SpaceMap& f) { return has_section(f) || has_retraction(f); }},
      {"iso", "f is a homeomorphism", [](const SpaceMap& f) { return is_isomorphism(f); }},
      {"coproduct-with-discrete", "f is the inclusion A -> A + D with D discrete", coproduct_with_discrete},
      {"pi0-injective", "distinct components of X map into distinct components of Y", pi0_injective},
      {"clopen-images-disjoint", "f(U) and f(V) are disjoint for all clopen U != V",
       [](const SpaceMap& f) { return clopen_images_disjoint(f, false); }},
      {"disjoint-clopens-disjoint-images", "f(U) and f(V) are disjoint for all disjoint clopen U, V",
       [](const SpaceMap& f) { return clopen_images_disjoint(f, true); }},
      {"surjective", "f is surjective", [](const SpaceMap& f) { return f.is_surjective(); }},
      {"empty-or-surjective", "X is empty or f is surjective",
       [](const SpaceMap& f) { return f.domain().is_empty() || f.is_surjective(); }},
      {"clopen-image-law", "every non-empty clopen subset of Y meets the image",
       [](const SpaceMap& f) { return fintop::map_oracle(f, fintop::MapProperty::ClopenImageLaw); }},
      {"proper", "f is proper (every map of finite spaces is)", [](const SpaceMap&) { return true; }},
  };
  return t;
}

}  // namespace

bool is_isomorphism(const SpaceMap& f) {
  return f.is_injective() && f.is_surjective() &&
         fintop::map_oracle(f, fintop::MapProperty::InducedTopology);
}

std::span<const Reading> readings() { return table(); }

const Reading& reading(const std::string& name) {
  for (const auto& r : table())
    if (r.name == name) return r;
  throw std::out_of_range("unknown reading " + name);
}

}  // namespace liftkit::harness
