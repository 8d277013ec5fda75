#include "liftkit/fintop/oracles.hpp"

#include <array>

#include "liftkit/fintop/enumerate.hpp"

namespace liftkit::fintop {

namespace {

constexpr std::array kSpaceProperties{
    SpaceProperty::T0,        SpaceProperty::R0,
    SpaceProperty::T1,        SpaceProperty::Hausdorff,
    SpaceProperty::Urysohn,   SpaceProperty::Regular,
    SpaceProperty::Normal,    SpaceProperty::ExtremallyDisconnected,
    SpaceProperty::Connected, SpaceProperty::Discrete,
    SpaceProperty::Antidiscrete, SpaceProperty::Empty,
    SpaceProperty::NonEmpty,
};

constexpr std::array kMapProperties{
    MapProperty::Surjective,      MapProperty::Injective,       MapProperty::DenseImage,
    MapProperty::SubspaceEmbedding, MapProperty::ClosedInclusion, MapProperty::ClosedMap,
    MapProperty::OpenMap,         MapProperty::InducedTopology, MapProperty::FibrewiseT0,
    MapProperty::FibrewiseT1,     MapProperty::ClopenImageLaw,
};

bool distinct_pairs_all(const FiniteSpace& x, auto&& pred) {
  for (std::size_t p = 0; p < x.size(); ++p)
    for (std::size_t q = 0; q < x.size(); ++q)
      if (p != q && !pred(p, q)) return false;
  return true;
}

bool induced(const SpaceMap& f) {
  const auto& a = f.domain();
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y)
      if (a.arrow(x, y) != f.codomain().arrow(f(x), f(y))) return false;
  return true;
}

bool fibres_satisfy(const SpaceMap& f, bool allow_equivalent_only) {
  const auto& a = f.domain();
  for (std::size_t x = 0; x < a.size(); ++x)
    for (std::size_t y = 0; y < a.size(); ++y) {
      if (x == y || f(x) != f(y)) continue;
      // T0 fibres: no two points equivalent. T1 fibres: no arrows at all.
      if (allow_equivalent_only ? a.equivalent(x, y) : a.arrow(x, y)) return false;
    }
  return true;
}

}  // namespace

std::span<const SpaceProperty> all_space_properties() { return kSpaceProperties; }
std::span<const MapProperty> all_map_properties() { return kMapProperties; }

std::string_view name(SpaceProperty p) {
  switch (p) {
    case SpaceProperty::T0: return "T0";
    case SpaceProperty::R0: return "R0";
    case SpaceProperty::T1: return "T1";
    case SpaceProperty::Hausdorff: return "Hausdorff";
    case SpaceProperty::Urysohn: return "Urysohn";
    case SpaceProperty::Regular: return "Regular";
    case SpaceProperty::Normal: return "Normal";
    case SpaceProperty::ExtremallyDisconnected: return "ExtremallyDisconnected";
    case SpaceProperty::Connected: return "Connected";
    case SpaceProperty::Discrete: return "Discrete";
    case SpaceProperty::Antidiscrete: return "Antidiscrete";
    case SpaceProperty::Empty: return "Empty";
    case SpaceProperty::NonEmpty: return "NonEmpty";
  }
  return "?";
}

std::string_view name(MapProperty p) {
  switch (p) {
    case MapProperty::Surjective: return "Surjective";
    case MapProperty::Injective: return "Injective";
    case MapProperty::DenseImage: return "DenseImage";
    case MapProperty::SubspaceEmbedding: return "SubspaceEmbedding";
    case MapProperty::ClosedInclusion: return "ClosedInclusion";
    case MapProperty::ClosedMap: return "ClosedMap";
    case MapProperty::OpenMap: return "OpenMap";
    case MapProperty::InducedTopology: return "InducedTopology";
    case MapProperty::FibrewiseT0: return "FibrewiseT0";
    case MapProperty::FibrewiseT1: return "FibrewiseT1";
    case MapProperty::ClopenImageLaw: return "ClopenImageLaw";
  }
  return "?";
}

std::optional<SpaceProperty> parse_space_property(std::string_view s) {
  for (auto p : kSpaceProperties)
    if (name(p) == s) return p;
  return std::nullopt;
}

std::optional<MapProperty> parse_map_property(std::string_view s) {
  for (auto p : kMapProperties)
    if (name(p) == s) return p;
  return std::nullopt;
}

bool topologically_distinguishable(const FiniteSpace& x, std::size_t p, std::size_t q) {
  return x.star(p) != x.star(q);
}

bool separated(const FiniteSpace& x, PointSet a, PointSet b) {
  return (a & x.closure_of(b)) == 0 && (b & x.closure_of(a)) == 0;
}

// Every open set containing a set contains its open hull, so the hulls are the
// smallest candidate neighbourhoods.
bool separated_by_neighbourhoods(const FiniteSpace& x, PointSet a, PointSet b) {
  return (x.open_hull(a) & x.open_hull(b)) == 0;
}

bool separated_by_closed_neighbourhoods(const FiniteSpace& x, PointSet a, PointSet b) {
  return (x.closure_of(x.open_hull(a)) & x.closure_of(x.open_hull(b))) == 0;
}

bool space_oracle(const FiniteSpace& x, SpaceProperty p) {
  switch (p) {
    case SpaceProperty::T0:
      return distinct_pairs_all(x, [&](auto a, auto b) { return topologically_distinguishable(x, a, b); });
    case SpaceProperty::R0:
      return distinct_pairs_all(x, [&](auto a, auto b) {
        return !topologically_distinguishable(x, a, b) || separated(x, bit(a), bit(b));
      });
    case SpaceProperty::T1:
      return distinct_pairs_all(x, [&](auto a, auto b) { return separated(x, bit(a), bit(b)); });
    case SpaceProperty::Hausdorff:
      return distinct_pairs_all(
          x, [&](auto a, auto b) { return separated_by_neighbourhoods(x, bit(a), bit(b)); });
    case SpaceProperty::Urysohn:
      return distinct_pairs_all(
          x, [&](auto a, auto b) { return separated_by_closed_neighbourhoods(x, bit(a), bit(b)); });
    case SpaceProperty::Regular:
      for (PointSet f : x.closed_sets())
        for (std::size_t p = 0; p < x.size(); ++p)
          if (!(f & bit(p)) && !separated_by_neighbourhoods(x, bit(p), f)) return false;
      return true;
    case SpaceProperty::Normal: {
      const auto closed = x.closed_sets();
      for (PointSet a : closed)
        for (PointSet b : closed)
          if ((a & b) == 0 && !separated_by_neighbourhoods(x, a, b)) return false;
      return true;
    }
    case SpaceProperty::ExtremallyDisconnected:
      for (PointSet u : x.open_sets())
        if (!x.is_open(x.closure_of(u))) return false;
      return true;
    case SpaceProperty::Connected:
      for (PointSet u : x.open_sets())
        if (u != 0 && u != x.points() && x.is_closed(u)) return false;
      return true;
    case SpaceProperty::Discrete:
      for (std::size_t p = 0; p < x.size(); ++p)
        if (x.closure(p) != bit(p)) return false;
      return true;
    case SpaceProperty::Antidiscrete:
      for (std::size_t p = 0; p < x.size(); ++p)
        if (x.closure(p) != x.points()) return false;
      return true;
    case SpaceProperty::Empty: return x.is_empty();
    case SpaceProperty::NonEmpty: return !x.is_empty();
  }
  return false;
}

bool completely_normal(const FiniteSpace& x) {
  const PointSet full = x.points();
  for (PointSet a = 0;; a = (a - full) & full) {
    for (PointSet b = 0;; b = (b - full) & full) {
      if (separated(x, a, b) && !separated_by_neighbourhoods(x, a, b)) return false;
      if (b == full) break;
    }
    if (a == full) break;
  }
  return true;
}

bool map_oracle(const SpaceMap& f, MapProperty p) {
  const auto& cod = f.codomain();
  switch (p) {
    case MapProperty::Surjective: return f.is_surjective();
    case MapProperty::Injective: return f.is_injective();
    case MapProperty::DenseImage: return cod.closure_of(f.image()) == cod.points();
    case MapProperty::SubspaceEmbedding: return f.is_injective() && induced(f);
    case MapProperty::ClosedInclusion:
      return f.is_injective() && induced(f) && cod.is_closed(f.image());
    case MapProperty::ClosedMap:
      for (PointSet c : f.domain().closed_sets())
        if (!cod.is_closed(f.image_of(c))) return false;
      return true;
    case MapProperty::OpenMap:
      for (PointSet u : f.domain().open_sets())
        if (!cod.is_open(f.image_of(u))) return false;
      return true;
    case MapProperty::InducedTopology: return induced(f);
    case MapProperty::FibrewiseT0: return fibres_satisfy(f, true);
    case MapProperty::FibrewiseT1: return fibres_satisfy(f, false);
    case MapProperty::ClopenImageLaw:
      for (PointSet u : cod.open_sets())
        if (u != 0 && cod.is_closed(u) && (u & f.image()) == 0) return false;
      return true;
  }
  return false;
}

bool has_section(const SpaceMap& f) {
  std::vector<PointSet> cand(f.codomain().size());
  for (std::size_t y = 0; y < cand.size(); ++y) cand[y] = f.preimage(bit(y));
  return !for_each_monotone(f.codomain(), f.domain(), std::span<const PointSet>(cand),
                            [](std::span<const std::uint8_t>) { return false; });
}

bool has_retraction(const SpaceMap& f) {
  if (!f.is_injective()) return false;
  std::vector<PointSet> cand(f.codomain().size(), f.domain().points());
  for (std::size_t x = 0; x < f.domain().size(); ++x) cand[f(x)] = bit(x);
  return !for_each_monotone(f.codomain(), f.domain(), std::span<const PointSet>(cand),
                            [](std::span<const std::uint8_t>) { return false; });
}

std::vector<PointSet> components(const FiniteSpace& x) {
  std::vector<PointSet> out;
  PointSet seen = 0;
  for (std::size_t p = 0; p < x.size(); ++p) {
    if (seen & bit(p)) continue;
    PointSet comp = bit(p), frontier = bit(p);
    while (frontier) {
      PointSet next = x.closure_of(frontier) | x.open_hull(frontier);
      frontier = next & ~comp;
      comp |= next;
    }
    seen |= comp;
    out.push_back(comp);
  }
  return out;
}

}  // namespace liftkit::fintop
