#include <bit>
#include <functional>
#include <set>

#include "doctest.h"
#include "liftkit/fintop/canonical.hpp"
#include "liftkit/fintop/category.hpp"
#include "liftkit/fintop/constructions.hpp"
#include "liftkit/fintop/enumerate.hpp"
#include "liftkit/fintop/oracles.hpp"
#include "liftkit/notation/notation.hpp"

using namespace liftkit::fintop;
using liftkit::notation::parse_map;
using liftkit::notation::parse_space;

namespace {

// Reference topology computed from the definition, without closures/stars.
struct Topology {
  std::size_t n = 0;
  PointSet full = 0;
  std::vector<PointSet> open, closed;

  explicit Topology(const FiniteSpace& x) : n(x.size()), full(x.points()) {
    for (PointSet s = 0; s <= full; ++s) {
      bool is_open = true;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
          if ((s >> b & 1) && x.arrow(a, b) && !(s >> a & 1)) is_open = false;
      if (is_open) {
        open.push_back(s);
        closed.push_back(full & ~s);
      }
      if (s == full) break;
    }
  }
  bool is_open(PointSet s) const { return std::find(open.begin(), open.end(), s) != open.end(); }
  bool is_closed(PointSet s) const { return std::find(closed.begin(), closed.end(), s) != closed.end(); }
  PointSet closure(PointSet s) const {
    PointSet c = full;
    for (PointSet f : closed)
      if ((f & s) == s) c &= f;
    return c;
  }
  bool disjoint_open_around(PointSet a, PointSet b) const {
    for (PointSet u : open)
      for (PointSet v : open)
        if ((u & a) == a && (v & b) == b && (u & v) == 0) return true;
    return false;
  }
};

bool naive_space(const FiniteSpace& x, SpaceProperty p) {
  const Topology t(x);
  auto pairs = [&](auto&& pred) {
    for (std::size_t a = 0; a < t.n; ++a)
      for (std::size_t b = 0; b < t.n; ++b)
        if (a != b && !pred(a, b)) return false;
    return true;
  };
  auto one_sided = [&](std::size_t a, std::size_t b) {
    for (PointSet u : t.open)
      if ((u >> a & 1) && !(u >> b & 1)) return true;
    return false;
  };
  switch (p) {
    case SpaceProperty::T0: return pairs([&](auto a, auto b) { return one_sided(a, b) || one_sided(b, a); });
    case SpaceProperty::T1: return pairs([&](auto a, auto b) { return one_sided(a, b); });
    case SpaceProperty::R0:
      return pairs([&](auto a, auto b) {
        const bool distinguishable = one_sided(a, b) || one_sided(b, a);
        return !distinguishable || (one_sided(a, b) && one_sided(b, a));
      });
    case SpaceProperty::Hausdorff:
      return pairs([&](auto a, auto b) { return t.disjoint_open_around(bit(a), bit(b)); });
    case SpaceProperty::Urysohn:
      return pairs([&](auto a, auto b) {
        for (PointSet u : t.open)
          for (PointSet v : t.open)
            if ((u >> a & 1) && (v >> b & 1) && (t.closure(u) & t.closure(v)) == 0) return true;
        return false;
      });
    case SpaceProperty::Regular:
      for (PointSet f : t.closed)
        for (std::size_t a = 0; a < t.n; ++a)
          if (!(f >> a & 1) && !t.disjoint_open_around(bit(a), f)) return false;
      return true;
    case SpaceProperty::Normal:
      for (PointSet a : t.closed)
        for (PointSet b : t.closed)
          if ((a & b) == 0 && !t.disjoint_open_around(a, b)) return false;
      return true;
    case SpaceProperty::ExtremallyDisconnected:
      for (PointSet u : t.open)
        if (!t.is_open(t.closure(u))) return false;
      return true;
    case SpaceProperty::Connected:
      for (PointSet u : t.open)
        if (u != 0 && u != t.full && t.is_closed(u)) return false;
      return true;
    case SpaceProperty::Discrete: return t.open.size() == (std::size_t{1} << t.n);
    case SpaceProperty::Antidiscrete: return t.open.size() <= 2;
    case SpaceProperty::Empty: return t.n == 0;
    case SpaceProperty::NonEmpty: return t.n > 0;
  }
  return false;
}

PointSet image(const SpaceMap& f, PointSet s) {
  PointSet out = 0;
  for (std::size_t x = 0; x < f.domain().size(); ++x)
    if (s >> x & 1) out |= bit(f(x));
  return out;
}

PointSet preimage(const SpaceMap& f, PointSet s) {
  PointSet out = 0;
  for (std::size_t x = 0; x < f.domain().size(); ++x)
    if (s >> f(x) & 1) out |= bit(x);
  return out;
}

bool naive_map(const SpaceMap& f, MapProperty p) {
  const Topology a(f.domain()), b(f.codomain());
  const PointSet im = image(f, a.full);
  bool injective = true;
  for (std::size_t x = 0; x < a.n; ++x)
    for (std::size_t y = 0; y < x; ++y)
      if (f(x) == f(y)) injective = false;
  auto induced = [&] {
    std::set<PointSet> pulled;
    for (PointSet u : b.open) pulled.insert(preimage(f, u));
    return pulled == std::set<PointSet>(a.open.begin(), a.open.end());
  };
  auto fibres = [&](SpaceProperty q) {
    for (std::size_t y = 0; y < b.n; ++y)
      if (!naive_space(f.domain().subspace(preimage(f, bit(y))), q)) return false;
    return true;
  };
  switch (p) {
    case MapProperty::Surjective: return im == b.full;
    case MapProperty::Injective: return injective;
    case MapProperty::DenseImage: return b.closure(im) == b.full;
    case MapProperty::SubspaceEmbedding: return injective && induced();
    case MapProperty::ClosedInclusion: return injective && induced() && b.is_closed(im);
    case MapProperty::ClosedMap:
      for (PointSet c : a.closed)
        if (!b.is_closed(image(f, c))) return false;
      return true;
    case MapProperty::OpenMap:
      for (PointSet u : a.open)
        if (!b.is_open(image(f, u))) return false;
      return true;
    case MapProperty::InducedTopology: return induced();
    case MapProperty::FibrewiseT0: return fibres(SpaceProperty::T0);
    case MapProperty::FibrewiseT1: return fibres(SpaceProperty::T1);
    case MapProperty::ClopenImageLaw:
      for (PointSet u : b.open)
        if (u != 0 && b.is_closed(u) && (u & im) == 0) return false;
      return true;
  }
  return false;
}

const TopCategory& cat() {
  static const TopCategory c;
  return c;
}

}  // namespace

TEST_CASE("property names round-trip") {
  for (auto p : all_space_properties()) CHECK(parse_space_property(name(p)) == p);
  for (auto p : all_map_properties()) CHECK(parse_map_property(name(p)) == p);
  CHECK_FALSE(parse_space_property("T7").has_value());
}

TEST_CASE("space oracles match open-set search") {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& x : enumerate_spaces(n, true))
      for (auto p : all_space_properties())
        CHECK_MESSAGE(space_oracle(x, p) == naive_space(x, p), name(p), " on ", x.matrix_string());
}

TEST_CASE("map oracles match open-set search") {
  for (const auto& f : cat().morphisms(3))
    for (auto p : all_map_properties()) CHECK_MESSAGE(map_oracle(f, p) == naive_map(f, p), name(p));
}

TEST_CASE("oracle examples") {
  CHECK(space_oracle(parse_space("{a->b}"), SpaceProperty::T0));
  CHECK_FALSE(space_oracle(parse_space("{a<->b}"), SpaceProperty::T0));
  const auto five = parse_space("{a<-U->x<-V->b}");
  CHECK_FALSE(space_oracle(five, SpaceProperty::Normal));
  CHECK(map_oracle(parse_map("{a}->{a->b}"), MapProperty::DenseImage));
  CHECK_FALSE(map_oracle(parse_map("{b}->{a->b}"), MapProperty::DenseImage));
  CHECK(space_oracle(parse_space("{a->b}"), SpaceProperty::Connected));
  CHECK(space_oracle(FiniteSpace::empty(), SpaceProperty::Connected));
  CHECK_FALSE(space_oracle(FiniteSpace::discrete(2), SpaceProperty::Connected));
}

TEST_CASE("separation predicates") {
  const auto s = parse_space("{a->b}");
  CHECK(topologically_distinguishable(s, 0, 1));
  CHECK_FALSE(separated(s, bit(0), bit(1)));
  CHECK(separated(FiniteSpace::discrete(2), bit(0), bit(1)));
  CHECK_FALSE(separated_by_neighbourhoods(s, bit(0), bit(1)));
  // o is open and lies in every neighbourhood of x and of y.
  const auto v = parse_space("{x<-o->y}");
  CHECK(separated(v, bit(0), bit(2)));
  CHECK_FALSE(separated_by_neighbourhoods(v, bit(0), bit(2)));
  // o is closed: {x}, {y} are disjoint open sets with overlapping closures.
  const auto w = parse_space("{x->o<-y}");
  CHECK(separated_by_neighbourhoods(w, bit(0), bit(2)));
  CHECK_FALSE(separated_by_closed_neighbourhoods(w, bit(0), bit(2)));
}

TEST_CASE("continuity is preimage of closed sets being closed") {
  for (std::size_t n = 0; n <= 3; ++n)
    for (std::size_t m = 0; m <= 3; ++m)
      for (const auto& a : enumerate_spaces(n, true))
        for (const auto& b : enumerate_spaces(m, true)) {
          const Topology ta(a), tb(b);
          std::vector<std::uint8_t> img(n, 0);
          std::function<void(std::size_t)> rec = [&](std::size_t i) {
            if (i == n) {
              bool preimages_closed = true;
              for (PointSet c : tb.closed) {
                PointSet pre = 0;
                for (std::size_t x = 0; x < n; ++x)
                  if (c >> img[x] & 1) pre |= bit(x);
                preimages_closed = preimages_closed && ta.is_closed(pre);
              }
              CHECK(is_monotone(a, b, img) == preimages_closed);
              return;
            }
            for (std::size_t v = 0; v < m; ++v) {
              img[i] = static_cast<std::uint8_t>(v);
              rec(i + 1);
            }
          };
          rec(0);
        }
}

TEST_CASE("sections, retractions and components") {
  for (const auto& f : cat().morphisms(3)) {
    bool section = false, retraction = false;
    for (const auto& s : enumerate_maps(f.codomain_ptr(), f.domain_ptr())) {
      section = section || s.then(f) == SpaceMap::identity(f.codomain_ptr());
      retraction = retraction || f.then(s) == SpaceMap::identity(f.domain_ptr());
    }
    CHECK(has_section(f) == section);
    CHECK(has_retraction(f) == retraction);
  }
  CHECK(components(parse_space("{a->b, c, d<-e}")) == std::vector<PointSet>{0b00011, 0b00100, 0b11000});
  CHECK(components(FiniteSpace::empty()).empty());
  for (std::size_t n = 1; n <= 4; ++n)
    for (const auto& x : enumerate_spaces(n, true)) {
      const auto cs = components(x);
      PointSet all = 0;
      for (PointSet c : cs) {
        CHECK(x.is_clopen(c));
        CHECK(space_oracle(x.subspace(c), SpaceProperty::Connected));
        CHECK((all & c) == 0);
        all |= c;
      }
      CHECK(all == x.points());
    }
}

TEST_CASE("products") {
  const auto s = parse_space("{a->b}");
  const auto p = product(s, s);
  REQUIRE(p.size() == 4);
  // Unions of the boxes U x V: {}, {aa}, {aa,ab}, {aa,ba}, {aa,ab,ba}, all.
  CHECK(p.open_sets().size() == 6);
  CHECK(Topology(p).open.size() == 6);
  // (a,a) -> (a,b), (b,a) -> (b,b)
  CHECK(p.arrow(0, 1));
  CHECK(p.arrow(0, 2));
  CHECK(p.arrow(1, 3));
  CHECK(p.arrow(2, 3));
  CHECK_FALSE(p.arrow(1, 2));
  CHECK_FALSE(p.arrow(3, 0));
}

TEST_CASE("product and coproduct universal properties") {
  const auto objs = cat().objects(2);
  for (const auto& a : objs)
    for (const auto& b : objs) {
      const auto p = share(product(*a, *b));
      std::vector<std::uint8_t> pa, pb;
      for (std::size_t i = 0; i < p->size(); ++i) {
        pa.push_back(static_cast<std::uint8_t>(i / b->size()));
        pb.push_back(static_cast<std::uint8_t>(i % b->size()));
      }
      const SpaceMap proj_a(p, a, pa), proj_b(p, b, pb);
      const auto c = share(coproduct(*a, *b));
      std::vector<std::uint8_t> ia, ib;
      for (std::size_t i = 0; i < a->size(); ++i) ia.push_back(static_cast<std::uint8_t>(i));
      for (std::size_t i = 0; i < b->size(); ++i) ib.push_back(static_cast<std::uint8_t>(a->size() + i));
      const SpaceMap in_a(a, c, ia), in_b(b, c, ib);
      for (const auto& t : cat().objects(3)) {
        for (const auto& u : cat().homs(t, a))
          for (const auto& v : cat().homs(t, b)) {
            int factor = 0;
            for (const auto& w : cat().homs(t, p)) factor += w.then(proj_a) == u && w.then(proj_b) == v;
            CHECK(factor == 1);
          }
        for (const auto& u : cat().homs(a, t))
          for (const auto& v : cat().homs(b, t)) {
            int factor = 0;
            for (const auto& w : cat().homs(c, t)) factor += in_a.then(w) == u && in_b.then(w) == v;
            CHECK(factor == 1);
          }
      }
    }
}

TEST_CASE("pullback and pushout universal properties") {
  const auto objs = cat().objects(2);
  const auto tests = cat().objects(2);
  for (const auto& x : objs)
    for (const auto& y : objs)
      for (const auto& z : objs)
        for (const auto& f : cat().homs(x, z))
          for (const auto& g : cat().homs(y, z)) {
            const Cone pb = pullback(f, g);
            CHECK(pb.left.then(f) == pb.right.then(g));
            for (const auto& t : tests)
              for (const auto& u : cat().homs(t, x))
                for (const auto& v : cat().homs(t, y)) {
                  if (!(u.then(f) == v.then(g))) continue;
                  int factor = 0;
                  for (const auto& w : cat().homs(t, pb.space)) factor += w.then(pb.left) == u && w.then(pb.right) == v;
                  CHECK(factor == 1);
                }
          }
  for (const auto& z : objs)
    for (const auto& x : objs)
      for (const auto& y : objs)
        for (const auto& f : cat().homs(z, x))
          for (const auto& g : cat().homs(z, y)) {
            const Cone po = pushout(f, g);
            CHECK(f.then(po.left) == g.then(po.right));
            for (const auto& t : tests)
              for (const auto& u : cat().homs(x, t))
                for (const auto& v : cat().homs(y, t)) {
                  if (!(f.then(u) == g.then(v))) continue;
                  int factor = 0;
                  for (const auto& w : cat().homs(po.space, t)) factor += po.left.then(w) == u && po.right.then(w) == v;
                  CHECK(factor == 1);
                }
          }
}

TEST_CASE("construction examples") {
  const auto pb = pullback(parse_map("{a}->{*}"), parse_map("{b}->{*}"));
  CHECK(pb.space->size() == 1);
  const auto po = pushout(parse_map("{}->{*}"), parse_map("{}->{*}"));
  CHECK(*po.space == FiniteSpace::discrete(2));
  // Gluing the two ends of two Sierpinski spaces along their closed points.
  const auto glue = pushout(parse_map("{b}->{a->b}"), parse_map("{b}->{a->b}"));
  CHECK(is_homeomorphic(*glue.space, parse_space("{x->o<-y}")));
}

TEST_CASE("idempotent splitting") {
  for (const auto& a : cat().objects(3)) {
    for (const auto& e : cat().idempotents(a)) {
      CHECK(e.then(e) == e);
      const auto r = cat().split(SpaceMap::identity(a), e, e);
      CHECK(r.is_homeomorphism());
      CHECK(r.domain().size() == static_cast<std::size_t>(std::popcount(e.image())));
    }
  }
}
