#include <random>

#include "doctest.h"
#include "liftkit/engine/closure.hpp"
#include "liftkit/engine/evaluator.hpp"
#include "liftkit/fintop/canonical.hpp"
#include "liftkit/fintop/category.hpp"
#include "liftkit/fintop/enumerate.hpp"
#include "liftkit/fintop/oracles.hpp"
#include "liftkit/notation/notation.hpp"

using namespace liftkit;
using namespace liftkit::fintop;
using engine::Side;
using engine::VerdictKind;
using notation::parse_class_expr;
using notation::parse_map;

namespace {

const TopCategory& cat() {
  static const TopCategory c;
  return c;
}

bool commutes(const SpaceMap& f, const SpaceMap& g, const engine::Square<SpaceMap>& sq) {
  return sq.top.then(g) == f.then(sq.bottom);
}

// Relabels both ends of f by random permutations.
SpaceMap relabel(const SpaceMap& f, std::mt19937& rng) {
  auto perm = [&](std::size_t n) {
    std::vector<std::uint8_t> p(n);
    std::iota(p.begin(), p.end(), 0);
    std::shuffle(p.begin(), p.end(), rng);
    return p;
  };
  const auto pa = perm(f.domain().size());
  const auto pb = perm(f.codomain().size());
  std::vector<std::uint8_t> img(pa.size());
  for (std::size_t x = 0; x < pa.size(); ++x) img[pa[x]] = pb[f(x)];
  return SpaceMap(share(f.domain().permuted(pa)), share(f.codomain().permuted(pb)), img);
}

}  // namespace

TEST_CASE("fast lifting agrees with the reference search") {
  const auto& all = cat().morphisms(2);
  for (const auto& f : all) {
    for (const auto& g : all) {
      const auto fast = cat().lift(f, g);
      const auto slow = engine::check_lifting_naive(cat(), f, g);
      REQUIRE(fast.holds == slow.holds);
      CHECK(cat().lifts(f, g) == slow.holds);
      REQUIRE(fast.square.has_value() == slow.square.has_value());
      if (fast.square) {
        CHECK(fast.square->top == slow.square->top);
        CHECK(fast.square->bottom == slow.square->bottom);
      }
      CHECK(fast.diagonal.has_value() == slow.diagonal.has_value());
      if (fast.diagonal) CHECK(*fast.diagonal == *slow.diagonal);
    }
  }
  std::mt19937 rng(11);
  const auto& three = cat().morphisms(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto& f = three[rng() % three.size()];
    const auto& g = three[rng() % three.size()];
    const auto fast = cat().lift(f, g);
    const auto slow = engine::check_lifting_naive(cat(), f, g);
    REQUIRE(fast.holds == slow.holds);
    if (!fast.holds) {
      CHECK(fast.square->top == slow.square->top);
      CHECK(fast.square->bottom == slow.square->bottom);
    }
  }
}

TEST_CASE("lifting witnesses are valid") {
  std::mt19937 rng(5);
  const auto& three = cat().morphisms(3);
  for (int trial = 0; trial < 3000; ++trial) {
    const auto& f = three[rng() % three.size()];
    const auto& g = three[rng() % three.size()];
    const auto r = cat().lift(f, g);
    if (r.square) CHECK(commutes(f, g, *r.square));
    if (r.holds && r.diagonal) {
      CHECK(f.then(*r.diagonal) == r.square->top);
      CHECK(r.diagonal->then(g) == r.square->bottom);
    }
    if (!r.holds) {
      for (const auto& d : enumerate_maps(f.codomain_ptr(), g.domain_ptr()))
        CHECK_FALSE((f.then(d) == r.square->top && d.then(g) == r.square->bottom));
    }
  }
}

TEST_CASE("lifting examples") {
  const auto point_from_empty = parse_map("{}->{*}");
  CHECK(cat().lift(point_from_empty, parse_map("{a,b}->{a=b}")).holds);

  const auto fail = cat().lift(point_from_empty, point_from_empty);
  CHECK_FALSE(fail.holds);
  REQUIRE(fail.square);
  CHECK(fail.square->bottom.is_bijective());
  CHECK(fail.square->bottom.codomain().size() == 1);

  // Sierpinski space is connected: its map to a point lifts against the
  // fold of two points. The reverse orientation fails (i = identity on {a,b}).
  CHECK(cat().lift(parse_map("{a->b}->{*}"), parse_map("{a,b}->{a=b}")).holds);
  CHECK_FALSE(cat().lift(parse_map("{a,b}->{a=b}"), parse_map("{a->b}->{*}")).holds);
  CHECK_FALSE(engine::check_lifting_naive(cat(), parse_map("{a,b}->{a=b}"), parse_map("{a->b}->{*}")).holds);
  CHECK_FALSE(cat().lift(parse_map("{a,b}->{a=b}"), parse_map("{a,b}->{a=b}")).holds);
}

TEST_CASE("one-step membership") {
  engine::Evaluator<TopCategory> ev(cat());
  auto v = engine::is_member_one_step(ev, parse_class_expr("({}->{*})^r"), parse_map("{a<->b}->{a=b}"));
  CHECK(v.kind == VerdictKind::ExactYes);
  CHECK(v.definitive);

  v = engine::is_member_one_step(ev, parse_class_expr("({a,b}->{a=b})^r"), parse_map("{a}->{a,b}"));
  CHECK(v.kind == VerdictKind::ExactYes);

  v = engine::is_member_one_step(ev, parse_class_expr("({b}->{a->b})^l"), parse_map("{b}->{a->b}"));
  CHECK(v.kind == VerdictKind::ExactNo);
  REQUIRE(v.witness);
  CHECK(*v.witness == parse_map("{b}->{a->b}"));
  CHECK_FALSE(map_oracle(parse_map("{b}->{a->b}"), MapProperty::DenseImage));

  CHECK_THROWS_AS(engine::is_member_one_step(ev, parse_class_expr("({}->{*})^rl"), parse_map("{a}->{a}")),
                  engine::EvalError);
}

TEST_CASE("class enumeration") {
  engine::Evaluator<TopCategory> ev(cat());
  const auto surj = ev.enumerate_class(parse_class_expr("({}->{*})^r"), 2);
  CHECK(surj.size() == cat().morphisms(2).size());
  std::size_t members = 0;
  for (const auto& e : surj) {
    CHECK(e.verdict.member() == e.morphism.is_surjective());
    CHECK(e.verdict.exact());
    members += e.verdict.member();
  }
  CHECK(members > 0);
  for (std::size_t i = 1; i < surj.size(); ++i)
    CHECK(cat().key(surj[i - 1].morphism) < cat().key(surj[i].morphism));

  engine::OrthExpr<SpaceMap> everything{cat().morphisms(2), {{Side::Right, std::nullopt}}};
  for (const auto& e : ev.enumerate_class(everything, 2)) CHECK(e.verdict.member() == e.morphism.is_homeomorphism());
  everything.steps = {{Side::Left, std::nullopt}};
  for (const auto& e : ev.enumerate_class(everything, 2)) CHECK(e.verdict.member() == e.morphism.is_homeomorphism());

  CHECK_THROWS_AS(ev.enumerate_class(parse_class_expr("({}->{*})^r"), 0), engine::EvalError);
  CHECK_THROWS_AS(ev.enumerate_class(parse_class_expr("({}->{*})^rl"), 2), engine::EvalError);
}

TEST_CASE("identities belong to every class") {
  engine::Evaluator<TopCategory> ev(cat(), {.inner_bound = 2});
  const char* exprs[] = {"({}->{*})^r", "({}->{*})^l", "({b}->{a->b})^l", "({a}->{a->b})^r_{<4}^l",
                         "({a,b}->{a=b})^rr"};
  for (const char* text : exprs) {
    const auto expr = parse_class_expr(text);
    for (std::size_t n = 0; n <= 3; ++n)
      for (const auto& s : enumerate_spaces(n, true)) {
        const auto v = ev.member(expr, SpaceMap::identity(share(s)));
        CHECK_MESSAGE(v.member(), text);
      }
  }
}

TEST_CASE("multi-step membership and approximation tags") {
  engine::Evaluator<TopCategory> ev(cat());
  auto v = ev.member(parse_class_expr("({}->{*})^r"), parse_map("{a->b}->{*}"));
  CHECK(v.kind == VerdictKind::ExactYes);
  v = ev.member(parse_class_expr("({a,b}->{a=b})^l"), parse_map("{a->b}->{*}"));
  CHECK(v.kind == VerdictKind::ExactYes);

  const auto proper = parse_class_expr("({a}->{a->b})^r_{<5}^lr");
  CHECK_THROWS_AS(ev.member(proper, parse_map("{b}->{a->b}")), engine::EvalError);

  engine::Evaluator<TopCategory> bounded(cat(), {.inner_bound = 3, .threads = 2});
  v = bounded.member(proper, parse_map("{b}->{a->b}"));
  CHECK(v.kind == VerdictKind::BoundedYes);
  CHECK_FALSE(v.definitive);
  REQUIRE(v.steps.size() == 2);
  CHECK(v.steps[0].approx == engine::Approx::Exact);
  CHECK(v.steps[0].max_size == 4);
  CHECK(v.steps[1].approx == engine::Approx::Under);
  CHECK(v.steps[1].max_size == 3);

  // Outside the final step bound.
  v = ev.member(parse_class_expr("({a}->{a->b})^r_{<3}"), parse_map("{a,b,c}->{*}"));
  CHECK(v.kind == VerdictKind::ExactNo);
  CHECK(v.definitive);

  // A written inner bound keeps the stage exact; two written bounds stay exact.
  v = ev.member(parse_class_expr("({}->{*})^r_{<3}^l_{<3}"), parse_map("{a}->{a->b}"));
  CHECK(v.exact());

  // Under then implicit truncation: unknown direction.
  v = bounded.member(parse_class_expr("({}->{*})^rll"), parse_map("{a}->{a,b}"));
  CHECK_FALSE(v.exact());
  CHECK_FALSE(v.definitive);
  CHECK(v.steps.back().approx == engine::Approx::Unknown);
}

TEST_CASE("approximation directions are sound") {
  // Under-approximated inner stage: failures are definitive, so a BoundedNo at
  // a small bound must remain a non-member at a larger bound.
  const auto expr = parse_class_expr("({}->{*})^rl");
  engine::Evaluator<TopCategory> small(cat(), {.inner_bound = 2});
  engine::Evaluator<TopCategory> large(cat(), {.inner_bound = 3});
  for (const auto& m : cat().morphisms(2)) {
    const auto a = small.member(expr, m);
    const auto b = large.member(expr, m);
    CHECK(a.steps.back().approx == engine::Approx::Under);
    if (a.kind == VerdictKind::BoundedNo) {
      CHECK(a.definitive);
      CHECK(b.kind == VerdictKind::BoundedNo);
    }
  }
}

TEST_CASE("oracle substitution requires verification") {
  engine::OracleRegistry<TopCategory> reg;
  reg.add("surjective", parse_class_expr("({}->{*})^r"), [](const SpaceMap& m) { return m.is_surjective(); });
  reg.add("wrong", parse_class_expr("({b}->{a->b})^l"), [](const SpaceMap& m) { return m.is_injective(); });
  engine::Evaluator<TopCategory> unverified(cat(), {.working_bound = 3}, &reg);
  CHECK_THROWS_AS(unverified.member(parse_class_expr("({}->{*})^rl"), parse_map("{a}->{a,b}")),
                  engine::EvalError);

  const auto bad = reg.verify(cat(), 3);
  CHECK_FALSE(bad.empty());
  for (const auto& d : bad) CHECK(d.oracle == "wrong");
  CHECK(reg.entries()[0].verified_bound == 3);
  CHECK(reg.entries()[1].verified_bound == 0);

  engine::Evaluator<TopCategory> ev(cat(), {.working_bound = 3, .inner_bound = 3}, &reg);
  const auto v = ev.member(parse_class_expr("({}->{*})^rl"), parse_map("{a}->{a,b}"));
  REQUIRE(v.steps.size() == 1);
  CHECK(v.steps[0].oracle == "surjective");
  CHECK(v.kind == VerdictKind::BoundedYes);
}

TEST_CASE("lifting is invariant under isomorphism") {
  std::mt19937 rng(3);
  const auto& four = cat().morphisms(4);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto& f = four[rng() % four.size()];
    const auto& g = four[rng() % four.size()];
    const auto f2 = relabel(f, rng);
    const auto g2 = relabel(g, rng);
    CHECK(canonical_key(f2) == canonical_key(f));
    CHECK(cat().lifts(f, g) == cat().lifts(f2, g2));
  }
}

TEST_CASE("identities lift against everything") {
  for (const auto& g : cat().morphisms(4)) {
    CHECK(cat().lifts(SpaceMap::identity(g.domain_ptr()), g));
    CHECK(cat().lifts(g, SpaceMap::identity(g.codomain_ptr())));
    CHECK(cat().lifts(SpaceMap::identity(g.codomain_ptr()), g));
    CHECK(cat().lifts(g, SpaceMap::identity(g.domain_ptr())));
  }
}

TEST_CASE("self-lifting characterizes isomorphisms") {
  for (const auto& h : cat().morphisms(3)) CHECK(cat().lifts(h, h) == h.is_homeomorphism());
}

TEST_CASE("orthogonals reverse inclusion") {
  std::mt19937 rng(17);
  const auto& pool = cat().morphisms(2);
  const auto& targets = cat().morphisms(3);
  engine::Evaluator<TopCategory> ev(cat());
  for (int trial = 0; trial < 25; ++trial) {
    std::vector<SpaceMap> d, c;
    for (const auto& m : pool) {
      if (rng() % 4 == 0) d.push_back(m);
    }
    if (d.empty()) d.push_back(pool[rng() % pool.size()]);
    for (const auto& m : d)
      if (rng() % 2) c.push_back(m);
    if (c.empty()) c.push_back(d.front());
    for (Side side : {Side::Left, Side::Right}) {
      const engine::OrthExpr<SpaceMap> ce{c, {{side, std::nullopt}}};
      const engine::OrthExpr<SpaceMap> de{d, {{side, std::nullopt}}};
      for (const auto& h : targets) {
        if (ev.member(de, h).member()) CHECK(ev.member(ce, h).member());
      }
    }
  }
}

TEST_CASE("parallel evaluation is deterministic") {
  const auto expr = parse_class_expr("({a}->{a->b})^r_{<4}^l");
  engine::Evaluator<TopCategory> one(cat(), {.inner_bound = 3, .threads = 1});
  engine::Evaluator<TopCategory> many(cat(), {.inner_bound = 3, .threads = 4});
  const auto a = one.enumerate_class(expr, 3);
  const auto b = many.enumerate_class(expr, 3);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].morphism == b[i].morphism);
    CHECK(a[i].verdict.kind == b[i].verdict.kind);
    CHECK(a[i].verdict.witness.has_value() == b[i].verdict.witness.has_value());
    if (a[i].verdict.witness) CHECK(*a[i].verdict.witness == *b[i].verdict.witness);
  }
}

TEST_CASE("category structure") {
  // Associativity and units over all composable triples at size <= 2.
  const auto objs = cat().objects(2);
  for (const auto& a : objs)
    for (const auto& b : objs)
      for (const auto& f : cat().homs(a, b)) {
        CHECK(cat().compose(cat().identity(a), f) == f);
        CHECK(cat().compose(f, cat().identity(b)) == f);
        for (const auto& c : objs)
          for (const auto& g : cat().homs(b, c))
            for (const auto& d : objs)
              for (const auto& h : cat().homs(c, d))
                CHECK(cat().compose(cat().compose(f, g), h) == cat().compose(f, cat().compose(g, h)));
      }
  // Representatives are pairwise non-isomorphic and sorted.
  const auto& reps = cat().morphisms(3);
  for (std::size_t i = 1; i < reps.size(); ++i) CHECK(cat().key(reps[i - 1]) < cat().key(reps[i]));
  // Empty-object conventions.
  const auto empty = share(FiniteSpace::empty());
  const auto pt = share(FiniteSpace::point());
  CHECK(cat().homs(empty, pt).size() == 1);
  CHECK(cat().homs(pt, empty).empty());
  CHECK(cat().homs(empty, empty).size() == 1);
}

TEST_CASE("closure laws") {
  const auto surj = engine::check_closure_laws(cat(), parse_class_expr("({}->{*})^r"), 3);
  CHECK(surj.expected_laws_hold());
  for (const auto& c : surj.checks) {
    CHECK(c.checked > 0);
    // Composites, pullbacks, products, coproducts and retracts of surjections are surjective.
    if (c.law != engine::ClosureLaw::Pushout) CHECK(c.violations == 0);
  }

  const auto inj = engine::check_closure_laws(cat(), parse_class_expr("({a,b}->{a=b})^r"), 3);
  CHECK(inj.expected_laws_hold());

  const auto dense = engine::check_closure_laws(cat(), parse_class_expr("({b}->{a->b})^l"), 3);
  CHECK(dense.expected_laws_hold());
  // Dense image is not stable under pullback: pull {a}->{a->b} back along {b}->{a->b}.
  const auto& pb = dense.checks[1];
  REQUIRE(pb.law == engine::ClosureLaw::Pullback);
  CHECK_FALSE(pb.expected);
  CHECK(pb.violations > 0);
  REQUIRE(pb.first);
  CHECK_FALSE(map_oracle(pb.first->result, MapProperty::DenseImage));
  CHECK(map_oracle(pb.first->inputs[0], MapProperty::DenseImage));
}
