#include <set>

#include "doctest.h"
#include "liftkit/fintop/dictionary.hpp"
#include "liftkit/fintop/enumerate.hpp"
#include "liftkit/notation/notation.hpp"

using namespace liftkit;
using namespace liftkit::fintop;
using notation::parse_map;
using notation::parse_space;

namespace {

const TopCategory& cat() {
  static const TopCategory c;
  return c;
}

const DictionaryEntry& entry(const std::string& id) {
  for (const auto& e : lifting_dictionary())
    if (e.id == id) return e;
  FAIL("no dictionary entry " << id);
  throw 0;
}

bool oracle(const DictionaryEntry& e, const SpaceMap& f) { return map_oracle(f, std::get<MapProperty>(e.property)); }
bool oracle(const DictionaryEntry& e, const FiniteSpace& x) {
  return space_oracle(x, std::get<SpaceProperty>(e.property));
}

}  // namespace

TEST_CASE("dictionary formulas parse and ids are unique") {
  std::set<std::string> ids;
  for (const auto& e : lifting_dictionary()) {
    CHECK(ids.insert(e.id).second);
    if (e.quantifier == Quantifier::EachPair || e.quantifier == Quantifier::EachPoint) {
      CHECK_NOTHROW(notation::parse_map(e.formula));
    } else {
      const auto expr = notation::parse_class_expr(e.formula);
      CHECK(e.bounded == (expr.steps.size() > 1));
    }
    CHECK(is_space_entry(e) == (e.quantifier != Quantifier::Map));
  }
  for (auto p : all_space_properties()) {
    bool found = false;
    for (const auto& e : lifting_dictionary()) found = found || (is_space_entry(e) && std::get<SpaceProperty>(e.property) == p);
    CHECK_MESSAGE(found, name(p));
  }
  for (auto p : all_map_properties()) {
    bool found = false;
    for (const auto& e : lifting_dictionary()) found = found || (!is_space_entry(e) && std::get<MapProperty>(e.property) == p);
    CHECK_MESSAGE(found, name(p));
  }
}

TEST_CASE("dictionary examples") {
  TopEvaluator ev(cat());
  auto holds = [&](const char* id, const char* space) {
    return evaluate(entry(id), share(parse_space(space)), ev).member();
  };
  CHECK(holds("T1", "{a,b}"));
  CHECK_FALSE(holds("T1", "{a->b}"));
  CHECK(holds("Connected", "{a->b}"));
  CHECK_FALSE(holds("Normal", "{a<-U->x<-V->b}"));
  CHECK_FALSE(space_oracle(parse_space("{a<-U->x<-V->b}"), SpaceProperty::Normal));
  CHECK(holds("Hausdorff", "{a,b,c}"));
  CHECK_FALSE(holds("Hausdorff", "{a->b}"));
  CHECK(holds("Hausdorff", "{a}"));
  CHECK(holds("Regular", "{}"));

  const auto v = evaluate(entry("Hausdorff"), share(parse_space("{a<->b}")), ev);
  CHECK(v.kind == engine::VerdictKind::ExactNo);
  REQUIRE(v.witness);
  CHECK(v.witness->domain().size() == 2);
  CHECK(v.square.has_value());
}

TEST_CASE("exact space formulas agree with the oracles") {
  TopEvaluator ev(cat());
  for (const auto& e : lifting_dictionary()) {
    if (!is_space_entry(e) || e.bounded) continue;
    for (std::size_t n = 0; n <= 4; ++n)
      for (const auto& x : cat().objects(n)) {
        if (x->size() != n) continue;
        const auto v = evaluate(e, x, ev);
        CHECK(v.exact());
        CHECK_MESSAGE(v.member() == oracle(e, *x), e.id, " on ", x->matrix_string());
      }
  }
}

TEST_CASE("exact map formulas agree with the oracles") {
  TopEvaluator ev(cat());
  for (const auto& e : lifting_dictionary()) {
    if (is_space_entry(e) || e.bounded) continue;
    for (const auto& f : cat().morphisms(3)) {
      const auto v = evaluate(e, f, ev);
      CHECK(v.exact());
      CHECK_MESSAGE(v.member() == oracle(e, f), e.id, " on ", notation::render_map(f));
    }
  }
}

TEST_CASE("bounded formulas never contradict the oracles definitively") {
  TopEvaluator ev(cat(), {.inner_bound = 3});
  for (const auto& e : lifting_dictionary()) {
    if (!e.bounded) continue;
    std::size_t definitive = 0;
    if (is_space_entry(e)) {
      for (const auto& x : cat().objects(3)) {
        const auto v = evaluate(e, x, ev);
        CHECK_FALSE(v.exact());
        if (v.definitive) {
          ++definitive;
          // The formulas for Empty and Antidiscrete reject the empty space.
          const bool known = x->size() == 0 && (e.id == "Empty" || e.id.starts_with("Antidiscrete"));
          if (known) CHECK_FALSE(v.member());
          else CHECK_MESSAGE(v.member() == oracle(e, *x), e.id, " on ", x->matrix_string());
        }
      }
    } else {
      for (const auto& f : cat().morphisms(2)) {
        const auto v = evaluate(e, f, ev);
        if (v.definitive) {
          ++definitive;
          CHECK_MESSAGE(v.member() == oracle(e, f), e.id, " on ", notation::render_map(f));
        }
      }
    }
    CHECK_MESSAGE(definitive > 0, e.id);
  }
}

TEST_CASE("the formula for emptiness selects the point, not the empty space") {
  // Members of ({}->{*})^l with non-empty domain include {a}->{a,b}, which
  // {}->{*} cannot lift against; the one-point space passes as an isomorphism.
  TopEvaluator ev(cat(), {.inner_bound = 2});
  const auto& e = entry("Empty");
  const auto empty = evaluate(e, share(FiniteSpace::empty()), ev);
  CHECK(empty.kind == engine::VerdictKind::BoundedNo);
  CHECK(empty.definitive);
  REQUIRE(empty.witness);
  CHECK(cat().lifts(parse_map("{}->{*}"), *empty.witness) == false);
  const auto point = evaluate(e, share(FiniteSpace::point()), ev);
  CHECK(point.kind == engine::VerdictKind::BoundedYes);
}
