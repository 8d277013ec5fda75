#include <fstream>
#include <random>
#include <string>

#include "doctest.h"
#include "liftkit/fintop/canonical.hpp"
#include "liftkit/fintop/category.hpp"
#include "liftkit/fintop/enumerate.hpp"
#include "liftkit/notation/notation.hpp"

using namespace liftkit;
using namespace liftkit::fintop;
using namespace liftkit::notation;

namespace {

std::size_t error_offset(const std::function<void()>& fn, std::string* message = nullptr) {
  try {
    fn();
  } catch (const ParseError& e) {
    if (message) *message = e.what();
    return e.offset();
  }
  FAIL("expected a parse error");
  return 0;
}

std::vector<std::string> labels_of(const FiniteSpace& s) {
  std::vector<std::string> out;
  for (std::size_t x = 0; x < s.size(); ++x) out.push_back(s.label(x));
  return out;
}

bool same_map(const SpaceMap& a, const SpaceMap& b) {
  return a == b && labels_of(a.domain()) == labels_of(b.domain());
}

}  // namespace

TEST_CASE("spaces from arrow text") {
  const auto s = parse_space("{a->b}");
  REQUIRE(s.size() == 2);
  CHECK(s.arrow(0, 1));
  CHECK_FALSE(s.arrow(1, 0));
  CHECK(s.open_sets() == std::vector<PointSet>{0b00, 0b01, 0b11});

  CHECK(parse_space("{a<->b}") == FiniteSpace::antidiscrete(2));
  CHECK(parse_space("{}").size() == 0);
  CHECK(parse_space("{*}").size() == 1);
  CHECK(parse_space(" { a , b } ") == FiniteSpace::discrete(2));

  const auto n = parse_space("{a<-U->x<-V->b}");
  REQUIRE(n.size() == 5);
  CHECK(n.labels() == std::vector<std::string>{"a", "U", "x", "V", "b"});
  CHECK(n.arrow(n.find("U"), n.find("a")));
  CHECK(n.arrow(n.find("U"), n.find("x")));
  CHECK(n.arrow(n.find("V"), n.find("x")));
  CHECK(n.arrow(n.find("V"), n.find("b")));
  CHECK_FALSE(n.arrow(n.find("a"), n.find("U")));
  CHECK_FALSE(n.arrow(n.find("U"), n.find("b")));

  const auto glued = parse_space("{a<-U=x=V->b}");
  CHECK(glued.size() == 3);
  CHECK(glued.label(1) == "U=x=V");
}

TEST_CASE("maps from arrow text") {
  const auto open_point = parse_map("{a} -> {a->b}");
  CHECK(open_point.domain().size() == 1);
  CHECK(open_point.codomain() == parse_space("{a->b}"));
  CHECK(open_point(0) == 0);

  const auto to_pair = parse_map("{a} -> {b}");
  CHECK(to_pair.codomain() == FiniteSpace::discrete(2));
  CHECK(to_pair.codomain().label(to_pair(0)) == "a");
  CHECK(canonical_key(to_pair) == canonical_key(parse_map("{a}->{a,b}")));

  const auto glue = parse_map("{a<->b} -> {a=b}");
  CHECK(glue.domain() == FiniteSpace::antidiscrete(2));
  CHECK(glue.codomain().size() == 1);

  // The codomain receives the domain's arrows.
  const auto implied = parse_map("{a->b} -> {a,b,c}");
  CHECK(implied.codomain().arrow(0, 1));

  const auto terminal = parse_map("{a->b, c} -> {*}");
  CHECK(terminal.codomain().size() == 1);
  CHECK(terminal.domain().size() == 3);

  const auto empty = parse_map("{}->{*}");
  CHECK(empty.domain().size() == 0);
  CHECK(empty.codomain().size() == 1);
}

TEST_CASE("strict map parsing") {
  ParseOptions strict{true};
  CHECK_THROWS_AS(parse_map("{a}->{b}", strict), ParseError);
  CHECK(canonical_key(parse_map("{a}->{a,b}", strict)) == canonical_key(parse_map("{a}->{b}")));
  // Without the implied arrows this assignment is not continuous.
  CHECK_THROWS_AS(parse_map("{a->b}->{a,b}", strict), ParseError);
  CHECK_NOTHROW(parse_map("{a->b}->{a,b}"));
}

TEST_CASE("expressions") {
  const auto e = parse_class_expr("({a}->{a->b})^r_{<5}^lr");
  REQUIRE(e.generators.size() == 1);
  CHECK(e.generators[0] == parse_map("{a}->{a->b}"));
  REQUIRE(e.steps.size() == 3);
  CHECK(e.steps[0] == engine::Step{engine::Side::Right, 5});
  CHECK(e.steps[1] == engine::Step{engine::Side::Left, std::nullopt});
  CHECK(e.steps[2] == engine::Step{engine::Side::Right, std::nullopt});

  const auto s = parse_class_expr("({}->{*})^r");
  CHECK(s.generators.size() == 1);
  CHECK(s.steps == std::vector<engine::Step>{{engine::Side::Right, std::nullopt}});

  const auto ct = parse_class_expr(
      "({a<->b}->{a=b}, {a->b}->{a=b}, {b}->{a->b}, {a<-o->b}->{a=o=b})^lr");
  CHECK(ct.generators.size() == 4);
  CHECK(ct.steps.size() == 2);
  CHECK(ct.generators[3].domain().size() == 3);
  CHECK(ct.generators[3].codomain().size() == 1);

  // The bound binds to the last letter of its group.
  const auto grouped = parse_class_expr("({}->{*})^lr_{<3}");
  CHECK(grouped.steps[0] == engine::Step{engine::Side::Left, std::nullopt});
  CHECK(grouped.steps[1] == engine::Step{engine::Side::Right, 3});
}

TEST_CASE("parse errors carry offsets") {
  std::string msg;
  CHECK(error_offset([] { parse_space("{a->}"); }, &msg) == 2);
  CHECK(msg.find("dangling link") != std::string::npos);
  CHECK(error_offset([] { parse_space("{a,,b}"); }, &msg) == 3);
  CHECK(msg.find("empty label") != std::string::npos);
  CHECK(error_offset([] { parse_space("{,a}"); }) == 1);
  CHECK(error_offset([] { parse_space("{a#b}"); }, &msg) == 2);
  CHECK(msg.find("unknown token") != std::string::npos);
  CHECK(error_offset([] { parse_space("{a->b"); }) == 5);
  CHECK(error_offset([] { parse_space("a->b}"); }) == 0);
  CHECK(error_offset([] { parse_space("{a} x"); }) == 4);

  CHECK(error_offset([] { parse_map("{a=b}->{a,b}"); }, &msg) == 3);
  CHECK(msg.find("=-classes") != std::string::npos);
  CHECK(error_offset([] { parse_map("{a}{b}"); }) == 3);

  CHECK(error_offset([] { parse_class_expr("()^r"); }, &msg) == 1);
  CHECK(msg.find("empty generator list") != std::string::npos);
  CHECK(error_offset([] { parse_class_expr("({}->{*})_{<5}^r"); }, &msg) == 9);
  CHECK(msg.find("nonexistent step") != std::string::npos);
  CHECK(error_offset([] { parse_class_expr("({}->{*})^_{<5}"); }, &msg) == 10);
  CHECK(msg.find("nonexistent step") != std::string::npos);
  CHECK(error_offset([] { parse_class_expr("({}->{*})^r_{<5}_{<3}"); }, &msg) == 16);
  CHECK(error_offset([] { parse_class_expr("({}->{*})"); }) == 9);
  CHECK(error_offset([] { parse_class_expr("({}->{*})^x"); }) == 10);
  CHECK(error_offset([] { parse_class_expr("({}->{*})^r_{<0}"); }) == 14);
}

TEST_CASE("equivalent spellings") {
  CHECK(parse_space("{b<-a}") == parse_space("{a->b}").permuted(std::vector<std::uint8_t>{1, 0}));
  CHECK(parse_space("{a->b, b->a}") == parse_space("{a<->b}"));
  CHECK(parse_space("{a->b->c}") == parse_space("{a->c, a->b, b->c}").permuted(std::vector<std::uint8_t>{0, 2, 1}));
  CHECK(parse_space("{a, a}").size() == 1);
}

TEST_CASE("space rendering round-trips") {
  for (std::size_t n = 0; n <= 5; ++n) {
    for (const auto& s : enumerate_spaces(n, true)) {
      const std::string text = render_space(s);
      const auto back = parse_space(text);
      CHECK_MESSAGE(back == s, text);
      CHECK(labels_of(back) == labels_of(s));
      CHECK(canonical_form(back) == canonical_form(s));
    }
  }
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const auto& reps = enumerate_spaces(4, true);
    const auto& s = reps[rng() % reps.size()];
    std::vector<std::uint8_t> perm{0, 1, 2, 3};
    std::shuffle(perm.begin(), perm.end(), rng);
    const auto t = s.permuted(perm).with_labels({"p", "q'", "R", "*"});
    const auto back = parse_space(render_space(t));
    CHECK(back == t);
    CHECK(labels_of(back) == labels_of(t));
  }
}

TEST_CASE("relabelled text gives a homeomorphic space") {
  const std::vector<std::pair<std::string, std::string>> pairs = {
      {"{a<-U->x<-V->b}", "{p<-q->r<-s->t}"},
      {"{x->X<-U->F}", "{F->U<-X->x}"},
      {"{a->b, c<->d}", "{d->c, b<->a}"},
  };
  for (const auto& [l, r] : pairs) CHECK(is_homeomorphic(parse_space(l), parse_space(r)));
}

TEST_CASE("map rendering round-trips") {
  TopCategory cat;
  for (const auto& m : cat.morphisms(3)) {
    const std::string text = render_map(m);
    const auto back = parse_map(text);
    CHECK_MESSAGE(same_map(back, m), text);
    CHECK(parse_map(text, ParseOptions{true}) == back);
  }
  CHECK(render_map(parse_map("{a,b}->{a=b}")) == "{a, b} -> {a=b}");
  CHECK(render_map(parse_map("{a}->{a->b}")) == "{a} -> {a->b}");
  CHECK(render_map(parse_map("{}->{*}")) == "{} -> {*}");
}

TEST_CASE("expression rendering") {
  const auto e = parse_class_expr("({a}->{a->b})^r_{<5}^lr");
  CHECK(render_expr(e) == "({a} -> {a->b})^r_{<5}^lr");
  CHECK(render_steps(parse_class_expr("({}->{*})^lr_{<3}^l").steps) == "^lr_{<3}^l");
}

TEST_CASE("fixture corpus parses and round-trips") {
  std::ifstream in(std::string(LIFTKIT_FIXTURE_DIR) + "/notation_corpus.txt");
  REQUIRE(in);
  std::string line;
  int counts[3] = {0, 0, 0};
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    const auto colon = line.find(':');
    REQUIRE(colon != std::string::npos);
    const std::string kind = line.substr(0, colon);
    const std::string text = line.substr(colon + 1);
    INFO(line);
    if (kind == "space") {
      const auto s = parse_space(text);
      CHECK(parse_space(render_space(s)) == s);
      ++counts[0];
    } else if (kind == "map") {
      const auto m = parse_map(text);
      CHECK(parse_map(render_map(m)) == m);
      ++counts[1];
    } else {
      REQUIRE(kind == "expr");
      const auto e = parse_class_expr(text);
      const auto back = parse_class_expr(render_expr(e));
      CHECK(back.steps == e.steps);
      REQUIRE(back.generators.size() == e.generators.size());
      for (std::size_t i = 0; i < e.generators.size(); ++i) CHECK(back.generators[i] == e.generators[i]);
      ++counts[2];
    }
  }
  CHECK(counts[0] > 10);
  CHECK(counts[1] > 20);
  CHECK(counts[2] > 20);
}
