#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "liftkit/engine/closure.hpp"
#include "liftkit/engine/evaluator.hpp"
#include "liftkit/fingrp/category.hpp"
#include "liftkit/fintop/category.hpp"
#include "liftkit/fintop/dictionary.hpp"
#include "liftkit/fintop/enumerate.hpp"
#include "liftkit/fintop/oracles.hpp"
#include "liftkit/harness/laws.hpp"
#include "liftkit/harness/readings.hpp"
#include "liftkit/notation/notation.hpp"

namespace liftkit::harness {

namespace {

using engine::Side;
using engine::VerdictKind;
using fintop::SpaceMap;
using fintop::SpacePtr;
using fingrp::GroupHom;
using fingrp::GroupPtr;
using TopEval = engine::Evaluator<fintop::TopCategory>;
using GroupEval = engine::Evaluator<fingrp::GroupCategory>;
using GroupExpr = engine::OrthExpr<GroupHom>;

constexpr std::size_t kGroupBound = 8;

const fintop::TopCategory& top() {
  static const fintop::TopCategory c;
  return c;
}

const fingrp::GroupCategory& groups() {
  static const fingrp::GroupCategory c;
  return c;
}

struct Context {
  const Law& law;
  const RunOptions& options;
  std::size_t bound;
  std::size_t inner;
  LawRecord record;

  void fail_with(Counterexample c) {
    record.status = LawStatus::Fail;
    if (!record.counterexample) record.counterexample = std::move(c);
  }
  void note(std::string n) { record.notes.push_back(std::move(n)); }
};

std::string render(const SpaceMap& m) { return notation::render_map(m); }
std::string render(const GroupHom& m) { return m.describe(); }

std::string plural(std::size_t n, const std::string& what) {
  return std::to_string(n) + " " + what + (n == 1 ? "" : "s");
}

TopEval top_eval(const Context& ctx, std::optional<std::size_t> inner = std::nullopt) {
  engine::EvalOptions o;
  o.working_bound = ctx.bound;
  o.inner_bound = inner;
  o.threads = ctx.options.threads;
  return TopEval(top(), o);
}

/// Left/right pair of a failed membership: h lifts on `side` of the witness.
template <class M>
Counterexample lifting_pair(const M& h, const engine::Verdict<M>& v, Side side) {
  if (!v.witness) return {render(h), v.note.empty() ? "lifting rejects" : v.note};
  return side == Side::Left ? Counterexample{render(h), render(*v.witness)}
                            : Counterexample{render(*v.witness), render(h)};
}

std::string trace_text(const std::vector<engine::StepTrace>& steps) {
  std::string s;
  for (const auto& t : steps) {
    if (!s.empty()) s += "; ";
    s += std::string(1, engine::side_letter(t.step.side));
    if (t.step.bound) s += "_{<" + std::to_string(*t.step.bound) + "}";
    s += " step: " + plural(t.members, "member") + " at <= " + std::to_string(t.max_size) + " points, " +
         std::string(engine::to_string(t.approx));
  }
  return s;
}

template <class T, class Fn>
std::vector<T> map_parallel(std::size_t n, unsigned threads, Fn&& fn) {
  std::vector<std::optional<T>> slots(n);
  engine::parallel_for(n, threads, [&](std::size_t i) { slots[i] = fn(i); });
  std::vector<T> out;
  out.reserve(n);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

const fintop::DictionaryEntry& entry(const std::string& id) {
  for (const auto& e : fintop::lifting_dictionary())
    if (e.id == id) return e;
  throw std::logic_error("no dictionary entry " + id);
}

Side last_side(const std::string& formula) {
  return formula.back() == 'l' ? Side::Left : Side::Right;
}

// ---- topology ----

void enumeration_counts(Context& ctx) {
  static const std::size_t unlabeled[] = {1, 1, 3, 9, 33, 139, 718};
  static const std::size_t labeled[] = {1, 1, 4, 29, 355, 6942};
  for (std::size_t n = 0; n <= std::min<std::size_t>(ctx.bound, 6); ++n) {
    ++ctx.record.checked;
    const std::size_t got = fintop::count_spaces(n, true);
    if (got != unlabeled[n])
      ctx.fail_with({"size " + std::to_string(n), std::to_string(got) + " classes, expected " + std::to_string(unlabeled[n])});
  }
  for (std::size_t n = 0; n <= std::min<std::size_t>(ctx.bound, 5); ++n) {
    ++ctx.record.checked;
    const std::size_t got = fintop::count_spaces(n, false);
    if (got != labeled[n])
      ctx.fail_with({"labeled size " + std::to_string(n), std::to_string(got) + " spaces, expected " + std::to_string(labeled[n])});
  }
}

void map_dictionary(Context& ctx) {
  const auto& e = entry(ctx.law.args[0]);
  const auto prop = std::get<fintop::MapProperty>(e.property);
  const auto ev = top_eval(ctx);
  const auto ms = top().morphisms(ctx.bound);
  const auto verdicts = map_parallel<fintop::TopVerdict>(ms.size(), ctx.options.threads,
                                                         [&](std::size_t i) { return fintop::evaluate(e, ms[i], ev); });
  std::size_t members = 0;
  for (std::size_t i = 0; i < ms.size(); ++i) {
    ++ctx.record.checked;
    const bool says = fintop::map_oracle(ms[i], prop);
    members += verdicts[i].member();
    if (verdicts[i].exact() && verdicts[i].member() == says) continue;
    if (verdicts[i].member()) ctx.fail_with({render(ms[i]), "oracle " + ctx.law.oracles[0] + " rejects"});
    else ctx.fail_with(lifting_pair(ms[i], verdicts[i], last_side(e.formula)));
  }
  ctx.note(std::to_string(members) + " of " + plural(ms.size(), "map") + " are members");
}

void space_dictionary(Context& ctx) {
  const auto& e = entry(ctx.law.args[0]);
  const auto prop = std::get<fintop::SpaceProperty>(e.property);
  const auto ev = top_eval(ctx);
  const auto spaces = top().objects(ctx.bound);
  const auto verdicts = map_parallel<fintop::TopVerdict>(spaces.size(), ctx.options.threads,
                                                         [&](std::size_t i) { return fintop::evaluate(e, spaces[i], ev); });
  std::size_t holds = 0;
  for (std::size_t i = 0; i < spaces.size(); ++i) {
    ++ctx.record.checked;
    const bool says = fintop::space_oracle(*spaces[i], prop);
    holds += says;
    if (verdicts[i].exact() && verdicts[i].member() == says) continue;
    const std::string space = notation::render_space(*spaces[i]);
    if (verdicts[i].member()) {
      ctx.fail_with({space, "oracle " + ctx.law.oracles[0] + " rejects"});
    } else if (verdicts[i].witness && (e.quantifier == fintop::Quantifier::EachPair ||
                                       e.quantifier == fintop::Quantifier::EachPoint)) {
      ctx.fail_with({render(*verdicts[i].witness), e.formula});
    } else {
      const SpaceMap h = e.quantifier == fintop::Quantifier::InitialMap ? SpaceMap::from_empty(spaces[i])
                                                                         : SpaceMap::to_point(spaces[i]);
      ctx.fail_with(lifting_pair(h, verdicts[i], last_side(e.formula)));
    }
  }
  ctx.note(std::to_string(holds) + " of " + plural(spaces.size(), "space") + " satisfy " + ctx.law.oracles[0]);
}

void members_satisfy(Context& ctx) {
  const auto expr = notation::parse_class_expr(ctx.law.args[0]);
  const auto prop = *fintop::parse_map_property(ctx.law.oracles[0]);
  const auto ev = top_eval(ctx);
  const auto entries = ev.enumerate_class(expr, ctx.bound);
  std::size_t members = 0;
  for (const auto& c : entries) {
    if (!c.verdict.member()) continue;
    ++members;
    ++ctx.record.checked;
    if (!c.verdict.exact()) ctx.fail_with({render(c.morphism), "membership is not exact"});
    if (!fintop::map_oracle(c.morphism, prop)) ctx.fail_with({render(c.morphism), "not " + ctx.law.oracles[0]});
  }
  ctx.note(std::to_string(members) + " members among " + plural(entries.size(), "map") + " at <= " +
           std::to_string(ctx.bound) + " points");
}

void maps_satisfy(Context& ctx) {
  const auto prop = *fintop::parse_map_property(ctx.law.oracles[0]);
  for (const auto& text : ctx.law.args) {
    ++ctx.record.checked;
    const auto m = notation::parse_map(text);
    if (!fintop::map_oracle(m, prop)) ctx.fail_with({render(m), "not " + ctx.law.oracles[0]});
  }
}

// ---- closure and engine laws ----

using TopClosure = engine::ClosureReport<SpaceMap>;

const TopClosure& closure_report(const std::string& formula, std::size_t bound) {
  static std::mutex mutex;
  static std::map<std::pair<std::string, std::size_t>, TopClosure> cache;
  {
    std::lock_guard lock(mutex);
    if (auto it = cache.find({formula, bound}); it != cache.end()) return it->second;
  }
  auto report = engine::check_closure_laws(top(), notation::parse_class_expr(formula), bound);
  std::lock_guard lock(mutex);
  return cache.emplace(std::pair{formula, bound}, std::move(report)).first->second;
}

std::string violation_text(const engine::ClosureViolation<SpaceMap>& v) {
  std::string s;
  for (const auto& m : v.inputs) s += (s.empty() ? "" : " ; ") + render(m);
  if (v.along) s += " along " + render(*v.along);
  return s;
}

void closure_laws(Context& ctx) {
  const auto& report = closure_report(ctx.law.args[0], ctx.bound);
  for (const auto& c : report.checks) {
    ctx.record.checked += c.checked;
    std::string n = std::string(engine::to_string(c.law)) + (c.expected ? " (expected)" : " (not expected)") +
                    ": " + std::to_string(c.violations) + " violations in " + std::to_string(c.checked);
    if (c.first) n += "; first " + violation_text(*c.first) + " gives " + render(c.first->result);
    ctx.note(std::move(n));
    if (c.expected && c.first) ctx.fail_with({violation_text(*c.first), render(c.first->result)});
  }
}

void closure_direction(Context& ctx) {
  struct Tally {
    std::size_t checked = 0, violations = 0;
  };
  std::map<std::pair<int, engine::ClosureLaw>, Tally> tally;
  for (const auto& law : law_registry()) {
    if (law.kind != LawKind::ClosureLaws) continue;
    for (const auto& c : closure_report(law.args[0], ctx.bound).checks) {
      auto& t = tally[{c.side == Side::Left ? 0 : 1, c.law}];
      t.checked += c.checked;
      t.violations += c.violations;
      ctx.record.checked += c.checked;
    }
  }
  for (int side : {0, 1}) {
    std::string held, broke;
    for (auto law : {engine::ClosureLaw::Composition, engine::ClosureLaw::Retract, engine::ClosureLaw::Pullback,
                     engine::ClosureLaw::Product, engine::ClosureLaw::Pushout, engine::ClosureLaw::Coproduct}) {
      const auto& t = tally[{side, law}];
      std::string item = std::string(engine::to_string(law)) + " " + std::to_string(t.violations) + "/" +
                         std::to_string(t.checked);
      (t.violations ? broke : held) += (t.violations ? broke : held).empty() ? item : ", " + item;
    }
    ctx.note(std::string(side == 0 ? "left" : "right") + " classes preserved by: " + held +
             "; not preserved by: " + (broke.empty() ? "none" : broke) + " (violations/instances)");
  }
  const bool left_pull = tally[{0, engine::ClosureLaw::Pullback}].violations > 0;
  const bool right_push = tally[{1, engine::ClosureLaw::Pushout}].violations > 0;
  ctx.note(std::string("confirmed: left classes are closed under pushouts and coproducts") +
           (left_pull ? " but not pullbacks" : "") + "; right classes under pullbacks and products" +
           (right_push ? " but not pushouts" : ""));
}

struct GeneratorSet {
  std::string text;
  std::vector<SpaceMap> maps;
};

std::vector<GeneratorSet> generator_sets() {
  std::vector<GeneratorSet> out;
  for (const auto& text : registry_generator_sets())
    out.push_back({text, notation::parse_class_expr(text + "^l").generators});
  return out;
}

engine::OrthExpr<SpaceMap> one_step(const std::vector<SpaceMap>& gens, Side side) {
  return {gens, {{side, std::nullopt}}};
}

void iso_self_lifting(Context& ctx) {
  const auto ms = top().morphisms(ctx.bound);
  for (const auto& h : ms) {
    ++ctx.record.checked;
    if (top().lifts(h, h) != is_isomorphism(h))
      ctx.fail_with({render(h), render(h)});
  }
}

void identity_membership(Context& ctx) {
  for (const auto& set : generator_sets()) {
    for (const auto& x : top().objects(ctx.bound)) {
      const auto id = SpaceMap::identity(x);
      for (const auto& g : set.maps) {
        ctx.record.checked += 2;
        if (!top().lifts(id, g)) ctx.fail_with({render(id), render(g)});
        if (!top().lifts(g, id)) ctx.fail_with({render(g), render(id)});
      }
    }
  }
}

void antitonicity(Context& ctx) {
  const auto sets = generator_sets();
  const auto ms = top().morphisms(ctx.bound);
  const auto ev = top_eval(ctx);
  // membership[s][side][i]
  std::vector<std::array<std::vector<char>, 2>> single(sets.size());
  for (std::size_t s = 0; s < sets.size(); ++s)
    for (int side : {0, 1}) {
      const auto expr = one_step(sets[s].maps, side ? Side::Right : Side::Left);
      single[s][side] = map_parallel<char>(ms.size(), ctx.options.threads,
                                           [&](std::size_t i) { return char(ev.member(expr, ms[i]).member()); });
    }
  for (std::size_t a = 0; a < sets.size(); ++a) {
    for (std::size_t b = 0; b < sets.size(); ++b) {
      if (a == b) continue;
      auto gens = sets[a].maps;
      gens.insert(gens.end(), sets[b].maps.begin(), sets[b].maps.end());
      for (int side : {0, 1}) {
        const auto expr = one_step(gens, side ? Side::Right : Side::Left);
        const auto joint = map_parallel<char>(ms.size(), ctx.options.threads,
                                              [&](std::size_t i) { return char(ev.member(expr, ms[i]).member()); });
        for (std::size_t i = 0; i < ms.size(); ++i) {
          ++ctx.record.checked;
          if (joint[i] && !single[a][side][i])
            ctx.fail_with({render(ms[i]), sets[a].text + (side ? "^r" : "^l") + " excludes it"});
        }
      }
    }
  }
}

void reflexivity(Context& ctx) {
  for (const auto& set : generator_sets()) {
    for (const char* steps : {"^lr", "^rl"}) {
      const auto expr = notation::parse_class_expr(set.text + steps);
      const auto ev = top_eval(ctx, ctx.bound);
      for (const auto& g : set.maps) {
        ++ctx.record.checked;
        const auto v = ev.member(expr, g);
        if (!v.member()) ctx.fail_with({render(g), set.text + steps + " excludes a generator"});
      }
    }
  }
  ctx.note("inner steps truncated at " + std::to_string(ctx.bound) + " points");
}

void inheritance(Context& ctx) {
  const auto ms = top().morphisms(ctx.bound);
  std::vector<SpaceMap> monos;
  for (const auto& m : ms)
    if (m.is_injective()) monos.push_back(m);
  std::size_t premises = 0;
  for (const auto& set : generator_sets()) {
    auto in_l = [&](const SpaceMap& h) {
      return std::all_of(set.maps.begin(), set.maps.end(), [&](const SpaceMap& g) { return top().lifts(h, g); });
    };
    const auto ok = map_parallel<int>(monos.size(), ctx.options.threads, [&](std::size_t i) {
      const auto& f = monos[i];
      if (!in_l(f) || !in_l(SpaceMap::to_point(f.codomain_ptr()))) return -1;
      return int(in_l(SpaceMap::to_point(f.domain_ptr())));
    });
    for (std::size_t i = 0; i < monos.size(); ++i) {
      ++ctx.record.checked;
      if (ok[i] < 0) continue;
      ++premises;
      if (!ok[i]) ctx.fail_with({render(monos[i]), set.text + "^l"});
    }
  }
  ctx.note(std::to_string(premises) + " (set, mono) pairs satisfy both premises");
}

// ---- groups ----

GroupHom to_zero(const GroupPtr& g) { return GroupHom::zero(g, fingrp::find_group("0")); }
GroupHom from_zero(const GroupPtr& g) { return GroupHom::zero(fingrp::find_group("0"), g); }

GroupEval group_eval(const Context& ctx) {
  engine::EvalOptions o;
  o.working_bound = kGroupBound;
  o.inner_bound = kGroupBound;
  o.threads = ctx.options.threads;
  return GroupEval(groups(), o);
}

GroupPtr cyclic_group(const std::string& n) { return fingrp::find_group("Z" + n); }

void prime_to_p(Context& ctx) {
  const std::size_t p = std::stoul(ctx.law.args[0]);
  const auto ev = group_eval(ctx);
  const GroupExpr expr{{to_zero(cyclic_group(ctx.law.args[0]))}, {{Side::Right, std::nullopt}}};
  for (const auto& h : fingrp::catalog()) {
    ++ctx.record.checked;
    const auto v = ev.member(expr, to_zero(h));
    if (!v.exact() || v.member() != (h->order() % p != 0)) ctx.fail_with(lifting_pair(to_zero(h), v, Side::Right));
  }
}

GroupExpr split_expr(std::size_t max_order) {
  GroupExpr e;
  for (const auto& g : fingrp::catalog(max_order)) e.generators.push_back(from_zero(g));
  e.steps = {{Side::Right, std::nullopt}};
  return e;
}

void split_law(Context& ctx) {
  const auto ev = group_eval(ctx);
  std::size_t split = 0;
  for (const auto& a : fingrp::catalog(8))
    for (const auto& b : fingrp::catalog(8))
      for (const auto& f : fingrp::enumerate_homs(a, b)) {
        if (!f.is_surjective()) continue;
        ++ctx.record.checked;
        const auto v = ev.member(split_expr(b->order()), f);
        const bool section = fingrp::has_section(f);
        split += section;
        if (!v.exact() || v.member() != section) {
          if (v.member()) ctx.fail_with({render(f), "no section"});
          else ctx.fail_with(lifting_pair(f, v, Side::Right));
        }
      }
  ctx.note(std::to_string(split) + " of " + plural(ctx.record.checked, "surjection") + " split");
}

struct GroupTally {
  std::size_t agree = 0, definitive_disagree = 0;
  std::vector<std::string> disagreements;
};

template <class M>
void group_compare(Context& ctx, const std::string& subject, const M& h, const engine::Verdict<M>& v, bool definitive,
                   bool expected, GroupTally& t) {
  ++ctx.record.checked;
  const bool member = v.member();
  if (member == expected) {
    ++t.agree;
    return;
  }
  t.definitive_disagree += definitive;
  t.disagreements.push_back(subject + (member ? " in class" : " not in class") + (definitive ? " (definitive)" : ""));
  if (ctx.record.counterexample) return;
  if (!member && v.witness) {
    ctx.record.counterexample = lifting_pair(h, v, Side::Right);
  } else {
    ctx.record.counterexample = Counterexample{subject, std::string(member ? "class accepts" : "class rejects") +
                                                            ", oracle " + (expected ? "accepts" : "rejects")};
  }
}

void group_summary(Context& ctx, const GroupTally& t, const std::vector<engine::StepTrace>& trace) {
  ctx.note("agrees with the " + ctx.law.oracles[0] + " oracle on " + std::to_string(t.agree) + " of " +
           std::to_string(ctx.record.checked) + "; definitive disagreements: " +
           std::to_string(t.definitive_disagree));
  for (const auto& d : t.disagreements) ctx.note("disagrees: " + d);
  if (!trace.empty()) ctx.note(trace_text(trace));
}

void group_p_group(Context& ctx) {
  const std::size_t p = std::stoul(ctx.law.args[0]);
  const auto ev = group_eval(ctx);
  const GroupExpr expr{{to_zero(cyclic_group(ctx.law.args[0]))},
                       {{Side::Right, std::nullopt}, {Side::Right, std::nullopt}}};
  GroupTally t;
  std::vector<engine::StepTrace> trace;
  for (const auto& h : fingrp::catalog()) {
    const auto v = ev.member(expr, to_zero(h));
    trace = v.steps;
    group_compare(ctx, h->name() + "->0", to_zero(h), v, v.definitive, fingrp::is_p_group(*h, p), t);
  }
  group_summary(ctx, t, trace);
}

void group_nilpotent(Context& ctx) {
  const auto ev = group_eval(ctx);
  GroupExpr expr;
  for (const auto& g : fingrp::catalog(kGroupBound)) expr.generators.push_back(from_zero(g));
  expr.steps = {{Side::Left, std::nullopt}, {Side::Right, std::nullopt}};
  GroupTally t;
  std::vector<engine::StepTrace> trace;
  for (const auto& h : fingrp::catalog(kGroupBound)) {
    auto hh = std::make_shared<const fingrp::FiniteGroup>(fingrp::direct_product(*h, *h));
    std::vector<fingrp::Element> diag(h->order());
    for (std::size_t x = 0; x < diag.size(); ++x) diag[x] = static_cast<fingrp::Element>(x * h->order() + x);
    const auto d = GroupHom::trusted(h, hh, diag);
    const auto v = ev.member(expr, d);
    trace = v.steps;
    group_compare(ctx, h->name() + "->" + hh->name(), d, v, false, fingrp::is_nilpotent(*h), t);
  }
  group_summary(ctx, t, trace);
}

void group_solvable(Context& ctx) {
  const auto ev = group_eval(ctx);
  GroupExpr expr;
  for (const auto& g : fingrp::catalog(kGroupBound))
    if (g->is_abelian()) expr.generators.push_back(from_zero(g));
  expr.steps = {{Side::Left, std::nullopt}, {Side::Right, std::nullopt}};
  auto hs = fingrp::catalog();
  hs.push_back(std::make_shared<const fingrp::FiniteGroup>(fingrp::symmetric(4)));
  hs.push_back(std::make_shared<const fingrp::FiniteGroup>(fingrp::alternating(5)));
  GroupTally t;
  std::vector<engine::StepTrace> trace;
  for (const auto& h : hs) {
    const auto v = ev.member(expr, from_zero(h));
    trace = v.steps;
    group_compare(ctx, "0->" + h->name(), from_zero(h), v, false, fingrp::is_solvable(*h), t);
  }
  group_summary(ctx, t, trace);
}

void group_cyclic_surjection(Context& ctx) {
  const auto ev = group_eval(ctx);
  GroupExpr expr;
  for (std::size_t n = 1; n <= kGroupBound; ++n)
    expr.generators.push_back(from_zero(n == 1 ? fingrp::find_group("0") : cyclic_group(std::to_string(n))));
  expr.steps = {{Side::Right, std::nullopt}};
  GroupTally t;
  for (const auto& f : groups().morphisms(kGroupBound)) {
    const auto v = ev.member(expr, f);
    group_compare(ctx, render(f), f, v, v.definitive, f.is_surjective(), t);
  }
  if (t.disagreements.size() > 5) t.disagreements.resize(5);
  group_summary(ctx, t, {});
}

// ---- experimental topology ----

struct Verdicts {
  Side side = Side::Right;
  std::vector<SpaceMap> maps;
  std::vector<fintop::TopVerdict> verdicts;
};

std::function<bool(const SpaceMap&)> map_predicate(const std::string& name) {
  if (auto p = fintop::parse_map_property(name)) return [p](const SpaceMap& f) { return fintop::map_oracle(f, *p); };
  return reading(name).holds;
}

void compare_readings(Context& ctx, const Verdicts& vs) {
  std::size_t members = 0, exact = 0, definitive = 0;
  for (const auto& v : vs.verdicts) {
    members += v.member();
    exact += v.exact();
    definitive += v.definitive;
  }
  ctx.record.checked = vs.maps.size();
  ctx.note(std::to_string(members) + " of " + plural(vs.maps.size(), "map") + " are members; " +
           std::to_string(exact) + " exact verdicts, " + std::to_string(definitive) + " definitive");
  if (!vs.verdicts.empty() && !vs.verdicts.front().steps.empty()) ctx.note(trace_text(vs.verdicts.front().steps));
  for (const auto& name : ctx.law.oracles) {
    const auto pred = map_predicate(name);
    std::size_t agree = 0, def_dis = 0;
    std::optional<std::size_t> first, first_def;
    for (std::size_t i = 0; i < vs.maps.size(); ++i) {
      if (pred(vs.maps[i]) == vs.verdicts[i].member()) {
        ++agree;
        continue;
      }
      if (!first) first = i;
      if (vs.verdicts[i].definitive) {
        ++def_dis;
        if (!first_def) first_def = i;
      }
    }
    std::string n = "reading " + name + ": agrees on " + std::to_string(agree) + " of " +
                    std::to_string(vs.maps.size()) + ", definitive disagreements " + std::to_string(def_dis);
    const auto pick = first_def ? first_def : first;
    if (pick) {
      const auto& v = vs.verdicts[*pick];
      n += "; e.g. " + render(vs.maps[*pick]) + (v.member() ? " is a member" : " is not a member") +
           (v.definitive ? " (definitive)" : " (bounded)");
      if (!ctx.record.counterexample) {
        ctx.record.counterexample =
            !v.member() && v.witness ? lifting_pair(vs.maps[*pick], v, vs.side)
                                     : Counterexample{render(vs.maps[*pick]),
                                                      std::string(v.member() ? "member" : "non-member") + ", reading " +
                                                          name + (v.member() ? " rejects" : " accepts")};
      }
    }
    ctx.note(std::move(n));
  }
}

void class_vs_readings(Context& ctx) {
  const auto expr = notation::parse_class_expr(ctx.law.args[0]);
  const auto ev = top_eval(ctx, ctx.inner);
  Verdicts vs;
  vs.side = expr.steps.back().side;
  for (auto& c : ev.enumerate_class(expr, ctx.bound)) {
    vs.maps.push_back(std::move(c.morphism));
    vs.verdicts.push_back(std::move(c.verdict));
  }
  compare_readings(ctx, vs);
}

void terminal_probe(Context& ctx) {
  const auto spaces = top().objects(ctx.bound);
  std::vector<std::vector<fintop::TopVerdict>> per_class;
  for (const auto& text : ctx.law.args) {
    const auto expr = notation::parse_class_expr(text);
    const auto ev = top_eval(ctx, ctx.inner);
    ev.stage(expr, expr.steps.size() - 1);
    per_class.push_back(map_parallel<fintop::TopVerdict>(spaces.size(), ctx.options.threads, [&](std::size_t i) {
      return ev.member(expr, SpaceMap::to_point(spaces[i]));
    }));
  }
  ctx.record.checked = spaces.size();
  for (std::size_t c = 0; c < per_class.size(); ++c) {
    std::size_t members = 0, definitive_no = 0;
    std::string rejected;
    for (std::size_t i = 0; i < spaces.size(); ++i) {
      const auto& v = per_class[c][i];
      members += v.member();
      if (!v.member()) {
        definitive_no += v.definitive;
        if (rejected.size() < 200) rejected += " " + notation::render_space(*spaces[i]);
        if (c == 0 && !ctx.record.counterexample)
          ctx.record.counterexample = lifting_pair(SpaceMap::to_point(spaces[i]), v, Side::Right);
      }
    }
    ctx.note(ctx.law.args[c] + ": " + std::to_string(members) + " of " + plural(spaces.size(), "space") +
             " K have K->{*} as a member; definitive rejections " + std::to_string(definitive_no) +
             (rejected.empty() ? "" : "; rejected:" + rejected));
    if (!per_class[c].empty()) ctx.note(trace_text(per_class[c].front().steps));
  }
  if (per_class.size() > 1) {
    std::size_t violations = 0;
    for (std::size_t i = 0; i < spaces.size(); ++i)
      violations += per_class[1][i].member() && !per_class[0][i].member();
    ctx.note("inclusion of the second class in the first on K->{*}: " + std::to_string(violations) + " violations");
  }
}

void bounded_dictionary(Context& ctx) {
  const auto& e = entry(ctx.law.args[0]);
  const auto ev = top_eval(ctx, ctx.inner);
  std::size_t agree = 0, def_dis = 0, definitive = 0;
  auto tally = [&](const std::string& subject, const fintop::TopVerdict& v, bool says) {
    ++ctx.record.checked;
    definitive += v.definitive;
    if (v.member() == says) {
      ++agree;
      return;
    }
    if (!v.definitive) return;
    ++def_dis;
    ctx.note("definitive disagreement at " + subject + ": lifting " + (v.member() ? "accepts" : "rejects") +
             ", oracle " + (says ? "accepts" : "rejects"));
    if (!ctx.record.counterexample)
      ctx.record.counterexample = Counterexample{subject, v.witness ? render(*v.witness) : v.note};
  };
  std::vector<engine::StepTrace> trace;
  if (fintop::is_space_entry(e)) {
    const auto prop = std::get<fintop::SpaceProperty>(e.property);
    for (const auto& x : top().objects(ctx.bound)) {
      const auto v = fintop::evaluate(e, x, ev);
      trace = v.steps;
      tally(notation::render_space(*x), v, fintop::space_oracle(*x, prop));
    }
  } else {
    const auto prop = std::get<fintop::MapProperty>(e.property);
    for (const auto& m : top().morphisms(ctx.bound)) {
      const auto v = fintop::evaluate(e, m, ev);
      trace = v.steps;
      tally(render(m), v, fintop::map_oracle(m, prop));
    }
  }
  ctx.record.notes.insert(ctx.record.notes.begin(),
                          "agrees with the oracle on " + std::to_string(agree) + " of " +
                              std::to_string(ctx.record.checked) + "; definitive verdicts " +
                              std::to_string(definitive) + "; definitive disagreements " + std::to_string(def_dis));
  if (!trace.empty()) ctx.note(trace_text(trace));
}

void dispatch(Context& ctx) {
  switch (ctx.law.kind) {
    case LawKind::EnumerationCounts: return enumeration_counts(ctx);
    case LawKind::MapDictionary: return map_dictionary(ctx);
    case LawKind::SpaceDictionary: return space_dictionary(ctx);
    case LawKind::MembersSatisfy: return members_satisfy(ctx);
    case LawKind::MapsSatisfy: return maps_satisfy(ctx);
    case LawKind::ClosureLaws: return closure_laws(ctx);
    case LawKind::ClosureDirection: return closure_direction(ctx);
    case LawKind::IsoSelfLifting: return iso_self_lifting(ctx);
    case LawKind::IdentityMembership: return identity_membership(ctx);
    case LawKind::Antitonicity: return antitonicity(ctx);
    case LawKind::Reflexivity: return reflexivity(ctx);
    case LawKind::Inheritance: return inheritance(ctx);
    case LawKind::PrimeToP: return prime_to_p(ctx);
    case LawKind::SplitLaw: return split_law(ctx);
    case LawKind::ClassVsReadings: return class_vs_readings(ctx);
    case LawKind::TerminalProbe: return terminal_probe(ctx);
    case LawKind::BoundedDictionary: return bounded_dictionary(ctx);
    case LawKind::GroupPGroup: return group_p_group(ctx);
    case LawKind::GroupNilpotent: return group_nilpotent(ctx);
    case LawKind::GroupSolvable: return group_solvable(ctx);
    case LawKind::GroupCyclicSurjection: return group_cyclic_surjection(ctx);
  }
}

void check_bound(const RunOptions& options) {
  const std::size_t limit = options.extended ? kMaxExtendedBound : kMaxBound;
  if (options.max_size < 1 || options.max_size > limit)
    throw std::invalid_argument("--max-size must be between 1 and " + std::to_string(limit) +
                                (options.extended ? "" : " (6 with --extended)"));
}

}  // namespace

LawRecord run_law(const Law& law, const RunOptions& options) {
  check_bound(options);
  Context ctx{law, options, law.max_bound ? std::min(options.max_size, law.max_bound) : options.max_size,
              options.inner_bound.value_or(kDefaultInnerBound), {}};
  ctx.record.id = law.id;
  ctx.record.citation = law.citation;
  ctx.record.description = law.description;
  ctx.record.status = law.asserted ? LawStatus::Pass : LawStatus::Experimental;
  if (ctx.bound != options.max_size) ctx.note("bound capped at " + std::to_string(ctx.bound));
  dispatch(ctx);
  if (!law.asserted) {
    ctx.record.status = LawStatus::Experimental;
    ctx.note("not asserted: " + law.rationale);
  }
  return ctx.record;
}

Report run_suite(const std::string& suite, const RunOptions& options) {
  const auto names = suite_names();
  if (std::find(names.begin(), names.end(), suite) == names.end())
    throw std::invalid_argument("unknown suite " + suite);
  check_bound(options);
  Report report;
  report.suite = suite;
  report.bound = options.max_size;
  report.extended = options.extended;
  if (suite == "experimental") report.inner_bound = options.inner_bound.value_or(kDefaultInnerBound);
  for (const auto& law : law_registry())
    if (law.suite == suite) report.laws.push_back(run_law(law, options));
  return report;
}

}  // namespace liftkit::harness
