#include <filesystem>
#include <iostream>
#include <regex>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "liftkit/engine/evaluator.hpp"
#include "liftkit/fingrp/category.hpp"
#include "liftkit/fintop/category.hpp"
#include "liftkit/fintop/dictionary.hpp"
#include "liftkit/fintop/enumerate.hpp"
#include "liftkit/fintop/oracles.hpp"
#include "liftkit/harness/laws.hpp"
#include "liftkit/notation/notation.hpp"

namespace {

using namespace liftkit;
using fintop::SpaceMap;
using fingrp::GroupHom;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kUsage = 2;

/// A usage problem detected after argument parsing.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

const fintop::TopCategory& top() {
  static const fintop::TopCategory cat;
  return cat;
}

const fingrp::GroupCategory& groups() {
  static const fingrp::GroupCategory cat;
  return cat;
}

std::string render(const SpaceMap& m) { return notation::render_map(m); }
std::string render(const GroupHom& m) { return m.describe(); }

std::string yes_no(bool b) { return b ? "yes" : "no"; }

// Groups

/// Sn, An, Zn, Dn (order 2n) and Dicn (order 4n) beyond the catalog.
std::optional<fingrp::FiniteGroup> constructed_group(const std::string& text) {
  static const std::regex pattern("(S|A|Z|D|Dic)([0-9]+)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) return std::nullopt;
  const std::size_t n = std::stoul(m[2]);
  const std::string kind = m[1];
  if (kind == "S" && n >= 1 && n <= 5) return fingrp::symmetric(n);
  if (kind == "A" && n >= 1 && n <= 5) return fingrp::alternating(n);
  if (kind == "Z" && n >= 1 && n <= fingrp::kMaxOrder) return fingrp::cyclic(n);
  if (kind == "D" && n >= 1 && 2 * n <= fingrp::kMaxOrder) return fingrp::dihedral(n);
  if (kind == "Dic" && n >= 1 && 4 * n <= fingrp::kMaxOrder) return fingrp::dicyclic(n);
  return std::nullopt;
}

fingrp::GroupPtr group_arg(const std::string& text) {
  if (auto g = fingrp::find_group(text)) return g;
  if (auto g = constructed_group(text)) return std::make_shared<const fingrp::FiniteGroup>(std::move(*g));
  if (std::filesystem::exists(text))
    return std::make_shared<const fingrp::FiniteGroup>(fingrp::load_cayley_table(text));
  throw UsageError("unknown group '" + text + "': not a catalog name or a Cayley-table file");
}

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t");
  const auto e = s.find_last_not_of(" \t");
  return b == std::string::npos ? "" : s.substr(b, e - b + 1);
}

/// "G->H [i0,i1,...]"; the image list may be omitted when hom(G, H) has one element.
GroupHom hom_arg(const std::string& text) {
  const auto arrow = text.find("->");
  if (arrow == std::string::npos) throw UsageError("expected 'G->H [images]' in '" + text + "'");
  std::string rest = text.substr(arrow + 2);
  std::string images;
  if (const auto open = rest.find('['); open != std::string::npos) {
    const auto close = rest.find(']', open);
    if (close == std::string::npos) throw UsageError("missing ']' in '" + text + "'");
    images = rest.substr(open + 1, close - open - 1);
    if (!trim(rest.substr(close + 1)).empty()) throw UsageError("trailing text in '" + text + "'");
    rest = rest.substr(0, open);
  }
  const auto dom = group_arg(trim(text.substr(0, arrow)));
  const auto cod = group_arg(trim(rest));
  if (images.empty()) {
    const auto all = fingrp::enumerate_homs(dom, cod);
    if (all.size() != 1)
      throw UsageError(std::to_string(all.size()) + " homomorphisms " + dom->name() + "->" + cod->name() +
                       "; give the images, e.g. " + all.back().describe());
    return all.front();
  }
  std::vector<fingrp::Element> elems;
  std::stringstream ss(images);
  for (std::string item; std::getline(ss, item, ',');) {
    const std::string t = trim(item);
    std::size_t used = 0;
    int v = -1;
    try {
      v = std::stoi(t, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != t.size() || v < 0 || v > 255) throw UsageError("bad image '" + t + "' in '" + text + "'");
    elems.push_back(static_cast<fingrp::Element>(v));
  }
  try {
    return GroupHom(dom, cod, std::move(elems));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// lift

template <class C>
int report_lift(const C& cat, const typename C::Morphism& f, const typename C::Morphism& g) {
  const auto r = cat.lift(f, g);
  std::cout << "left:  " << render(f) << "\nright: " << render(g) << "\n";
  if (r.holds) {
    std::cout << "holds\n";
    if (r.square) {
      std::cout << "  square top:    " << render(r.square->top) << "\n"
                << "  square bottom: " << render(r.square->bottom) << "\n"
                << "  diagonal:      " << render(*r.diagonal) << "\n";
    } else {
      std::cout << "  no commuting square\n";
    }
    return kHolds;
  }
  std::cout << "fails\n"
            << "  square top:    " << render(r.square->top) << "\n"
            << "  square bottom: " << render(r.square->bottom) << "\n"
            << "  no diagonal\n";
  return kFails;
}

struct LiftArgs {
  std::string left, right;
  bool groups = false;
  bool strict = false;
};

int cmd_lift(const LiftArgs& a) {
  if (a.groups) return report_lift(groups(), hom_arg(a.left), hom_arg(a.right));
  const notation::ParseOptions po{a.strict};
  return report_lift(top(), notation::parse_map(a.left, po), notation::parse_map(a.right, po));
}

// class

struct ClassArgs {
  std::string expr;
  std::size_t max_size = 3;
  std::string member;
  std::optional<std::size_t> inner_bound;
  bool strict = false;
  bool all = false;
  std::string format = "text";
  unsigned threads = 1;
};

std::string trace_text(const engine::StepTrace& t) {
  std::string s(1, engine::side_letter(t.step.side));
  if (t.step.bound) s += "_{<" + std::to_string(*t.step.bound) + "}";
  s += ": " + std::to_string(t.members) + " members at <= " + std::to_string(t.max_size) + " points, " +
       std::string(engine::to_string(t.approx));
  if (!t.oracle.empty()) s += " (oracle " + t.oracle + ")";
  return s;
}

std::string tag(const fintop::TopVerdict& v) {
  std::string s(engine::to_string(v.kind));
  if (!v.exact()) s += v.definitive ? " (definitive)" : " (bounded)";
  return s;
}

nlohmann::ordered_json verdict_json(const SpaceMap& h, const fintop::TopVerdict& v) {
  nlohmann::ordered_json j;
  j["map"] = render(h);
  j["verdict"] = std::string(engine::to_string(v.kind));
  j["definitive"] = v.definitive;
  j["witness"] = v.witness ? nlohmann::ordered_json(render(*v.witness)) : nlohmann::ordered_json(nullptr);
  return j;
}

void print_verdict(const SpaceMap& h, const fintop::TopVerdict& v, engine::Side side) {
  std::cout << render(h) << "\n" << tag(v) << "\n";
  if (!v.note.empty()) std::cout << "  " << v.note << "\n";
  if (v.witness) {
    const bool left = side == engine::Side::Left;
    std::cout << "  fails to lift " << (left ? "against " : "from ") << render(*v.witness) << "\n";
    if (v.square)
      std::cout << "  square top:    " << render(v.square->top) << "\n"
                << "  square bottom: " << render(v.square->bottom) << "\n";
  }
  for (const auto& t : v.steps) std::cout << "  step " << trace_text(t) << "\n";
}

int cmd_class(const ClassArgs& a) {
  const notation::ParseOptions po{a.strict};
  const auto expr = notation::parse_class_expr(a.expr, po);
  engine::EvalOptions eo;
  eo.working_bound = a.max_size;
  eo.inner_bound = a.inner_bound;
  eo.threads = a.threads;
  const fintop::TopEvaluator ev(top(), eo);
  const engine::Side side = expr.steps.back().side;

  if (!a.member.empty()) {
    const auto h = notation::parse_map(a.member, po);
    const auto v = ev.member(expr, h);
    if (a.format == "json") {
      std::cout << verdict_json(h, v).dump(2) << "\n";
    } else {
      print_verdict(h, v, side);
    }
    return v.member() ? kHolds : kFails;
  }

  if (a.max_size > harness::kMaxBound) throw UsageError("--max-size is limited to " + std::to_string(harness::kMaxBound));
  const auto entries = ev.enumerate_class(expr, a.max_size);
  std::size_t members = 0;
  for (const auto& e : entries) members += e.verdict.member();
  const auto steps = entries.empty() ? std::vector<engine::StepTrace>{} : entries.front().verdict.steps;

  if (a.format == "json") {
    nlohmann::ordered_json j;
    j["expression"] = notation::render_expr(expr);
    j["max_size"] = a.max_size;
    j["members"] = members;
    j["checked"] = entries.size();
    j["steps"] = nlohmann::ordered_json::array();
    for (const auto& t : steps) j["steps"].push_back(trace_text(t));
    j["maps"] = nlohmann::ordered_json::array();
    for (const auto& e : entries)
      if (a.all || e.verdict.member()) j["maps"].push_back(verdict_json(e.morphism, e.verdict));
    std::cout << j.dump(2) << "\n";
    return kHolds;
  }
  std::cout << notation::render_expr(expr) << "\n";
  for (const auto& t : steps) std::cout << "  step " << trace_text(t) << "\n";
  for (const auto& e : entries) {
    if (!a.all && !e.verdict.member()) continue;
    std::cout << "  " << render(e.morphism) << "  " << tag(e.verdict) << "\n";
  }
  std::cout << members << " of " << entries.size() << " maps at <= " << a.max_size
            << " points are members\n";
  return kHolds;
}

// verify

struct VerifyArgs {
  std::string suite;
  std::size_t max_size = harness::kDefaultBound;
  bool extended = false;
  std::optional<std::size_t> inner_bound;
  std::string format = "text";
  unsigned threads = 1;
};

int cmd_verify(const VerifyArgs& a) {
  harness::RunOptions o;
  o.max_size = a.max_size;
  o.extended = a.extended;
  o.inner_bound = a.inner_bound;
  o.threads = a.threads;
  harness::Report report;
  try {
    report = harness::run_suite(a.suite, o);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  if (a.format == "json") {
    std::cout << harness::to_json(report).dump(2) << "\n";
  } else {
    std::cout << harness::to_text(report);
  }
  return report.passed() ? kHolds : kFails;
}

// enumerate

struct EnumerateArgs {
  std::optional<std::size_t> spaces;
  bool labeled = false;
  std::vector<std::string> maps;
  bool count_only = false;
};

int cmd_enumerate(const EnumerateArgs& a) {
  if (a.spaces) {
    const std::size_t n = *a.spaces;
    if (a.count_only) {
      std::cout << fintop::count_spaces(n, !a.labeled) << "\n";
      return kHolds;
    }
    const auto spaces = fintop::enumerate_spaces(n, !a.labeled);
    for (const auto& s : spaces) std::cout << notation::render_space(s) << "\n";
    const bool one = spaces.size() == 1;
    std::cout << spaces.size() << (a.labeled ? (one ? " labeled space" : " labeled spaces")
                                             : (one ? " homeomorphism class" : " homeomorphism classes"))
              << " with " << n
              << (n == 1 ? " point" : " points") << "\n";
    return kHolds;
  }
  const auto from = fintop::share(notation::parse_space(a.maps.at(0)));
  const auto to = fintop::share(notation::parse_space(a.maps.at(1)));
  if (a.count_only) {
    std::cout << fintop::count_maps(*from, *to) << "\n";
    return kHolds;
  }
  const auto maps = fintop::enumerate_maps(from, to);
  for (const auto& m : maps) std::cout << render(m) << "\n";
  std::cout << maps.size() << (maps.size() == 1 ? " map" : " maps") << "\n";
  return kHolds;
}

// props

struct PropsArgs {
  std::string space;
  std::size_t inner_bound = harness::kDefaultInnerBound;
};

int cmd_props(const PropsArgs& a) {
  const auto x = fintop::share(notation::parse_space(a.space));
  engine::EvalOptions eo;
  eo.working_bound = std::max<std::size_t>(x->size(), 1);
  eo.inner_bound = a.inner_bound;
  const fintop::TopEvaluator ev(top(), eo);
  std::cout << notation::render_space(*x) << "\n";
  int status = kHolds;
  for (const auto p : fintop::all_space_properties()) {
    const bool oracle = fintop::space_oracle(*x, p);
    std::cout << "  " << fintop::name(p) << ": " << yes_no(oracle) << "\n";
    for (const auto& e : fintop::lifting_dictionary()) {
      if (!fintop::is_space_entry(e) || std::get<fintop::SpaceProperty>(e.property) != p) continue;
      const auto v = fintop::evaluate(e, x, ev);
      const bool differs = v.member() != oracle;
      std::cout << "    " << fintop::describe(e) << ": " << tag(v) << (differs ? "  (differs from oracle)" : "")
                << "\n";
      if (differs && v.exact()) status = kFails;
    }
  }
  return status;
}

// groups

struct HomsArgs {
  std::string from, to;
};

int cmd_homs(const HomsArgs& a) {
  const auto g = group_arg(a.from);
  const auto h = group_arg(a.to);
  const auto homs = fingrp::enumerate_homs(g, h);
  for (const auto& f : homs) std::cout << f.describe() << "\n";
  std::cout << homs.size() << (homs.size() == 1 ? " homomorphism" : " homomorphisms") << "\n";
  return kHolds;
}

int cmd_catalog() {
  for (const auto& g : fingrp::catalog())
    std::cout << g->name() << "  order " << g->order() << (g->is_abelian() ? "  abelian" : "") << "\n";
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Lifting properties of finite topological spaces and finite groups"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(LIFTKIT_VERSION));
  const unsigned default_threads = engine::default_threads();

  LiftArgs lift;
  auto* lift_cmd = app.add_subcommand("lift", "decide whether LEFT has the left lifting property against RIGHT");
  lift_cmd->add_option("left", lift.left, "map, e.g. \"{}->{*}\"")->required();
  lift_cmd->add_option("right", lift.right, "map, e.g. \"{a,b}->{a=b}\"")->required();
  lift_cmd->add_flag("--groups", lift.groups, "operands are homomorphisms 'G->H [images]'");
  lift_cmd->add_flag("--strict", lift.strict, "domain labels must occur in the codomain");

  ClassArgs cls;
  cls.threads = default_threads;
  auto* class_cmd = app.add_subcommand("class", "evaluate an orthogonal class expression");
  class_cmd->add_option("expr", cls.expr, "e.g. \"({b}->{a->b})^l\"")->required();
  class_cmd->add_option("--max-size", cls.max_size, "largest space listed")->capture_default_str()->check(
      CLI::Range(1, 7));
  class_cmd->add_option("--member", cls.member, "decide membership of one map");
  class_cmd->add_option("--inner-bound", cls.inner_bound, "truncate unbounded inner steps at this size")
      ->check(CLI::Range(1, 5));
  class_cmd->add_flag("--strict", cls.strict, "domain labels must occur in the codomain");
  class_cmd->add_flag("--all", cls.all, "list non-members too");
  class_cmd->add_option("--format", cls.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  class_cmd->add_option("--threads", cls.threads)->check(CLI::PositiveNumber);

  VerifyArgs ver;
  ver.threads = default_threads;
  auto* verify_cmd = app.add_subcommand("verify", "run a law suite");
  verify_cmd->add_option("--suite", ver.suite)->required()->check(CLI::IsMember(harness::suite_names()));
  verify_cmd->add_option("--max-size", ver.max_size)->capture_default_str();
  verify_cmd->add_flag("--extended", ver.extended, "allow --max-size up to 6");
  verify_cmd->add_option("--inner-bound", ver.inner_bound, "truncation for experimental inner steps")
      ->check(CLI::Range(1, 5));
  verify_cmd->add_option("--format", ver.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  verify_cmd->add_option("--threads", ver.threads)->check(CLI::PositiveNumber);

  EnumerateArgs en;
  auto* enum_cmd = app.add_subcommand("enumerate", "list spaces or maps");
  auto* spaces_opt = enum_cmd->add_option("--spaces", en.spaces, "spaces with N points");
  auto* maps_opt = enum_cmd->add_option("--maps", en.maps, "continuous maps A -> B")->expected(2);
  spaces_opt->excludes(maps_opt);
  enum_cmd->add_flag("--labeled", en.labeled, "count labeled spaces instead of homeomorphism classes")
      ->needs(spaces_opt);
  enum_cmd->add_flag("--count", en.count_only, "print only the count");

  PropsArgs props;
  auto* props_cmd = app.add_subcommand("props", "space properties by lifting formula and by direct check");
  props_cmd->add_option("space", props.space, "e.g. \"{a->b}\"")->required();
  props_cmd->add_option("--inner-bound", props.inner_bound, "truncation for iterated formulas")
      ->capture_default_str()
      ->check(CLI::Range(1, 5));

  HomsArgs homs;
  auto* homs_cmd = app.add_subcommand("homs", "list group homomorphisms G -> H");
  homs_cmd->add_option("from", homs.from, "catalog name or Cayley-table file")->required();
  homs_cmd->add_option("to", homs.to, "catalog name or Cayley-table file")->required();

  auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in groups");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsage;
  }

  try {
    if (*lift_cmd) return cmd_lift(lift);
    if (*class_cmd) return cmd_class(cls);
    if (*verify_cmd) return cmd_verify(ver);
    if (*enum_cmd) {
      if (!en.spaces && en.maps.empty()) throw UsageError("enumerate needs --spaces N or --maps A B");
      return cmd_enumerate(en);
    }
    if (*props_cmd) return cmd_props(props);
    if (*homs_cmd) return cmd_homs(homs);
    if (*catalog_cmd) return cmd_catalog();
  } catch (const notation::ParseError& e) {
    std::cerr << "parse error " << e.what() << "\n";
    return kUsage;
  } catch (const engine::EvalError& e) {
    std::cerr << "cannot evaluate: " << e.what() << "\n"
              << "pass --inner-bound N to truncate unbounded inner steps (results become bounded)\n";
    return kUsage;
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
