#include "liftkit/notation/notation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace liftkit::notation {

using fintop::Arrow;
using fintop::FiniteSpace;
using fintop::SpaceMap;

ParseError::ParseError(std::size_t offset, std::string expected, const std::string& what)
    : std::runtime_error("at byte " + std::to_string(offset) + ": " + what),
      offset_(offset),
      expected_(std::move(expected)) {}

bool is_label_char(char c) {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') || c == '*' ||
         c == '\'';
}

namespace {

// A space as written: raw labels, arrows and identifications between them.
struct RawSpace {
  std::size_t begin = 0;
  std::vector<std::string> labels;
  std::vector<std::size_t> offsets;
  std::vector<std::pair<std::size_t, std::size_t>> arrows;
  std::vector<std::pair<std::size_t, std::size_t>> merges;

  std::size_t intern(const std::string& label, std::size_t offset) {
    const auto it = std::find(labels.begin(), labels.end(), label);
    if (it != labels.end()) return static_cast<std::size_t>(it - labels.begin());
    labels.push_back(label);
    offsets.push_back(offset);
    return labels.size() - 1;
  }
};

struct Built {
  FiniteSpace space;
  std::vector<std::size_t> point_of;  // raw label -> point
};

std::size_t find_root(std::vector<std::size_t>& parent, std::size_t x) {
  while (parent[x] != x) x = parent[x] = parent[parent[x]];
  return x;
}

Built build(const RawSpace& raw) {
  const std::size_t n = raw.labels.size();
  std::vector<std::size_t> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  for (auto [a, b] : raw.merges) {
    a = find_root(parent, a);
    b = find_root(parent, b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  }
  Built out;
  out.point_of.assign(n, 0);
  std::vector<std::string> names;
  std::map<std::size_t, std::size_t> point_of_root;
  for (std::size_t i = 0; i < n; ++i) {
    const std::size_t r = find_root(parent, i);
    auto [it, fresh] = point_of_root.emplace(r, names.size());
    if (fresh) {
      names.push_back(raw.labels[i]);
    } else {
      names[it->second] += "=" + raw.labels[i];
    }
    out.point_of[i] = it->second;
  }
  if (names.size() > fintop::kMaxPoints)
    throw ParseError(raw.begin, "at most 64 points", "space has too many points");
  std::vector<Arrow> arrows;
  for (const auto& [a, b] : raw.arrows) arrows.push_back({out.point_of[a], out.point_of[b]});
  out.space = FiniteSpace::from_arrows(std::move(names), arrows);
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  RawSpace space() {
    skip();
    RawSpace raw;
    raw.begin = pos_;
    expect("{", "'{'");
    skip();
    if (eat("}")) return raw;
    for (;;) {
      chain(raw);
      skip();
      if (eat("}")) return raw;
      if (eat(",")) {
        skip();
        if (peek() == ',' || peek() == '}') throw ParseError(pos_, "label", "empty label");
        continue;
      }
      fail("',' or '}'");
    }
  }

  SpaceMap map(ParseOptions options) {
    skip();
    const std::size_t begin = pos_;
    RawSpace dom = space();
    skip();
    expect("->", "'->' between the two spaces");
    RawSpace cod = space();

    const Built d = build(dom);
    if (cod.labels.size() == 1 && cod.labels[0] == "*") {
      // {*} is the terminal space: the unique map to a point.
      const std::size_t n = d.space.size();
      return SpaceMap(fintop::share(d.space), fintop::share(FiniteSpace::point().with_labels({"*"})),
                      std::vector<std::uint8_t>(n, 0));
    }
    RawSpace target = cod;
    std::vector<std::size_t> dom_in_target(dom.labels.size());
    for (std::size_t i = 0; i < dom.labels.size(); ++i) {
      const bool present =
          std::find(cod.labels.begin(), cod.labels.end(), dom.labels[i]) != cod.labels.end();
      if (options.strict && !present)
        throw ParseError(dom.offsets[i], "label present in the codomain",
                         "label '" + dom.labels[i] + "' does not occur in the codomain");
      dom_in_target[i] = target.intern(dom.labels[i], dom.offsets[i]);
    }
    if (!options.strict) {
      for (const auto& [a, b] : dom.arrows) target.arrows.emplace_back(dom_in_target[a], dom_in_target[b]);
    }
    const Built c = build(target);

    std::vector<std::uint8_t> images(d.space.size(), 0);
    std::vector<std::size_t> first_label(d.space.size(), dom.labels.size());
    for (std::size_t i = 0; i < dom.labels.size(); ++i) {
      const std::size_t p = d.point_of[i];
      const auto q = static_cast<std::uint8_t>(c.point_of[dom_in_target[i]]);
      if (first_label[p] == dom.labels.size()) {
        first_label[p] = i;
        images[p] = q;
      } else if (images[p] != q) {
        throw ParseError(dom.offsets[i], "labels identified in the codomain as well",
                         "label '" + dom.labels[i] + "' and '" + dom.labels[first_label[p]] +
                             "' are one point of the domain but lie in different =-classes of "
                             "the codomain");
      }
    }
    try {
      return SpaceMap(fintop::share(d.space), fintop::share(c.space), std::move(images));
    } catch (const std::invalid_argument& e) {
      throw ParseError(begin, "continuous map", e.what());
    }
  }

  Expr expr(ParseOptions options) {
    Expr out;
    skip();
    expect("(", "'('");
    skip();
    if (peek() == ')') throw ParseError(pos_, "map", "empty generator list");
    for (;;) {
      out.generators.push_back(map(options));
      skip();
      if (eat(")")) break;
      if (eat(",")) continue;
      fail("',' or ')'");
    }
    skip();
    if (peek() == '_') throw ParseError(pos_, "'^'", "bound on a nonexistent step");
    if (peek() != '^') fail("'^'");
    while (skip(), eat("^")) {
      skip();
      bool any = false;
      while (peek() == 'l' || peek() == 'r') {
        out.steps.push_back({peek() == 'l' ? engine::Side::Left : engine::Side::Right, std::nullopt});
        ++pos_;
        any = true;
        skip();
      }
      if (!any) {
        if (peek() == '_') throw ParseError(pos_, "'l' or 'r'", "bound on a nonexistent step");
        fail("'l' or 'r'");
      }
      if (peek() == '_') out.steps.back().bound = bound();
      skip();
      if (peek() == '_') throw ParseError(pos_, "'^'", "bound on a nonexistent step");
    }
    return out;
  }

  void end() {
    skip();
    if (pos_ != text_.size()) fail("end of input");
  }

  std::size_t pos() const { return pos_; }

 private:
  std::size_t bound() {
    expect("_", "'_'");
    skip();
    expect("{", "'{'");
    skip();
    expect("<", "'<'");
    skip();
    const std::size_t start = pos_;
    std::size_t value = 0;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') {
      value = value * 10 + static_cast<std::size_t>(text_[pos_] - '0');
      if (value > 1000) throw ParseError(start, "bound below 1000", "bound too large");
      ++pos_;
    }
    if (pos_ == start) fail("integer");
    if (value == 0) throw ParseError(start, "positive integer", "bound must be positive");
    skip();
    expect("}", "'}'");
    return value;
  }

  void chain(RawSpace& raw) {
    std::size_t prev = label(raw);
    for (;;) {
      skip();
      enum { Fwd, Back, Both, Same } link;
      const std::size_t at = pos_;
      if (eat("<->")) link = Both;
      else if (eat("<-")) link = Back;
      else if (eat("->")) link = Fwd;
      else if (eat("=")) link = Same;
      else return;
      skip();
      if (pos_ == text_.size() || peek() == ',' || peek() == '}')
        throw ParseError(at, "label after the link", "dangling link");
      const std::size_t next = label(raw);
      switch (link) {
        case Fwd: raw.arrows.emplace_back(prev, next); break;
        case Back: raw.arrows.emplace_back(next, prev); break;
        case Both:
          raw.arrows.emplace_back(prev, next);
          raw.arrows.emplace_back(next, prev);
          break;
        case Same: raw.merges.emplace_back(prev, next); break;
      }
      prev = next;
    }
  }

  std::size_t label(RawSpace& raw) {
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_label_char(text_[pos_])) ++pos_;
    if (pos_ == start) {
      if (peek() == ',' || peek() == '}') throw ParseError(pos_, "label", "empty label");
      fail("label");
    }
    return raw.intern(std::string(text_.substr(start, pos_ - start)), start);
  }

  [[noreturn]] void fail(const std::string& expected) const {
    if (pos_ >= text_.size()) throw ParseError(pos_, expected, "unexpected end of input, expected " + expected);
    throw ParseError(pos_, expected,
                     "unknown token '" + std::string(1, text_[pos_]) + "', expected " + expected);
  }

  void expect(std::string_view token, const std::string& expected) {
    if (!eat(token)) fail(expected);
  }

  bool eat(std::string_view token) {
    if (text_.substr(pos_, token.size()) != token) return false;
    pos_ += token.size();
    return true;
  }

  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }

  void skip() {
    while (pos_ < text_.size() && (text_[pos_] == ' ' || text_[pos_] == '\t' || text_[pos_] == '\n' ||
                                   text_[pos_] == '\r'))
      ++pos_;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

std::vector<std::string> split_parts(const std::string& label) {
  std::vector<std::string> parts;
  std::size_t start = 0;
  for (;;) {
    const std::size_t eq = label.find('=', start);
    parts.push_back(label.substr(start, eq - start));
    if (eq == std::string::npos) return parts;
    start = eq + 1;
  }
}

bool valid_part(const std::string& s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_label_char);
}

// Labels that render and parse back to the same points; defaults otherwise.
std::vector<std::string> usable_labels(const FiniteSpace& space) {
  std::set<std::string> seen;
  bool ok = true;
  std::vector<std::string> out;
  for (std::size_t x = 0; x < space.size(); ++x) {
    out.push_back(space.label(x));
    for (const auto& p : split_parts(out.back())) ok = ok && valid_part(p) && seen.insert(p).second;
  }
  if (ok) return out;
  out.clear();
  for (std::size_t x = 0; x < space.size(); ++x) out.push_back(fintop::default_label(x));
  return out;
}

}  // namespace

FiniteSpace parse_space(std::string_view text) {
  Parser p(text);
  RawSpace raw = p.space();
  p.end();
  return build(raw).space;
}

SpaceMap parse_map(std::string_view text, ParseOptions options) {
  Parser p(text);
  SpaceMap m = p.map(options);
  p.end();
  return m;
}

Expr parse_class_expr(std::string_view text, ParseOptions options) {
  Parser p(text);
  Expr e = p.expr(options);
  p.end();
  return e;
}

std::string render_space(const FiniteSpace& space) {
  const std::size_t n = space.size();
  const auto labels = usable_labels(space);
  std::vector<std::size_t> rep(n);
  for (std::size_t x = 0; x < n; ++x) {
    rep[x] = x;
    for (std::size_t y = 0; y < x; ++y)
      if (space.equivalent(x, y)) {
        rep[x] = rep[y];
        break;
      }
  }
  // Items keyed by the least point they mention.
  std::vector<std::pair<std::vector<std::size_t>, std::string>> items;
  for (std::size_t x = 0; x < n; ++x) {
    if (rep[x] != x) continue;
    std::vector<std::size_t> members;
    for (std::size_t y = x; y < n; ++y)
      if (rep[y] == x) members.push_back(y);
    bool linked = members.size() > 1;
    for (std::size_t y = 0; y < n; ++y)
      if (rep[y] != x && (space.arrow(x, y) || space.arrow(y, x))) linked = true;
    std::string chain;
    for (std::size_t i = 0; i < members.size(); ++i) chain += (i ? "<->" : "") + labels[members[i]];
    for (std::size_t y = 0; y < n; ++y) {
      if (rep[y] != y || y == x || !space.arrow(x, y) || space.arrow(y, x)) continue;
      bool covered = true;
      for (std::size_t z = 0; z < n && covered; ++z) {
        if (rep[z] != z || z == x || z == y) continue;
        if (space.arrow(x, z) && space.arrow(z, y) && !space.arrow(z, x) && !space.arrow(y, z))
          covered = false;
      }
      if (!covered) continue;
      if (x < y) items.push_back({{x, y}, labels[x] + "->" + labels[y]});
      else items.push_back({{y, x}, labels[y] + "<-" + labels[x]});
    }
    if (members.size() > 1 || !linked) items.push_back({members, chain});
  }
  std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) {
    const auto ka = std::minmax(a.first.front(), a.first.back());
    const auto kb = std::minmax(b.first.front(), b.first.back());
    return std::tie(ka.first, ka.second, a.first) < std::tie(kb.first, kb.second, b.first);
  });
  std::vector<std::size_t> order;
  std::vector<bool> seen(n, false);
  for (const auto& [pts, _] : items)
    for (std::size_t p : pts)
      if (!seen[p]) {
        seen[p] = true;
        order.push_back(p);
      }
  std::string out = "{";
  bool first = true;
  auto emit = [&](const std::string& s) {
    out += (first ? "" : ", ") + s;
    first = false;
  };
  bool in_order = true;
  for (std::size_t i = 0; i < order.size(); ++i) in_order = in_order && order[i] == i;
  if (!in_order)
    for (std::size_t x = 0; x < n; ++x) emit(labels[x]);
  for (const auto& [_, s] : items) emit(s);
  return out + "}";
}

std::string render_map(const SpaceMap& map) {
  const FiniteSpace& dom = map.domain();
  const FiniteSpace& cod = map.codomain();
  const auto dom_labels = usable_labels(dom);
  std::set<std::string> used;
  for (const auto& l : dom_labels)
    for (const auto& p : split_parts(l)) used.insert(p);

  std::vector<std::string> cod_labels(cod.size());
  for (std::size_t x = 0; x < dom.size(); ++x) {
    auto& l = cod_labels[map(x)];
    l += (l.empty() ? "" : "=") + dom_labels[x];
  }
  const auto own = usable_labels(cod);
  std::size_t fresh = 0;
  for (std::size_t q = 0; q < cod.size(); ++q) {
    if (!cod_labels[q].empty()) continue;
    const auto parts = split_parts(own[q]);
    const bool clash = std::any_of(parts.begin(), parts.end(), [&](const auto& p) { return used.count(p) > 0; });
    if (!clash) {
      cod_labels[q] = own[q];
    } else {
      std::string name;
      do name = "y" + std::to_string(fresh++);
      while (used.count(name) || std::find(own.begin(), own.end(), name) != own.end());
      cod_labels[q] = name;
    }
    for (const auto& p : split_parts(cod_labels[q])) used.insert(p);
  }
  return render_space(dom.with_labels(dom_labels)) + " -> " +
         render_space(cod.with_labels(std::move(cod_labels)));
}

std::string render_steps(const std::vector<engine::Step>& steps) {
  std::string out;
  bool open = false;
  for (const auto& s : steps) {
    if (!open) out += "^";
    out += engine::side_letter(s.side);
    open = true;
    if (s.bound) {
      out += "_{<" + std::to_string(*s.bound) + "}";
      open = false;
    }
  }
  return out;
}

std::string render_expr(const Expr& expr) {
  std::string out = "(";
  for (std::size_t i = 0; i < expr.generators.size(); ++i)
    out += (i ? ", " : "") + render_map(expr.generators[i]);
  return out + ")" + render_steps(expr.steps);
}

}  // namespace liftkit::notation
