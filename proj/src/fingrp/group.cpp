#include "liftkit/fingrp/group.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <stdexcept>

namespace liftkit::fingrp {

namespace {

using Table = std::vector<std::vector<Element>>;

Element el(std::size_t i) { return static_cast<Element>(i); }

Table table_from(std::size_t n, auto&& mul) {
  Table t(n, std::vector<Element>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = el(mul(a, b));
  return t;
}

FiniteGroup permutation_group(std::string name, std::size_t n, bool even_only) {
  std::vector<std::vector<std::size_t>> perms;
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) inversions += p[i] > p[j];
    if (!even_only || inversions % 2 == 0) perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  if (perms.size() > kMaxOrder) throw std::invalid_argument("permutation group too large");
  std::map<std::vector<std::size_t>, std::size_t> index;
  for (std::size_t i = 0; i < perms.size(); ++i) index[perms[i]] = i;
  return FiniteGroup(std::move(name), table_from(perms.size(), [&](std::size_t a, std::size_t b) {
    std::vector<std::size_t> c(n);
    for (std::size_t i = 0; i < n; ++i) c[i] = perms[b][perms[a][i]];
    return index.at(c);
  }));
}

std::vector<bool> commutator_subgroup(const FiniteGroup& g, const std::vector<bool>& a,
                                      const std::vector<bool>& b) {
  std::vector<Element> comms;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (!a[x]) continue;
    for (std::size_t y = 0; y < g.order(); ++y) {
      if (!b[y]) continue;
      const Element c = g.mul(g.mul(g.inverse(el(x)), g.inverse(el(y))), g.mul(el(x), el(y)));
      if (std::find(comms.begin(), comms.end(), c) == comms.end()) comms.push_back(c);
    }
  }
  return g.generated(comms);
}

bool series_reaches_trivial(const FiniteGroup& g, bool lower_central) {
  const std::vector<bool> whole(g.order(), true);
  std::vector<bool> cur = whole;
  while (true) {
    if (std::count(cur.begin(), cur.end(), true) == 1) return true;
    auto next = commutator_subgroup(g, cur, lower_central ? whole : cur);
    if (next == cur) return false;
    cur = std::move(next);
  }
}

}  // namespace

FiniteGroup::FiniteGroup(std::string name, std::vector<std::vector<Element>> table)
    : name_(std::move(name)), table_(std::move(table)) {
  const std::size_t n = table_.size();
  if (n == 0) throw std::invalid_argument("group " + name_ + ": empty table");
  if (n > kMaxOrder) throw std::invalid_argument("group " + name_ + ": order exceeds 255");
  for (const auto& row : table_) {
    if (row.size() != n) throw std::invalid_argument("group " + name_ + ": table is not square");
    for (Element e : row)
      if (e >= n) throw std::invalid_argument("group " + name_ + ": entry out of range");
  }
  bool found = false;
  for (std::size_t e = 0; e < n && !found; ++e) {
    bool ok = true;
    for (std::size_t x = 0; x < n && ok; ++x) ok = table_[e][x] == x && table_[x][e] == x;
    if (ok) {
      identity_ = el(e);
      found = true;
    }
  }
  if (!found) throw std::invalid_argument("group " + name_ + ": no identity element");
  inverse_.assign(n, 0);
  for (std::size_t x = 0; x < n; ++x) {
    bool ok = false;
    for (std::size_t y = 0; y < n && !ok; ++y) {
      if (table_[x][y] == identity_ && table_[y][x] == identity_) {
        inverse_[x] = el(y);
        ok = true;
      }
    }
    if (!ok) throw std::invalid_argument("group " + name_ + ": element without inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table_[table_[a][b]][c] != table_[a][table_[b][c]])
          throw std::invalid_argument("group " + name_ + ": multiplication is not associative");
  element_order_.assign(n, 1);
  for (std::size_t x = 0; x < n; ++x) {
    Element p = el(x);
    while (p != identity_) {
      p = table_[p][x];
      ++element_order_[x];
    }
  }
  std::vector<Element> by_order(n);
  std::iota(by_order.begin(), by_order.end(), 0);
  std::stable_sort(by_order.begin(), by_order.end(),
                   [&](Element a, Element b) { return element_order_[a] > element_order_[b]; });
  std::vector<bool> span = generated({});
  for (Element x : by_order) {
    if (span[x]) continue;
    generators_.push_back(x);
    span = generated(generators_);
  }
}

bool FiniteGroup::is_abelian() const {
  for (std::size_t a = 0; a < order(); ++a)
    for (std::size_t b = a + 1; b < order(); ++b)
      if (table_[a][b] != table_[b][a]) return false;
  return true;
}

std::vector<std::size_t> FiniteGroup::order_histogram() const {
  std::vector<std::size_t> h(order() + 1, 0);
  for (std::size_t o : element_order_) ++h[o];
  return h;
}

std::vector<bool> FiniteGroup::generated(const std::vector<Element>& elems) const {
  std::vector<bool> in(order(), false);
  std::vector<Element> queue{identity_};
  in[identity_] = true;
  for (std::size_t i = 0; i < queue.size(); ++i) {
    for (Element s : elems) {
      const Element y = table_[queue[i]][s];
      if (!in[y]) {
        in[y] = true;
        queue.push_back(y);
      }
    }
  }
  return in;
}

FiniteGroup trivial_group() { return FiniteGroup("0", {{0}}); }

FiniteGroup cyclic(std::size_t n) {
  return FiniteGroup("Z" + std::to_string(n),
                     table_from(n, [n](std::size_t a, std::size_t b) { return (a + b) % n; }));
}

FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h) {
  const std::size_t m = h.order();
  return FiniteGroup(g.name() + "x" + h.name(),
                     table_from(g.order() * m, [&](std::size_t a, std::size_t b) {
                       return g.mul(el(a / m), el(b / m)) * m + h.mul(el(a % m), el(b % m));
                     }));
}

FiniteGroup dihedral(std::size_t n) {
  // r^k s^j has index k + n j; s r = r^-1 s.
  return FiniteGroup("D" + std::to_string(n), table_from(2 * n, [n](std::size_t a, std::size_t b) {
    const std::size_t k1 = a % n, j1 = a / n, k2 = b % n, j2 = b / n;
    const std::size_t k = j1 ? (k1 + n - k2) % n : (k1 + k2) % n;
    return k + n * ((j1 + j2) % 2);
  }));
}

FiniteGroup dicyclic(std::size_t n) {
  // a^k x^j has index k + 2n j; x a = a^-1 x, x^2 = a^n.
  const std::size_t m = 2 * n;
  std::string name = n == 2 ? "Q8" : n == 4 ? "Q16" : "Dic" + std::to_string(n);
  return FiniteGroup(std::move(name), table_from(2 * m, [n, m](std::size_t a, std::size_t b) {
    const std::size_t k1 = a % m, j1 = a / m, k2 = b % m, j2 = b / m;
    if (!j1) return (k1 + k2) % m + m * j2;
    const std::size_t k = (k1 + m - k2) % m;
    return j2 ? (k + n) % m : k + m;
  }));
}

FiniteGroup symmetric(std::size_t n) { return permutation_group("S" + std::to_string(n), n, false); }
FiniteGroup alternating(std::size_t n) { return permutation_group("A" + std::to_string(n), n, true); }

const std::vector<GroupPtr>& catalog() {
  static const std::vector<GroupPtr> groups = [] {
    auto z = [](std::size_t n) { return cyclic(n); };
    auto x = [](const FiniteGroup& a, const FiniteGroup& b) { return direct_product(a, b); };
    std::vector<FiniteGroup> g;
    g.push_back(trivial_group());
    for (std::size_t n = 2; n <= 16; ++n) {
      g.push_back(z(n));
      switch (n) {
        case 4: g.push_back(x(z(2), z(2))); break;
        case 6: g.push_back(symmetric(3)); break;
        case 8:
          g.push_back(x(z(2), z(4)));
          g.push_back(x(x(z(2), z(2)), z(2)));
          g.push_back(dihedral(4));
          g.push_back(dicyclic(2));
          break;
        case 9: g.push_back(x(z(3), z(3))); break;
        case 10: g.push_back(dihedral(5)); break;
        case 12:
          g.push_back(x(z(2), z(6)));
          g.push_back(alternating(4));
          g.push_back(dihedral(6));
          g.push_back(dicyclic(3));
          break;
        case 14: g.push_back(dihedral(7)); break;
        case 16:
          g.push_back(x(z(2), z(8)));
          g.push_back(x(z(4), z(4)));
          g.push_back(x(x(z(2), z(2)), z(4)));
          g.push_back(x(x(x(z(2), z(2)), z(2)), z(2)));
          g.push_back(dihedral(8));
          g.push_back(dicyclic(4));
          g.push_back(x(z(2), dihedral(4)));
          g.push_back(x(z(2), dicyclic(2)));
          break;
        default: break;
      }
    }
    std::vector<GroupPtr> out;
    for (auto& grp : g) out.push_back(std::make_shared<const FiniteGroup>(std::move(grp)));
    return out;
  }();
  return groups;
}

std::vector<GroupPtr> catalog(std::size_t max_order) {
  std::vector<GroupPtr> out;
  for (const auto& g : catalog())
    if (g->order() <= max_order) out.push_back(g);
  return out;
}

GroupPtr find_group(const std::string& name) {
  static const std::map<std::string, std::string> aliases = {
      {"1", "0"},      {"Z1", "0"},       {"trivial", "0"}, {"D3", "S3"},  {"Z2xS3", "D6"},
      {"Q12", "Dic3"}, {"V4", "Z2xZ2"},   {"Dic2", "Q8"},   {"Dic4", "Q16"},
      {"Z2^2", "Z2xZ2"}, {"Z2^3", "Z2xZ2xZ2"}, {"Z2^4", "Z2xZ2xZ2xZ2"}};
  std::string key = name;
  if (auto it = aliases.find(name); it != aliases.end()) key = it->second;
  for (const auto& g : catalog())
    if (g->name() == key) return g;
  return nullptr;
}

FiniteGroup read_cayley_table(std::istream& in, std::string name) {
  long long n = 0;
  if (!(in >> n) || n < 1 || n > static_cast<long long>(kMaxOrder))
    throw std::invalid_argument("cayley table: expected an order between 1 and 255");
  Table t(static_cast<std::size_t>(n), std::vector<Element>(static_cast<std::size_t>(n)));
  for (auto& row : t) {
    for (auto& e : row) {
      long long v = 0;
      if (!(in >> v)) throw std::invalid_argument("cayley table: expected " + std::to_string(n * n) + " entries");
      if (v < 0 || v >= n) throw std::invalid_argument("cayley table: entry " + std::to_string(v) + " out of range");
      e = el(static_cast<std::size_t>(v));
    }
  }
  std::string extra;
  if (in >> extra) throw std::invalid_argument("cayley table: trailing data '" + extra + "'");
  return FiniteGroup(std::move(name), std::move(t));
}

FiniteGroup load_cayley_table(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  return read_cayley_table(in, path);
}

bool is_p_group(const FiniteGroup& g, std::size_t p) {
  std::size_t n = g.order();
  while (n % p == 0) n /= p;
  return n == 1;
}

bool is_nilpotent(const FiniteGroup& g) { return series_reaches_trivial(g, true); }
bool is_solvable(const FiniteGroup& g) { return series_reaches_trivial(g, false); }

bool is_cyclic(const FiniteGroup& g) {
  for (std::size_t x = 0; x < g.order(); ++x)
    if (g.element_order(el(x)) == g.order()) return true;
  return false;
}

}  // namespace liftkit::fingrp
