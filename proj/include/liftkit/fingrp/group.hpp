#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <string>
#include <vector>

namespace liftkit::fingrp {

using Element = std::uint8_t;

/// Largest group order accepted anywhere.
inline constexpr std::size_t kMaxOrder = 255;

/// A finite group given by its Cayley table; element i * j is table[i][j].
class FiniteGroup {
 public:
  /// Validates closure, identity, inverses and associativity; throws
  /// std::invalid_argument otherwise.
  FiniteGroup(std::string name, std::vector<std::vector<Element>> table);

  const std::string& name() const { return name_; }
  std::size_t order() const { return table_.size(); }
  Element identity() const { return identity_; }
  Element mul(Element a, Element b) const { return table_[a][b]; }
  Element inverse(Element a) const { return inverse_[a]; }
  std::size_t element_order(Element a) const { return element_order_[a]; }
  const std::vector<std::vector<Element>>& table() const { return table_; }

  bool is_abelian() const;
  /// Number of elements of each order, indexed by order.
  std::vector<std::size_t> order_histogram() const;
  /// A small generating set, chosen greedily by increasing element index
  /// among elements of largest order first.
  const std::vector<Element>& generators() const { return generators_; }
  /// Subgroup generated by `elems`, as a membership mask.
  std::vector<bool> generated(const std::vector<Element>& elems) const;

  friend bool operator==(const FiniteGroup& a, const FiniteGroup& b) { return a.table_ == b.table_; }

 private:
  std::string name_;
  std::vector<std::vector<Element>> table_;
  Element identity_ = 0;
  std::vector<Element> inverse_;
  std::vector<std::size_t> element_order_;
  std::vector<Element> generators_;
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

FiniteGroup trivial_group();
FiniteGroup cyclic(std::size_t n);
/// Pairs (a, b) with index a * |H| + b.
FiniteGroup direct_product(const FiniteGroup& g, const FiniteGroup& h);
/// Symmetries of the regular n-gon, order 2n.
FiniteGroup dihedral(std::size_t n);
/// Dicyclic group of order 4n (n = 2 gives the quaternion group).
FiniteGroup dicyclic(std::size_t n);
FiniteGroup symmetric(std::size_t n);
FiniteGroup alternating(std::size_t n);

/// Named groups of order <= 16, pairwise non-isomorphic, by increasing order:
/// trivial "0", Z2..Z16, products of cyclic groups, S3, D4..D8, Q8, Dic3,
/// Q16, A4, Z2xD4, Z2xQ8.
const std::vector<GroupPtr>& catalog();
/// Catalog groups of order <= max_order.
std::vector<GroupPtr> catalog(std::size_t max_order);
/// Lookup by name or alias ("Z4", "S3", "Z2xZ2", "0", "Z1", "D3", ...);
/// nullptr when unknown.
GroupPtr find_group(const std::string& name);

/// Reads "n" followed by an n x n table of element indices.
FiniteGroup read_cayley_table(std::istream& in, std::string name);
FiniteGroup load_cayley_table(const std::string& path);

/// Predicates computed from the table.
bool is_p_group(const FiniteGroup& g, std::size_t p);
bool is_nilpotent(const FiniteGroup& g);
bool is_solvable(const FiniteGroup& g);
bool is_cyclic(const FiniteGroup& g);

}  // namespace liftkit::fingrp
