#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prodone/errors.hpp"

namespace prodone {

/// Index of a group element. 0 is always the identity.
using Element = std::uint32_t;

inline constexpr Element identity_element = 0;

class GroupTable;
using Group = std::shared_ptr<const GroupTable>;

/**
 * A finite group stored as its Cayley table.
 *
 * Instances are immutable and validated on construction: element 0 is the
 * identity, every row and column is a permutation of 0..n-1, and the table is
 * associative. Inverses and element orders are precomputed.
 */
class GroupTable {
 public:
  /// Validates `rows` and relabels so the identity sits at index 0.
  /// `names` (optional, one per row) and `aliases` follow the relabeling.
  static Group make(std::vector<std::vector<Element>> rows,
                    std::vector<std::string> names = {},
                    std::map<std::string, Element> aliases = {},
                    std::string description = {});

  std::size_t order() const noexcept { return n_; }

  Element multiply(Element a, Element b) const noexcept {
    return table_[static_cast<std::size_t>(a) * n_ + b];
  }
  Element inverse(Element a) const noexcept { return inverse_[a]; }
  unsigned order_of(Element a) const noexcept { return element_order_[a]; }
  std::span<const Element> row(Element a) const noexcept {
    return {table_.data() + static_cast<std::size_t>(a) * n_, n_};
  }
  std::span<const Element> cells() const noexcept { return table_; }

  bool is_abelian() const noexcept { return abelian_; }
  /// Largest element order.
  unsigned exponent() const noexcept;

  std::string const& name(Element a) const { return names_[a]; }
  std::vector<std::string> const& names() const noexcept { return names_; }
  std::map<std::string, Element> const& aliases() const noexcept { return aliases_; }
  /// Short human description such as "S3" or "C2xC4"; empty if unknown.
  std::string const& description() const noexcept { return description_; }

  /// Resolves a label: exact name, then alias, then `#k` or a bare index.
  std::optional<Element> find(std::string_view label) const;

  /// FNV-1a over the order and the table cells. Names do not contribute.
  std::uint64_t hash() const noexcept { return hash_; }
  std::string hash_hex() const;

  /// Tables are equal cell for cell (labels ignored).
  friend bool operator==(GroupTable const& a, GroupTable const& b) noexcept {
    return a.table_ == b.table_;
  }

 private:
  GroupTable() = default;

  std::size_t n_ = 0;
  std::vector<Element> table_;
  std::vector<Element> inverse_;
  std::vector<unsigned> element_order_;
  std::vector<std::string> names_;
  std::map<std::string, Element> aliases_;
  std::string description_;
  std::uint64_t hash_ = 0;
  bool abelian_ = true;
};

/// Same table (pointer identity or cell-for-cell equality).
bool same_group(Group const& a, Group const& b) noexcept;

// Constructors for the standard families.
Group cyclic(unsigned n);
/// Dihedral group of the given order (2n), generated by r (order n) and s.
Group dihedral(unsigned order);
/// Dicyclic group of the given order (4n): a of order 2n, x^2 = a^n, xax^-1 = a^-1.
Group dicyclic(unsigned order);
/// Symmetric group on n <= 5 points, product (pq)(i) = p(q(i)).
Group symmetric(unsigned n);
/// Alternating group on n <= 5 points.
Group alternating(unsigned n);
Group direct_product(Group const& a, Group const& b);

/// Parses the text table format: n, then n rows, then optional
/// `name <index> <label>` lines. Indices refer to the rows as written.
Group from_table_text(std::string_view text);

/// Family shorthand: C<n>, D<2n>, Dic<4n>, Q8, S<n>, A<n>, joined by `x`.
Group make_group(std::string_view spec);

/// A map between the element sets of two groups.
struct GroupMap {
  Group source;
  Group target;
  std::vector<Element> images;

  Element operator()(Element a) const { return images[a]; }
  friend bool operator==(GroupMap const& a, GroupMap const& b) {
    return same_group(a.source, b.source) && same_group(a.target, b.target) &&
           a.images == b.images;
  }
};

GroupMap identity_map(Group const& g);
/// g -> g^-1, from G to G.
GroupMap inversion_map(Group const& g);
GroupMap compose(GroupMap const& second, GroupMap const& first);
GroupMap inverse_map(GroupMap const& m);

bool is_bijective(GroupMap const& m);
bool is_homomorphism(GroupMap const& m);
bool is_anti_homomorphism(GroupMap const& m);

/// Same elements, product reversed: a *op b = b * a.
Group opposite(Group const& g);

/// An isomorphic copy of g with element a renamed perm[a] (perm[0] = 0).
/// Returns the isomorphism g -> copy.
GroupMap relabel(Group const& g, std::span<const Element> perm);

/// Smallest subgroup containing `generators`, sorted.
std::vector<Element> subgroup_closure(GroupTable const& g,
                                      std::span<const Element> generators);
std::vector<Element> commutator_subgroup(GroupTable const& g);
/// G/G' on coset representatives (smallest index per coset).
Group abelianization(Group const& g);

/// Sorted multiset of element orders.
std::vector<unsigned> order_profile(GroupTable const& g);
/// Smallest-index generating set, chosen greedily.
std::vector<Element> greedy_generators(GroupTable const& g);

/// Group isomorphisms g1 -> g2, at most `limit`, ordered by generator images.
std::vector<GroupMap> find_group_isomorphisms(Group const& g1, Group const& g2,
                                              std::size_t limit = SIZE_MAX);
bool are_isomorphic(Group const& g1, Group const& g2);

}  // namespace prodone
