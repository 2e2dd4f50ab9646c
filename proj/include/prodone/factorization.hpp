#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <vector>

#include "prodone/group.hpp"
#include "prodone/product_table.hpp"
#include "prodone/sequence.hpp"

namespace prodone {

/// Atoms of B(G) by length.
struct AtomCatalog {
  Group group;
  /// Requested length bound.
  std::size_t max_length = 0;
  /// Every atom of length <= complete_through is listed.
  std::size_t complete_through = 0;
  bool exhaustive = false;
  /// Each list sorted lexicographically on terms.
  std::map<std::size_t, std::vector<Sequence>> atoms_by_length;

  std::size_t count(std::size_t length) const;
  std::size_t total() const;
  /// All atoms, by length then lex.
  std::vector<Sequence> all() const;
  /// Largest length with at least one listed atom (0 if none).
  std::size_t longest() const;
};

/// L(B): sorted factorization lengths.
struct LengthSet {
  std::vector<unsigned> lengths;

  unsigned min() const { return lengths.front(); }
  unsigned max() const { return lengths.back(); }
  friend bool operator==(LengthSet const&, LengthSet const&) = default;
  friend auto operator<=>(LengthSet const&, LengthSet const&) = default;
};

/// { L(B) : B in B(G), 1 <= |B| <= bound }, deduplicated and sorted.
struct LengthSystem {
  std::size_t bound = 0;
  std::vector<LengthSet> sets;
  friend bool operator==(LengthSystem const&, LengthSystem const&) = default;
};

struct Fingerprint {
  /// atom_counts[i] = number of atoms of length i + 1, for i < davenport.
  std::vector<std::size_t> atom_counts;
  unsigned davenport = 0;
  /// Sorted element orders of G/G'.
  std::vector<unsigned> abelianization_profile;
  friend bool operator==(Fingerprint const&, Fingerprint const&) = default;
};

/// One factorization: atoms in a fixed non-increasing order.
using Factorization = std::vector<Sequence>;

bool is_atom(Sequence const& s, Budget const& budget = {});

/// Atoms of exactly length k from a table covering k. Sorted by terms.
std::vector<Sequence> atoms_of_length(ProductSetTable const& table, std::size_t k,
                                      Exec exec = Exec::parallel);
/// Smallest-rank atom of length k, if any.
std::optional<Sequence> find_atom_of_length(ProductSetTable const& table, std::size_t k,
                                            Exec exec = Exec::parallel);

/// Exhaustive when the table budget allows; otherwise the catalog covers the
/// longest affordable prefix and is flagged non-exhaustive.
AtomCatalog enumerate_atoms(Group const& g, std::size_t max_length, Workspace& ws);
AtomCatalog enumerate_atoms(Group const& g, std::size_t max_length);

struct DavenportResult {
  unsigned value = 0;
  /// Longest length searched; no atom of this length exists.
  std::size_t searched_through = 0;
};

/// Large Davenport constant by iterative deepening. Atom lengths form an
/// interval [1, D]: contracting two adjacent terms of a product-one ordering
/// of an atom of length l+1 >= 2 gives an atom of length l. So the first
/// length without atoms is D + 1.
DavenportResult davenport_search(Group const& g, Workspace& ws);
unsigned large_davenport(Group const& g, Workspace& ws);
unsigned large_davenport(Group const& g);

/// All factorizations of B into catalog atoms, each as a multiset.
std::vector<Factorization> factorizations(Sequence const& b, AtomCatalog const& catalog,
                                          Budget const& budget = {});
/// L(B). The empty sequence gives {0}.
LengthSet set_of_lengths(Sequence const& b, AtomCatalog const& catalog,
                         Budget const& budget = {});

LengthSystem length_system(Group const& g, std::size_t bound, Workspace& ws);
LengthSystem length_system(Group const& g, std::size_t bound);

Fingerprint fingerprint(Group const& g, Workspace& ws);
Fingerprint fingerprint(Group const& g);

}  // namespace prodone
