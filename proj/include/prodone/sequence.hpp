#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prodone/errors.hpp"
#include "prodone/group.hpp"

namespace prodone {

/**
 * A sequence over a finite group: an element of the free abelian monoid on
 * the group's elements, stored as an exponent vector (multiplicity per
 * element).
 */
class Sequence {
 public:
  explicit Sequence(Group g);
  Sequence(Group g, std::vector<std::uint32_t> exponents);

  static Sequence from_terms(Group g, std::span<const Element> terms);
  /// g^[k]
  static Sequence repeated(Group g, Element e, std::uint32_t k = 1);

  Group const& group() const noexcept { return group_; }
  std::span<const std::uint32_t> exponents() const noexcept { return exponents_; }
  std::uint32_t multiplicity(Element e) const { return exponents_[e]; }
  std::size_t length() const noexcept { return length_; }
  bool empty() const noexcept { return length_ == 0; }
  /// Number of distinct elements with non-zero multiplicity.
  std::size_t support_size() const noexcept;

  /// Terms in non-decreasing element order.
  std::vector<Element> terms() const;

  friend bool operator==(Sequence const& a, Sequence const& b) {
    return same_group(a.group_, b.group_) && a.exponents_ == b.exponents_;
  }
  /// Graded-lex: by length, then lexicographically on sorted terms.
  /// Only meaningful for sequences over the same group.
  friend std::strong_ordering operator<=>(Sequence const& a, Sequence const& b);

 private:
  Group group_;
  std::vector<std::uint32_t> exponents_;
  std::size_t length_ = 0;
};

Sequence concat(Sequence const& s, Sequence const& t);
/// S^[k]
Sequence power(Sequence const& s, std::uint32_t k);
bool divides(Sequence const& t, Sequence const& s);
/// S / T; requires divides(T, S).
Sequence quotient(Sequence const& s, Sequence const& t);
/// phi(S) = phi(g1) . ... . phi(gl)
Sequence apply_map(GroupMap const& m, Sequence const& s);

/// pi(S), the set of products over all orderings of the terms. Sorted.
struct ProductSet {
  std::vector<Element> members;

  bool contains(Element e) const;
  friend bool operator==(ProductSet const&, ProductSet const&) = default;
};

/// An arrangement of the terms of a sequence.
struct Ordering {
  std::vector<Element> terms;
  friend bool operator==(Ordering const&, Ordering const&) = default;
};

/// Left-to-right product of `terms`.
Element ordered_product(GroupTable const& g, std::span<const Element> terms);

/**
 * Products reachable from every sub-multiset of a fixed sequence.
 *
 * States are the sub-multisets of S in mixed-radix order over the support of
 * S (digit i counts copies of the i-th support element). reach(T) holds every
 * ordered product of T and is built as
 *   reach(T) = union over g in T of reach(T - g) * g.
 */
class SubsetLattice {
 public:
  SubsetLattice(Sequence const& s, Budget const& budget = {});

  Sequence const& sequence() const noexcept { return seq_; }
  std::size_t state_count() const noexcept { return states_; }
  std::span<const Element> support() const noexcept { return support_; }
  std::span<const std::uint32_t> radix() const noexcept { return counts_; }
  std::span<const std::size_t> weights() const noexcept { return weights_; }
  std::size_t full_state() const noexcept { return states_ - 1; }

  /// State index of a sub-multiset of S; requires divides(t, S).
  std::size_t state_of(Sequence const& t) const;
  Sequence sequence_of(std::size_t state) const;

  bool reachable(std::size_t state, Element e) const {
    return (bits_[state * words_ + e / 64] >> (e % 64)) & 1u;
  }
  bool product_one(std::size_t state) const { return reachable(state, identity_element); }
  ProductSet products(std::size_t state) const;

 private:
  Sequence seq_;
  std::vector<Element> support_;
  std::vector<std::uint32_t> counts_;
  std::vector<std::size_t> weights_;
  std::size_t states_ = 1;
  std::size_t words_ = 1;
  std::vector<std::uint64_t> bits_;
};

/// Number of sub-multisets of S, saturating at UINT64_MAX.
std::uint64_t sub_multiset_count(Sequence const& s);

ProductSet product_set(Sequence const& s, Budget const& budget = {});
bool is_product_one(Sequence const& s, Budget const& budget = {});
/// Lexicographically smallest ordering whose product is the identity.
std::optional<Ordering> product_one_witness(Sequence const& s, Budget const& budget = {});

/// Every T dividing S exactly once, by length then lexicographically on terms.
class SubMultisets {
 public:
  class iterator {
   public:
    using iterator_category = std::input_iterator_tag;
    using value_type = Sequence;
    using difference_type = std::ptrdiff_t;
    using pointer = Sequence const*;
    using reference = Sequence const&;

    iterator() = default;
    reference operator*() const { return *current_; }
    pointer operator->() const { return &*current_; }
    iterator& operator++();
    iterator operator++(int) {
      auto tmp = *this;
      ++*this;
      return tmp;
    }
    friend bool operator==(iterator const& a, iterator const& b) {
      return a.done_ == b.done_ && (a.done_ || a.counts_ == b.counts_);
    }

   private:
    friend class SubMultisets;
    explicit iterator(Sequence const& s);

    Group group_;
    std::vector<std::uint32_t> bound_;
    std::vector<std::uint32_t> counts_;
    std::size_t size_ = 0;
    std::optional<Sequence> current_;
    bool done_ = true;
  };

  explicit SubMultisets(Sequence s) : seq_(std::move(s)) {}
  iterator begin() const { return iterator(seq_); }
  iterator end() const { return iterator(); }

 private:
  Sequence seq_;
};

inline SubMultisets sub_multisets(Sequence s) { return SubMultisets(std::move(s)); }

/// Parses `label^k,label,...`. A trailing `^k` with a decimal k is a
/// multiplicity; labels are resolved by GroupTable::find.
Sequence parse_sequence(Group const& g, std::string_view text);
/// Inverse of parse_sequence, in element order: `g^2,h`. Empty gives "".
std::string format_sequence(Sequence const& s);
std::string format_elements(GroupTable const& g, std::span<const Element> elems,
                            std::string_view sep = " ");

}  // namespace prodone
