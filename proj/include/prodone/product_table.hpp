#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <span>
#include <vector>

#include "prodone/errors.hpp"
#include "prodone/group.hpp"

namespace prodone {

/// Execution policy for the data-parallel kernels. `serial` is the reference.
enum class Exec { serial, parallel };

/**
 * Colex ranking of multisets of a fixed size k over {0..n-1}.
 *
 * A multiset is a non-decreasing tuple a_0 <= ... <= a_{k-1}; shifting by
 * position gives the strictly increasing b_i = a_i + i, ranked by
 * sum_i C(b_i, i+1).
 */
class MultisetIndexer {
 public:
  MultisetIndexer(std::size_t n, std::size_t max_length);

  std::size_t alphabet() const noexcept { return n_; }
  std::size_t max_length() const noexcept { return max_length_; }

  /// C(n + k - 1, k), saturating.
  std::uint64_t layer_size(std::size_t k) const;
  std::uint64_t binom(std::size_t top, std::size_t bottom) const;

  std::uint64_t rank(std::span<const Element> sorted) const;
  void unrank(std::uint64_t r, std::span<Element> out) const;
  /// Colex successor in place; false after the last tuple.
  bool next(std::span<Element> tuple) const;

 private:
  std::size_t n_;
  std::size_t max_length_;
  std::size_t rows_;
  std::vector<std::uint64_t> binom_;  // rows_ x (max_length_ + 1)
};

/// Total entries of a table over n elements up to `max_length`, saturating.
std::uint64_t table_entries(std::size_t n, std::size_t max_length);

/**
 * pi(S) for every multiset S of length <= max_length over a group.
 *
 * Layer k is built from layer k-1: pi(S) is the union over distinct terms g
 * of pi(S - g) * g. Each entry also records whether S is product-one free,
 * meaning no nonempty sub-multiset of S (S included) is product-one.
 */
class ProductSetTable {
 public:
  ProductSetTable(Group g, std::size_t max_length, Exec exec = Exec::parallel,
                  Budget const& budget = {});

  Group const& group() const noexcept { return group_; }
  std::size_t max_length() const noexcept { return layers_.size() - 1; }
  std::size_t words() const noexcept { return words_; }
  MultisetIndexer const& indexer() const noexcept { return indexer_; }
  std::uint64_t layer_size(std::size_t k) const { return indexer_.layer_size(k); }

  /// Appends layers up to `max_length`. Throws ResourceError if over budget.
  void extend_to(std::size_t max_length, Exec exec = Exec::parallel);

  bool reachable(std::size_t k, std::uint64_t r, Element e) const {
    return (layers_[k].bits[r * words_ + e / 64] >> (e % 64)) & 1u;
  }
  bool product_one(std::size_t k, std::uint64_t r) const {
    return layers_[k].bits[r * words_] & 1u;
  }
  bool product_one_free(std::size_t k, std::uint64_t r) const {
    return layers_[k].free[r] != 0;
  }
  /// Tuple form: sorted terms, length <= max_length().
  bool product_one(std::span<const Element> sorted) const {
    return product_one(sorted.size(), indexer_.rank(sorted));
  }

 private:
  struct Layer {
    std::vector<std::uint64_t> bits;
    std::vector<std::uint8_t> free;
  };
  void build_layer(std::size_t k, Exec exec);

  Group group_;
  Budget budget_;
  MultisetIndexer indexer_;
  std::size_t words_;
  std::vector<Layer> layers_;
};

/**
 * Shared product-set tables and Davenport values for a batch of computations.
 *
 * Tables are keyed by the Cayley-table hash and only ever grow. Access is
 * serialized by a mutex; returned tables are not mutated afterwards except by
 * `table()` growing them, which replaces the stored pointer.
 */
class Workspace {
 public:
  explicit Workspace(Budget budget = {}, Exec exec = Exec::parallel)
      : budget_(budget), exec_(exec) {}

  Budget const& budget() const noexcept { return budget_; }
  Exec exec() const noexcept { return exec_; }

  /// A table for `g` covering at least `min_length`.
  std::shared_ptr<const ProductSetTable> table(Group const& g, std::size_t min_length);
  void release(Group const& g);

  std::optional<unsigned> cached_davenport(Group const& g) const;
  void store_davenport(Group const& g, unsigned d);

 private:
  Budget budget_;
  Exec exec_;
  mutable std::mutex mutex_;
  std::map<std::uint64_t, std::vector<std::pair<Group, std::shared_ptr<const ProductSetTable>>>>
      tables_;
  std::map<std::uint64_t, std::vector<std::pair<Group, unsigned>>> davenport_;
};

}  // namespace prodone
