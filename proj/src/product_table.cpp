#include "prodone/product_table.hpp"

#include <algorithm>

namespace prodone {

namespace {

constexpr std::uint64_t kChunk = 4096;

std::uint64_t sat_add(std::uint64_t a, std::uint64_t b) {
  return a > UINT64_MAX - b ? UINT64_MAX : a + b;
}

}  // namespace

MultisetIndexer::MultisetIndexer(std::size_t n, std::size_t max_length)
    : n_(n), max_length_(max_length), rows_(n + max_length + 1) {
  std::size_t const cols = max_length_ + 2;
  binom_.assign(rows_ * cols, 0);
  for (std::size_t t = 0; t < rows_; ++t) {
    binom_[t * cols] = 1;
    for (std::size_t b = 1; b < cols && b <= t; ++b)
      binom_[t * cols + b] = sat_add(binom_[(t - 1) * cols + b - 1],
                                     b <= t - 1 ? binom_[(t - 1) * cols + b] : 0);
  }
}

std::uint64_t MultisetIndexer::binom(std::size_t top, std::size_t bottom) const {
  if (bottom > top) return 0;
  return binom_[top * (max_length_ + 2) + bottom];
}

std::uint64_t MultisetIndexer::layer_size(std::size_t k) const {
  if (k == 0) return 1;
  return binom(n_ + k - 1, k);
}

std::uint64_t MultisetIndexer::rank(std::span<const Element> sorted) const {
  std::uint64_t r = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) r += binom(sorted[i] + i, i + 1);
  return r;
}

void MultisetIndexer::unrank(std::uint64_t r, std::span<Element> out) const {
  std::size_t const k = out.size();
  std::size_t hi = n_ + k;  // exclusive bound on b
  for (std::size_t i = k; i-- > 0;) {
    std::size_t b = hi - 1;
    while (binom(b, i + 1) > r) --b;
    r -= binom(b, i + 1);
    out[i] = static_cast<Element>(b - i);
    hi = b;
  }
}

bool MultisetIndexer::next(std::span<Element> a) const {
  std::size_t const k = a.size();
  for (std::size_t i = 0; i < k; ++i) {
    Element cap = i + 1 == k ? static_cast<Element>(n_ - 1) : a[i + 1];
    if (a[i] < cap) {
      ++a[i];
      for (std::size_t j = 0; j < i; ++j) a[j] = 0;
      return true;
    }
  }
  return false;
}

std::uint64_t table_entries(std::size_t n, std::size_t max_length) {
  // sum_{k<=L} C(n-1+k, k) = C(n+L, L)
  MultisetIndexer idx(n + 1, max_length);
  return idx.binom(n + max_length, max_length);
}

ProductSetTable::ProductSetTable(Group g, std::size_t max_length, Exec exec,
                                 Budget const& budget)
    : group_(std::move(g)),
      budget_(budget),
      indexer_(group_->order(), max_length),
      words_((group_->order() + 63) / 64) {
  std::uint64_t const need = table_entries(group_->order(), max_length);
  if (need > budget_.table_entries)
    throw ResourceError("product-set table up to length " + std::to_string(max_length) +
                            " over a group of order " + std::to_string(group_->order()),
                        need, budget_.table_entries);
  layers_.resize(1);
  layers_[0].bits.assign(words_, 0);
  layers_[0].bits[0] = 1;
  layers_[0].free.assign(1, 1);
  for (std::size_t k = 1; k <= max_length; ++k) build_layer(k, exec);
}

void ProductSetTable::extend_to(std::size_t max_length, Exec exec) {
  if (max_length <= this->max_length()) return;
  std::uint64_t const need = table_entries(group_->order(), max_length);
  if (need > budget_.table_entries)
    throw ResourceError("product-set table up to length " + std::to_string(max_length) +
                            " over a group of order " + std::to_string(group_->order()),
                        need, budget_.table_entries);
  indexer_ = MultisetIndexer(group_->order(), max_length);
  for (std::size_t k = this->max_length() + 1; k <= max_length; ++k) build_layer(k, exec);
}

void ProductSetTable::build_layer(std::size_t k, Exec exec) {
  GroupTable const& g = *group_;
  std::uint64_t const size = indexer_.layer_size(k);
  Layer layer;
  layer.bits.assign(size * words_, 0);
  layer.free.assign(size, 0);
  Layer const& prev = layers_[k - 1];
  std::size_t const words = words_;
  MultisetIndexer const& idx = indexer_;

  auto fill_entry = [&](std::uint64_t r, std::span<const Element> a,
                        std::vector<std::uint64_t>& prefix) {
    // prefix[j] = sum_{i<j} C(a_i + i, i+1); suffix accumulated on the fly.
    prefix[0] = 0;
    for (std::size_t i = 0; i < k; ++i) prefix[i + 1] = prefix[i] + idx.binom(a[i] + i, i + 1);
    std::uint64_t* out = &layer.bits[r * words];
    bool all_free = true;
    std::uint64_t suffix = 0;
    for (std::size_t j = k; j-- > 0;) {
      if (j + 1 == k || a[j] != a[j + 1]) {
        std::uint64_t sub = prefix[j] + suffix;
        std::uint64_t const* in = &prev.bits[sub * words];
        Element const term = a[j];
        for (std::size_t wd = 0; wd < words; ++wd)
          for (std::uint64_t m = in[wd]; m != 0; m &= m - 1) {
            Element x = static_cast<Element>(wd * 64 + static_cast<unsigned>(__builtin_ctzll(m)));
            Element y = g.multiply(x, term);
            out[y / 64] |= std::uint64_t{1} << (y % 64);
          }
        all_free = all_free && prev.free[sub];
      }
      if (j > 0) suffix += idx.binom(a[j] + j - 1, j);  // a_j shifted down one position
    }
    layer.free[r] = all_free && !(out[0] & 1u);
  };

  if (exec == Exec::serial) {
    std::vector<Element> a(k, 0);
    std::vector<std::uint64_t> prefix(k + 1);
    std::uint64_t r = 0;
    do {
      fill_entry(r++, a, prefix);
    } while (idx.next(a));
  } else {
    std::int64_t const chunks = static_cast<std::int64_t>((size + kChunk - 1) / kChunk);
#pragma omp parallel
    {
      std::vector<Element> a(k);
      std::vector<std::uint64_t> prefix(k + 1);
#pragma omp for schedule(dynamic, 1)
      for (std::int64_t c = 0; c < chunks; ++c) {
        std::uint64_t const lo = static_cast<std::uint64_t>(c) * kChunk;
        std::uint64_t const hi = std::min(size, lo + kChunk);
        idx.unrank(lo, a);
        for (std::uint64_t r = lo; r < hi; ++r) {
          fill_entry(r, a, prefix);
          idx.next(a);
        }
      }
    }
  }
  layers_.push_back(std::move(layer));
}

std::shared_ptr<const ProductSetTable> Workspace::table(Group const& g,
                                                        std::size_t min_length) {
  std::lock_guard lock(mutex_);
  auto& bucket = tables_[g->hash()];
  for (auto& [grp, tbl] : bucket) {
    if (!same_group(grp, g)) continue;
    if (tbl->max_length() >= min_length) return tbl;
    auto grown = std::make_shared<ProductSetTable>(*tbl);
    grown->extend_to(min_length, exec_);
    tbl = grown;
    return tbl;
  }
  auto tbl = std::make_shared<ProductSetTable>(g, min_length, exec_, budget_);
  bucket.emplace_back(g, tbl);
  return tbl;
}

void Workspace::release(Group const& g) {
  std::lock_guard lock(mutex_);
  auto it = tables_.find(g->hash());
  if (it == tables_.end()) return;
  std::erase_if(it->second, [&](auto const& e) { return same_group(e.first, g); });
}

std::optional<unsigned> Workspace::cached_davenport(Group const& g) const {
  std::lock_guard lock(mutex_);
  auto it = davenport_.find(g->hash());
  if (it == davenport_.end()) return std::nullopt;
  for (auto const& [grp, d] : it->second)
    if (same_group(grp, g)) return d;
  return std::nullopt;
}

void Workspace::store_davenport(Group const& g, unsigned d) {
  std::lock_guard lock(mutex_);
  auto& bucket = davenport_[g->hash()];
  for (auto& [grp, v] : bucket)
    if (same_group(grp, g)) {
      v = d;
      return;
    }
  bucket.emplace_back(g, d);
}

}  // namespace prodone
