#include "prodone/factorization.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <unordered_map>

namespace prodone {

namespace {

constexpr std::uint64_t kChunk = 2048;

struct AtomScratch {
  std::vector<Element> sub;
  std::vector<Element> comp;
  std::vector<Element> support;
  std::vector<std::uint32_t> count;
  std::vector<std::uint32_t> pick;
};

// Is there a split S = T.U with T, U nonempty and both product-one?
// Sub-multisets are tried by increasing size up to |S|/2.
bool has_product_one_split(ProductSetTable const& t, std::span<const Element> a,
                           AtomScratch& s) {
  std::size_t const k = a.size();
  s.support.clear();
  s.count.clear();
  for (std::size_t i = 0; i < k; ++i) {
    if (i == 0 || a[i] != a[i - 1]) {
      s.support.push_back(a[i]);
      s.count.push_back(0);
    }
    ++s.count.back();
  }
  std::size_t const m = s.support.size();
  s.pick.assign(m, 0);
  MultisetIndexer const& idx = t.indexer();

  auto leaf = [&]() {
    s.sub.clear();
    s.comp.clear();
    for (std::size_t i = 0; i < m; ++i) {
      s.sub.insert(s.sub.end(), s.pick[i], s.support[i]);
      s.comp.insert(s.comp.end(), s.count[i] - s.pick[i], s.support[i]);
    }
    return t.product_one(s.sub.size(), idx.rank(s.sub)) &&
           t.product_one(s.comp.size(), idx.rank(s.comp));
  };
  auto dfs = [&](auto&& self, std::size_t i, std::size_t remaining) -> bool {
    if (remaining == 0) return leaf();
    if (i == m) return false;
    std::size_t const top = std::min<std::size_t>(s.count[i], remaining);
    for (std::size_t c = 0; c <= top; ++c) {
      s.pick[i] = static_cast<std::uint32_t>(c);
      if (self(self, i + 1, remaining - c)) return true;
    }
    s.pick[i] = 0;
    return false;
  };
  for (std::size_t size = 1; size <= k / 2; ++size) {
    std::fill(s.pick.begin(), s.pick.end(), 0);
    if (dfs(dfs, 0, size)) return true;
  }
  return false;
}

bool entry_is_atom(ProductSetTable const& t, std::span<const Element> a, std::uint64_t r,
                   AtomScratch& s) {
  std::size_t const k = a.size();
  if (!t.product_one(k, r)) return false;
  if (k == 1) return a[0] == identity_element;
  if (a[0] == identity_element) return false;  // (1) splits off
  // If every S - g is product-one free, S has no proper product-one divisor.
  bool all_free = true;
  for (std::size_t j = 0; j < k && all_free; ++j) {
    if (j + 1 < k && a[j] == a[j + 1]) continue;
    s.sub.assign(a.begin(), a.end());
    s.sub.erase(s.sub.begin() + static_cast<std::ptrdiff_t>(j));
    all_free = t.product_one_free(k - 1, t.indexer().rank(s.sub));
  }
  if (all_free) return true;
  // Abelian: a product-one proper divisor always has a product-one cofactor.
  if (t.group()->is_abelian()) return false;
  return !has_product_one_split(t, a, s);
}

Sequence tuple_to_sequence(Group const& g, std::span<const Element> a) {
  return Sequence::from_terms(g, a);
}

// Bitmask helpers for sets of lengths.
using LengthMask = std::vector<std::uint64_t>;

void mask_set(LengthMask& m, unsigned v) {
  if (m.size() <= v / 64) m.resize(v / 64 + 1, 0);
  m[v / 64] |= std::uint64_t{1} << (v % 64);
}

LengthSet mask_to_set(LengthMask const& m) {
  LengthSet out;
  for (std::size_t w = 0; w < m.size(); ++w)
    for (std::uint64_t b = m[w]; b != 0; b &= b - 1)
      out.lengths.push_back(static_cast<unsigned>(w * 64 + __builtin_ctzll(b)));
  return out;
}

struct Candidate {
  Sequence atom;
  std::vector<std::uint32_t> digits;  // over the lattice support
  std::size_t offset = 0;             // state weight of the atom
};

std::vector<Candidate> dividing_atoms(SubsetLattice const& lattice,
                                      std::vector<Sequence> const& atoms) {
  std::vector<Candidate> out;
  Sequence const& b = lattice.sequence();
  for (auto const& u : atoms) {
    if (u.length() > b.length() || !divides(u, b)) continue;
    Candidate c{u, {}, lattice.state_of(u)};
    for (Element e : lattice.support()) c.digits.push_back(u.multiplicity(e));
    out.push_back(std::move(c));
  }
  return out;
}

void check_catalog(Sequence const& b, AtomCatalog const& catalog) {
  if (!same_group(b.group(), catalog.group))
    throw PreconditionError("atom catalog is over a different group");
  if (catalog.complete_through < b.length())
    throw PreconditionError("atom catalog is complete only through length " +
                            std::to_string(catalog.complete_through) +
                            ", sequence has length " + std::to_string(b.length()));
}

LengthSet lengths_with(Sequence const& b, std::vector<Sequence> const& atoms,
                       Budget const& budget) {
  if (b.empty()) return LengthSet{{0}};
  SubsetLattice lattice(b, budget);
  if (!lattice.product_one(lattice.full_state()))
    throw PreconditionError("set_of_lengths: sequence is not product-one");
  auto const cands = dividing_atoms(lattice, atoms);
  auto const radix = lattice.radix();
  auto const weights = lattice.weights();
  std::unordered_map<std::size_t, LengthMask> memo;

  auto digit = [&](std::size_t state, std::size_t i) {
    return static_cast<std::uint32_t>((state / weights[i]) % (radix[i] + 1));
  };
  // Every factorization has exactly one atom holding the smallest remaining
  // term; branching on that atom enumerates each length once per split.
  auto solve = [&](auto&& self, std::size_t state) -> LengthMask const& {
    if (auto it = memo.find(state); it != memo.end()) return it->second;
    LengthMask mask;
    if (state == 0) {
      mask_set(mask, 0);
    } else {
      std::size_t first = 0;
      while (digit(state, first) == 0) ++first;
      for (auto const& c : cands) {
        if (c.digits[first] == 0) continue;
        bool fits = true;
        for (std::size_t i = 0; i < c.digits.size() && fits; ++i)
          fits = c.digits[i] <= digit(state, i);
        if (!fits) continue;
        std::size_t rest = state - c.offset;
        if (!lattice.product_one(rest)) continue;
        LengthMask const& sub = self(self, rest);
        for (std::size_t w = 0; w < sub.size(); ++w)
          for (std::uint64_t bits = sub[w]; bits != 0; bits &= bits - 1)
            mask_set(mask, static_cast<unsigned>(w * 64 + __builtin_ctzll(bits)) + 1);
      }
    }
    return memo.emplace(state, std::move(mask)).first->second;
  };
  return mask_to_set(solve(solve, lattice.full_state()));
}

}  // namespace

std::size_t AtomCatalog::count(std::size_t length) const {
  auto it = atoms_by_length.find(length);
  return it == atoms_by_length.end() ? 0 : it->second.size();
}

std::size_t AtomCatalog::total() const {
  std::size_t n = 0;
  for (auto const& [len, v] : atoms_by_length) n += v.size();
  return n;
}

std::vector<Sequence> AtomCatalog::all() const {
  std::vector<Sequence> out;
  for (auto const& [len, v] : atoms_by_length) out.insert(out.end(), v.begin(), v.end());
  return out;
}

std::size_t AtomCatalog::longest() const {
  for (auto it = atoms_by_length.rbegin(); it != atoms_by_length.rend(); ++it)
    if (!it->second.empty()) return it->first;
  return 0;
}

bool is_atom(Sequence const& s, Budget const& budget) {
  if (s.empty()) return false;
  SubsetLattice lattice(s, budget);
  std::size_t const full = lattice.full_state();
  if (!lattice.product_one(full)) return false;
  for (std::size_t t = 1; t < full; ++t)
    if (lattice.product_one(t) && lattice.product_one(full - t)) return false;
  return true;
}

std::vector<Sequence> atoms_of_length(ProductSetTable const& table, std::size_t k,
                                      Exec exec) {
  if (k == 0 || k > table.max_length())
    throw PreconditionError("atoms_of_length: length outside the table");
  std::uint64_t const size = table.layer_size(k);
  std::int64_t const chunks = static_cast<std::int64_t>((size + kChunk - 1) / kChunk);
  std::vector<std::vector<std::vector<Element>>> found(static_cast<std::size_t>(chunks));
  MultisetIndexer const& idx = table.indexer();

  auto scan = [&](std::int64_t c, std::vector<Element>& a, AtomScratch& s) {
    std::uint64_t const lo = static_cast<std::uint64_t>(c) * kChunk;
    std::uint64_t const hi = std::min(size, lo + kChunk);
    idx.unrank(lo, a);
    for (std::uint64_t r = lo; r < hi; ++r) {
      if (entry_is_atom(table, a, r, s)) found[static_cast<std::size_t>(c)].push_back(a);
      idx.next(a);
    }
  };
  if (exec == Exec::serial) {
    std::vector<Element> a(k);
    AtomScratch s;
    for (std::int64_t c = 0; c < chunks; ++c) scan(c, a, s);
  } else {
#pragma omp parallel
    {
      std::vector<Element> a(k);
      AtomScratch s;
#pragma omp for schedule(dynamic, 1)
      for (std::int64_t c = 0; c < chunks; ++c) scan(c, a, s);
    }
  }
  std::vector<std::vector<Element>> tuples;
  for (auto& f : found)
    for (auto& t : f) tuples.push_back(std::move(t));
  std::sort(tuples.begin(), tuples.end());
  std::vector<Sequence> out;
  out.reserve(tuples.size());
  for (auto const& t : tuples) out.push_back(tuple_to_sequence(table.group(), t));
  return out;
}

std::optional<Sequence> find_atom_of_length(ProductSetTable const& table, std::size_t k,
                                            Exec exec) {
  if (k == 0 || k > table.max_length())
    throw PreconditionError("find_atom_of_length: length outside the table");
  std::uint64_t const size = table.layer_size(k);
  std::int64_t const chunks = static_cast<std::int64_t>((size + kChunk - 1) / kChunk);
  MultisetIndexer const& idx = table.indexer();
  std::atomic<std::uint64_t> best{UINT64_MAX};

  auto scan = [&](std::int64_t c, std::vector<Element>& a, AtomScratch& s) {
    std::uint64_t const lo = static_cast<std::uint64_t>(c) * kChunk;
    if (lo > best.load(std::memory_order_relaxed)) return;
    std::uint64_t const hi = std::min(size, lo + kChunk);
    idx.unrank(lo, a);
    for (std::uint64_t r = lo; r < hi; ++r) {
      if (entry_is_atom(table, a, r, s)) {
        std::uint64_t cur = best.load();
        while (r < cur && !best.compare_exchange_weak(cur, r)) {
        }
        return;
      }
      idx.next(a);
    }
  };
  std::vector<Element> a(k);
  AtomScratch s;
  if (exec == Exec::serial) {
    for (std::int64_t c = 0; c < chunks && best.load() == UINT64_MAX; ++c) scan(c, a, s);
  } else {
#pragma omp parallel
    {
      std::vector<Element> la(k);
      AtomScratch ls;
#pragma omp for schedule(dynamic, 1)
      for (std::int64_t c = 0; c < chunks; ++c) scan(c, la, ls);
    }
  }
  if (best.load() == UINT64_MAX) return std::nullopt;
  idx.unrank(best.load(), a);
  return tuple_to_sequence(table.group(), a);
}

AtomCatalog enumerate_atoms(Group const& g, std::size_t max_length, Workspace& ws) {
  if (max_length == 0) throw PreconditionError("enumerate_atoms: max_length must be positive");
  AtomCatalog cat;
  cat.group = g;
  cat.max_length = max_length;
  std::size_t reach = max_length;
  while (reach > 0 && table_entries(g->order(), reach) > ws.budget().table_entries) --reach;
  if (reach > 0) {
    auto table = ws.table(g, reach);
    for (std::size_t k = 1; k <= reach; ++k)
      cat.atoms_by_length[k] = atoms_of_length(*table, k, ws.exec());
  }
  cat.complete_through = reach;
  cat.exhaustive = reach >= max_length;
  return cat;
}

AtomCatalog enumerate_atoms(Group const& g, std::size_t max_length) {
  Workspace ws;
  return enumerate_atoms(g, max_length, ws);
}

DavenportResult davenport_search(Group const& g, Workspace& ws) {
  if (auto d = ws.cached_davenport(g)) return {*d, *d + 1};
  std::size_t const cap = 2 * g->order() + 1;
  for (std::size_t len = 1; len <= cap; ++len) {
    auto table = ws.table(g, len);
    if (!find_atom_of_length(*table, len, ws.exec())) {
      auto d = static_cast<unsigned>(len - 1);
      ws.store_davenport(g, d);
      return {d, len};
    }
  }
  throw Error("davenport_search: atoms longer than 2|G| found; group table is inconsistent");
}

unsigned large_davenport(Group const& g, Workspace& ws) {
  return davenport_search(g, ws).value;
}

unsigned large_davenport(Group const& g) {
  Workspace ws;
  return large_davenport(g, ws);
}

std::vector<Factorization> factorizations(Sequence const& b, AtomCatalog const& catalog,
                                          Budget const& budget) {
  check_catalog(b, catalog);
  std::vector<Factorization> out;
  if (b.empty()) {
    out.emplace_back();
    return out;
  }
  SubsetLattice lattice(b, budget);
  if (!lattice.product_one(lattice.full_state()))
    throw PreconditionError("factorizations: sequence is not product-one");
  auto const cands = dividing_atoms(lattice, catalog.all());
  auto const radix = lattice.radix();
  auto const weights = lattice.weights();
  auto digit = [&](std::size_t state, std::size_t i) {
    return static_cast<std::uint32_t>((state / weights[i]) % (radix[i] + 1));
  };
  std::vector<std::size_t> chosen;
  auto rec = [&](auto&& self, std::size_t state, std::size_t max_idx) -> void {
    if (state == 0) {
      Factorization f;
      for (std::size_t j : chosen) f.push_back(cands[j].atom);
      out.push_back(std::move(f));
      return;
    }
    for (std::size_t j = 0; j <= max_idx && j < cands.size(); ++j) {
      auto const& c = cands[j];
      bool fits = true;
      for (std::size_t i = 0; i < c.digits.size() && fits; ++i)
        fits = c.digits[i] <= digit(state, i);
      if (!fits) continue;
      std::size_t rest = state - c.offset;
      if (!lattice.product_one(rest)) continue;
      chosen.push_back(j);
      self(self, rest, j);
      chosen.pop_back();
    }
  };
  rec(rec, lattice.full_state(), cands.empty() ? 0 : cands.size() - 1);
  return out;
}

LengthSet set_of_lengths(Sequence const& b, AtomCatalog const& catalog, Budget const& budget) {
  check_catalog(b, catalog);
  return lengths_with(b, catalog.all(), budget);
}

LengthSystem length_system(Group const& g, std::size_t bound, Workspace& ws) {
  if (bound == 0) throw PreconditionError("length_system: bound must be positive");
  AtomCatalog const cat = enumerate_atoms(g, bound, ws);
  if (!cat.exhaustive)
    throw ResourceError("length_system: atom catalog up to length " + std::to_string(bound),
                        table_entries(g->order(), bound), ws.budget().table_entries);
  auto const atoms = cat.all();
  auto table = ws.table(g, bound);
  std::set<LengthSet> sets;
  for (std::size_t k = 1; k <= bound; ++k) {
    std::vector<Element> a(k, 0);
    std::uint64_t r = 0;
    do {
      if (table->product_one(k, r))
        sets.insert(lengths_with(Sequence::from_terms(g, a), atoms, ws.budget()));
      ++r;
    } while (table->indexer().next(a));
  }
  return LengthSystem{bound, {sets.begin(), sets.end()}};
}

LengthSystem length_system(Group const& g, std::size_t bound) {
  Workspace ws;
  return length_system(g, bound, ws);
}

Fingerprint fingerprint(Group const& g, Workspace& ws) {
  Fingerprint fp;
  fp.davenport = large_davenport(g, ws);
  AtomCatalog const cat = enumerate_atoms(g, fp.davenport, ws);
  if (!cat.exhaustive)
    throw ResourceError("fingerprint: atom catalog up to the Davenport constant",
                        table_entries(g->order(), fp.davenport), ws.budget().table_entries);
  for (std::size_t len = 1; len <= fp.davenport; ++len) fp.atom_counts.push_back(cat.count(len));
  fp.abelianization_profile = order_profile(*abelianization(g));
  return fp;
}

Fingerprint fingerprint(Group const& g) {
  Workspace ws;
  return fingerprint(g, ws);
}

}  // namespace prodone
