#include "prodone/iso_lab.hpp"

#include <algorithm>
#include <atomic>
#include <sstream>

namespace prodone {

namespace {

constexpr Element kUnset = ~Element{0};
constexpr std::uint64_t kChunk = 4096;

std::string label_of(Group const& g) {
  return g->description().empty() ? "table:" + g->hash_hex() : g->description();
}

// x.y.z is product-one iff z closes one of the two cyclic orders.
bool triple_product_one(GroupTable const& g, Element x, Element y, Element z) {
  Element iz = g.inverse(z);
  return g.multiply(x, y) == iz || g.multiply(y, x) == iz;
}

std::size_t affordable_length(Group const& g, std::size_t want, Budget const& budget) {
  while (want > 0 && table_entries(g->order(), want) > budget.table_entries) --want;
  return want;
}

// Smallest rank r in layer k whose image flips product-one membership.
std::optional<std::uint64_t> first_violation_in_layer(ProductSetTable const& src,
                                                      ProductSetTable const& dst,
                                                      std::span<const Element> images,
                                                      std::size_t k, Exec exec) {
  std::uint64_t const size = src.layer_size(k);
  std::int64_t const chunks = static_cast<std::int64_t>((size + kChunk - 1) / kChunk);
  std::atomic<std::uint64_t> best{UINT64_MAX};
  MultisetIndexer const& sidx = src.indexer();
  MultisetIndexer const& didx = dst.indexer();

  auto scan = [&](std::int64_t c, std::vector<Element>& a, std::vector<Element>& b) {
    std::uint64_t const lo = static_cast<std::uint64_t>(c) * kChunk;
    if (lo > best.load(std::memory_order_relaxed)) return;
    std::uint64_t const hi = std::min(size, lo + kChunk);
    sidx.unrank(lo, a);
    for (std::uint64_t r = lo; r < hi; ++r) {
      for (std::size_t i = 0; i < k; ++i) b[i] = images[a[i]];
      // k is small; insertion sort.
      for (std::size_t i = 1; i < k; ++i)
        for (std::size_t j = i; j > 0 && b[j - 1] > b[j]; --j) std::swap(b[j - 1], b[j]);
      if (src.product_one(k, r) != dst.product_one(k, didx.rank(b))) {
        std::uint64_t cur = best.load();
        while (r < cur && !best.compare_exchange_weak(cur, r)) {
        }
        return;
      }
      sidx.next(a);
    }
  };
  if (exec == Exec::serial) {
    std::vector<Element> a(k), b(k);
    for (std::int64_t c = 0; c < chunks && best.load() == UINT64_MAX; ++c) scan(c, a, b);
  } else {
#pragma omp parallel
    {
      std::vector<Element> a(k), b(k);
#pragma omp for schedule(dynamic, 1)
      for (std::int64_t c = 0; c < chunks; ++c) scan(c, a, b);
    }
  }
  if (best.load() == UINT64_MAX) return std::nullopt;
  return best.load();
}

// First violation at lengths 1..bound given prebuilt tables; returns its length
// and rank.
std::optional<std::pair<std::size_t, std::uint64_t>> scan_violation(
    ProductSetTable const& src, ProductSetTable const& dst, std::span<const Element> images,
    std::size_t bound, Exec exec) {
  for (std::size_t k = 1; k <= bound; ++k)
    if (auto r = first_violation_in_layer(src, dst, images, k, exec)) return std::pair{k, *r};
  return std::nullopt;
}

void require_bijection(GroupMap const& m) {
  if (!is_bijective(m)) throw PreconditionError("basis map is not a bijection");
}

struct SearchContext {
  GroupTable const& g1;
  GroupTable const& g2;
  std::size_t bound;
};

// Pruning implied by preservation through `bound`:
//   length 1: phi(1) = 1
//   g^[k] for k <= bound: ord(g) | k iff ord(phi g) | k
//   length 2: phi(g^-1) = phi(g)^-1
//   length 3: every triple keeps its product-one status
struct SearchState {
  std::vector<Element> phi;
  std::vector<char> used;
  std::vector<Element> assigned;
};

bool orders_compatible(SearchContext const& ctx, Element g, Element c) {
  unsigned og = ctx.g1.order_of(g), oc = ctx.g2.order_of(c);
  if (ctx.bound >= std::max(og, oc)) return og == oc;
  for (unsigned k = 1; k <= ctx.bound; ++k)
    if ((k % og == 0) != (k % oc == 0)) return false;
  return true;
}

bool triples_ok(SearchContext const& ctx, SearchState const& st, Element x) {
  if (ctx.bound < 3) return true;
  for (Element y : st.assigned)
    for (Element z : st.assigned)
      if (triple_product_one(ctx.g1, x, y, z) !=
          triple_product_one(ctx.g2, st.phi[x], st.phi[y], st.phi[z]))
        return false;
  return true;
}

// Assigns g -> c (and g^-1 -> c^-1 when the bound covers length 2).
bool try_assign(SearchContext const& ctx, SearchState& st, Element g, Element c) {
  if (st.used[c] || !orders_compatible(ctx, g, c)) return false;
  Element gi = ctx.g1.inverse(g), ci = ctx.g2.inverse(c);
  bool const pair = ctx.bound >= 2 && gi != g;
  if (ctx.bound >= 2 && gi == g && ci != c) return false;
  if (pair && (st.used[ci] || ci == c || st.phi[gi] != kUnset)) return false;
  st.phi[g] = c;
  st.used[c] = 1;
  st.assigned.push_back(g);
  if (pair) {
    st.phi[gi] = ci;
    st.used[ci] = 1;
    st.assigned.push_back(gi);
  }
  bool ok = triples_ok(ctx, st, g) && (!pair || triples_ok(ctx, st, gi));
  return ok;
}

void unassign(SearchState& st, std::size_t keep) {
  while (st.assigned.size() > keep) {
    Element g = st.assigned.back();
    st.assigned.pop_back();
    st.used[st.phi[g]] = 0;
    st.phi[g] = kUnset;
  }
}

void dfs(SearchContext const& ctx, SearchState& st, Element from,
         std::vector<std::vector<Element>>& leaves) {
  Element g = from;
  while (g < ctx.g1.order() && st.phi[g] != kUnset) ++g;
  if (g == ctx.g1.order()) {
    leaves.push_back(st.phi);
    return;
  }
  for (Element c = 0; c < ctx.g2.order(); ++c) {
    std::size_t const keep = st.assigned.size();
    if (try_assign(ctx, st, g, c)) dfs(ctx, st, g + 1, leaves);
    unassign(st, keep);
  }
}

}  // namespace

char const* to_string(Classification c) {
  switch (c) {
    case Classification::isomorphism: return "isomorphism";
    case Classification::anti_isomorphism: return "anti_isomorphism";
    case Classification::neither: return "neither";
  }
  return "?";
}

char const* to_string(Status s) {
  switch (s) {
    case Status::pass: return "pass";
    case Status::vacuous: return "vacuous";
    case Status::fail: return "fail";
  }
  return "?";
}

char const* to_string(InvariantVerdict v) {
  switch (v) {
    case InvariantVerdict::distinguishes: return "distinguishes";
    case InvariantVerdict::matches: return "matches";
    case InvariantVerdict::inconclusive: return "inconclusive";
  }
  return "?";
}

bool AssertionReport::all_pass() const {
  return std::all_of(assertions.begin(), assertions.end(),
                     [](auto const& a) { return a.status != Status::fail; });
}

InvariantRow const* InvariantReport::find(std::string const& name) const {
  for (auto const& r : rows)
    if (r.name == name) return &r;
  return nullptr;
}

std::optional<Sequence> preservation_violation(GroupMap const& m, std::size_t bound,
                                               Workspace& ws) {
  require_bijection(m);
  if (bound == 0) return std::nullopt;
  auto src = ws.table(m.source, bound);
  auto dst = ws.table(m.target, bound);
  auto hit = scan_violation(*src, *dst, m.images, bound, ws.exec());
  if (!hit) return std::nullopt;
  std::vector<Element> a(hit->first);
  src->indexer().unrank(hit->second, a);
  return Sequence::from_terms(m.source, a);
}

bool verify_preserving(BasisBijection& b, std::size_t bound, Workspace& ws) {
  require_bijection(b.map);
  std::size_t const reach = std::min(affordable_length(b.map.source, bound, ws.budget()),
                                     affordable_length(b.map.target, bound, ws.budget()));
  if (reach > 0) {
    auto src = ws.table(b.map.source, reach);
    auto dst = ws.table(b.map.target, reach);
    if (auto hit = scan_violation(*src, *dst, b.map.images, reach, ws.exec())) {
      b.verified_bound = hit->first - 1;
      return false;
    }
  }
  b.verified_bound = std::max(b.verified_bound, reach);
  if (reach < bound)
    throw ResourceError("verify_preserving: tables up to length " + std::to_string(bound),
                        table_entries(std::max(b.map.source->order(), b.map.target->order()),
                                      bound),
                        ws.budget().table_entries);
  return true;
}

bool verify_preserving(BasisBijection& b, std::size_t bound) {
  Workspace ws;
  return verify_preserving(b, bound, ws);
}

std::vector<BasisBijection> search_bijections(Group const& g1, Group const& g2,
                                              std::size_t bound, Workspace& ws) {
  std::vector<BasisBijection> out;
  if (g1->order() != g2->order() || bound == 0) return out;
  if (bound >= std::max(g1->exponent(), g2->exponent()) &&
      order_profile(*g1) != order_profile(*g2))
    return out;

  SearchContext const ctx{*g1, *g2, bound};
  std::size_t const n = g1->order();
  SearchState root{std::vector<Element>(n, kUnset), std::vector<char>(n, 0), {}};
  std::vector<std::vector<Element>> leaves;
  // Length-1 sequence (1) forces phi(1) = 1.
  if (!try_assign(ctx, root, identity_element, identity_element)) return out;

  if (n == 1) {
    leaves.push_back(root.phi);
  } else {
    // Parallel over the images of the first free element; branch results are
    // concatenated in candidate order, matching the serial traversal.
    Element const first = 1;
    std::vector<std::vector<std::vector<Element>>> branch(n);
    auto run_branch = [&](std::int64_t c) {
      SearchState st = root;
      if (try_assign(ctx, st, first, static_cast<Element>(c)))
        dfs(ctx, st, first + 1, branch[static_cast<std::size_t>(c)]);
    };
    if (ws.exec() == Exec::serial) {
      for (std::int64_t c = 0; c < static_cast<std::int64_t>(n); ++c) run_branch(c);
    } else {
#pragma omp parallel for schedule(dynamic, 1)
      for (std::int64_t c = 0; c < static_cast<std::int64_t>(n); ++c) run_branch(c);
    }
    for (auto& b : branch)
      for (auto& leaf : b) leaves.push_back(std::move(leaf));
  }

  for (auto& images : leaves) {
    BasisBijection b{GroupMap{g1, g2, std::move(images)}, 0};
    if (verify_preserving(b, bound, ws)) out.push_back(std::move(b));
  }
  std::sort(out.begin(), out.end(),
            [](auto const& x, auto const& y) { return x.map.images < y.map.images; });
  return out;
}

std::vector<BasisBijection> search_bijections(Group const& g1, Group const& g2,
                                              std::size_t bound) {
  Workspace ws;
  return search_bijections(g1, g2, bound, ws);
}

AssertionReport check_assertions(BasisBijection b, Workspace& ws) {
  require_bijection(b.map);
  if (b.verified_bound < 3 && !verify_preserving(b, 3, ws))
    throw PreconditionError("check_assertions: the map does not preserve product-one "
                            "sequences of length <= 3");
  GroupTable const& s = *b.map.source;
  GroupTable const& t = *b.map.target;
  auto const& phi = b.map.images;
  std::size_t const n = s.order();

  AssertionReport rep;
  rep.source = label_of(b.map.source);
  rep.target = label_of(b.map.target);
  rep.images = phi;
  rep.verified_bound = b.verified_bound;

  auto fail = [](AssertionResult& r, std::string detail, std::vector<Element> ce) {
    if (r.status == Status::fail) return;
    r.status = Status::fail;
    r.detail = std::move(detail);
    r.counterexample = std::move(ce);
  };

  AssertionResult a1{"A1", Status::pass, {}, {}};
  if (phi[identity_element] != identity_element) fail(a1, "phi(1) != 1", {identity_element});
  for (Element g = 0; g < n; ++g)
    if (s.order_of(g) != t.order_of(phi[g]))
      fail(a1, "ord(g) != ord(phi(g))", {g});
  if (a1.status == Status::pass)
    a1.detail = "orders preserved; product-one preserved through length " +
                std::to_string(b.verified_bound);

  AssertionResult a2{"A2", Status::pass, {}, {}};
  for (Element g = 0; g < n; ++g)
    if (phi[s.inverse(g)] != t.inverse(phi[g])) fail(a2, "phi(g^-1) != phi(g)^-1", {g});

  AssertionResult a3{"A3", Status::pass, {}, {}};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      Element img = phi[s.multiply(x, y)];
      if (img != t.multiply(phi[x], phi[y]) && img != t.multiply(phi[y], phi[x]))
        fail(a3, "phi(g1 g2) is neither phi(g1)phi(g2) nor phi(g2)phi(g1)", {x, y});
    }
  for (Element g = 0; g < n; ++g) {
    Element p = identity_element, q = identity_element;
    for (unsigned k = 0; k <= s.order_of(g); ++k) {
      if (phi[p] != q) fail(a3, "phi(g^" + std::to_string(k) + ") != phi(g)^" +
                                    std::to_string(k), {g});
      p = s.multiply(p, g);
      q = t.multiply(q, phi[g]);
    }
  }

  AssertionResult a4{"A4", Status::pass, {}, {}};
  for (Element x = 0; x < n; ++x)
    for (Element y = 0; y < n; ++y) {
      bool c1 = s.multiply(x, y) == s.multiply(y, x);
      bool c2 = t.multiply(phi[x], phi[y]) == t.multiply(phi[y], phi[x]);
      if (c1 != c2) fail(a4, "commutation not preserved", {x, y});
    }

  auto commute = [&](Element x, Element y) { return s.multiply(x, y) == s.multiply(y, x); };
  auto hom_at = [&](Element x, Element y) {
    return phi[s.multiply(x, y)] == t.multiply(phi[x], phi[y]);
  };
  auto anti_at = [&](Element x, Element y) {
    return phi[s.multiply(x, y)] == t.multiply(phi[y], phi[x]);
  };

  AssertionResult a5{"A5", Status::vacuous, {}, {}};
  AssertionResult a6{"A6", Status::vacuous, {}, {}};
  for (Element g1 = 0; g1 < n; ++g1)
    for (Element g2 = 0; g2 < n; ++g2) {
      if (commute(g1, g2)) continue;
      for (Element g3 = 0; g3 < n; ++g3) {
        if (commute(g1, g3)) continue;
        // A5: (ii) holds here; (iii) and (i) must not both hold.
        if (commute(g2, g3)) {
          if (a5.status == Status::vacuous) a5.status = Status::pass;
          if (hom_at(g1, g2) && anti_at(g1, g3))
            fail(a5, "triple satisfies (i), (ii) and (iii)", {g1, g2, g3});
        }
        // A6 hypothesis.
        if (!(hom_at(g1, g2) && anti_at(g1, g3))) continue;
        if (a6.status == Status::vacuous) a6.status = Status::pass;
        Element i2 = s.inverse(g2), i3 = s.inverse(g3);
        bool ok = hom_at(g1, i2) && hom_at(i2, g1) && anti_at(g1, i3) && anti_at(i3, g1);
        if (!ok) fail(a6, "conclusion fails for triple", {g1, g2, g3});
      }
    }
  if (a5.status == Status::vacuous) a5.detail = "no triple meets (ii) and (iii)";
  if (a6.status == Status::vacuous) a6.detail = "hypothesis never met";

  rep.homomorphism = is_homomorphism(b.map);
  rep.anti_homomorphism = is_anti_homomorphism(b.map);
  AssertionResult a7{"A7", Status::pass, {}, {}};
  if (rep.homomorphism) {
    rep.classification = Classification::isomorphism;
    a7.detail = rep.anti_homomorphism ? "isomorphism and anti-isomorphism" : "isomorphism";
  } else if (rep.anti_homomorphism) {
    rep.classification = Classification::anti_isomorphism;
    a7.detail = "anti-isomorphism";
  } else {
    rep.classification = Classification::neither;
    fail(a7, "neither a homomorphism nor an anti-homomorphism", {});
  }
  rep.assertions = {a1, a2, a3, a4, a5, a6, a7};
  return rep;
}

AssertionReport check_assertions(BasisBijection const& b) {
  Workspace ws;
  return check_assertions(b, ws);
}

TheoremVerdict verify_theorem(Group const& g1, Group const& g2, Workspace& ws) {
  TheoremVerdict v;
  v.group1 = label_of(g1);
  v.group2 = label_of(g2);
  v.groups_isomorphic = are_isomorphic(g1, g2);
  try {
    v.bound = std::max(large_davenport(g1, ws), large_davenport(g2, ws));
    auto const found = search_bijections(g1, g2, v.bound, ws);
    v.bijections_found = found.size();
    for (auto const& b : found) {
      auto const rep = check_assertions(b, ws);
      if (!rep.all_pass()) ++v.assertion_failures;
      switch (rep.classification) {
        case Classification::isomorphism: ++v.isomorphisms; break;
        case Classification::anti_isomorphism: ++v.anti_isomorphisms; break;
        case Classification::neither: v.all_classified = false; break;
      }
    }
  } catch (ResourceError const& e) {
    v.complete = false;
    v.note = e.what();
  }
  v.consistent = v.complete && ((v.bijections_found > 0) == v.groups_isomorphic) &&
                 v.all_classified && v.assertion_failures == 0;
  return v;
}

TheoremVerdict verify_theorem(Group const& g1, Group const& g2) {
  Workspace ws;
  return verify_theorem(g1, g2, ws);
}

BasisBijection opposite_transport(BasisBijection const& b) {
  return BasisBijection{GroupMap{b.map.source, opposite(b.map.target), b.map.images},
                        b.verified_bound};
}

namespace {

template <typename T>
std::string join(std::vector<T> const& v) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ']';
  return os.str();
}

std::string describe(LengthSystem const& ls) {
  std::ostringstream os;
  os << ls.sets.size() << " sets:";
  for (auto const& s : ls.sets) os << ' ' << join(s.lengths);
  return os.str();
}

template <typename F>
InvariantRow compare_row(std::string name, F&& compute) {
  InvariantRow row{std::move(name), InvariantVerdict::inconclusive, "?", "?"};
  try {
    auto [left, right, same] = compute();
    row.left = std::move(left);
    row.right = std::move(right);
    row.verdict = same ? InvariantVerdict::matches : InvariantVerdict::distinguishes;
  } catch (ResourceError const& e) {
    row.left = row.right = std::string("resource: ") + e.what();
  }
  return row;
}

}  // namespace

InvariantReport compare_invariants(Group const& g1, Group const& g2, std::size_t bound,
                                   Workspace& ws) {
  InvariantReport rep{label_of(g1), label_of(g2), bound, {}};
  rep.rows.push_back(compare_row("order", [&] {
    return std::tuple{std::to_string(g1->order()), std::to_string(g2->order()),
                      g1->order() == g2->order()};
  }));
  rep.rows.push_back(compare_row("abelianization", [&] {
    auto a1 = abelianization(g1), a2 = abelianization(g2);
    return std::tuple{join(order_profile(*a1)), join(order_profile(*a2)),
                      are_isomorphic(a1, a2)};
  }));
  std::optional<Fingerprint> f1, f2;
  rep.rows.push_back(compare_row("davenport", [&] {
    f1 = fingerprint(g1, ws);
    f2 = fingerprint(g2, ws);
    return std::tuple{std::to_string(f1->davenport), std::to_string(f2->davenport),
                      f1->davenport == f2->davenport};
  }));
  rep.rows.push_back(compare_row("atom_counts", [&] {
    if (!f1 || !f2) throw ResourceError("fingerprint unavailable", 0, 0);
    return std::tuple{join(f1->atom_counts), join(f2->atom_counts),
                      f1->atom_counts == f2->atom_counts};
  }));
  rep.rows.push_back(compare_row("fingerprint", [&] {
    if (!f1 || !f2) throw ResourceError("fingerprint unavailable", 0, 0);
    return std::tuple{std::string(*f1 == *f2 ? "equal" : "see rows above"),
                      std::string(*f1 == *f2 ? "equal" : "see rows above"), *f1 == *f2};
  }));
  rep.rows.push_back(compare_row("length_system", [&] {
    auto l1 = length_system(g1, bound, ws), l2 = length_system(g2, bound, ws);
    return std::tuple{describe(l1), describe(l2), l1 == l2};
  }));
  return rep;
}

InvariantReport compare_invariants(Group const& g1, Group const& g2, std::size_t bound) {
  Workspace ws;
  return compare_invariants(g1, g2, bound, ws);
}

}  // namespace prodone
