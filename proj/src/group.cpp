#include "prodone/group.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <numeric>
#include <sstream>

namespace prodone {

namespace {

std::string cell_str(std::size_t a, std::size_t b) {
  return "(" + std::to_string(a) + ", " + std::to_string(b) + ")";
}

std::uint64_t fnv1a(std::size_t n, std::span<const Element> cells) {
  std::uint64_t h = 14695981039346656037ull;
  auto feed = [&h](std::uint32_t v) {
    for (int i = 0; i < 4; ++i) {
      h ^= (v >> (8 * i)) & 0xffu;
      h *= 1099511628211ull;
    }
  };
  feed(static_cast<std::uint32_t>(n));
  for (Element c : cells) feed(c);
  return h;
}

std::optional<unsigned> parse_uint(std::string_view s) {
  unsigned v = 0;
  if (s.empty()) return std::nullopt;
  auto [p, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || p != s.data() + s.size()) return std::nullopt;
  return v;
}

std::string power_name(std::string const& base, unsigned k) {
  if (k == 0) return "1";
  if (k == 1) return base;
  return base + std::to_string(k);
}

std::string cycle_name(std::vector<unsigned> const& p) {
  std::string out;
  std::vector<bool> seen(p.size(), false);
  for (unsigned i = 0; i < p.size(); ++i) {
    if (seen[i] || p[i] == i) continue;
    out += '(';
    for (unsigned j = i; !seen[j]; j = p[j]) {
      seen[j] = true;
      out += std::to_string(j + 1);
    }
    out += ')';
  }
  return out.empty() ? "1" : out;
}

// Permutations of 0..n-1 in lexicographic order (identity first), optionally
// only the even ones.
Group permutation_group(unsigned n, bool even_only, std::string description) {
  if (n == 0 || n > 5)
    throw GroupError("permutation groups are limited to 1 <= n <= 5, got " +
                     std::to_string(n));
  std::vector<std::vector<unsigned>> perms;
  std::vector<unsigned> p(n);
  std::iota(p.begin(), p.end(), 0u);
  do {
    if (even_only) {
      unsigned inversions = 0;
      for (unsigned i = 0; i < n; ++i)
        for (unsigned j = i + 1; j < n; ++j) inversions += p[i] > p[j];
      if (inversions % 2 != 0) continue;
    }
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<unsigned>, Element> index;
  for (Element i = 0; i < perms.size(); ++i) index[perms[i]] = i;

  std::vector<std::vector<Element>> rows(perms.size(),
                                         std::vector<Element>(perms.size()));
  std::vector<unsigned> prod(n);
  for (std::size_t a = 0; a < perms.size(); ++a) {
    for (std::size_t b = 0; b < perms.size(); ++b) {
      for (unsigned i = 0; i < n; ++i) prod[i] = perms[a][perms[b][i]];
      rows[a][b] = index.at(prod);
    }
  }
  std::vector<std::string> names;
  for (auto const& q : perms) names.push_back(cycle_name(q));

  std::map<std::string, Element> aliases;
  if (!even_only && n >= 2) {
    std::vector<unsigned> s(n);
    std::iota(s.begin(), s.end(), 0u);
    std::swap(s[0], s[1]);
    aliases["s"] = index.at(s);
    if (n >= 3) {
      std::vector<unsigned> r(n);
      for (unsigned i = 0; i < n; ++i) r[i] = (i + 1) % n;
      aliases["r"] = index.at(r);
    }
  }
  return GroupTable::make(std::move(rows), std::move(names), std::move(aliases),
                          std::move(description));
}

}  // namespace

Group GroupTable::make(std::vector<std::vector<Element>> rows,
                       std::vector<std::string> names,
                       std::map<std::string, Element> aliases,
                       std::string description) {
  std::size_t const n = rows.size();
  if (n == 0) throw GroupError("a group table needs at least one element");
  for (std::size_t a = 0; a < n; ++a) {
    if (rows[a].size() != n)
      throw GroupError("row " + std::to_string(a) + " has " +
                       std::to_string(rows[a].size()) + " entries, expected " +
                       std::to_string(n));
    for (std::size_t b = 0; b < n; ++b)
      if (rows[a][b] >= n)
        throw GroupError("entry " + std::to_string(rows[a][b]) + " at cell " +
                         cell_str(a, b) + " is out of range");
  }
  // Latin square.
  std::vector<std::size_t> seen(n, SIZE_MAX);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      Element v = rows[a][b];
      if (seen[v] == a)
        throw GroupError("not a Latin square: value " + std::to_string(v) +
                         " repeats in row " + std::to_string(a) + " at cell " +
                         cell_str(a, b));
      seen[v] = a;
    }
  }
  std::fill(seen.begin(), seen.end(), SIZE_MAX);
  for (std::size_t b = 0; b < n; ++b) {
    for (std::size_t a = 0; a < n; ++a) {
      Element v = rows[a][b];
      if (seen[v] == b)
        throw GroupError("not a Latin square: value " + std::to_string(v) +
                         " repeats in column " + std::to_string(b) +
                         " at cell " + cell_str(a, b));
      seen[v] = b;
    }
  }
  // Identity.
  std::optional<std::size_t> e;
  for (std::size_t a = 0; a < n && !e; ++a) {
    bool ok = true;
    for (std::size_t b = 0; b < n && ok; ++b)
      ok = rows[a][b] == b && rows[b][a] == b;
    if (ok) e = a;
  }
  if (!e) throw GroupError("table has no two-sided identity element");

  // Relabel so the identity is 0: swap labels 0 and e.
  std::vector<Element> perm(n);
  std::iota(perm.begin(), perm.end(), 0u);
  std::swap(perm[0], perm[*e]);

  auto g = std::shared_ptr<GroupTable>(new GroupTable());
  g->n_ = n;
  g->table_.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      g->table_[perm[a] * n + perm[b]] = perm[rows[a][b]];

  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      Element ab = g->multiply(a, b);
      for (std::size_t c = 0; c < n; ++c) {
        if (g->multiply(ab, c) != g->multiply(a, g->multiply(b, c)))
          throw GroupError("not associative: (a*b)*c != a*(b*c) for (a, b, c) = (" +
                           std::to_string(perm[a]) + ", " + std::to_string(perm[b]) +
                           ", " + std::to_string(perm[c]) + ")");
      }
    }

  g->inverse_.assign(n, 0);
  g->element_order_.assign(n, 1);
  for (Element a = 0; a < n; ++a) {
    for (Element b = 0; b < n; ++b)
      if (g->multiply(a, b) == identity_element) g->inverse_[a] = b;
    Element x = a;
    unsigned k = 1;
    while (x != identity_element) {
      x = g->multiply(x, a);
      ++k;
    }
    g->element_order_[a] = k;
    for (Element b = 0; b < n; ++b)
      if (g->multiply(a, b) != g->multiply(b, a)) g->abelian_ = false;
  }

  g->names_.assign(n, {});
  if (!names.empty() && names.size() != n)
    throw GroupError("expected " + std::to_string(n) + " element names, got " +
                     std::to_string(names.size()));
  for (std::size_t a = 0; a < n; ++a)
    g->names_[perm[a]] = names.empty() || names[a].empty()
                             ? (perm[a] == 0 ? "1" : "#" + std::to_string(perm[a]))
                             : names[a];
  for (auto const& [label, idx] : aliases) {
    if (idx >= n) throw GroupError("alias '" + label + "' is out of range");
    g->aliases_[label] = perm[idx];
  }
  g->description_ = std::move(description);
  g->hash_ = fnv1a(n, g->table_);
  return g;
}

unsigned GroupTable::exponent() const noexcept {
  return *std::max_element(element_order_.begin(), element_order_.end());
}

std::optional<Element> GroupTable::find(std::string_view label) const {
  for (Element a = 0; a < n_; ++a)
    if (names_[a] == label) return a;
  if (auto it = aliases_.find(std::string(label)); it != aliases_.end())
    return it->second;
  std::string_view digits = label;
  if (!digits.empty() && digits.front() == '#') digits.remove_prefix(1);
  if (auto v = parse_uint(digits); v && *v < n_) return static_cast<Element>(*v);
  return std::nullopt;
}

std::string GroupTable::hash_hex() const {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(hash_));
  return buf;
}

bool same_group(Group const& a, Group const& b) noexcept {
  return a == b || (a && b && *a == *b);
}

Group cyclic(unsigned n) {
  if (n == 0) throw GroupError("cyclic group order must be positive");
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  for (unsigned a = 0; a < n; ++a) {
    names[a] = power_name("g", a);
    for (unsigned b = 0; b < n; ++b) rows[a][b] = (a + b) % n;
  }
  return GroupTable::make(std::move(rows), std::move(names), {},
                          "C" + std::to_string(n));
}

Group dihedral(unsigned order) {
  if (order == 0 || order % 2 != 0)
    throw GroupError("dihedral group order must be even and positive, got " +
                     std::to_string(order));
  unsigned const n = order / 2;
  // r^i s^j at index i + n*j.
  std::vector<std::vector<Element>> rows(order, std::vector<Element>(order));
  std::vector<std::string> names(order);
  for (unsigned x = 0; x < order; ++x) {
    unsigned i = x % n, j = x / n;
    names[x] = j == 0 ? power_name("r", i) : (i == 0 ? "s" : power_name("r", i) + "s");
    for (unsigned y = 0; y < order; ++y) {
      unsigned k = y % n, l = y / n;
      unsigned rot = j == 0 ? (i + k) % n : (i + n - k) % n;
      rows[x][y] = rot + n * ((j + l) % 2);
    }
  }
  return GroupTable::make(std::move(rows), std::move(names), {},
                          "D" + std::to_string(order));
}

Group dicyclic(unsigned order) {
  if (order == 0 || order % 4 != 0)
    throw GroupError("dicyclic group order must be a positive multiple of 4, got " +
                     std::to_string(order));
  unsigned const n = order / 4, m = 2 * n;
  // a^k x^j at index k + m*j.
  std::vector<std::vector<Element>> rows(order, std::vector<Element>(order));
  std::vector<std::string> names(order);
  for (unsigned p = 0; p < order; ++p) {
    unsigned k = p % m, j = p / m;
    names[p] = j == 0 ? power_name("a", k) : (k == 0 ? "x" : power_name("a", k) + "x");
    for (unsigned q = 0; q < order; ++q) {
      unsigned t = q % m, l = q / m;
      unsigned exp_a, exp_x;
      if (j == 0) {
        exp_a = (k + t) % m;
        exp_x = l;
      } else if (l == 0) {  // a^k x a^t = a^(k-t) x
        exp_a = (k + m - t) % m;
        exp_x = 1;
      } else {  // a^k x a^t x = a^(k-t) x^2 = a^(k-t+n)
        exp_a = (k + m - t + n) % m;
        exp_x = 0;
      }
      rows[p][q] = exp_a + m * exp_x;
    }
  }
  return GroupTable::make(std::move(rows), std::move(names), {},
                          order == 8 ? "Q8" : "Dic" + std::to_string(order));
}

Group symmetric(unsigned n) {
  return permutation_group(n, false, "S" + std::to_string(n));
}

Group alternating(unsigned n) {
  return permutation_group(n, true, "A" + std::to_string(n));
}

Group direct_product(Group const& a, Group const& b) {
  std::size_t const na = a->order(), nb = b->order(), n = na * nb;
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  for (std::size_t x = 0; x < n; ++x) {
    Element xa = x / nb, xb = x % nb;
    names[x] = a->name(xa) + "." + b->name(xb);
    for (std::size_t y = 0; y < n; ++y) {
      Element ya = y / nb, yb = y % nb;
      rows[x][y] = a->multiply(xa, ya) * nb + b->multiply(xb, yb);
    }
  }
  std::map<std::string, Element> aliases;
  if (names[0] != "1") aliases["1"] = 0;
  return GroupTable::make(std::move(rows), std::move(names), std::move(aliases),
                          a->description() + "x" + b->description());
}

Group from_table_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  std::optional<std::size_t> n;
  std::vector<std::vector<Element>> rows;
  std::vector<std::string> names;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    auto where = " (line " + std::to_string(line_no) + ")";
    if (!n) {
      auto v = parse_uint(tok[0]);
      if (tok.size() != 1 || !v || *v == 0)
        throw ParseError("expected the group order on the first line" + where);
      n = *v;
      names.assign(*n, {});
      continue;
    }
    if (tok[0] == "name") {
      if (rows.size() != *n)
        throw ParseError("'name' line before all table rows" + where);
      auto idx = tok.size() == 3 ? parse_uint(tok[1]) : std::nullopt;
      if (!idx || *idx >= *n)
        throw ParseError("expected 'name <index> <label>'" + where);
      names[*idx] = tok[2];
      continue;
    }
    if (rows.size() == *n) throw ParseError("unexpected token '" + tok[0] + "'" + where);
    if (tok.size() != *n)
      throw ParseError("row has " + std::to_string(tok.size()) + " entries, expected " +
                       std::to_string(*n) + where);
    std::vector<Element> row;
    for (auto const& t : tok) {
      auto v = parse_uint(t);
      if (!v || *v >= *n) throw ParseError("bad table entry '" + t + "'" + where);
      row.push_back(*v);
    }
    rows.push_back(std::move(row));
  }
  if (!n) throw ParseError("empty table text");
  if (rows.size() != *n)
    throw ParseError("expected " + std::to_string(*n) + " rows, got " +
                     std::to_string(rows.size()));
  return GroupTable::make(std::move(rows), std::move(names));
}

Group make_group(std::string_view spec) {
  if (spec.empty()) throw ParseError("empty group spec");
  std::vector<Group> factors;
  std::size_t start = 0;
  while (start <= spec.size()) {
    std::size_t end = spec.find('x', start);
    if (end == std::string_view::npos) end = spec.size();
    std::string_view tok = spec.substr(start, end - start);
    auto number = [&](std::size_t prefix) {
      auto v = parse_uint(tok.substr(prefix));
      if (!v || *v == 0) throw ParseError("bad group token '" + std::string(tok) + "'");
      return *v;
    };
    if (tok == "Q8") {
      factors.push_back(dicyclic(8));
    } else if (tok.starts_with("Dic")) {
      factors.push_back(dicyclic(number(3)));
    } else if (tok.starts_with("C")) {
      factors.push_back(cyclic(number(1)));
    } else if (tok.starts_with("D")) {
      factors.push_back(dihedral(number(1)));
    } else if (tok.starts_with("S")) {
      factors.push_back(symmetric(number(1)));
    } else if (tok.starts_with("A")) {
      factors.push_back(alternating(number(1)));
    } else {
      throw ParseError("bad group token '" + std::string(tok) + "'");
    }
    start = end + 1;
  }
  Group g = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) g = direct_product(g, factors[i]);
  return g;
}

GroupMap identity_map(Group const& g) {
  GroupMap m{g, g, std::vector<Element>(g->order())};
  std::iota(m.images.begin(), m.images.end(), 0u);
  return m;
}

GroupMap inversion_map(Group const& g) {
  GroupMap m{g, g, std::vector<Element>(g->order())};
  for (Element a = 0; a < g->order(); ++a) m.images[a] = g->inverse(a);
  return m;
}

GroupMap compose(GroupMap const& second, GroupMap const& first) {
  if (!same_group(first.target, second.source))
    throw PreconditionError("compose: maps are not composable");
  GroupMap m{first.source, second.target, first.images};
  for (auto& x : m.images) x = second.images[x];
  return m;
}

GroupMap inverse_map(GroupMap const& m) {
  if (!is_bijective(m)) throw PreconditionError("inverse_map: map is not bijective");
  GroupMap inv{m.target, m.source, std::vector<Element>(m.images.size())};
  for (Element a = 0; a < m.images.size(); ++a) inv.images[m.images[a]] = a;
  return inv;
}

bool is_bijective(GroupMap const& m) {
  if (m.source->order() != m.target->order()) return false;
  std::vector<bool> hit(m.target->order(), false);
  for (Element x : m.images) {
    if (x >= hit.size() || hit[x]) return false;
    hit[x] = true;
  }
  return true;
}

bool is_homomorphism(GroupMap const& m) {
  auto const& s = *m.source;
  auto const& t = *m.target;
  for (Element a = 0; a < s.order(); ++a)
    for (Element b = 0; b < s.order(); ++b)
      if (m(s.multiply(a, b)) != t.multiply(m(a), m(b))) return false;
  return true;
}

bool is_anti_homomorphism(GroupMap const& m) {
  auto const& s = *m.source;
  auto const& t = *m.target;
  for (Element a = 0; a < s.order(); ++a)
    for (Element b = 0; b < s.order(); ++b)
      if (m(s.multiply(a, b)) != t.multiply(m(b), m(a))) return false;
  return true;
}

Group opposite(Group const& g) {
  std::size_t const n = g->order();
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  for (Element a = 0; a < n; ++a)
    for (Element b = 0; b < n; ++b) rows[a][b] = g->multiply(b, a);
  std::string desc = g->description();
  if (desc.ends_with("^op"))
    desc.resize(desc.size() - 3);
  else if (!desc.empty())
    desc += "^op";
  return GroupTable::make(std::move(rows), g->names(), g->aliases(), std::move(desc));
}

GroupMap relabel(Group const& g, std::span<const Element> perm) {
  std::size_t const n = g->order();
  if (perm.size() != n || perm[identity_element] != identity_element)
    throw PreconditionError("relabel: permutation must have size n and fix 0");
  std::vector<bool> seen(n, false);
  for (Element p : perm) {
    if (p >= n || seen[p]) throw PreconditionError("relabel: not a permutation");
    seen[p] = true;
  }
  std::vector<std::vector<Element>> rows(n, std::vector<Element>(n));
  std::vector<std::string> names(n);
  for (Element a = 0; a < n; ++a) {
    names[perm[a]] = g->name(a);
    for (Element b = 0; b < n; ++b) rows[perm[a]][perm[b]] = perm[g->multiply(a, b)];
  }
  std::map<std::string, Element> aliases;
  for (auto const& [label, e] : g->aliases()) aliases[label] = perm[e];
  Group h = GroupTable::make(std::move(rows), std::move(names), std::move(aliases),
                             g->description());
  return GroupMap{g, std::move(h), std::vector<Element>(perm.begin(), perm.end())};
}

std::vector<Element> subgroup_closure(GroupTable const& g,
                                      std::span<const Element> generators) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> members{identity_element};
  in[identity_element] = true;
  std::vector<Element> work{identity_element};
  while (!work.empty()) {
    Element x = work.back();
    work.pop_back();
    for (Element s : generators) {
      Element y = g.multiply(x, s);
      if (!in[y]) {
        in[y] = true;
        members.push_back(y);
        work.push_back(y);
      }
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::vector<Element> commutator_subgroup(GroupTable const& g) {
  std::vector<bool> in(g.order(), false);
  std::vector<Element> commutators;
  for (Element a = 0; a < g.order(); ++a)
    for (Element b = 0; b < g.order(); ++b) {
      Element c = g.multiply(g.multiply(a, b), g.multiply(g.inverse(a), g.inverse(b)));
      if (!in[c]) {
        in[c] = true;
        commutators.push_back(c);
      }
    }
  return subgroup_closure(g, commutators);
}

Group abelianization(Group const& g) {
  auto const normal = commutator_subgroup(*g);
  std::size_t const n = g->order();
  std::vector<Element> rep(n);
  for (Element a = 0; a < n; ++a) {
    Element best = a;
    for (Element h : normal) best = std::min(best, g->multiply(a, h));
    rep[a] = best;
  }
  std::vector<Element> reps(rep);
  std::sort(reps.begin(), reps.end());
  reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
  std::vector<Element> index_of(n, 0);
  for (Element i = 0; i < reps.size(); ++i) index_of[reps[i]] = i;

  std::size_t const q = reps.size();
  std::vector<std::vector<Element>> rows(q, std::vector<Element>(q));
  std::vector<std::string> names(q);
  for (Element i = 0; i < q; ++i) {
    names[i] = g->name(reps[i]);
    for (Element j = 0; j < q; ++j)
      rows[i][j] = index_of[rep[g->multiply(reps[i], reps[j])]];
  }
  std::string desc = g->description().empty() ? "" : g->description() + "/G'";
  return GroupTable::make(std::move(rows), std::move(names), {}, std::move(desc));
}

std::vector<unsigned> order_profile(GroupTable const& g) {
  std::vector<unsigned> orders(g.order());
  for (Element a = 0; a < g.order(); ++a) orders[a] = g.order_of(a);
  std::sort(orders.begin(), orders.end());
  return orders;
}

std::vector<Element> greedy_generators(GroupTable const& g) {
  std::vector<Element> gens;
  std::vector<Element> span{identity_element};
  for (Element a = 0; a < g.order() && span.size() < g.order(); ++a) {
    if (std::binary_search(span.begin(), span.end(), a)) continue;
    gens.push_back(a);
    span = subgroup_closure(g, gens);
  }
  return gens;
}

namespace {

// Extends generator images to a full map via x*s -> phi(x)*phi(s); returns
// nullopt on inconsistency or non-injectivity.
std::optional<std::vector<Element>> extend_from_generators(
    GroupTable const& s, GroupTable const& t, std::span<const Element> gens,
    std::span<const Element> gen_images) {
  constexpr Element unset = ~Element{0};
  std::vector<Element> img(s.order(), unset);
  std::vector<bool> used(t.order(), false);
  img[identity_element] = identity_element;
  used[identity_element] = true;
  std::vector<Element> queue{identity_element};
  for (std::size_t head = 0; head < queue.size(); ++head) {
    Element x = queue[head];
    for (std::size_t i = 0; i < gens.size(); ++i) {
      Element y = s.multiply(x, gens[i]);
      Element iy = t.multiply(img[x], gen_images[i]);
      if (img[y] == unset) {
        if (used[iy]) return std::nullopt;
        img[y] = iy;
        used[iy] = true;
        queue.push_back(y);
      } else if (img[y] != iy) {
        return std::nullopt;
      }
    }
  }
  if (queue.size() != s.order()) return std::nullopt;
  return img;
}

}  // namespace

std::vector<GroupMap> find_group_isomorphisms(Group const& g1, Group const& g2,
                                              std::size_t limit) {
  std::vector<GroupMap> out;
  if (limit == 0 || g1->order() != g2->order()) return out;
  if (order_profile(*g1) != order_profile(*g2)) return out;

  auto const gens = greedy_generators(*g1);
  std::vector<Element> images(gens.size());
  std::size_t const n = g2->order();

  // Depth-first over generator images in increasing index order.
  auto search = [&](auto&& self, std::size_t depth) -> void {
    if (out.size() >= limit) return;
    if (depth == gens.size()) {
      auto full = extend_from_generators(*g1, *g2, gens, images);
      if (full) {
        GroupMap m{g1, g2, std::move(*full)};
        if (is_homomorphism(m)) out.push_back(std::move(m));
      }
      return;
    }
    for (Element c = 0; c < n; ++c) {
      if (g2->order_of(c) != g1->order_of(gens[depth])) continue;
      if (std::find(images.begin(), images.begin() + depth, c) != images.begin() + depth)
        continue;
      images[depth] = c;
      self(self, depth + 1);
      if (out.size() >= limit) return;
    }
  };
  if (gens.empty()) {
    out.push_back(identity_map(g1));
    out.back().target = g2;
    return out;
  }
  search(search, 0);
  return out;
}

bool are_isomorphic(Group const& g1, Group const& g2) {
  return !find_group_isomorphisms(g1, g2, 1).empty();
}

}  // namespace prodone
