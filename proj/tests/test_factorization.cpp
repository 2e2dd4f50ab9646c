#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "prodone/factorization.hpp"

using namespace prodone;

namespace {

Sequence seq(Group const& g, std::string_view text) { return parse_sequence(g, text); }

std::vector<std::vector<Element>> terms_of(std::vector<Sequence> const& atoms) {
  std::vector<std::vector<Element>> out;
  for (auto const& a : atoms) out.push_back(a.terms());
  return out;
}

std::set<unsigned> as_set(LengthSet const& l) { return {l.lengths.begin(), l.lengths.end()}; }

}  // namespace

TEST_CASE("atom examples") {
  for (auto const& g : {cyclic(5), symmetric(3), dicyclic(8)}) {
    CHECK(is_atom(Sequence::repeated(g, 0)));
    CHECK_FALSE(is_atom(Sequence::repeated(g, 0, 2)));
    CHECK_FALSE(is_atom(Sequence(g)));
    for (Element a = 1; a < g->order(); ++a) {
      CHECK(is_atom(Sequence::from_terms(g, std::vector<Element>{a, g->inverse(a)})));
      CHECK_FALSE(is_atom(Sequence::repeated(g, a)));
      unsigned p = g->order_of(a);
      bool prime = p > 1;
      for (unsigned d = 2; d * d <= p; ++d) prime &= p % d != 0;
      if (prime) CHECK(is_atom(Sequence::repeated(g, a, p)));
    }
  }
  // Non-abelian atoms may contain product-one proper sub-multisets.
  auto s3 = symmetric(3);
  auto t = seq(s3, "r^2,s^2");
  CHECK(is_atom(t) == oracle::is_atom(*s3, t.terms()));
}

TEST_CASE("is_atom agrees with the definition") {
  std::mt19937 rng(21);
  for (auto const& g : {symmetric(3), dihedral(8), dicyclic(8), cyclic(6)}) {
    std::uniform_int_distribution<Element> pick(0, static_cast<Element>(g->order() - 1));
    for (int i = 0; i < 150; ++i) {
      std::vector<Element> t(1 + i % 7);
      for (auto& x : t) x = pick(rng);
      CHECK(is_atom(Sequence::from_terms(g, t)) == oracle::is_atom(*g, t));
    }
  }
}

TEST_CASE("small catalogs") {
  auto c2 = cyclic(2);
  auto cat = enumerate_atoms(c2, 3);
  CHECK(cat.exhaustive);
  CHECK(cat.complete_through == 3);
  CHECK(cat.atoms_by_length.at(1) == std::vector<Sequence>{seq(c2, "1")});
  CHECK(cat.atoms_by_length.at(2) == std::vector<Sequence>{seq(c2, "g^2")});
  CHECK(cat.count(3) == 0);
  CHECK(cat.total() == 2);
  CHECK(cat.longest() == 2);

  auto c3 = cyclic(3);
  auto cat3 = enumerate_atoms(c3, 4);
  CHECK(cat3.atoms_by_length.at(1) == std::vector<Sequence>{seq(c3, "1")});
  CHECK(cat3.atoms_by_length.at(2) == std::vector<Sequence>{seq(c3, "g,g2")});
  CHECK(cat3.atoms_by_length.at(3) == std::vector<Sequence>{seq(c3, "g^3"), seq(c3, "g2^3")});
  CHECK(cat3.count(4) == 0);
}

TEST_CASE("enumeration matches brute force") {
  for (auto const& g : {symmetric(3), dihedral(8), dicyclic(8), make_group("C2xC4")}) {
    CAPTURE(g->description());
    auto cat = enumerate_atoms(g, 5);
    for (std::size_t k = 1; k <= 5; ++k) CHECK(terms_of(cat.atoms_by_length[k]) == oracle::atoms_of_length(*g, k));
  }
}

TEST_CASE("serial and parallel atom extraction agree") {
  for (auto const& g : {dihedral(12), alternating(4), cyclic(8)}) {
    ProductSetTable table(g, 6);
    for (std::size_t k = 1; k <= 6; ++k) {
      CHECK(atoms_of_length(table, k, Exec::serial) == atoms_of_length(table, k, Exec::parallel));
      CHECK(find_atom_of_length(table, k, Exec::serial) ==
            find_atom_of_length(table, k, Exec::parallel));
    }
  }
}

TEST_CASE("partial catalog when the table budget runs out") {
  Budget b;
  b.table_entries = 2000;
  Workspace ws(b);
  auto cat = enumerate_atoms(cyclic(12), 8, ws);
  CHECK_FALSE(cat.exhaustive);
  CHECK(cat.complete_through < 8);
  CHECK(cat.complete_through > 0);
  CHECK(table_entries(12, cat.complete_through) <= 2000);
}

TEST_CASE("large Davenport constant") {
  CHECK(large_davenport(cyclic(1)) == 1);
  for (unsigned n = 2; n <= 8; ++n) CHECK(large_davenport(cyclic(n)) == n);
  CHECK(large_davenport(cyclic(4)) == 4);
  CHECK(large_davenport(make_group("C2xC2")) == 3);
  // Cross-check against the unpruned scan up to 2|G| for small groups.
  for (auto const& g : {make_group("C2xC2"), symmetric(3), cyclic(5)})
    CHECK(large_davenport(g) == oracle::davenport_by_scan(*g, 2 * g->order()));

  Workspace ws;
  auto r = davenport_search(symmetric(3), ws);
  CHECK(r.searched_through == r.value + 1);
  // Cached result is reused.
  CHECK(davenport_search(symmetric(3), ws).value == r.value);

  // D(G) >= every prime element order.
  for (auto const& g : {dihedral(10), alternating(4), dicyclic(12)}) {
    unsigned d = large_davenport(g);
    for (Element a = 0; a < g->order(); ++a) CHECK(d >= g->order_of(a));
  }
}

TEST_CASE("factorizations") {
  auto c2 = cyclic(2);
  auto cat = enumerate_atoms(c2, 6);
  auto f = factorizations(seq(c2, "1^3"), cat);
  REQUIRE(f.size() == 1);
  CHECK(f[0] == Factorization(3, seq(c2, "1")));
  f = factorizations(seq(c2, "g^4"), cat);
  REQUIRE(f.size() == 1);
  CHECK(f[0] == Factorization(2, seq(c2, "g^2")));

  auto s3 = symmetric(3);
  auto cat3 = enumerate_atoms(s3, 6);
  for (auto const& a : cat3.all()) {
    auto fa = factorizations(a, cat3);
    REQUIRE(fa.size() == 1);
    CHECK(fa[0] == Factorization{a});
    CHECK(set_of_lengths(a, cat3).lengths == std::vector<unsigned>{1});
  }
  CHECK(factorizations(Sequence(s3), cat3).size() == 1);
  CHECK(set_of_lengths(Sequence(s3), cat3).lengths == std::vector<unsigned>{0});

  CHECK_THROWS_AS(factorizations(seq(s3, "r"), cat3), PreconditionError);
  CHECK_THROWS_AS(set_of_lengths(seq(s3, "r^3,s^4"), cat3), PreconditionError);
  CHECK_THROWS_AS(set_of_lengths(seq(c2, "g^2"), cat3), PreconditionError);
}

TEST_CASE("factorizations are distinct, complete and consistent with lengths") {
  auto g = dihedral(8);
  auto cat = enumerate_atoms(g, 6);
  std::mt19937 rng(8);
  std::uniform_int_distribution<Element> pick(0, 7);
  int checked = 0;
  while (checked < 60) {
    std::vector<Element> t(2 + checked % 5);
    for (auto& x : t) x = pick(rng);
    auto b = Sequence::from_terms(g, t);
    if (!is_product_one(b)) continue;
    ++checked;
    auto fs = factorizations(b, cat);
    REQUIRE_FALSE(fs.empty());
    std::set<std::vector<Sequence>> seen;
    std::set<unsigned> lens;
    for (auto f : fs) {
      Sequence prod(g);
      for (auto const& u : f) {
        CHECK(is_atom(u));
        prod = concat(prod, u);
      }
      CHECK(prod == b);
      std::sort(f.begin(), f.end());
      CHECK(seen.insert(f).second);
      lens.insert(static_cast<unsigned>(f.size()));
    }
    auto l = set_of_lengths(b, cat);
    CHECK(as_set(l) == lens);
    CHECK(as_set(l) == oracle::lengths_by_splitting(*g, t));
    CHECK(l.min() >= 1);
    CHECK(l.max() <= b.length());
    CHECK((l.min() == 1) == is_atom(b));
  }
}

TEST_CASE("lengths are superadditive over concatenation") {
  auto g = symmetric(3);
  auto cat = enumerate_atoms(g, 6);
  auto u = seq(g, "(123),(132)"), v = seq(g, "s^2,(13)^2");
  auto lu = set_of_lengths(u, cat), lv = set_of_lengths(v, cat);
  auto luv = as_set(set_of_lengths(concat(u, v), cat));
  for (unsigned a : lu.lengths)
    for (unsigned b : lv.lengths) CHECK(luv.count(a + b) == 1);
}

TEST_CASE("a set of lengths with two elements over D8") {
  auto g = dihedral(8);
  auto cat = enumerate_atoms(g, 6);
  std::optional<std::vector<Element>> found;
  for (std::size_t k = 1; k <= 6 && !found; ++k)
    oracle::for_each_multiset(8, k, [&](auto const& t) {
      if (!found && oracle::product_one(*g, t) && oracle::lengths_by_splitting(*g, t).size() >= 2)
        found = t;
    });
  REQUIRE(found.has_value());
  auto l = set_of_lengths(Sequence::from_terms(g, *found), cat);
  CHECK(l.lengths.size() >= 2);
  CHECK(as_set(l) == oracle::lengths_by_splitting(*g, *found));
}

TEST_CASE("length systems") {
  for (auto const& g : {cyclic(3), symmetric(3)})
    CHECK(length_system(g, 1).sets == std::vector<LengthSet>{LengthSet{{1}}});

  auto c2 = cyclic(2);
  std::set<std::set<unsigned>> expected;
  for (std::size_t k = 1; k <= 4; ++k)
    oracle::for_each_multiset(2, k, [&](auto const& t) {
      if (oracle::product_one(*c2, t)) expected.insert(oracle::lengths_by_splitting(*c2, t));
    });
  auto sys = length_system(c2, 4);
  std::set<std::set<unsigned>> got;
  for (auto const& l : sys.sets) got.insert(as_set(l));
  CHECK(got == expected);
  CHECK(sys.sets.size() == expected.size());
  CHECK(std::is_sorted(sys.sets.begin(), sys.sets.end()));
}

TEST_CASE("fingerprints") {
  auto fp = fingerprint(cyclic(2));
  CHECK(fp.davenport == 2);
  CHECK(fp.atom_counts == std::vector<std::size_t>{1, 1});

  for (auto const& g : {dihedral(8), dicyclic(8), alternating(4)}) {
    auto f = fingerprint(g);
    CHECK(f.atom_counts.size() == f.davenport);
    CHECK(f.atom_counts.back() > 0);
    // Relabeling invariance.
    std::vector<Element> perm(g->order());
    std::iota(perm.begin(), perm.end(), 0u);
    std::reverse(perm.begin() + 1, perm.end());
    CHECK(fingerprint(relabel(g, perm).target) == f);
  }
  auto fd = fingerprint(dihedral(8)), fq = fingerprint(dicyclic(8));
  CHECK(fd.abelianization_profile == fq.abelianization_profile);
  MESSAGE("D8 vs Q8 atom counts " << std::string(fd.atom_counts == fq.atom_counts ? "equal" : "differ"));
}
