#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "oracles.hpp"
#include "prodone/group.hpp"

using namespace prodone;

namespace {

Element el(Group const& g, std::string const& label) {
  auto e = g->find(label);
  REQUIRE_MESSAGE(e.has_value(), "unknown label " << label);
  return *e;
}

std::vector<Group> sample_groups() {
  return {cyclic(1),      cyclic(6),        make_group("C2xC2"), dihedral(6),
          dihedral(8),    dicyclic(8),      dicyclic(12),        symmetric(4),
          alternating(4), make_group("C3xC4")};
}

}  // namespace

TEST_CASE("constructors produce valid tables with identity at 0") {
  for (auto const& g : sample_groups()) {
    CAPTURE(g->description());
    for (Element a = 0; a < g->order(); ++a) {
      CHECK(g->multiply(0, a) == a);
      CHECK(g->multiply(a, 0) == a);
      CHECK(g->multiply(a, g->inverse(a)) == 0);
      CHECK(g->multiply(g->inverse(a), a) == 0);
      CHECK(g->order() % g->order_of(a) == 0);
    }
  }
}

TEST_CASE("trivial group") {
  auto g = cyclic(1);
  CHECK(g->order() == 1);
  CHECK(g->is_abelian());
  CHECK(g->order_of(0) == 1);
}

TEST_CASE("order census of D6 and Klein four") {
  auto census = oracle::order_census(*dihedral(6));
  CHECK(census == std::map<unsigned, std::size_t>{{1, 1}, {2, 3}, {3, 2}});

  auto v = make_group("C2xC2");
  CHECK(v->order() == 4);
  CHECK(v->is_abelian());
  for (Element a = 1; a < 4; ++a) CHECK(v->order_of(a) == 2);
}

TEST_CASE("multiply, inverse and order on labeled elements") {
  auto c4 = cyclic(4);
  CHECK(c4->multiply(1, 3) == 0);
  auto c5 = cyclic(5);
  CHECK(c5->inverse(2) == 3);
  auto c6 = cyclic(6);
  CHECK(c6->order_of(2) == 3);

  auto d6 = dihedral(6);
  Element r = el(d6, "r"), s = el(d6, "s");
  CHECK(d6->order_of(r) == 3);
  CHECK(d6->order_of(s) == 2);
  CHECK(d6->multiply(r, s) != d6->multiply(s, r));

  auto s3 = symmetric(3);
  for (Element t = 0; t < s3->order(); ++t)
    if (s3->order_of(t) == 2) CHECK(s3->inverse(t) == t);

  auto q8 = dicyclic(8);
  CHECK(q8->order_of(el(q8, "x")) == 4);
  CHECK(q8->order_of(el(q8, "a")) == 4);
  CHECK(q8->order_of(el(q8, "a2")) == 2);
}

TEST_CASE("names and aliases resolve") {
  auto s3 = symmetric(3);
  CHECK(s3->name(0) == "1");
  CHECK(s3->find("(12)") == s3->find("s"));
  CHECK(s3->find("(123)") == s3->find("r"));
  CHECK(s3->find("#2") == Element{2});
  CHECK(s3->find("2") == Element{2});
  CHECK_FALSE(s3->find("#6").has_value());
  CHECK_FALSE(s3->find("bogus").has_value());

  auto v = make_group("C2xC2");
  CHECK(v->find("1") == identity_element);
  CHECK(v->find("g.1").has_value());
}

TEST_CASE("make_group shorthand") {
  CHECK(make_group("C7")->order() == 7);
  CHECK(make_group("D10")->order() == 10);
  CHECK(make_group("Dic12")->order() == 12);
  CHECK(make_group("Q8")->description() == "Q8");
  CHECK(make_group("S4")->order() == 24);
  CHECK(make_group("A4")->order() == 12);
  CHECK(make_group("C3xC4")->order() == 12);
  CHECK(make_group("C2xC2xC2")->order() == 8);
  CHECK_THROWS_AS(make_group(""), ParseError);
  CHECK_THROWS_AS(make_group("X3"), ParseError);
  CHECK_THROWS_AS(make_group("C0"), ParseError);
  CHECK_THROWS_AS(make_group("C3x"), ParseError);
  CHECK_THROWS_AS(make_group("D7"), GroupError);
  CHECK_THROWS_AS(make_group("S6"), GroupError);
}

TEST_CASE("from_table_text parses, relabels identity and validates") {
  // Z/3 written with the identity in row 2.
  auto g = from_table_text("3\n1 2 0\n2 0 1\n0 1 2\nname 2 e\nname 0 u\n");
  CHECK(g->order() == 3);
  CHECK(g->name(0) == "e");
  CHECK(g->find("u").has_value());
  CHECK(g->order_of(*g->find("u")) == 3);
  CHECK(are_isomorphic(g, cyclic(3)));

  CHECK_THROWS_AS(from_table_text(""), ParseError);
  CHECK_THROWS_AS(from_table_text("2\n0 1\n"), ParseError);
  CHECK_THROWS_AS(from_table_text("2\n0 1\n1 x\n"), ParseError);
  CHECK_THROWS_AS(from_table_text("2\n0 1\n1 0\nname 5 q\n"), ParseError);

  // Not Latin: the message names the offending cell.
  try {
    from_table_text("2\n0 1\n1 1\n");
    FAIL("expected GroupError");
  } catch (GroupError const& e) {
    CHECK(std::string(e.what()).find("cell (1, 1)") != std::string::npos);
  }
  // Latin with identity but not associative (order 5 loop).
  std::string loop =
      "5\n"
      "0 1 2 3 4\n"
      "1 0 3 4 2\n"
      "2 4 0 1 3\n"
      "3 2 4 0 1\n"
      "4 3 1 2 0\n";
  try {
    from_table_text(loop);
    FAIL("expected GroupError");
  } catch (GroupError const& e) {
    CHECK(std::string(e.what()).find("not associative") != std::string::npos);
  }
  // No identity.
  CHECK_THROWS_AS(from_table_text("3\n0 2 1\n2 1 0\n1 0 2\n"), GroupError);
}

TEST_CASE("opposite group") {
  for (auto const& g : sample_groups()) {
    CAPTURE(g->description());
    auto op = opposite(g);
    for (Element a = 0; a < g->order(); ++a)
      for (Element b = 0; b < g->order(); ++b) CHECK(op->multiply(a, b) == g->multiply(b, a));
    CHECK(*opposite(op) == *g);
    if (g->is_abelian()) CHECK(*op == *g);

    GroupMap psi = inversion_map(g);
    psi.target = op;
    CHECK(is_bijective(psi));
    CHECK(is_homomorphism(psi));
  }
}

TEST_CASE("homomorphism predicates") {
  for (auto const& g : sample_groups()) {
    CAPTURE(g->description());
    CHECK(is_homomorphism(identity_map(g)));
    auto inv = inversion_map(g);
    CHECK(is_anti_homomorphism(inv));
    CHECK(is_homomorphism(inv) == g->is_abelian());
  }
  // On an abelian group the two predicates coincide for every map.
  auto c4 = cyclic(4);
  std::vector<Element> p{0, 1, 2, 3};
  do {
    GroupMap m{c4, c4, p};
    CHECK(is_homomorphism(m) == is_anti_homomorphism(m));
  } while (std::next_permutation(p.begin(), p.end()));
}

TEST_CASE("map algebra") {
  auto g = dihedral(8);
  auto isos = find_group_isomorphisms(g, g);
  REQUIRE(isos.size() == 8);
  for (auto const& m : isos) {
    CHECK(compose(inverse_map(m), m) == identity_map(g));
    CHECK(is_homomorphism(compose(m, m)));
  }
  auto inv = inversion_map(g);
  CHECK(compose(inv, inv) == identity_map(g));
}

TEST_CASE("commutator subgroup") {
  for (auto const& g : sample_groups()) {
    auto c = commutator_subgroup(*g);
    bool symmetric_table = true;
    for (Element a = 0; a < g->order(); ++a)
      for (Element b = 0; b < g->order(); ++b)
        symmetric_table &= g->multiply(a, b) == g->multiply(b, a);
    CHECK((c == std::vector<Element>{0}) == symmetric_table);
    for (Element x : c) {
      CHECK(std::binary_search(c.begin(), c.end(), g->inverse(x)));
      for (Element y : c) CHECK(std::binary_search(c.begin(), c.end(), g->multiply(x, y)));
    }
  }
  auto s3 = symmetric(3);
  auto c = commutator_subgroup(*s3);
  CHECK(c.size() == 3);
  for (Element x : c) CHECK(s3->order_of(x) != 2);

  auto q8 = dicyclic(8);
  CHECK(commutator_subgroup(*q8) == std::vector<Element>{0, *q8->find("a2")});
}

TEST_CASE("abelianization") {
  auto klein = make_group("C2xC2");
  CHECK(are_isomorphic(abelianization(dihedral(8)), klein));
  CHECK(are_isomorphic(abelianization(dicyclic(8)), klein));
  CHECK(are_isomorphic(abelianization(symmetric(3)), cyclic(2)));
  CHECK(are_isomorphic(abelianization(alternating(4)), cyclic(3)));
  CHECK(are_isomorphic(abelianization(dicyclic(12)), cyclic(4)));
  for (auto const& g : sample_groups()) {
    auto ab = abelianization(g);
    CHECK(ab->is_abelian());
    if (g->is_abelian()) CHECK(are_isomorphic(ab, g));
    CHECK(ab->order() * commutator_subgroup(*g).size() == g->order());
  }
}

TEST_CASE("group isomorphism search") {
  CHECK(find_group_isomorphisms(cyclic(4), make_group("C2xC2")).empty());
  auto d6 = dihedral(6), s3 = symmetric(3);
  auto isos = find_group_isomorphisms(d6, s3, 6);
  CHECK(isos.size() == 6);
  CHECK(find_group_isomorphisms(d6, s3).size() == oracle::automorphism_count(*s3));
  CHECK(find_group_isomorphisms(d6, s3, 2).size() == 2);
  for (auto const& m : isos) {
    CHECK(is_bijective(m));
    CHECK(is_homomorphism(m));
  }
  for (auto const& g : sample_groups()) {
    auto self = find_group_isomorphisms(g, g);
    CHECK(std::find(self.begin(), self.end(), identity_map(g)) != self.end());
    if (g->order() <= 8) CHECK(self.size() == oracle::automorphism_count(*g));
  }
  CHECK(are_isomorphic(make_group("C3xC4"), cyclic(12)));
  CHECK_FALSE(are_isomorphic(dihedral(8), dicyclic(8)));
  CHECK_FALSE(are_isomorphic(dihedral(12), alternating(4)));
  CHECK_FALSE(are_isomorphic(dihedral(12), dicyclic(12)));
  CHECK(are_isomorphic(dihedral(12), make_group("S3xC2")));
  // Symmetry.
  auto groups = sample_groups();
  for (auto const& a : groups)
    for (auto const& b : groups) CHECK(are_isomorphic(a, b) == are_isomorphic(b, a));
}

TEST_CASE("relabel gives an isomorphic copy with a different table") {
  auto g = dihedral(8);
  std::vector<Element> perm{0, 7, 6, 5, 4, 3, 2, 1};
  auto m = relabel(g, perm);
  CHECK(is_homomorphism(m));
  CHECK(is_bijective(m));
  CHECK_FALSE(*m.target == *g);
  CHECK(m.target->hash() != g->hash());
  CHECK(m.target->name(7) == g->name(1));
  CHECK_THROWS_AS(relabel(g, std::vector<Element>{1, 0, 2, 3, 4, 5, 6, 7}), PreconditionError);
  CHECK_THROWS_AS(relabel(g, std::vector<Element>{0, 1, 1, 3, 4, 5, 6, 7}), PreconditionError);
}

TEST_CASE("order profile and generators") {
  auto q8 = dicyclic(8);
  CHECK(order_profile(*q8) == std::vector<unsigned>{1, 2, 4, 4, 4, 4, 4, 4});
  for (auto const& g : sample_groups()) {
    auto gens = greedy_generators(*g);
    CHECK(subgroup_closure(*g, gens).size() == g->order());
  }
  CHECK(q8->exponent() == 4);
}

TEST_CASE("hash ignores names and is stable") {
  auto a = from_table_text("2\n0 1\n1 0\nname 1 t\n");
  auto b = cyclic(2);
  CHECK(a->hash() == b->hash());
  CHECK(a->hash_hex().size() == 16);
  CHECK(same_group(a, b));
  CHECK_FALSE(same_group(cyclic(4), make_group("C2xC2")));
}
