#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "prodone/iso_lab.hpp"

using namespace prodone;

namespace {

BasisBijection basis(GroupMap m) { return BasisBijection{std::move(m), 0}; }

// Bijections fixing the identity, in lexicographic order of images.
std::vector<GroupMap> all_bijections(Group const& g1, Group const& g2) {
  std::vector<Element> p(g1->order());
  std::iota(p.begin(), p.end(), 0u);
  std::vector<GroupMap> out;
  do out.push_back(GroupMap{g1, g2, p});
  while (std::next_permutation(p.begin() + 1, p.end()));
  return out;
}

// Preservation checked independently, multiset by multiset.
bool preserving_by_oracle(GroupMap const& m, std::size_t bound) {
  bool ok = true;
  for (std::size_t k = 1; k <= bound && ok; ++k)
    oracle::for_each_multiset(m.source->order(), k, [&](auto const& t) {
      std::vector<Element> img;
      for (Element e : t) img.push_back(m.images[e]);
      ok = ok && oracle::product_one(*m.source, t) == oracle::product_one(*m.target, img);
    });
  return ok;
}

}  // namespace

TEST_CASE("verify_preserving on known maps") {
  for (auto const& g : {symmetric(3), dihedral(8), cyclic(6)}) {
    auto id = basis(identity_map(g));
    CHECK(verify_preserving(id, 5));
    CHECK(id.verified_bound == 5);
    for (auto const& m : find_group_isomorphisms(g, g)) {
      auto b = basis(m);
      CHECK(verify_preserving(b, 4));
    }
  }
  auto s3 = symmetric(3);
  auto inv = basis(inversion_map(s3));
  CHECK(verify_preserving(inv, 3));
  CHECK(verify_preserving(inv, 6));
}

TEST_CASE("verify_preserving agrees with the multiset oracle") {
  auto s3 = symmetric(3);
  Workspace ws;
  for (auto const& m : all_bijections(s3, s3)) {
    auto b = basis(m);
    bool ok = verify_preserving(b, 4, ws);
    CHECK(ok == preserving_by_oracle(m, 4));
    if (!ok) {
      CHECK(b.verified_bound < 4);
      auto v = preservation_violation(m, 4, ws);
      REQUIRE(v.has_value());
      CHECK(v->length() == b.verified_bound + 1);
      CHECK(is_product_one(*v) != is_product_one(apply_map(m, *v)));
      CHECK(preserving_by_oracle(m, b.verified_bound));
    }
  }
  CHECK_THROWS_AS(preservation_violation(GroupMap{s3, s3, {0, 1, 1, 3, 4, 5}}, 3, ws),
                  PreconditionError);
}

TEST_CASE("search_bijections examples") {
  CHECK(search_bijections(cyclic(4), make_group("C2xC2"), 4).empty());
  CHECK(search_bijections(cyclic(4), cyclic(5), 4).empty());

  auto s3 = symmetric(3);
  auto found = search_bijections(s3, s3, 4);
  CHECK(found.size() == 12);
  CHECK(found.size() == 2 * oracle::automorphism_count(*s3));
  std::size_t iso = 0, anti = 0;
  for (auto const& b : found) {
    iso += is_homomorphism(b.map);
    anti += is_anti_homomorphism(b.map);
    CHECK(b.verified_bound >= 4);
  }
  CHECK(iso == 6);
  CHECK(anti == 6);
  CHECK(std::is_sorted(found.begin(), found.end(),
                       [](auto const& x, auto const& y) { return x.map.images < y.map.images; }));

  auto d8 = dihedral(8), q8 = dicyclic(8);
  std::size_t bound = std::max(large_davenport(d8), large_davenport(q8));
  CHECK(search_bijections(d8, q8, bound).empty());
  CHECK(search_bijections(q8, d8, bound).empty());
}

TEST_CASE("search agrees with exhaustive filtering of all bijections") {
  // At every bound, pruning may only discard non-preserving maps.
  for (auto const& [a, b] : {std::pair{symmetric(3), dihedral(6)}, {cyclic(6), symmetric(3)},
                             {cyclic(6), cyclic(6)}}) {
    for (std::size_t bound = 1; bound <= 6; ++bound) {
      CAPTURE(bound);
      std::vector<std::vector<Element>> expected;
      for (auto const& m : all_bijections(a, b))
        if (preserving_by_oracle(m, bound)) expected.push_back(m.images);
      std::vector<std::vector<Element>> got;
      for (auto const& x : search_bijections(a, b, bound)) got.push_back(x.map.images);
      CHECK(got == expected);
    }
  }
}

TEST_CASE("serial and parallel search give identical output") {
  Workspace serial(Budget{}, Exec::serial), parallel(Budget{}, Exec::parallel);
  for (auto const& g : {dihedral(8), alternating(4), make_group("C2xC4")}) {
    std::size_t d = large_davenport(g, serial);
    auto a = search_bijections(g, g, d, serial);
    auto b = search_bijections(g, g, d, parallel);
    CHECK(a == b);
  }
}

TEST_CASE("Davenport bound is sound: no violations just beyond it") {
  for (auto const& g : {symmetric(3), dihedral(8), dicyclic(8), make_group("C2xC4")}) {
    Workspace ws;
    std::size_t d = large_davenport(g, ws);
    for (auto const& b : search_bijections(g, g, d, ws)) {
      CHECK_FALSE(preservation_violation(b.map, d + 2, ws).has_value());
      CHECK_FALSE(preservation_violation(inverse_map(b.map), d + 2, ws).has_value());
    }
  }
}

TEST_CASE("search symmetry") {
  std::vector<Group> gs{cyclic(6), symmetric(3), dihedral(8), dicyclic(8), make_group("C2xC4")};
  for (auto const& a : gs)
    for (auto const& b : gs) {
      std::size_t bound = std::max(large_davenport(a), large_davenport(b));
      CHECK(search_bijections(a, b, bound).empty() == search_bijections(b, a, bound).empty());
    }
}

TEST_CASE("check_assertions") {
  auto g = dihedral(8);
  for (auto const& m : find_group_isomorphisms(g, g)) {
    auto rep = check_assertions(basis(m));
    CHECK(rep.all_pass());
    CHECK(rep.classification == Classification::isomorphism);
    REQUIRE(rep.assertions.size() == 7);
    CHECK(rep.assertions[0].id == "A1");
    CHECK(rep.assertions[6].id == "A7");
  }
  auto inv = check_assertions(basis(inversion_map(g)));
  CHECK(inv.all_pass());
  CHECK(inv.classification == Classification::anti_isomorphism);
  CHECK(inv.anti_homomorphism);
  CHECK_FALSE(inv.homomorphism);

  auto c6 = cyclic(6);
  auto ab = check_assertions(basis(inversion_map(c6)));
  CHECK(ab.classification == Classification::isomorphism);
  CHECK(ab.homomorphism);
  CHECK(ab.anti_homomorphism);
  // Abelian: A5 and A6 have no qualifying triples.
  CHECK(ab.assertions[4].status == Status::vacuous);
  CHECK(ab.assertions[5].status == Status::vacuous);

  // An automorphism never meets A6's hypothesis; the inversion map meets A5's (ii)+(iii).
  auto idrep = check_assertions(basis(identity_map(g)));
  CHECK(idrep.assertions[5].status == Status::vacuous);
  CHECK(idrep.assertions[4].status == Status::pass);

  auto s3 = symmetric(3);
  GroupMap bad{s3, s3, {0, 1, 2, 4, 3, 5}};
  bool preserves = preserving_by_oracle(bad, 3);
  if (!preserves) CHECK_THROWS_AS(check_assertions(basis(bad)), PreconditionError);
}

TEST_CASE("verify_theorem examples") {
  for (auto const& g : {symmetric(3), dicyclic(8), cyclic(5)}) {
    auto v = verify_theorem(g, g);
    CHECK(v.bijections_found >= 1);
    CHECK(v.consistent);
    CHECK(v.complete);
  }
  auto v = verify_theorem(symmetric(3), cyclic(6));
  CHECK(v.bijections_found == 0);
  CHECK_FALSE(v.groups_isomorphic);
  CHECK(v.consistent);

  v = verify_theorem(dihedral(8), dicyclic(8));
  CHECK(v.bijections_found == 0);
  CHECK_FALSE(v.groups_isomorphic);
  CHECK(v.consistent);
  CHECK(are_isomorphic(abelianization(dihedral(8)), abelianization(dicyclic(8))));

  v = verify_theorem(symmetric(3), dihedral(6));
  CHECK(v.bijections_found == 12);
  CHECK(v.isomorphisms == 6);
  CHECK(v.anti_isomorphisms == 6);
  CHECK(v.bound == 6);
}

TEST_CASE("iso and anti-iso classes have equal size on non-abelian groups") {
  for (auto const& g : {dihedral(8), dicyclic(8), dihedral(10)}) {
    auto v = verify_theorem(g, g);
    CHECK(v.isomorphisms == v.anti_isomorphisms);
    CHECK(v.isomorphisms == find_group_isomorphisms(g, g).size());
  }
  auto c = make_group("C2xC4");
  Workspace ws;
  for (auto const& b : search_bijections(c, c, large_davenport(c, ws), ws)) {
    auto rep = check_assertions(b, ws);
    CHECK(rep.homomorphism);
    CHECK(rep.anti_homomorphism);
  }
}

TEST_CASE("budget exhaustion is reported, not hidden") {
  Budget tiny;
  tiny.table_entries = 300;
  Workspace ws(tiny);
  auto g = dihedral(12);
  auto b = basis(identity_map(g));
  CHECK_THROWS_AS(verify_preserving(b, 8, ws), ResourceError);
  CHECK(b.verified_bound >= 1);
  CHECK(b.verified_bound < 8);
  CHECK(table_entries(12, b.verified_bound) <= 300);

  auto v = verify_theorem(g, g, ws);
  CHECK_FALSE(v.complete);
  CHECK_FALSE(v.consistent);
  CHECK_FALSE(v.note.empty());
}

TEST_CASE("opposite transport") {
  auto s3 = symmetric(3);
  Workspace ws;
  for (auto const& m : all_bijections(s3, s3)) {
    auto b = basis(m);
    auto t = opposite_transport(b);
    auto tt = opposite_transport(t);
    CHECK(tt.map.images == b.map.images);
    CHECK(*tt.map.target == *b.map.target);
    bool p1 = verify_preserving(b, 4, ws), p2 = verify_preserving(t, 4, ws);
    CHECK(p1 == p2);
    if (is_anti_homomorphism(m)) CHECK(is_homomorphism(t.map));
    if (is_homomorphism(m)) CHECK(is_anti_homomorphism(t.map));
    if (p1) {
      auto r1 = check_assertions(b, ws), r2 = check_assertions(t, ws);
      if (r1.classification == Classification::anti_isomorphism)
        CHECK(r2.classification == Classification::isomorphism);
      if (r1.classification == Classification::isomorphism)
        CHECK(r2.classification == Classification::anti_isomorphism);
    }
  }
}

TEST_CASE("compare_invariants") {
  auto rep = compare_invariants(dihedral(6), symmetric(3), 4);
  for (auto const& row : rep.rows) {
    CAPTURE(row.name);
    CHECK(row.verdict == InvariantVerdict::matches);
  }
  auto dq = compare_invariants(dihedral(8), dicyclic(8), 5);
  REQUIRE(dq.find("abelianization") != nullptr);
  CHECK(dq.find("abelianization")->verdict == InvariantVerdict::matches);
  for (auto const& row : dq.rows) CHECK(row.verdict != InvariantVerdict::inconclusive);

  auto ck = compare_invariants(cyclic(4), make_group("C2xC2"), 4);
  CHECK(ck.find("davenport")->verdict == InvariantVerdict::distinguishes);
  CHECK(ck.find("davenport")->left == "4");
  CHECK(ck.find("davenport")->right == "3");
  CHECK(ck.find("fingerprint")->verdict == InvariantVerdict::distinguishes);

  Budget tiny;
  tiny.table_entries = 50;
  Workspace ws(tiny);
  auto inc = compare_invariants(cyclic(12), dihedral(12), 6, ws);
  CHECK(inc.find("order")->verdict == InvariantVerdict::matches);
  CHECK(inc.find("length_system")->verdict == InvariantVerdict::inconclusive);
  CHECK(inc.find("davenport")->verdict == InvariantVerdict::inconclusive);
}
