#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <fstream>
#include <sstream>

#include <unistd.h>

#include "doctest.h"
#include "prodone/serialize.hpp"

using namespace prodone;
namespace fs = std::filesystem;

namespace {

template <typename T>
void check_round_trip(T const& value) {
  json j = value;
  auto text = j.dump(2);
  T back = json::parse(text).get<T>();
  CHECK(back == value);
}

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("prodone-test-" + std::to_string(::getpid()));
    fs::remove_all(path);
  }
  ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("structured reports round-trip") {
  Workspace ws;
  auto s3 = symmetric(3);
  auto found = search_bijections(s3, s3, 6, ws);
  REQUIRE_FALSE(found.empty());
  for (auto const& b : found) check_round_trip(check_assertions(b, ws));

  check_round_trip(verify_theorem(dihedral(8), dicyclic(8), ws));
  check_round_trip(verify_theorem(s3, s3, ws));
  check_round_trip(compare_invariants(cyclic(4), make_group("C2xC2"), 4, ws));
  check_round_trip(fingerprint(dicyclic(8), ws));
  check_round_trip(length_system(s3, 5, ws));
  check_round_trip(LengthSet{{2, 3, 5}});

  Budget tiny;
  tiny.table_entries = 40;
  Workspace small(tiny);
  auto partial = verify_theorem(dihedral(12), dihedral(12), small);
  CHECK_FALSE(partial.complete);
  check_round_trip(partial);
}

TEST_CASE("structured field names are stable") {
  json v = verify_theorem(symmetric(3), cyclic(6));
  for (auto key : {"groups", "bound", "bijections_found", "consistent", "complete"})
    CHECK(v.contains(key));
  auto s3 = symmetric(3);
  json r = check_assertions(BasisBijection{inversion_map(s3), 0});
  CHECK(r["classification"] == "anti_isomorphism");
  for (int i = 1; i <= 7; ++i) CHECK(r["assertions"].contains("A" + std::to_string(i)));
  CHECK(r["assertions"]["A1"].contains("counterexample"));
}

TEST_CASE("catalog text format round-trips") {
  auto g = dihedral(8);
  auto cat = enumerate_atoms(g, 6);
  std::stringstream ss;
  write_catalog(ss, cat);
  auto text = ss.str();
  CHECK(text.rfind("prodone-atom-catalog 1\ngroup " + g->hash_hex() + "\n", 0) == 0);
  auto back = read_catalog(ss, g);
  CHECK(back.max_length == cat.max_length);
  CHECK(back.complete_through == cat.complete_through);
  CHECK(back.exhaustive == cat.exhaustive);
  CHECK(back.all() == cat.all());
  for (std::size_t k = 1; k <= 6; ++k) CHECK(back.count(k) == cat.count(k));
}

TEST_CASE("catalog reader rejects bad input") {
  auto g = cyclic(3);
  std::stringstream ss;
  write_catalog(ss, enumerate_atoms(g, 4));
  auto good = ss.str();

  auto reject = [&](std::string const& text, Group const& grp) {
    std::istringstream in(text);
    CHECK_THROWS_AS(read_catalog(in, grp), ParseError);
  };
  reject(good, cyclic(4));  // wrong group
  reject("prodone-atom-catalog 2\n", g);
  reject(good.substr(0, good.size() - 4), g);  // missing end
  std::string bad_len = good;
  bad_len.replace(bad_len.find("\n1 1 0 0\n"), 9, "\n2 1 0 0\n");
  reject(bad_len, g);
  reject("", g);
}

TEST_CASE("cache directory") {
  TempDir dir;
  auto g = symmetric(3);
  Workspace ws;
  CHECK_FALSE(load_catalog(dir.path, g).has_value());

  auto cat = cached_atoms(g, 5, ws, dir.path);
  CHECK(fs::exists(catalog_path(dir.path, g)));
  auto loaded = load_catalog(dir.path, g);
  REQUIRE(loaded.has_value());
  CHECK(loaded->all() == cat.all());
  // No temporary files left behind.
  std::size_t files = 0;
  for (auto const& e : fs::directory_iterator(dir.path)) {
    (void)e;
    ++files;
  }
  CHECK(files == 1);

  // A smaller request is served from the cache.
  auto smaller = cached_atoms(g, 3, ws, dir.path);
  CHECK(smaller.complete_through == 3);
  CHECK(smaller.all() == enumerate_atoms(g, 3).all());

  // Davenport: first call searches and stores D + 1, the next reads it back.
  unsigned d = cached_davenport(g, ws, dir.path);
  CHECK(d == large_davenport(g));
  auto after = load_catalog(dir.path, g);
  REQUIRE(after.has_value());
  CHECK(after->complete_through == d + 1);
  Workspace fresh;
  CHECK(cached_davenport(g, fresh, dir.path) == d);
  CHECK_FALSE(fresh.cached_davenport(g).has_value());  // answered from disk

  // Relabeled copies hash differently and get their own file.
  std::vector<Element> perm{0, 2, 1, 3, 4, 5};
  auto h = relabel(g, perm).target;
  CHECK(catalog_path(dir.path, h) != catalog_path(dir.path, g));

  // Corrupt files are ignored and recomputed.
  { std::ofstream(catalog_path(dir.path, g)) << "garbage"; }
  CHECK_FALSE(load_catalog(dir.path, g).has_value());
  CHECK(cached_atoms(g, 4, ws, dir.path).exhaustive);
  CHECK(load_catalog(dir.path, g).has_value());
}
