#include "prodone/serialize.hpp"

#include <fstream>
#include <istream>
#include <ostream>
#include <random>
#include <sstream>

namespace prodone {

void to_json(json& j, AssertionResult const& r) {
  j = json{{"id", r.id},
           {"status", r.status},
           {"detail", r.detail},
           {"counterexample", r.counterexample}};
}

void from_json(json const& j, AssertionResult& r) {
  j.at("id").get_to(r.id);
  j.at("status").get_to(r.status);
  j.at("detail").get_to(r.detail);
  j.at("counterexample").get_to(r.counterexample);
}

void to_json(json& j, AssertionReport const& r) {
  json assertions = json::object();
  for (auto const& a : r.assertions) assertions[a.id] = a;
  j = json{{"groups", {r.source, r.target}},
           {"images", r.images},
           {"bound", r.verified_bound},
           {"assertions", assertions},
           {"homomorphism", r.homomorphism},
           {"anti_homomorphism", r.anti_homomorphism},
           {"classification", r.classification}};
}

void from_json(json const& j, AssertionReport& r) {
  auto const& groups = j.at("groups");
  groups.at(0).get_to(r.source);
  groups.at(1).get_to(r.target);
  j.at("images").get_to(r.images);
  j.at("bound").get_to(r.verified_bound);
  r.assertions.clear();
  for (int i = 1; i <= 7; ++i) {
    std::string id = "A" + std::to_string(i);
    r.assertions.push_back(j.at("assertions").at(id).get<AssertionResult>());
  }
  j.at("homomorphism").get_to(r.homomorphism);
  j.at("anti_homomorphism").get_to(r.anti_homomorphism);
  j.at("classification").get_to(r.classification);
}

void to_json(json& j, TheoremVerdict const& v) {
  j = json{{"groups", {v.group1, v.group2}},
           {"bound", v.bound},
           {"bijections_found", v.bijections_found},
           {"isomorphisms", v.isomorphisms},
           {"anti_isomorphisms", v.anti_isomorphisms},
           {"assertion_failures", v.assertion_failures},
           {"all_classified", v.all_classified},
           {"groups_isomorphic", v.groups_isomorphic},
           {"consistent", v.consistent},
           {"complete", v.complete},
           {"note", v.note}};
}

void from_json(json const& j, TheoremVerdict& v) {
  j.at("groups").at(0).get_to(v.group1);
  j.at("groups").at(1).get_to(v.group2);
  j.at("bound").get_to(v.bound);
  j.at("bijections_found").get_to(v.bijections_found);
  j.at("isomorphisms").get_to(v.isomorphisms);
  j.at("anti_isomorphisms").get_to(v.anti_isomorphisms);
  j.at("assertion_failures").get_to(v.assertion_failures);
  j.at("all_classified").get_to(v.all_classified);
  j.at("groups_isomorphic").get_to(v.groups_isomorphic);
  j.at("consistent").get_to(v.consistent);
  j.at("complete").get_to(v.complete);
  j.at("note").get_to(v.note);
}

void to_json(json& j, InvariantRow const& r) {
  j = json{{"name", r.name}, {"verdict", r.verdict}, {"left", r.left}, {"right", r.right}};
}

void from_json(json const& j, InvariantRow& r) {
  j.at("name").get_to(r.name);
  j.at("verdict").get_to(r.verdict);
  j.at("left").get_to(r.left);
  j.at("right").get_to(r.right);
}

void to_json(json& j, InvariantReport const& r) {
  j = json{{"groups", {r.group1, r.group2}}, {"bound", r.bound}, {"invariants", r.rows}};
}

void from_json(json const& j, InvariantReport& r) {
  j.at("groups").at(0).get_to(r.group1);
  j.at("groups").at(1).get_to(r.group2);
  j.at("bound").get_to(r.bound);
  j.at("invariants").get_to(r.rows);
}

void to_json(json& j, LengthSet const& s) { j = s.lengths; }
void from_json(json const& j, LengthSet& s) { j.get_to(s.lengths); }

void to_json(json& j, LengthSystem const& s) {
  j = json{{"bound", s.bound}, {"sets", s.sets}};
}

void from_json(json const& j, LengthSystem& s) {
  j.at("bound").get_to(s.bound);
  j.at("sets").get_to(s.sets);
}

void to_json(json& j, Fingerprint const& f) {
  j = json{{"atom_counts", f.atom_counts},
           {"davenport", f.davenport},
           {"abelianization_profile", f.abelianization_profile}};
}

void from_json(json const& j, Fingerprint& f) {
  j.at("atom_counts").get_to(f.atom_counts);
  j.at("davenport").get_to(f.davenport);
  j.at("abelianization_profile").get_to(f.abelianization_profile);
}

void write_catalog(std::ostream& out, AtomCatalog const& cat) {
  out << "prodone-atom-catalog " << catalog_format_version << '\n'
      << "group " << cat.group->hash_hex() << '\n'
      << "order " << cat.group->order() << '\n'
      << "max_length " << cat.max_length << '\n'
      << "complete_through " << cat.complete_through << '\n'
      << "exhaustive " << (cat.exhaustive ? 1 : 0) << '\n'
      << "atoms " << cat.total() << '\n';
  for (auto const& [len, atoms] : cat.atoms_by_length)
    for (auto const& a : atoms) {
      out << len;
      for (auto e : a.exponents()) out << ' ' << e;
      out << '\n';
    }
  out << "end\n";
}

namespace {

template <typename T>
T expect_field(std::istream& in, std::string const& key) {
  std::string k;
  T v{};
  if (!(in >> k) || k != key || !(in >> v))
    throw ParseError("catalog: expected field '" + key + "'");
  return v;
}

}  // namespace

AtomCatalog read_catalog(std::istream& in, Group const& g) {
  auto version = expect_field<int>(in, "prodone-atom-catalog");
  if (version != catalog_format_version)
    throw ParseError("catalog: unsupported format version " + std::to_string(version));
  auto hash = expect_field<std::string>(in, "group");
  if (hash != g->hash_hex()) throw ParseError("catalog: group hash mismatch");
  auto order = expect_field<std::size_t>(in, "order");
  if (order != g->order()) throw ParseError("catalog: group order mismatch");
  AtomCatalog cat;
  cat.group = g;
  cat.max_length = expect_field<std::size_t>(in, "max_length");
  cat.complete_through = expect_field<std::size_t>(in, "complete_through");
  cat.exhaustive = expect_field<int>(in, "exhaustive") != 0;
  auto count = expect_field<std::size_t>(in, "atoms");
  for (std::size_t k = 1; k <= cat.complete_through; ++k) cat.atoms_by_length[k];
  for (std::size_t i = 0; i < count; ++i) {
    std::size_t len = 0;
    if (!(in >> len)) throw ParseError("catalog: truncated atom record");
    std::vector<std::uint32_t> e(order);
    for (auto& v : e)
      if (!(in >> v)) throw ParseError("catalog: truncated atom record");
    Sequence s(g, std::move(e));
    if (s.length() != len) throw ParseError("catalog: atom length does not match exponents");
    cat.atoms_by_length[len].push_back(std::move(s));
  }
  std::string tail;
  if (!(in >> tail) || tail != "end") throw ParseError("catalog: missing 'end'");
  return cat;
}

std::filesystem::path catalog_path(std::filesystem::path const& dir, Group const& g) {
  return dir / ("atoms-" + g->hash_hex() + ".txt");
}

void save_catalog(std::filesystem::path const& dir, AtomCatalog const& cat) {
  std::filesystem::create_directories(dir);
  auto const final_path = catalog_path(dir, cat.group);
  std::random_device rd;
  auto tmp = final_path;
  tmp += ".tmp" + std::to_string(rd());
  {
    std::ofstream out(tmp);
    if (!out) throw Error("cannot write " + tmp.string());
    write_catalog(out, cat);
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::filesystem::rename(tmp, final_path);
}

std::optional<AtomCatalog> load_catalog(std::filesystem::path const& dir, Group const& g) {
  std::ifstream in(catalog_path(dir, g));
  if (!in) return std::nullopt;
  try {
    return read_catalog(in, g);
  } catch (ParseError const&) {
    return std::nullopt;  // stale or corrupt: recompute
  }
}

namespace {

AtomCatalog truncated(AtomCatalog const& cat, std::size_t max_length) {
  AtomCatalog out;
  out.group = cat.group;
  out.max_length = max_length;
  out.complete_through = max_length;
  out.exhaustive = true;
  for (auto const& [len, atoms] : cat.atoms_by_length)
    if (len <= max_length) out.atoms_by_length[len] = atoms;
  return out;
}

}  // namespace

AtomCatalog cached_atoms(Group const& g, std::size_t max_length, Workspace& ws,
                         std::optional<std::filesystem::path> const& dir) {
  if (dir) {
    if (auto cat = load_catalog(*dir, g); cat && cat->complete_through >= max_length)
      return truncated(*cat, max_length);
  }
  AtomCatalog cat = enumerate_atoms(g, max_length, ws);
  if (dir && cat.exhaustive) save_catalog(*dir, cat);
  return cat;
}

unsigned cached_davenport(Group const& g, Workspace& ws,
                          std::optional<std::filesystem::path> const& dir) {
  if (dir) {
    if (auto cat = load_catalog(*dir, g);
        cat && cat->complete_through > 0 && cat->longest() < cat->complete_through)
      return static_cast<unsigned>(cat->longest());
  }
  unsigned d = large_davenport(g, ws);
  if (dir) {
    AtomCatalog cat = enumerate_atoms(g, d + 1, ws);
    if (cat.exhaustive) save_catalog(*dir, cat);
  }
  return d;
}

}  // namespace prodone
