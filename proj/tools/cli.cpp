#include "cli.hpp"

#include <omp.h>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "prodone/serialize.hpp"

namespace prodone::cli {

namespace {

namespace fs = std::filesystem;

struct Config {
  std::string format = "human";
  std::string cache_dir;
  bool no_cache = false;
  std::uint64_t budget = Budget{}.dp_states;
  std::uint64_t table_budget = Budget{}.table_entries;
  int threads = 0;
  bool serial = false;

  bool structured() const { return format == "structured"; }
  Budget limits() const { return Budget{budget, table_budget}; }
  Exec exec() const { return serial ? Exec::serial : Exec::parallel; }
  std::optional<fs::path> cache() const {
    if (no_cache) return std::nullopt;
    if (!cache_dir.empty()) return fs::path(cache_dir);
    if (char const* env = std::getenv("PRODONE_CACHE_DIR"); env && *env) return fs::path(env);
    return fs::path(".prodone-cache");
  }
};

/// A group spec is a path to a table file if one exists, else family shorthand.
Group load_group(std::string const& spec) {
  std::error_code ec;
  if (fs::is_regular_file(spec, ec)) {
    std::ifstream in(spec);
    std::stringstream ss;
    ss << in.rdbuf();
    return from_table_text(ss.str());
  }
  return make_group(spec);
}

std::string label(Group const& g, std::string const& spec) {
  return g->description().empty() ? spec : g->description();
}

std::vector<std::string> names_of(GroupTable const& g, std::span<const Element> elems) {
  std::vector<std::string> out;
  for (Element e : elems) out.push_back(g.name(e));
  return out;
}

std::string braces(std::vector<std::string> const& items) {
  std::string s = "{";
  for (std::size_t i = 0; i < items.size(); ++i) s += (i ? ", " : "") + items[i];
  return s + "}";
}

template <typename T>
std::string braces_num(std::vector<T> const& v) {
  std::vector<std::string> items;
  for (auto x : v) items.push_back(std::to_string(x));
  return braces(items);
}

/// Invariant factors d1 | d2 | ... of a finite abelian group, from element
/// counts: for each prime p, #{x : x^(p^k) = 1} = p^(sum_i min(lambda_i, k)).
std::vector<unsigned> invariant_factors(GroupTable const& g) {
  std::size_t const n = g.order();
  std::map<unsigned, std::vector<unsigned>> parts;  // prime -> exponents, descending
  std::size_t m = n;
  for (unsigned p = 2; m > 1; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    auto log_p = [p](std::size_t x) {
      unsigned k = 0;
      while (x > 1) x /= p, ++k;
      return k;
    };
    std::vector<unsigned> at_least;  // at_least[k-1] = #parts with lambda_i >= k
    unsigned prev = 0;
    for (unsigned k = 1;; ++k) {
      std::size_t pk = 1;
      for (unsigned i = 0; i < k; ++i) pk *= p;
      std::size_t count = 0;
      for (Element a = 0; a < n; ++a) count += pk % g.order_of(a) == 0;
      unsigned l = log_p(count);
      if (l == prev) break;
      at_least.push_back(l - prev);
      prev = l;
    }
    // Partition from the conjugate counts.
    std::vector<unsigned> lambda;
    for (std::size_t k = at_least.size(); k-- > 0;) {
      unsigned exact = at_least[k] - (k + 1 < at_least.size() ? at_least[k + 1] : 0);
      for (unsigned i = 0; i < exact; ++i) lambda.push_back(static_cast<unsigned>(k + 1));
    }
    parts[p] = lambda;
  }
  std::size_t rank = 0;
  for (auto const& [p, l] : parts) rank = std::max(rank, l.size());
  std::vector<unsigned> factors(rank, 1);
  for (auto const& [p, l] : parts)
    for (std::size_t i = 0; i < l.size(); ++i) {
      unsigned q = 1;
      for (unsigned j = 0; j < l[i]; ++j) q *= p;
      factors[rank - 1 - i] *= q;
    }
  return factors;
}

std::string abelian_name(GroupTable const& g) {
  auto f = invariant_factors(g);
  if (f.empty()) return "C1";
  std::string s;
  for (std::size_t i = 0; i < f.size(); ++i) s += (i ? "x" : "") + ("C" + std::to_string(f[i]));
  return s;
}

void print_json(std::ostream& out, json const& j) { out << j.dump(2) << '\n'; }

// ---- subcommands ----------------------------------------------------------

int cmd_group_info(Config const& cfg, std::string const& spec, std::ostream& out) {
  auto g = load_group(spec);
  auto comm = commutator_subgroup(*g);
  auto ab = abelianization(g);
  std::map<unsigned, std::size_t> census;
  for (Element a = 0; a < g->order(); ++a) ++census[g->order_of(a)];
  if (cfg.structured()) {
    json c = json::object();
    for (auto const& [o, k] : census) c[std::to_string(o)] = k;
    print_json(out, {{"group", label(g, spec)},
                     {"order", g->order()},
                     {"abelian", g->is_abelian()},
                     {"exponent", g->exponent()},
                     {"hash", g->hash_hex()},
                     {"elements", g->names()},
                     {"order_census", c},
                     {"commutator_subgroup", names_of(*g, comm)},
                     {"abelianization", abelian_name(*ab)}});
    return ok;
  }
  out << std::left << std::setw(22) << "group" << label(g, spec) << '\n'
      << std::setw(22) << "order" << g->order() << '\n'
      << std::setw(22) << "abelian" << (g->is_abelian() ? "yes" : "no") << '\n'
      << std::setw(22) << "exponent" << g->exponent() << '\n'
      << std::setw(22) << "table hash" << g->hash_hex() << '\n';
  if (g->order() <= 24) out << std::setw(22) << "elements" << format_elements(*g, [&] {
                                 std::vector<Element> all(g->order());
                                 std::iota(all.begin(), all.end(), 0u);
                                 return all;
                               }()) << '\n';
  out << std::setw(22) << "commutator subgroup" << "order " << comm.size() << "  "
      << braces(names_of(*g, comm)) << '\n'
      << std::setw(22) << "abelianization" << abelian_name(*ab) << '\n'
      << "element orders\n"
      << std::right << std::setw(8) << "order" << std::setw(8) << "count" << '\n';
  for (auto const& [o, k] : census) out << std::setw(8) << o << std::setw(8) << k << '\n';
  return ok;
}

int cmd_pi(Config const& cfg, std::string const& spec, std::string const& text,
           std::ostream& out) {
  auto g = load_group(spec);
  auto s = parse_sequence(g, text);
  auto ps = product_set(s, cfg.limits());
  auto names = names_of(*g, ps.members);
  if (cfg.structured())
    print_json(out, {{"group", label(g, spec)},
                     {"sequence", format_sequence(s)},
                     {"length", s.length()},
                     {"products", names}});
  else
    out << braces(names) << '\n';
  return ok;
}

int cmd_witness(Config const& cfg, std::string const& spec, std::string const& text,
                std::ostream& out) {
  auto g = load_group(spec);
  auto s = parse_sequence(g, text);
  auto w = product_one_witness(s, cfg.limits());
  if (cfg.structured()) {
    json j = {{"group", label(g, spec)}, {"sequence", format_sequence(s)}};
    j["ordering"] = w ? json(names_of(*g, w->terms)) : json(nullptr);
    print_json(out, j);
  } else {
    out << (w ? format_elements(*g, w->terms) : "none") << '\n';
  }
  return ok;
}

int cmd_atoms(Config const& cfg, std::string const& spec, std::size_t max, bool list,
              std::ostream& out) {
  auto g = load_group(spec);
  Workspace ws(cfg.limits(), cfg.exec());
  auto cat = cached_atoms(g, max, ws, cfg.cache());
  if (cfg.structured()) {
    json counts = json::object();
    for (std::size_t k = 1; k <= cat.complete_through; ++k) counts[std::to_string(k)] = cat.count(k);
    json j = {{"group", label(g, spec)},
              {"max_length", cat.max_length},
              {"complete_through", cat.complete_through},
              {"exhaustive", cat.exhaustive},
              {"counts", counts},
              {"total", cat.total()}};
    if (list) {
      json atoms = json::array();
      for (auto const& a : cat.all()) atoms.push_back(format_sequence(a));
      j["atoms"] = atoms;
    }
    print_json(out, j);
  } else {
    out << "atoms of " << label(g, spec) << " up to length " << max
        << (cat.exhaustive ? " (exhaustive)"
                           : " (partial: complete through length " +
                                 std::to_string(cat.complete_through) + ")")
        << '\n'
        << std::right << std::setw(8) << "length" << std::setw(12) << "atoms" << '\n';
    for (std::size_t k = 1; k <= cat.complete_through; ++k) {
      out << std::setw(8) << k << std::setw(12) << cat.count(k) << '\n';
      if (list)
        for (auto const& a : cat.atoms_by_length[k]) out << "          " << format_sequence(a) << '\n';
    }
    out << std::setw(8) << "total" << std::setw(12) << cat.total() << '\n';
  }
  if (!cat.exhaustive) return resource;
  return ok;
}

int cmd_davenport(Config const& cfg, std::string const& spec, std::ostream& out) {
  auto g = load_group(spec);
  Workspace ws(cfg.limits(), cfg.exec());
  unsigned d = cached_davenport(g, ws, cfg.cache());
  if (cfg.structured())
    print_json(out, {{"group", label(g, spec)}, {"davenport", d}});
  else
    out << "D(" << label(g, spec) << ") = " << d << '\n';
  return ok;
}

int cmd_lengths(Config const& cfg, std::string const& spec, std::string const& text, bool show,
                std::ostream& out) {
  auto g = load_group(spec);
  auto b = parse_sequence(g, text);
  Workspace ws(cfg.limits(), cfg.exec());
  auto cat = cached_atoms(g, std::max<std::size_t>(b.length(), 1), ws, cfg.cache());
  if (!cat.exhaustive)
    throw ResourceError("lengths: atom catalog up to length " + std::to_string(b.length()),
                        table_entries(g->order(), b.length()), cfg.table_budget);
  auto l = set_of_lengths(b, cat, cfg.limits());
  std::vector<Factorization> fs;
  if (show) fs = factorizations(b, cat, cfg.limits());
  if (cfg.structured()) {
    json j = {{"group", label(g, spec)}, {"sequence", format_sequence(b)}, {"lengths", l}};
    if (show) {
      json arr = json::array();
      for (auto const& f : fs) {
        json atoms = json::array();
        for (auto const& u : f) atoms.push_back(format_sequence(u));
        arr.push_back(atoms);
      }
      j["factorizations"] = arr;
    }
    print_json(out, j);
  } else {
    out << braces_num(l.lengths) << '\n';
    for (auto const& f : fs) {
      out << "  ";
      for (std::size_t i = 0; i < f.size(); ++i)
        out << (i ? " * " : "") << "[" << format_sequence(f[i]) << "]";
      out << '\n';
    }
  }
  return ok;
}

int cmd_length_system(Config const& cfg, std::string const& spec, std::size_t bound,
                      std::ostream& out) {
  auto g = load_group(spec);
  Workspace ws(cfg.limits(), cfg.exec());
  auto sys = length_system(g, bound, ws);
  if (cfg.structured()) {
    json j = sys;
    j["group"] = label(g, spec);
    print_json(out, j);
  } else {
    out << "sets of lengths of " << label(g, spec) << ", |B| <= " << bound << ": "
        << sys.sets.size() << " distinct\n";
    for (auto const& s : sys.sets) out << "  " << braces_num(s.lengths) << '\n';
  }
  return ok;
}

void prime_davenport(Workspace& ws, Config const& cfg, Group const& g) {
  ws.store_davenport(g, cached_davenport(g, ws, cfg.cache()));
}

int cmd_verify(Config const& cfg, std::string const& s1, std::string const& s2, bool reports,
               std::ostream& out) {
  auto g1 = load_group(s1), g2 = load_group(s2);
  Workspace ws(cfg.limits(), cfg.exec());
  TheoremVerdict v;
  try {
    prime_davenport(ws, cfg, g1);
    prime_davenport(ws, cfg, g2);
  } catch (ResourceError const&) {
    // verify_theorem reports the partial verdict itself
  }
  v = verify_theorem(g1, g2, ws);
  std::vector<AssertionReport> reps;
  if (reports && v.complete)
    for (auto const& b : search_bijections(g1, g2, v.bound, ws)) reps.push_back(check_assertions(b, ws));

  if (cfg.structured()) {
    json j = v;
    if (reports) j["reports"] = reps;
    print_json(out, j);
  } else {
    auto yn = [](bool b) { return b ? "yes" : "no"; };
    out << std::left << std::setw(22) << "groups" << v.group1 << " vs " << v.group2 << '\n'
        << std::setw(22) << "bound" << v.bound << '\n'
        << std::setw(22) << "bijections found" << v.bijections_found << '\n'
        << std::setw(22) << "  isomorphisms" << v.isomorphisms << '\n'
        << std::setw(22) << "  anti-isomorphisms" << v.anti_isomorphisms << '\n'
        << std::setw(22) << "assertion failures" << v.assertion_failures << '\n'
        << std::setw(22) << "all classified" << yn(v.all_classified) << '\n'
        << std::setw(22) << "groups isomorphic" << yn(v.groups_isomorphic) << '\n'
        << std::setw(22) << "complete" << yn(v.complete) << '\n'
        << std::setw(22) << "verdict"
        << (!v.complete ? "incomplete" : v.consistent ? "consistent" : "INCONSISTENT") << '\n';
    if (!v.note.empty()) out << std::setw(22) << "note" << v.note << '\n';
    for (auto const& r : reps) {
      out << "\nbijection " << format_elements(*g2, r.images) << "  ["
          << to_string(r.classification) << "]\n";
      for (auto const& a : r.assertions)
        out << "  " << std::setw(4) << a.id << std::setw(9) << to_string(a.status) << a.detail
            << '\n';
    }
  }
  if (!v.complete) return resource;
  return v.consistent ? ok : inconsistent;
}

int cmd_compare(Config const& cfg, std::string const& s1, std::string const& s2,
                std::size_t bound, std::ostream& out) {
  auto g1 = load_group(s1), g2 = load_group(s2);
  Workspace ws(cfg.limits(), cfg.exec());
  for (auto const& g : {g1, g2}) {
    try {
      prime_davenport(ws, cfg, g);
    } catch (ResourceError const&) {
      // the davenport row will say inconclusive
    }
  }
  auto rep = compare_invariants(g1, g2, bound, ws);
  if (cfg.structured()) {
    print_json(out, rep);
  } else {
    out << rep.group1 << " vs " << rep.group2 << ", length bound " << rep.bound << '\n';
    std::size_t w = 16;
    out << std::left << std::setw(w) << "invariant" << std::setw(15) << "verdict"
        << "values\n";
    for (auto const& r : rep.rows) {
      out << std::setw(w) << r.name << std::setw(15) << to_string(r.verdict);
      if (r.left == r.right)
        out << r.left << '\n';
      else
        out << r.left << "  |  " << r.right << '\n';
    }
  }
  for (auto const& r : rep.rows)
    if (r.verdict == InvariantVerdict::inconclusive) return resource;
  return ok;
}

}  // namespace

int run(std::vector<std::string> const& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Product-one sequences over finite groups: atoms, Davenport constants, "
               "sets of lengths, and basis-bijection verification."};
  app.name("prodone");
  app.require_subcommand(1);
  Config cfg;
  app.add_option("--format", cfg.format, "Output mode")
      ->check(CLI::IsMember({"human", "structured"}))
      ->capture_default_str();
  app.add_option("--cache-dir", cfg.cache_dir,
                 "Atom catalog cache (default $PRODONE_CACHE_DIR or ./.prodone-cache)");
  app.add_flag("--no-cache", cfg.no_cache, "Neither read nor write the catalog cache");
  app.add_option("--budget", cfg.budget, "Sub-multiset DP state cap per sequence")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--table-budget", cfg.table_budget,
                 "Entry cap for whole-group product-set tables")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  app.add_option("--threads", cfg.threads, "OpenMP threads (0 = runtime default)")
      ->check(CLI::NonNegativeNumber);
  app.add_flag("--serial", cfg.serial, "Use the serial reference kernels");

  std::string spec, spec2, text;
  std::size_t max = 0, bound = 0;
  bool list = false, show = false, reports = false;
  std::function<int()> action;

  auto* info = app.add_subcommand("group-info", "Order, element orders, G' and G/G'");
  info->add_option("group", spec, "Group spec or table file")->required();
  info->callback([&] { action = [&] { return cmd_group_info(cfg, spec, out); }; });

  auto* pi = app.add_subcommand("pi", "Set of products of a sequence");
  pi->add_option("group", spec)->required();
  pi->add_option("sequence", text, "e.g. \"1^2,r,s^3\"")->required();
  pi->callback([&] { action = [&] { return cmd_pi(cfg, spec, text, out); }; });

  auto* wit = app.add_subcommand("witness", "Smallest product-one ordering, or none");
  wit->add_option("group", spec)->required();
  wit->add_option("sequence", text)->required();
  wit->callback([&] { action = [&] { return cmd_witness(cfg, spec, text, out); }; });

  auto* atoms = app.add_subcommand("atoms", "Atom counts by length (cached)");
  atoms->add_option("group", spec)->required();
  atoms->add_option("--max", max, "Length bound")->required()->check(CLI::PositiveNumber);
  atoms->add_flag("--list", list, "Print the atoms");
  atoms->callback([&] { action = [&] { return cmd_atoms(cfg, spec, max, list, out); }; });

  auto* dav = app.add_subcommand("davenport", "Large Davenport constant (cached)");
  dav->add_option("group", spec)->required();
  dav->callback([&] { action = [&] { return cmd_davenport(cfg, spec, out); }; });

  auto* len = app.add_subcommand("lengths", "Set of lengths of a product-one sequence");
  len->add_option("group", spec)->required();
  len->add_option("sequence", text)->required();
  len->add_flag("--factorizations", show, "Also list the factorizations");
  len->callback([&] { action = [&] { return cmd_lengths(cfg, spec, text, show, out); }; });

  auto* sys = app.add_subcommand("length-system", "All sets of lengths up to a bound");
  sys->add_option("group", spec)->required();
  sys->add_option("--bound", bound, "Sequence length bound")->required()->check(CLI::PositiveNumber);
  sys->callback([&] { action = [&] { return cmd_length_system(cfg, spec, bound, out); }; });

  auto* ver = app.add_subcommand("verify", "Search product-one preserving bijections");
  ver->add_option("group1", spec)->required();
  ver->add_option("group2", spec2)->required();
  ver->add_flag("--reports", reports, "Print the A1-A7 report of every bijection");
  ver->callback([&] { action = [&] { return cmd_verify(cfg, spec, spec2, reports, out); }; });

  auto* cmp = app.add_subcommand("compare", "Compare invariants of two groups");
  cmp->add_option("group1", spec)->required();
  cmp->add_option("group2", spec2)->required();
  cmp->add_option("--bound", bound, "Length bound for length systems")
      ->required()
      ->check(CLI::PositiveNumber);
  cmp->callback([&] { action = [&] { return cmd_compare(cfg, spec, spec2, bound, out); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (CLI::ParseError const& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : usage;
  }
  if (cfg.threads > 0) omp_set_num_threads(cfg.threads);

  try {
    return action();
  } catch (ResourceError const& e) {
    err << "resource limit: " << e.what() << '\n';
    return resource;
  } catch (Error const& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  } catch (std::filesystem::filesystem_error const& e) {
    err << "error: " << e.what() << '\n';
    return usage;
  }
}

}  // namespace prodone::cli
